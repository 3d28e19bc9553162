#include <iostream>

#include "qtoda_cli/commands.hpp"

int main(int argc, char** argv)
{
    return qtoda::cli::run_cli(argc, argv, std::cout, std::cerr);
}
