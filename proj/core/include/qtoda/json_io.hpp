#pragma once

// JSON interchange for scalars, operators, words and representations. All
// output is deterministic: keys in fixed order, terms sorted by key.

#include <string>
#include <vector>

#include "qtoda/engine.hpp"
#include "qtoda/limits.hpp"

namespace qtoda {

std::string to_json(const LaurentQK& s);
std::string to_json(const TorusPoly& p);
std::string to_json(const DiffOp& a, int indent = 2);
std::string to_json(const DifferentialOp& a, int indent = 2);
std::string to_json(const std::vector<NCWord>& words, int indent = 2);
std::string to_json(const RepData& rep, int indent = 2);

LaurentQK laurent_from_json(const std::string& text);
TorusPoly torus_poly_from_json(const std::string& text, int N);
DiffOp diffop_from_json(const std::string& text);
DifferentialOp differential_op_from_json(const std::string& text);

}  // namespace qtoda
