#include "qtoda_cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <string>

#include "qtoda/engine.hpp"
#include "qtoda/json_io.hpp"
#include "qtoda/limits.hpp"
#include "qtoda_cli/suites.hpp"

namespace qtoda::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_rank(int N)
{
    if (N < 2) throw UsageError("rank N must be at least 2 (got " + std::to_string(N) + ")");
}

Rational parse_rational(const std::string& s)
{
    Rational r;
    if (r.set_str(s, 10) != 0) throw UsageError("not a rational number: " + s);
    r.canonicalize();
    return r;
}

void emit(const std::string& payload, const std::string& path, std::ostream& out)
{
    if (path.empty()) {
        out << payload << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open " + path + " for writing");
    f << payload << '\n';
}

std::string render(const DiffOp& a, const std::string& format)
{
    return format == "json" ? to_json(a) : a.to_string();
}

std::string render(const DifferentialOp& a, const std::string& format)
{
    return format == "json" ? to_json(a) : a.to_string();
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact q-deformed Toda difference operators"};
    app.require_subcommand(1);

    std::function<int()> action;
    const auto formats = CLI::IsMember({"json", "text"});

    // build ---------------------------------------------------------------
    auto* build = app.add_subcommand("build", "Build a q-Toda integral from a fundamental representation");
    int b_n = 0, b_k = 1;
    bool b_affine = false, b_raw = false, b_rho = false, b_ksym = false;
    std::string b_kvalue, b_orientation = "default", b_out, b_format = "json", b_words;
    build->add_option("--n", b_n, "rank N of gl(N)")->required();
    build->add_option("--fund", b_k, "fundamental representation Lambda^k V");
    build->add_flag("--affine", b_affine, "affine (K-deformed) integral");
    auto* ksym = build->add_flag("--k-symbolic", b_ksym, "keep K symbolic (default)");
    auto* kval = build->add_option("--k-value", b_kvalue, "substitute a rational value for K");
    ksym->excludes(kval);
    build->add_option("--orientation", b_orientation, "Dynkin orientation")->check(CLI::IsMember({"default"}));
    auto* raw = build->add_flag("--raw", b_raw, "skip the final rho conjugation");
    auto* rho = build->add_flag("--rho-conjugated", b_rho, "apply the rho conjugation (default)");
    raw->excludes(rho);
    build->add_option("--out", b_out, "output file");
    build->add_option("--format", b_format)->check(formats);
    build->add_option("--dump-words", b_words, "write the surviving trace words as JSON");
    build->callback([&] {
        action = [&]() -> int {
            require_rank(b_n);
            if (b_k < 1 || b_k > b_n - 1)
                throw UsageError("--fund must lie in [1, N-1] (got " + std::to_string(b_k) + ")");
            EngineConfig cfg = EngineConfig::standard(b_n, b_affine);
            if (!b_kvalue.empty()) {
                if (!b_affine) throw UsageError("--k-value needs --affine");
                cfg.k_value = parse_rational(b_kvalue);
            }
            cfg.raw = b_raw;
            if (!b_words.empty()) {
                std::ofstream f(b_words);
                if (!f) throw UsageError("cannot open " + b_words + " for writing");
                f << to_json(expand_central_words(fundamental_rep(b_n, b_k, b_affine), cfg)) << '\n';
            }
            emit(render(build_toda_operator(b_k, cfg), b_format), b_out, out);
            return exit_pass;
        };
    });

    // verify --------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    std::string v_format = "text", v_out;
    verify->add_option("--format", v_format)->check(formats);
    verify->add_option("--out", v_out, "write the report to a file");

    auto suite = [&](const std::string& name, const std::string& help, bool has_affine, bool has_elliptic,
                     std::function<VerificationReport(int, bool)> run) {
        auto* sc = verify->add_subcommand(name, help);
        auto n = std::make_shared<int>(0);
        auto flag = std::make_shared<bool>(false);
        sc->add_option("--n", *n, "rank N")->required();
        sc->add_option("--format", v_format)->check(formats);
        sc->add_option("--out", v_out, "write the report to a file");
        if (has_affine) sc->add_flag("--affine", *flag);
        if (has_elliptic) sc->add_flag("--elliptic", *flag);
        sc->callback([&action, &v_format, &v_out, &out, n, flag, run] {
            action = [&action, &v_format, &v_out, &out, n, flag, run]() -> int {
                require_rank(*n);
                VerificationReport rep = run(*n, *flag);
                emit(v_format == "json" ? rep.to_json() : rep.to_text(), v_out, out);
                return rep.pass() ? exit_pass : exit_failed;
            };
        });
    };
    suite("commute", "pairwise commutators of the integrals", true, false, suite_commute);
    suite("serre", "quantum Serre relations in the quantum polynomial algebras", true, false, suite_serre);
    suite("closed-form", "first integrals against their closed forms", false, false,
          [](int N, bool) { return suite_closed_forms(N); });
    suite("quasiclassical", "hbar -> 0 limits", false, false, [](int N, bool) { return suite_quasiclassical(N); });
    suite("automorphism", "reduction to the relativistic form", false, false,
          [](int N, bool) { return suite_automorphism(N); });
    suite("relativistic", "gauge equivalence with relativistic Toda", false, false,
          [](int N, bool) { return suite_relativistic(N); });
    suite("macdonald-limit", "degeneration of the Macdonald operator", false, false,
          [](int N, bool) { return suite_macdonald_limit(N); });
    suite("cm-limit", "Calogero-Moser degenerations", false, true, suite_cm_limit);

    auto* all = verify->add_subcommand("all", "every suite for N = 2..max-n");
    int max_n = 3;
    all->add_option("--max-n", max_n, "largest rank");
    all->add_option("--format", v_format)->check(formats);
    all->add_option("--out", v_out, "write the report to a file");
    all->callback([&] {
        action = [&]() -> int {
            require_rank(max_n);
            VerificationReport rep = suite_all(max_n);
            emit(v_format == "json" ? rep.to_json() : rep.to_text(), v_out, out);
            return rep.pass() ? exit_pass : exit_failed;
        };
    });

    // catalog -------------------------------------------------------------
    auto* catalog = app.add_subcommand("catalog", "Emit a named reference operator");
    std::string c_name, c_out, c_format = "json", c_conv = "plus";
    int c_n = 0;
    bool c_affine = false;
    catalog->add_option("name", c_name, "operator name")
        ->required()
        ->check(CLI::IsMember({"toda-closed-form", "reduced-toda", "gauged-relativistic", "macdonald",
                               "macdonald-limit", "classical-toda", "affine-classical-toda"}));
    catalog->add_option("--n", c_n, "rank N")->required();
    catalog->add_flag("--affine", c_affine, "affine / periodic variant");
    catalog->add_option("--convention", c_conv, "shift direction of the doubled shifts")
        ->check(CLI::IsMember({"plus", "minus"}));
    catalog->add_option("--out", c_out, "output file");
    catalog->add_option("--format", c_format)->check(formats);
    catalog->callback([&] {
        action = [&]() -> int {
            require_rank(c_n);
            const auto conv = c_conv == "plus" ? ShiftConvention::plus : ShiftConvention::minus;
            std::string payload;
            if (c_name == "toda-closed-form") payload = render(toda_closed_form(c_n, c_affine), c_format);
            else if (c_name == "reduced-toda") payload = render(reduced_toda(c_n, c_affine, conv), c_format);
            else if (c_name == "gauged-relativistic")
                payload = render(gauged_relativistic_toda(c_n, c_affine, conv), c_format);
            else if (c_name == "macdonald") payload = render(macdonald_operator(c_n), c_format);
            else if (c_name == "macdonald-limit") payload = render(macdonald_toda_limit(c_n), c_format);
            else if (c_name == "classical-toda") payload = render(classical_toda(c_n), c_format);
            else payload = render(affine_classical_toda(c_n), c_format);
            emit(payload, c_out, out);
            return exit_pass;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvariantError& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
}

}  // namespace qtoda::cli
