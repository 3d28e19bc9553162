// One line per acceptance criterion; exit status is nonzero if any fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracle/sl2_pbw.hpp"
#include "qtoda/engine.hpp"
#include "qtoda_cli/suites.hpp"

using namespace qtoda;
using namespace qtoda::cli;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

void absorb(Outcome& o, const VerificationReport& r)
{
    for (const auto& c : r.checks)
        if (!c.pass) {
            o.pass = false;
            o.note += " " + c.id;
        }
}

Outcome closed_forms()
{
    Outcome o;
    for (int N = 2; N <= 5; ++N) absorb(o, suite_closed_forms(N));
    return o;
}

Outcome commuting()
{
    Outcome o;
    for (int N = 2; N <= 4; ++N) absorb(o, suite_commute(N, false));
    for (int N = 2; N <= 3; ++N) absorb(o, suite_commute(N, true));
    return o;
}

Outcome quasiclassical()
{
    Outcome o;
    for (int N = 2; N <= 4; ++N) {
        auto r = suite_quasiclassical(N);
        for (const auto& c : r.checks)
            if (c.id.ends_with(".k1") && !c.pass) {
                o.pass = false;
                o.note += " " + c.id;
            }
    }
    return o;
}

Outcome automorphism()
{
    Outcome o;
    for (int N = 2; N <= 4; ++N) absorb(o, suite_automorphism(N));
    return o;
}

Outcome relativistic()
{
    Outcome o;
    for (int N = 2; N <= 4; ++N) {
        auto r = suite_relativistic(N);
        absorb(o, r);
        if (N == 4)
            for (const auto& c : r.checks)
                if (c.pass) o.note = " convention " + c.details.at("working_convention") + ", c = " + c.details.at("c");
    }
    return o;
}

Outcome macdonald()
{
    Outcome o;
    for (int N = 2; N <= 4; ++N) absorb(o, suite_macdonald_limit(N));
    return o;
}

Outcome calogero_moser()
{
    Outcome o;
    for (int N = 2; N <= 4; ++N) {
        absorb(o, suite_cm_limit(N, false));
        absorb(o, suite_cm_limit(N, true));
    }
    return o;
}

Outcome serre()
{
    Outcome o;
    for (int N = 2; N <= 5; ++N) {
        absorb(o, suite_serre(N, false));
        absorb(o, suite_serre(N, true));
    }
    return o;
}

Outcome oracle()
{
    Outcome o;
    const DiffOp engine = build_toda_operator(2, 1, false);
    for (bool f_left : {true, false})
        if (sl2::whittaker_operator(sl2::casimir(), f_left, LaurentQK(-1)) != engine) {
            o.pass = false;
            o.note += f_left ? " f-left model differs" : " e-left model differs";
        }
    return o;
}

Outcome structure()
{
    Outcome o;
    struct Case {
        int N;
        bool affine;
        std::vector<std::pair<int, int>> edges;
    };
    // rank 3: every orientation has exactly one compatible order, so two
    // different orientations are compared instead
    const std::vector<Case> cases = {
        {3, false, {{2, 1}}},
        {3, true, {{1, 0}, {1, 2}, {2, 0}}},
        {4, false, {{1, 2}, {3, 2}}},
        {4, true, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}},
    };
    for (const auto& c : cases) {
        auto d = dynkin_type_A(c.N, c.affine);
        Orientation partial;
        partial.edges = c.edges;
        for (const auto& order : linear_extensions(d, partial))
            for (int k = 1; k < c.N; ++k) {
                EngineConfig cfg = EngineConfig::standard(c.N, c.affine);
                cfg.orientation = make_orientation(d, c.edges, order);
                if (build_toda_operator(k, cfg) != build_toda_operator(c.N, k, c.affine)) {
                    o.pass = false;
                    o.note += " ordering N=" + std::to_string(c.N) + " k=" + std::to_string(k);
                }
            }
    }
    for (int N = 2; N <= 5; ++N)
        for (int k = 1; k < N; ++k) {
            DiffOp at0 = build_toda_operator(N, k, true).map_scalars([](const LaurentQK& s) { return s.substitute_K(0); });
            if (at0 != build_toda_operator(N, k, false)) {
                o.pass = false;
                o.note += " K->0 N=" + std::to_string(N) + " k=" + std::to_string(k);
            }
        }
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"closed forms of the first integrals, N = 2..5", closed_forms},
        {"commuting families (finite N = 2..4, affine N = 2..3)", commuting},
        {"quasiclassical limit of the affine first integral, N = 2..4", quasiclassical},
        {"automorphism to the reduced form and its K = 0 case, N = 2..4", automorphism},
        {"relativistic Toda gauge equivalence, N = 2..4", relativistic},
        {"Macdonald degeneration and rescaling, N = 2..4", macdonald},
        {"Calogero-Moser degenerations with certificates, N = 2..4", calogero_moser},
        {"quantum Serre homomorphism, finite and affine, N = 2..5", serre},
        {"independent U_q(sl_2) PBW oracle", oracle},
        {"ordering independence and K -> 0 degeneration", structure},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string(" exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s criterion %zu: %s%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.note.empty() ? "" : " --", o.note.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
