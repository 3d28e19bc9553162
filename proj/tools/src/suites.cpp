#include "qtoda_cli/suites.hpp"

#include <string>

#include "qtoda/engine.hpp"
#include "qtoda/json_io.hpp"
#include "qtoda/limits.hpp"
#include "qtoda/qrep.hpp"

namespace qtoda::cli {

namespace {

std::string tag(int N, bool affine)
{
    return std::string(affine ? "affine." : "") + "n" + std::to_string(N);
}

int binomial(int n, int k)
{
    int b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

bool expect_equal(CheckRecord& rec, const DiffOp& got, const DiffOp& want)
{
    if (got == want) return true;
    rec.residual = clip("got:\n" + got.to_string() + "\nexpected:\n" + want.to_string());
    return false;
}

bool expect_equal(CheckRecord& rec, const DifferentialOp& got, const DifferentialOp& want)
{
    if (got == want) return true;
    rec.residual = clip("got: " + got.to_string() + "\nexpected: " + want.to_string());
    return false;
}

}  // namespace

VerificationReport suite_commute(int N, bool affine)
{
    VerificationReport rep{"commute", {}};
    std::vector<DiffOp> family;
    for (int k = 1; k <= N - 1; ++k) family.push_back(build_toda_operator(N, k, affine));
    if (family.size() < 2) {
        rep.run("commute." + tag(N, affine) + ".family", "a single integral commutes with itself",
                [&](CheckRecord& rec) {
                    rec.details["pairs"] = "0";
                    return commutator(family[0], family[0]).is_zero();
                });
        return rep;
    }
    for (size_t a = 0; a < family.size(); ++a)
        for (size_t b = a + 1; b < family.size(); ++b)
            rep.run("commute." + tag(N, affine) + ".k" + std::to_string(a + 1) + "-k" + std::to_string(b + 1),
                    affine ? "affine q-Toda integrals commute identically in K"
                           : "q-Toda integrals commute",
                    [&](CheckRecord& rec) {
                        DiffOp r = commutator(family[a], family[b]);
                        rec.details["residual_terms"] = std::to_string(r.size());
                        if (!r.is_zero()) rec.residual = clip(r.to_string());
                        return r.is_zero();
                    });
    return rep;
}

VerificationReport suite_serre(int N, bool affine)
{
    VerificationReport rep{"serre", {}};
    rep.run("serre." + tag(N, affine), "quantum Serre relations map to zero in the quantum polynomial algebra and its opposite",
            [&](CheckRecord& rec) {
                auto d = dynkin_type_A(N, affine);
                auto checks = verify_serre_homomorphism(d, build_orientation(N, affine));
                bool ok = true;
                std::string bad;
                for (const auto& c : checks)
                    if (!c.residual.is_zero()) {
                        ok = false;
                        bad += "(" + std::to_string(c.i) + "," + std::to_string(c.j) +
                               (c.side == Side::left ? ",left" : ",right") + "): " + c.residual.to_string() + "; ";
                    }
                rec.details["pairs"] = std::to_string(checks.size());
                rec.residual = clip(bad);
                return ok;
            });
    return rep;
}

VerificationReport suite_closed_forms(int N)
{
    VerificationReport rep{"closed-forms", {}};
    for (bool affine : {false, true})
        rep.run("closed-form." + tag(N, affine) + ".k1",
                affine ? "first affine q-Toda integral in closed form" : "first q-Toda integral in closed form",
                [&](CheckRecord& rec) { return expect_equal(rec, build_toda_operator(N, 1, affine), toda_closed_form(N, affine)); });
    return rep;
}

VerificationReport suite_quasiclassical(int N)
{
    VerificationReport rep{"quasiclassical", {}};
    for (bool affine : {false, true}) {
        DifferentialOp classical = (affine ? affine_classical_toda(N) : classical_toda(N)).sl_reduce();
        rep.run("quasiclassical." + tag(N, affine) + ".k1",
                "hbar -> 0 limit of the first integral is minus the classical Toda Hamiltonian",
                [&](CheckRecord& rec) {
                    auto e = quasiclassical_expansion(build_toda_operator(N, 1, affine), N, 2);
                    rec.details["pole_terms_before_reduction"] = std::to_string(e.pole.terms().size());
                    if (!e.leading.is_zero() || !e.pole_reduced.is_zero()) {
                        rec.residual = clip("hbar^-2: " + e.leading.to_string() + "; hbar^-1: " + e.pole_reduced.to_string());
                        return false;
                    }
                    return expect_equal(rec, e.limit, classical.scaled(-1));
                });
        for (int k = 2; k <= N - 1; ++k)
            rep.run("quasiclassical." + tag(N, affine) + ".k" + std::to_string(k),
                    "hbar -> 0 limit of a higher integral is C (M + G)",
                    [&](CheckRecord& rec) {
                        auto limit = quasiclassical_limit(build_toda_operator(N, k, affine), binomial(N, k), 2);
                        auto fit = fit_classical_integral(limit, classical);
                        rec.details["C"] = fit.scale.to_string();
                        rec.details["G"] = fit.shift.to_string();
                        if (!fit.ok) rec.residual = clip(limit.to_string());
                        return fit.ok;
                    });
    }
    return rep;
}

VerificationReport suite_automorphism(int N)
{
    VerificationReport rep{"automorphism", {}};
    rep.run("automorphism." + tag(N, true), "the shift-invariant affine integral maps to the reduced relativistic form",
            [&](CheckRecord& rec) {
                return expect_equal(rec, root_shift_automorphism(build_toda_operator(N, 1, true), true), reduced_toda(N, true));
            });
    rep.run("automorphism." + tag(N, false), "the non-affine integral maps to the reduced non-periodic form",
            [&](CheckRecord& rec) {
                return expect_equal(rec, root_shift_automorphism(build_toda_operator(N, 1, false), false), reduced_toda(N, false));
            });
    rep.run("automorphism." + tag(N, true) + ".k0", "the reduced affine form at K = 0 is the reduced non-affine form",
            [&](CheckRecord& rec) {
                DiffOp at0 = reduced_toda(N, true).map_scalars([](const LaurentQK& s) { return s.substitute_K(0); });
                return expect_equal(rec, at0, reduced_toda(N, false));
            });
    return rep;
}

VerificationReport suite_relativistic(int N)
{
    VerificationReport rep{"relativistic", {}};
    for (bool periodic : {false, true})
        rep.run(std::string("relativistic.n") + std::to_string(N) + (periodic ? ".periodic" : ".nonperiodic"),
                periodic ? "gauge transform of the periodic relativistic Toda Hamiltonian matches the reduced affine form"
                         : "gauge transform of the relativistic Toda Hamiltonian matches the reduced non-affine form",
                [&](CheckRecord& rec) {
                    bool any = false;
                    for (auto conv : {ShiftConvention::plus, ShiftConvention::minus}) {
                        auto r = relativistic_gauge_check(N, periodic, conv);
                        std::string key = "convention." + to_string(conv);
                        std::string line;
                        if (!r.resolved) {
                            line = "unresolved (" + clip(r.diagnostic, 200) + ")";
                        } else if (!r.q_shift) {
                            line = "resolved, not of the uniform form: " + clip(r.diagnostic, 200);
                        } else {
                            line = "c = " + std::to_string(*r.q_shift) + ", gauged form " +
                                   (r.matches_gauged ? "matches" : "differs") + ", reduced form " +
                                   (r.matches_reduced ? "matches" : "differs");
                            if (periodic)
                                line += std::string(", coupling^2 = -(q-q^-1)^2 K^(2/N) ") +
                                        (r.literal_periodic_matches ? "matches" : "differs");
                        }
                        rec.details[key] = line;
                        if (r.q_shift && r.matches_gauged && r.matches_reduced) {
                            any = true;
                            rec.details["working_convention"] = to_string(conv);
                            rec.details["c"] = std::to_string(*r.q_shift);
                        }
                    }
                    if (periodic) rec.details["coupling_normalization"] = "g^2 = -(q-q^-1)^2 K^(1/N), z_i = z'_i + (i/N) ln K";
                    return any;
                });
    return rep;
}

VerificationReport suite_macdonald_limit(int N)
{
    VerificationReport rep{"macdonald-limit", {}};
    rep.run("macdonald-limit.n" + std::to_string(N), "conjugated Macdonald operator degenerates to the q-Toda form",
            [&](CheckRecord& rec) { return expect_equal(rec, macdonald_toda_limit(N), macdonald_limit_closed_form(N)); });
    rep.run("macdonald-limit.n" + std::to_string(N) + ".rescaled",
            "after z_i -> z_i - i ln (q-q^-1)^2 the limit is the reduced non-affine form",
            [&](CheckRecord& rec) {
                std::vector<int> w(N);
                for (int i = 0; i < N; ++i) w[i] = -(i + 1);
                DiffOp got = quotient_reduce(rescale_torus(macdonald_toda_limit(N), w, q_gap_squared()));
                return expect_equal(rec, got, reduced_toda(N, false));
            });
    return rep;
}

VerificationReport suite_cm_limit(int N, bool elliptic)
{
    VerificationReport rep{"cm-limit", {}};
    rep.run(std::string("cm-limit.n") + std::to_string(N) + (elliptic ? ".elliptic" : ".trigonometric"),
            elliptic ? "elliptic Calogero-Moser degenerates to affine Toda"
                     : "trigonometric Calogero-Moser degenerates to Toda",
            [&](CheckRecord& rec) {
                auto lim = cm_limit(N, elliptic);
                int survivors = 0, vanishing = 0;
                for (const auto& t : lim.terms) (t.survives ? survivors : vanishing)++;
                rec.details["survivors"] = std::to_string(survivors);
                rec.details["vanishing_terms_certified"] = std::to_string(vanishing);
                rec.details["lattice_window"] = "[" + std::to_string(lim.window_lo) + "," + std::to_string(lim.window_hi) + "]";
                if (!lim.certificate_ok) {
                    rec.residual = "a non-surviving term has non-negative degree in e^P";
                    return false;
                }
                return expect_equal(rec, lim.op, elliptic ? affine_classical_toda(N) : classical_toda(N));
            });
    return rep;
}

VerificationReport suite_all(int max_n)
{
    VerificationReport rep{"all", {}};
    for (int N = 2; N <= max_n; ++N) {
        rep.append(suite_closed_forms(N));
        for (bool affine : {false, true}) {
            rep.append(suite_commute(N, affine));
            rep.append(suite_serre(N, affine));
        }
        rep.append(suite_quasiclassical(N));
        rep.append(suite_automorphism(N));
        rep.append(suite_relativistic(N));
        rep.append(suite_macdonald_limit(N));
        rep.append(suite_cm_limit(N, false));
        rep.append(suite_cm_limit(N, true));
    }
    return rep;
}

}  // namespace qtoda::cli
