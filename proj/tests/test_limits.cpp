#include <gtest/gtest.h>

#include "qtoda/engine.hpp"
#include "qtoda/limits.hpp"
#include "random_ops.hpp"

using namespace qtoda;

namespace {

LaurentQK gap2() { return q_gap_squared(); }

TorusPoly e(const ExpVector& v, const LaurentQK& c = 1) { return TorusPoly::monomial(v, c); }

std::vector<int> d2(int N, int j)
{
    std::vector<int> d(N, 0);
    d[j - 1] = 2;
    return d;
}

// -1/2 sum d_j^2 + sum e^{alpha_i} by hand
DifferentialOp toda_by_hand(int N, bool affine)
{
    DifferentialOp m(N);
    for (int j = 1; j <= N; ++j) m.add_term(d2(N, j), TorusPoly::constant(N, Rational(-1, 2)));
    TorusPoly pot(N);
    for (int i = 1; i < N; ++i) pot.add_term(root_vector(N, i, i + 1), 1);
    if (affine) pot.add_term(root_vector(N, N, 1), LaurentQK::K(1));
    m.add_term(std::vector<int>(N, 0), pot);
    return m;
}

// g^{2n} -> (-(q - q^-1)^2)^n
LaurentQK coupling_at_gap(const LaurentQK& s)
{
    return s.map_monomials([](const ScalarMonomial& m) {
        ScalarMonomial rest = m;
        rest.g = 0;
        return LaurentQK::monomial(1, rest) * (-gap2()).pow(m.g / 2);
    });
}

}  // namespace

TEST(Classical, Catalog)
{
    DifferentialOp m2 = classical_toda(2);
    EXPECT_EQ(m2, toda_by_hand(2, false));
    DifferentialOp a2 = affine_classical_toda(2);
    EXPECT_EQ(a2, toda_by_hand(2, true));
    EXPECT_EQ(a2.coefficient({0, 0}), e({1, -1}) + e({-1, 1}, LaurentQK::K(1)));
    for (int N = 2; N <= 5; ++N) {
        DifferentialOp mk = affine_classical_toda(N);
        DifferentialOp at0(N);
        for (const auto& [d, c] : mk.terms())
            at0.add_term(d, c.map_scalars([](const LaurentQK& s) { return s.substitute_K(0); }));
        EXPECT_EQ(at0, classical_toda(N));
    }
}

TEST(Classical, SlReduce)
{
    DifferentialOp m = classical_toda(2).sl_reduce();
    // -1/2 (d1^2 + d1^2) = -d1^2
    EXPECT_EQ(m.coefficient({2, 0}), TorusPoly::constant(2, -1));
    EXPECT_TRUE(m.coefficient({0, 2}).is_zero());
}

TEST(Classical, ActionOnExponentials)
{
    // -1/2 (l1^2 + l2^2) e^{l.z} + e^{(l + alpha).z}
    TorusPoly got = classical_toda(2).apply_to_exponential({3, -1});
    TorusPoly want = e({3, -1}, -5) + e({4, -2});
    EXPECT_EQ(got, want);
}

TEST(Jet, ShiftOperatorMatchesScalarJet)
{
    sample::Sampler s(41);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = s.uniform(2, 4);
        ShiftVector mu = s.exponent(N, false);
        ExpVector lambda = s.exponent(N, false);
        const int m = 4;
        auto ops = shift_operator_jet(mu, m);
        ASSERT_EQ(static_cast<int>(ops.size()), m + 1);
        HbarJet want = jet_expand(LaurentQK::q(pairing(lambda, mu)), m);
        for (int n = 0; n <= m; ++n)
            EXPECT_EQ(ops[n].apply_to_exponential(lambda), e(lambda, want.coeff(n)));
    }
}

TEST(Quasiclassical, ConstantsVanish)
{
    for (int N = 2; N <= 4; ++N) {
        DiffOp c = DiffOp::identity(N, Mode::sl_quotient).scaled(N);
        EXPECT_TRUE(quasiclassical_limit(c, N, 2).is_zero());
    }
}

TEST(Quasiclassical, FirstIntegral)
{
    for (int N = 2; N <= 4; ++N)
        for (bool affine : {false, true}) {
            auto ex = quasiclassical_expansion(build_toda_operator(N, 1, affine), N, 2);
            EXPECT_TRUE(ex.leading.is_zero());
            EXPECT_TRUE(ex.pole_reduced.is_zero());
            EXPECT_EQ(ex.limit, toda_by_hand(N, affine).sl_reduce().scaled(-1)) << N << " " << affine;
        }
}

TEST(Quasiclassical, Linear)
{
    DiffOp a = build_toda_operator(3, 1, true);
    DiffOp b = build_toda_operator(3, 1, false);
    DifferentialOp sum = quasiclassical_limit(a + b, 6, 2);
    EXPECT_EQ(sum, quasiclassical_limit(a, 3, 2) + quasiclassical_limit(b, 3, 2));
}

TEST(Quasiclassical, HigherIntegralsAreClassicalMultiples)
{
    for (int N = 3; N <= 4; ++N)
        for (int k = 2; k < N; ++k)
            for (bool affine : {false, true}) {
                int dim = 1;
                for (int i = 0; i < k; ++i) dim = dim * (N - i) / (i + 1);
                auto limit = quasiclassical_limit(build_toda_operator(N, k, affine), dim, 2);
                auto fit = fit_classical_integral(limit, toda_by_hand(N, affine).sl_reduce());
                EXPECT_TRUE(fit.ok) << N << " " << k;
                EXPECT_FALSE(fit.scale.is_zero());
                EXPECT_TRUE(fit.residual.is_zero());
            }
}

TEST(Quasiclassical, DivergentInputIsRejected)
{
    DiffOp shift = DiffOp::shift({2, 0}, Mode::sl_quotient) + DiffOp::identity(2, Mode::sl_quotient);
    EXPECT_THROW(quasiclassical_limit(shift, 2, 2), LimitError);
}

TEST(Macdonald, RankTwo)
{
    DiffOp mac = macdonald_operator(2);
    TorusPoly den = e({1, 0}) - e({0, 1});
    TorusRat c1(e({1, 0}, LaurentQK::t(1)) - e({0, 1}), den);
    TorusRat c2(e({0, 1}, LaurentQK::t(1)) - e({1, 0}), -den);
    EXPECT_EQ(mac.coefficient({2, 0}), c1);
    EXPECT_EQ(mac.coefficient({0, 2}), c2);
}

TEST(Macdonald, AtTrivialParameterIsPlainShifts)
{
    for (int N = 2; N <= 4; ++N) {
        DiffOp mac = macdonald_operator(N).map_scalars([](const LaurentQK& s) {
            return s.map_monomials([](const ScalarMonomial& m) { return LaurentQK::monomial(1, {m.q2, m.k, m.g, 0}); });
        });
        DiffOp plain(N);
        for (int j = 1; j <= N; ++j) plain.add_term(d2(N, j), TorusRat(TorusPoly::constant(N, 1)));
        EXPECT_EQ(mac, plain);
    }
}

TEST(Macdonald, TodaLimit)
{
    for (int N = 2; N <= 4; ++N) {
        DiffOp want(N);
        want.add_term(d2(N, N), TorusRat(TorusPoly::constant(N, 1)));
        for (int i = 1; i < N; ++i)
            want.add_term(d2(N, i), TorusRat(TorusPoly::constant(N, 1) - e(root_vector(N, i, i + 1))));
        DiffOp got = macdonald_toda_limit(N);
        EXPECT_EQ(got, want) << N;
        EXPECT_EQ(got, macdonald_limit_closed_form(N));
    }
}

TEST(Macdonald, LimitRescalesToReducedToda)
{
    for (int N = 2; N <= 4; ++N) {
        std::vector<int> w(N);
        for (int i = 0; i < N; ++i) w[i] = -(i + 1);
        DiffOp got = quotient_reduce(rescale_torus(macdonald_toda_limit(N), w, gap2()));
        EXPECT_EQ(got, reduced_toda(N, false));
    }
}

TEST(Macdonald, DegreesInU)
{
    auto coeffs = macdonald_in_u(3);
    for (const auto& [mu, r] : coeffs) {
        auto [dn, dd] = r.degrees();
        EXPECT_LE(dn, dd + 0) << vector_to_string(mu);
    }
}

TEST(CalogeroMoser, TrigonometricSurvivors)
{
    auto lim2 = cm_limit(2, false);
    ASSERT_EQ(lim2.terms.size(), 1u);
    EXPECT_TRUE(lim2.terms[0].survives);
    EXPECT_EQ(lim2.op, classical_toda(2));

    // e_1 - e_3 has (alpha, rho) = 2 and decays like e^{-2P}
    SinhTerm t{1, 3, 0, root_vector(3, 1, 3), Rational(2), Rational(0)};
    auto r = sinh_term_limit(t, 3);
    EXPECT_FALSE(r.survives);
    EXPECT_EQ(r.net_degree, Rational(-2));
}

TEST(CalogeroMoser, EllipticRankTwo)
{
    auto lim = cm_limit(2, true);
    int survivors = 0;
    for (const auto& t : lim.terms)
        if (t.survives) {
            ++survivors;
            EXPECT_TRUE(t.term.n == 0 || t.term.n == -1);
            if (t.term.n == -1) EXPECT_EQ(t.contribution, e({-1, 1}, LaurentQK::K(1)));
        }
    EXPECT_EQ(survivors, 2);
    EXPECT_TRUE(lim.certificate_ok);
    EXPECT_EQ(lim.op, affine_classical_toda(2));
}

TEST(CalogeroMoser, AllRanks)
{
    for (int N = 2; N <= 4; ++N) {
        auto trig = cm_limit(N, false);
        EXPECT_TRUE(trig.certificate_ok);
        EXPECT_EQ(trig.op, toda_by_hand(N, false));
        auto ell = cm_limit(N, true);
        EXPECT_TRUE(ell.certificate_ok);
        EXPECT_EQ(ell.op, toda_by_hand(N, true));
        for (const auto& t : ell.terms)
            if (!t.survives) EXPECT_LT(t.net_degree, 0);
    }
}

TEST(CalogeroMoser, NonEscapingArgumentIsRejected)
{
    SinhTerm t{1, 2, 0, root_vector(2, 1, 2), Rational(0), Rational(0)};
    EXPECT_THROW(sinh_term_limit(t, 2), LimitError);
}

TEST(Reduced, AffineAtKZero)
{
    for (int N = 2; N <= 4; ++N)
        for (auto conv : {ShiftConvention::plus, ShiftConvention::minus}) {
            DiffOp at0 = reduced_toda(N, true, conv).map_scalars([](const LaurentQK& s) { return s.substitute_K(0); });
            EXPECT_EQ(at0, reduced_toda(N, false, conv));
        }
}

TEST(Reduced, AutomorphismImage)
{
    for (int N = 2; N <= 4; ++N) {
        EXPECT_EQ(root_shift_automorphism(toda_closed_form(N, true), true), reduced_toda(N, true));
        EXPECT_EQ(root_shift_automorphism(toda_closed_form(N, false), false), reduced_toda(N, false));
    }
}

TEST(Relativistic, GaugedFormAtImaginaryCoupling)
{
    // g = i (q - q^-1) turns the gauged Hamiltonian into the reduced q-Toda operator
    for (int N = 2; N <= 4; ++N)
        for (auto conv : {ShiftConvention::plus, ShiftConvention::minus})
            EXPECT_EQ(quotient_reduce(gauged_relativistic_toda(N, false, conv).map_scalars(coupling_at_gap)),
                      reduced_toda(N, false, conv));
}

TEST(Relativistic, ConventionOutcome)
{
    for (int N = 2; N <= 4; ++N)
        for (bool periodic : {false, true}) {
            auto minus = relativistic_gauge_check(N, periodic, ShiftConvention::minus);
            ASSERT_TRUE(minus.resolved) << minus.diagnostic;
            ASSERT_TRUE(minus.q_shift);
            EXPECT_EQ(*minus.q_shift, -2);
            EXPECT_TRUE(minus.matches_gauged);
            EXPECT_TRUE(minus.matches_reduced);
            if (periodic) EXPECT_FALSE(minus.literal_periodic_matches);

            auto plus = relativistic_gauge_check(N, periodic, ShiftConvention::plus);
            EXPECT_FALSE(plus.resolved);
            EXPECT_NE(plus.diagnostic.find("unresolved"), std::string::npos);
        }
}

TEST(Relativistic, DoubledShift)
{
    EXPECT_EQ(doubled_shift(3, 2, ShiftConvention::plus), (ShiftVector{0, 2, 0}));
    EXPECT_EQ(doubled_shift(3, 2, ShiftConvention::minus), (ShiftVector{0, -2, 0}));
}
