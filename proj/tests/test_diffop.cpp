#include <gtest/gtest.h>

#include <cstdlib>

#include "qtoda/diffop.hpp"
#include "random_ops.hpp"

using namespace qtoda;

namespace {

TorusRat e(const ExpVector& v, const LaurentQK& c = 1) { return TorusRat(TorusPoly::monomial(v, c)); }

DiffOp root_op(sample::Sampler& s, int N, int terms, Mode mode = Mode::gl)
{
    DiffOp a(N, mode);
    for (int i = 0; i < terms; ++i) a.add_term(s.exponent(N, false), TorusRat(s.poly(N, 2, true)));
    return a;
}

}  // namespace

TEST(DiffOp, ShiftRule)
{
    DiffOp t1 = DiffOp::shift({1, 0});
    DiffOp x = DiffOp::multiplication(e({1, -1}));
    DiffOp want(2);
    want.add_term({1, 0}, e({1, -1}, LaurentQK::q(1)));
    EXPECT_EQ(t1 * x, want);
    EXPECT_EQ(DiffOp::identity(2) * t1, t1);
    EXPECT_EQ(x * DiffOp::identity(2), x);
}

TEST(DiffOp, OrthogonalShiftCommutes)
{
    DiffOp t12 = DiffOp::shift({1, 1});
    DiffOp x = DiffOp::multiplication(e({1, -1}));
    EXPECT_TRUE(commutator(t12, x).is_zero());
    EXPECT_TRUE(commutator(DiffOp::shift({1, 0}), DiffOp::shift({0, 1})).is_zero());
}

TEST(DiffOp, NoZeroTerms)
{
    DiffOp a = DiffOp::shift({1, 0}) + DiffOp::shift({0, 1});
    DiffOp b = a - DiffOp::shift({0, 1});
    EXPECT_EQ(b.size(), 1u);
    EXPECT_TRUE((a - a).is_zero());
}

TEST(DiffOp, AssociativityRandomized)
{
    sample::Sampler s(21);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = s.uniform(2, 3);
        DiffOp a = s.op(N), b = s.op(N), c = s.op(N);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE(commutator(a, a).is_zero());
    }
}

TEST(DiffOp, ParallelComposeMatchesSerial)
{
    sample::Sampler s(4);
    DiffOp a = s.op(3, 8), b = s.op(3, 8);
    setenv("TODA_THREADS", "1", 1);
    DiffOp serial = a * b;
    setenv("TODA_THREADS", "4", 1);
    DiffOp parallel = a * b;
    unsetenv("TODA_THREADS");
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(serial.to_string(), parallel.to_string());
}

TEST(Gauge, Examples)
{
    DiffOp t = DiffOp::shift({1, 0});
    EXPECT_EQ(gauge_monomial(t, {0, 0}), t);
    DiffOp f = DiffOp::multiplication(e({1, -1}, 3));
    EXPECT_EQ(gauge_monomial(f, {Rational(5, 2), 7}), f);
    auto rho = rho_vector(2);
    EXPECT_EQ(rho, (std::vector<Rational>{Rational(1, 2), Rational(-1, 2)}));
    EXPECT_EQ(gauge_monomial(t, rho), t.scaled(LaurentQK::q_half(-1)));
    EXPECT_THROW(gauge_monomial(t, {Rational(1, 3), 0}), Error);
}

TEST(Gauge, IsAlgebraMapRandomized)
{
    sample::Sampler s(8);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = s.uniform(2, 4);
        DiffOp a = s.op(N), b = s.op(N);
        auto rho = rho_vector(N);
        EXPECT_EQ(gauge_monomial(a * b, rho), gauge_monomial(a, rho) * gauge_monomial(b, rho));
        std::vector<Rational> minus(rho.size());
        for (size_t i = 0; i < rho.size(); ++i) minus[i] = -rho[i];
        EXPECT_EQ(gauge_monomial(gauge_monomial(a, rho), minus), a);
    }
}

TEST(Quotient, Examples)
{
    DiffOp t = DiffOp::shift({1, 1});
    EXPECT_EQ(quotient_reduce(t), DiffOp::identity(2, Mode::sl_quotient));
    DiffOp two = DiffOp::shift({2, 0}) + DiffOp::shift({0, 2});
    EXPECT_EQ(quotient_reduce(two).size(), 2u);
    EXPECT_THROW(quotient_reduce(DiffOp::multiplication(e({1, 0}))), Error);
    DiffOp bad(2, Mode::sl_quotient);
    EXPECT_THROW(bad.add_term({0, 0}, e({1, 1})), Error);
}

TEST(Quotient, IsAlgebraMapRandomized)
{
    sample::Sampler s(15);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = s.uniform(2, 4);
        DiffOp a = root_op(s, N, 3), b = root_op(s, N, 3);
        EXPECT_EQ(quotient_reduce(a * b), quotient_reduce(a) * quotient_reduce(b));
    }
}

TEST(Automorphism, Generators)
{
    DiffOp t1 = DiffOp::shift({1, 0});
    EXPECT_EQ(root_shift_automorphism(t1, false), t1);
    DiffOp x = DiffOp::multiplication(e({1, -1}));
    DiffOp want(2);
    want.add_term({1, -1}, e({1, -1}));
    EXPECT_EQ(root_shift_automorphism(x, false), want);
    EXPECT_THROW(root_shift_automorphism(DiffOp::multiplication(e({1, 0})), false), Error);
}

TEST(Automorphism, FiniteIsAlgebraMapRandomized)
{
    sample::Sampler s(19);
    for (int trial = 0; trial < 20; ++trial) {
        const int N = s.uniform(2, 4);
        DiffOp a = root_op(s, N, 3), b = root_op(s, N, 3);
        EXPECT_EQ(root_shift_automorphism(a * b, false), root_shift_automorphism(a, false) * root_shift_automorphism(b, false));
    }
}

TEST(Automorphism, FactorizationIndependent)
{
    // e^{a1} e^{a2} written as one monomial or as a product of the two images
    DiffOp x1 = DiffOp::multiplication(e({1, -1, 0}));
    DiffOp x2 = DiffOp::multiplication(e({0, 1, -1}));
    DiffOp t2 = DiffOp::shift({0, 1, 0});
    EXPECT_EQ(root_shift_automorphism(x1 * x2, false), root_shift_automorphism(x1, false) * root_shift_automorphism(x2, false));
    // the reordering relation T_2 e^{a1} = q^{-1} e^{a1} T_2 is respected
    EXPECT_EQ(root_shift_automorphism(t2 * x1, false), root_shift_automorphism(t2, false) * root_shift_automorphism(x1, false));
    EXPECT_EQ(t2 * x1, (x1 * t2).scaled(LaurentQK::q(-1)));
}

TEST(Automorphism, CyclicSingleRootsAreShiftInvariant)
{
    // in the cyclic chart each simple root image is e^{a_i} T_i T_{i+1}^-1 up to a
    // common center-of-mass shift
    for (int N = 2; N <= 4; ++N)
        for (int i = 1; i <= N; ++i) {
            ExpVector a = root_vector(N, i, i % N + 1);
            DiffOp img = quotient_reduce(root_shift_automorphism(DiffOp::multiplication(e(a)), true));
            ASSERT_EQ(img.size(), 1u);
            EXPECT_EQ(img.terms().begin()->first, com_quotient_canonicalize(a));
        }
}
