#include <gtest/gtest.h>

#include "oracle/sl2_pbw.hpp"
#include "qtoda/engine.hpp"

using namespace qtoda;
using sl2::Uq;

TEST(Sl2Oracle, Relations)
{
    Uq E = Uq::letter('E'), F = Uq::letter('F'), K = Uq::letter('K'), k = Uq::letter('k');
    LaurentQK gap = LaurentQK::q(1) - LaurentQK::q(-1);
    EXPECT_TRUE((K * k).normal_ordered().terms().count(""));
    EXPECT_TRUE(((K * E - E * K.scaled(LaurentQK::q(2))).normal_ordered()).is_zero());
    EXPECT_TRUE(((E * F - F * E) - (K - k).scaled(gap)).normal_ordered().is_zero());
}

TEST(Sl2Oracle, CasimirIsCentral)
{
    Uq C = sl2::casimir();
    for (char g : {'E', 'F', 'K', 'k'}) {
        Uq x = Uq::letter(g);
        EXPECT_TRUE((x * C - C * x).normal_ordered().is_zero()) << g;
    }
}

TEST(Sl2Oracle, BothWhittakerModelsGiveTheRankTwoIntegral)
{
    const DiffOp engine = build_toda_operator(2, 1, false);
    for (bool f_left : {true, false}) {
        DiffOp oracle = sl2::whittaker_operator(sl2::casimir(), f_left, LaurentQK(-1));
        EXPECT_EQ(oracle, engine) << (f_left ? "f on the left" : "e on the left") << "\n"
                                  << oracle.to_string() << "\nvs\n" << engine.to_string();
    }
}
