#include <gtest/gtest.h>

#include "qtoda/json_io.hpp"
#include "random_ops.hpp"

using namespace qtoda;

TEST(Json, ScalarRoundTrip)
{
    sample::Sampler s(51);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentQK a = s.scalar(4);
        EXPECT_EQ(laurent_from_json(to_json(a)), a);
    }
    LaurentQK big = LaurentQK(Rational(mpz_class("123456789012345678901234567891"), 7)) * LaurentQK::g(2) * LaurentQK::t(-1);
    EXPECT_NE(to_json(big).find("\"123456789012345678901234567891\""), std::string::npos);
    EXPECT_EQ(laurent_from_json(to_json(big)), big);
}

TEST(Json, EngineOutputsRoundTrip)
{
    for (int N = 2; N <= 4; ++N)
        for (int k = 1; k < N; ++k)
            for (bool affine : {false, true}) {
                DiffOp a = build_toda_operator(N, k, affine);
                const std::string text = to_json(a);
                DiffOp back = diffop_from_json(text);
                EXPECT_EQ(back, a);
                EXPECT_EQ(back.mode(), Mode::sl_quotient);
                EXPECT_EQ(to_json(back), text);
            }
}

TEST(Json, FractionsRoundTrip)
{
    DiffOp mac = macdonald_operator(3);
    DiffOp back = diffop_from_json(to_json(mac));
    EXPECT_EQ(back, mac);
    EXPECT_EQ(to_json(back), to_json(mac));
}

TEST(Json, DifferentialOperatorRoundTrip)
{
    DifferentialOp m = affine_classical_toda(3);
    EXPECT_EQ(differential_op_from_json(to_json(m)), m);
}

TEST(Json, Deterministic)
{
    EXPECT_EQ(to_json(build_toda_operator(4, 2, true)), to_json(build_toda_operator(4, 2, true)));
    auto rep = fundamental_rep(3, 1, true);
    auto cfg = EngineConfig::standard(3, true);
    EXPECT_EQ(to_json(expand_central_words(rep, cfg)), to_json(expand_central_words(rep, cfg)));
    EXPECT_NE(to_json(rep).find("\"q2rho\""), std::string::npos);
}

TEST(Json, MalformedInputIsAnError)
{
    EXPECT_THROW(diffop_from_json("{not json"), Error);
    EXPECT_THROW(diffop_from_json(R"({"N": 2})"), Error);
    EXPECT_THROW(diffop_from_json(R"({"N": 2, "mode": "gl", "terms": [{"shift": [1, 0], "num": [{"exp": [1], "coeff": []}], "den": []}]})"), Error);
    EXPECT_THROW(laurent_from_json("[[0, 0, 1]]"), Error);
}
