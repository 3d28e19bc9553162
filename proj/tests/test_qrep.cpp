#include <gtest/gtest.h>

#include <algorithm>

#include "qtoda/qrep.hpp"
#include "random_ops.hpp"

using namespace qtoda;

TEST(Dynkin, CartanMatrices)
{
    auto a2 = dynkin_type_A(3, false);
    EXPECT_EQ(a2.nodes, (std::vector<int>{1, 2}));
    EXPECT_EQ(a2.cartan(1, 2), -1);
    EXPECT_EQ(a2.cartan(1, 1), 2);
    auto aff2 = dynkin_type_A(2, true);
    EXPECT_EQ(aff2.cartan(0, 1), -2);
    auto aff4 = dynkin_type_A(4, true);
    EXPECT_EQ(aff4.cartan(0, 3), -1);
    EXPECT_EQ(aff4.cartan(0, 2), 0);
    EXPECT_EQ(aff4.simple_root(0), (ExpVector{-1, 0, 0, 1}));
}

TEST(Orientation, Standard)
{
    auto o2 = build_orientation(2, false);
    EXPECT_TRUE(o2.edges.empty());
    auto o3 = build_orientation(3, true);
    auto edges = o3.edges;
    std::sort(edges.begin(), edges.end());
    EXPECT_EQ(edges, (std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_TRUE(is_acyclic({0, 1, 2}, o3.edges));
    EXPECT_EQ(o3.sign(0, 2), 1);
    EXPECT_EQ(o3.sign(2, 0), -1);
}

TEST(Orientation, RejectsCycle)
{
    auto d = dynkin_type_A(4, true);
    EXPECT_FALSE(is_acyclic(d.nodes, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    EXPECT_THROW(make_orientation(d, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 2, 3}), Error);
    // order must extend the edges
    EXPECT_THROW(make_orientation(d, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {1, 0, 2, 3}), Error);
}

TEST(Orientation, LinearExtensions)
{
    auto d = dynkin_type_A(4, false);
    auto o = make_orientation(d, {{1, 2}, {3, 2}}, {1, 3, 2});
    auto ext = linear_extensions(d, o);
    EXPECT_EQ(ext.size(), 2u);
    EXPECT_EQ(linear_extensions(dynkin_type_A(4, false), build_orientation(4, false)).size(), 1u);
}

TEST(NormalOrder, Examples)
{
    auto d = dynkin_type_A(3, false);
    auto o = build_orientation(3, false);  // 1 -> 2
    auto r = qp_normal_order({2, 1}, d, o);
    EXPECT_EQ(r.word, (std::vector<int>{1, 2}));
    EXPECT_EQ(r.scalar, LaurentQK::q(1));
    auto sorted = qp_normal_order({1, 2, 2}, d, o);
    EXPECT_EQ(sorted.scalar, LaurentQK(1));

    auto d4 = dynkin_type_A(4, false);
    auto o4 = build_orientation(4, false);
    auto c = qp_normal_order({3, 1}, d4, o4);
    EXPECT_EQ(c.scalar, LaurentQK(1));
    EXPECT_EQ(c.word, (std::vector<int>{1, 3}));
    // the opposite algebra collects the inverse power
    EXPECT_EQ(qp_normal_order({2, 1}, d, o, Side::right).scalar, LaurentQK::q(-1));
}

TEST(NormalOrder, SortStrategiesAgreeRandomized)
{
    sample::Sampler s(31);
    for (int N = 2; N <= 5; ++N)
        for (bool affine : {false, true}) {
            auto d = dynkin_type_A(N, affine);
            auto o = build_orientation(N, affine);
            for (int trial = 0; trial < 15; ++trial) {
                std::vector<int> w(s.uniform(0, 6));
                for (auto& x : w) x = d.nodes[s.uniform(0, static_cast<int>(d.nodes.size()) - 1)];
                for (Side side : {Side::left, Side::right}) {
                    auto a = qp_normal_order(w, d, o, side);
                    auto b = qp_normal_order_insertion(w, d, o, side);
                    EXPECT_EQ(a.scalar, b.scalar);
                    EXPECT_EQ(a.word, b.word);
                }
            }
        }
}

TEST(Serre, ScalarCases)
{
    // commuting pair, A_2 pair and the doubled affine A_1 edge
    for (auto [N, affine] : {std::pair{4, false}, std::pair{3, false}, std::pair{2, true}}) {
        auto checks = verify_serre_homomorphism(dynkin_type_A(N, affine), build_orientation(N, affine));
        EXPECT_FALSE(checks.empty());
        for (const auto& c : checks) EXPECT_TRUE(c.residual.is_zero()) << c.i << "," << c.j;
    }
}

TEST(Serre, AllTypeARanks)
{
    for (int N = 2; N <= 5; ++N)
        for (bool affine : {false, true}) {
            auto d = dynkin_type_A(N, affine);
            auto checks = verify_serre_homomorphism(d, build_orientation(N, affine));
            const size_t n = d.nodes.size();
            // every ordered pair on both sides
            EXPECT_EQ(checks.size(), 2 * n * (n - 1));
            for (const auto& c : checks) EXPECT_TRUE(c.residual.is_zero());
        }
}

TEST(Rep, Dimensions)
{
    auto v = fundamental_rep(2, 1, false);
    EXPECT_EQ(v.dim(), 2);
    auto w = fundamental_rep(4, 2, false);
    EXPECT_EQ(w.dim(), 6);
    // e_1 sends {2} to {1}
    ASSERT_EQ(v.e.at(1).size(), 1u);
    EXPECT_EQ(v.basis[v.e.at(1)[0].from], (std::vector<int>{2}));
    EXPECT_EQ(v.basis[v.e.at(1)[0].to], (std::vector<int>{1}));
}

TEST(Rep, TwoRhoDiagonal)
{
    for (int N = 2; N <= 5; ++N) {
        auto v = fundamental_rep(N, 1, false);
        for (int j = 1; j <= N; ++j) EXPECT_EQ(v.q2rho[v.index_of({j})], LaurentQK::q(N + 1 - 2 * j));
    }
}

TEST(Rep, DefiningRelations)
{
    for (int N = 2; N <= 5; ++N)
        for (int k = 1; k < N; ++k)
            for (bool affine : {false, true}) {
                auto rep = fundamental_rep(N, k, affine);
                for (const auto& c : check_rep_relations(rep)) EXPECT_TRUE(c.ok) << N << " " << k << " " << c.relation;
            }
}

TEST(Rep, AffineNodeShiftsZDegree)
{
    auto rep = fundamental_rep(3, 1, true);
    for (const auto& a : rep.e.at(0)) {
        EXPECT_EQ(a.zdeg, 1);
        EXPECT_EQ(rep.basis[a.from], (std::vector<int>{1}));
        EXPECT_EQ(rep.basis[a.to], (std::vector<int>{3}));
    }
    for (const auto& a : rep.f.at(0)) EXPECT_EQ(a.zdeg, -1);
}

TEST(RFactor, RankOne)
{
    auto rep = fundamental_rep(2, 1, false);
    auto f = rmatrix_simple_factor(rep, 1);
    EXPECT_EQ(f.coeff, LaurentQK::q(1) - LaurentQK::q(-1));
    ASSERT_EQ(f.action.size(), 1u);
    EXPECT_EQ(rep.basis[f.action[0].from], (std::vector<int>{1}));
    EXPECT_EQ(rep.basis[f.action[0].to], (std::vector<int>{2}));
    auto t = rmatrix_simple_factor(rep, 1, true);
    ASSERT_EQ(t.action.size(), 1u);
    EXPECT_EQ(rep.basis[t.action[0].from], (std::vector<int>{2}));
    EXPECT_EQ(rep.basis[t.action[0].to], (std::vector<int>{1}));
}
