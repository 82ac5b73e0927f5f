#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sumset/verifier.hpp"

using namespace sumset;

TEST(Verifier, TranslationInvarianceSeed1) {
    const auto o = check_translation_invariance(1, 500);
    EXPECT_TRUE(o.pass());
    EXPECT_EQ(o.cases, 500u);
    EXPECT_NE(o.replay.find("--seed 1"), std::string::npos);
}

TEST(Verifier, TranslationExamples) {
    EXPECT_EQ(sumset_size(translate(IntSet{0, 1, 3}, Int{7}), 2), 6u);
    EXPECT_EQ(sumset_size(IntSet{0, 1, 3}, 2), 6u);
    const PointSet a{Point{0, 0}, Point{1, 2}};
    EXPECT_EQ(sumset_size(translate(a, Point{5, 5}), 3), 4u);
    EXPECT_EQ(sumset_size(a, 3), 4u);
}

TEST(Verifier, NontrivialMonotonicity) {
    EXPECT_TRUE(check_nontrivial_monotonicity(2, 300).pass());
    const auto small = classify(IntSet{0, 1, 3}, 2);
    const auto big = classify(IntSet{0, 1, 3, 7}, 2);
    EXPECT_EQ(small.nontrivial, (std::vector<Int>{3}));
    EXPECT_EQ(big.nontrivial, (std::vector<Int>{3, 7, 8}));
}

TEST(Verifier, FamilyLowerBounds) {
    const auto o = check_family_lower_bounds();
    EXPECT_TRUE(o.pass());
    EXPECT_GT(o.cases, 10000u);
}

TEST(Verifier, Dichotomy) {
    EXPECT_TRUE(check_dichotomy(3, 4, 12).pass());
    EXPECT_TRUE(check_dichotomy(4, 5, 10).pass());
    EXPECT_TRUE(check_dichotomy(2, 4, 10).pass());
}

TEST(Verifier, Z2GapSampled) {
    EXPECT_TRUE(check_z2_gap_sampled(3, 200, 3, 4).pass());
    const PointSet line{Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}};
    EXPECT_TRUE(is_arithmetic_progression(line));
    EXPECT_EQ(sumset_size(line, 3), 10u);
    const PointSet square{Point{0, 0}, Point{0, 1}, Point{1, 0}, Point{1, 1}};
    EXPECT_FALSE(is_arithmetic_progression(square));
    EXPECT_EQ(sumset_size(square, 3), 16u);
}

TEST(Verifier, OrderAxioms) {
    EXPECT_TRUE(check_order_axioms(1, 500).pass());
    EXPECT_TRUE(lex_compare(add(Point{1, 2}, Point{0, 0}), add(Point{1, 3}, Point{2, -9})) < 0);
    EXPECT_TRUE(lex_compare(scalar_mul(2, Point{3}), scalar_mul(5, Point{3})) < 0);
    for (Int h = 1; h <= 64; ++h) EXPECT_FALSE(scalar_mul(h, Point{0, -1}).is_zero());
}

TEST(Verifier, OutcomesAreReproducible) {
    const auto a = check_z2_gap_sampled(11, 50, 4, 4);
    const auto b = check_z2_gap_sampled(11, 50, 4, 4);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.grid, b.grid);
    EXPECT_EQ(a.replay, b.replay);
}

TEST(Verifier, RandomSetsAreDistinctAndSeeded) {
    std::mt19937_64 r1(5), r2(5);
    for (int t = 0; t < 100; ++t) {
        const auto s1 = detail::random_set<Point>(r1, 6, 2, 0, 3);
        const auto s2 = detail::random_set<Point>(r2, 6, 2, 0, 3);
        EXPECT_EQ(s1, s2);
        EXPECT_EQ(s1.size(), 6u);
    }
}

TEST(Verifier, RunSuite) {
    SuiteOptions opt;
    opt.seed = 4;
    opt.trials = 20;
    EXPECT_EQ(run_suite("translation", opt).size(), 3u);
    EXPECT_EQ(run_suite("z2", opt).size(), 4u);
    opt.h = 3;
    opt.k = 4;
    opt.bound = 8;
    const auto gap = run_suite("gap", opt);
    ASSERT_EQ(gap.size(), 1u);
    EXPECT_TRUE(gap[0].pass());
    EXPECT_THROW(run_suite("nope", opt), std::invalid_argument);
}
