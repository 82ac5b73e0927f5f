#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sumset/constructions.hpp"

using namespace sumset;

namespace {

std::vector<long long> to_ll(const IntSet& s) { return {s.begin(), s.end()}; }

std::size_t nontrivial_count(const Witness& w) { return classify(w.set, w.spec.h).nontrivial.size(); }

} // namespace

TEST(ApWitness, Examples) {
    auto w = ap_witness(3, 4, 2);
    EXPECT_EQ(to_ll(w.set), (std::vector<long long>{0, 2, 4, 6}));
    EXPECT_EQ(w.predicted.exact_size, 10u);
    EXPECT_EQ(to_ll(ap_witness(2, 2, 1).set), (std::vector<long long>{0, 1}));
    EXPECT_EQ(ap_witness(2, 2, 1).predicted.exact_size, 3u);
    auto big = ap_witness(5, 6, 3);
    EXPECT_EQ(big.predicted.exact_size, 26u);
    EXPECT_EQ(sumset_size(big.set, 5), 26u);
    EXPECT_THROW(ap_witness(2, 1, 1), std::invalid_argument);
    EXPECT_THROW(ap_witness(2, 3, 0), std::invalid_argument);
}

TEST(HkWitness, Examples) {
    auto w = hk_witness(3, 4, 1);
    EXPECT_EQ(to_ll(w.set), (std::vector<long long>{0, 1, 2, 4}));
    EXPECT_EQ(w.predicted.exact_size, 12u);
    const auto& expected = *w.predicted.exact_elements;
    EXPECT_EQ(std::find(expected.begin(), expected.end(), Int{11}), expected.end());
    EXPECT_TRUE(check_witness(w).pass);

    auto small = hk_witness(2, 3, 1);
    EXPECT_EQ(to_ll(small.set), (std::vector<long long>{0, 1, 3}));
    EXPECT_EQ(check_witness(small).size, 6u);
    auto dilated = hk_witness(2, 3, 5);
    EXPECT_EQ(to_ll(dilated.set), (std::vector<long long>{0, 5, 15}));
    EXPECT_EQ(check_witness(dilated).size, 6u);
    EXPECT_THROW(hk_witness(2, 2, 1), std::invalid_argument);
}

TEST(BhWitness, Examples) {
    EXPECT_EQ(to_ll(bh_witness(2, 4).set), (std::vector<long long>{1, 3, 9, 27}));
    EXPECT_EQ(bh_witness(2, 4).predicted.exact_size, 10u);
    EXPECT_EQ(to_ll(bh_witness(2, 2).set), (std::vector<long long>{1, 3}));
    EXPECT_EQ(bh_witness(2, 2).predicted.exact_size, 3u);
    EXPECT_EQ(to_ll(bh_witness(3, 4).set), (std::vector<long long>{1, 4, 16, 64}));
    EXPECT_EQ(bh_witness(3, 4).predicted.exact_size, 20u);
    EXPECT_THROW(bh_witness(1, 4), std::invalid_argument);
}

TEST(BhWitness, OverflowDetected) {
    // 31^40 is far past 127 bits
    EXPECT_THROW(bh_witness(30, 41), OverflowError);
}

TEST(BhWitness, SizeIsCompositionCount) {
    for (int h = 2; h <= 4; ++h)
        for (int k = 2; k <= 6; ++k) {
            const auto w = bh_witness(h, k);
            EXPECT_EQ(sumset_size(w.set, h), static_cast<std::size_t>(oracle::composition_count(h, k)));
            EXPECT_EQ(static_cast<Int>(*w.predicted.exact_size), binomial(h + k - 1, h));
        }
}

TEST(Thm1Family, Examples) {
    const std::vector<Int> g5{5};
    auto w = thm1_family(3, g5, 2, 3);
    EXPECT_EQ(to_ll(w.set), (std::vector<long long>{0, 5, 7, 10}));
    EXPECT_EQ(nontrivial_count(w), 6u);

    const std::vector<Int> g12{1, 2};
    auto w2 = thm1_family(2, g12, 2, 5);
    EXPECT_EQ(to_ll(w2.set), (std::vector<long long>{0, 1, 2, 4, 9}));
    EXPECT_EQ(nontrivial_count(w2), 4u);

    const std::vector<Int> g1{1};
    auto w3 = thm1_family(4, g1, 3, 2);
    EXPECT_EQ(to_ll(w3.set), (std::vector<long long>{0, 1, 4, 6}));
    EXPECT_EQ(nontrivial_count(w3), 10u);
    for (const auto* x : {&w, &w2, &w3}) EXPECT_TRUE(check_witness(*x).pass);
}

TEST(Thm1Family, RejectsMultiples) {
    const std::vector<Int> g{1};
    EXPECT_THROW(thm1_family(3, g, 2, 4), std::invalid_argument);
    EXPECT_THROW(thm1_family(3, g, 2, 2), std::invalid_argument);
    EXPECT_THROW(thm1_family(3, std::vector<Int>{}, 2, 3), std::invalid_argument);
    EXPECT_THROW(thm1_family(3, std::vector<Int>{3, 2}, 2, 3), std::invalid_argument);
    EXPECT_NO_THROW(thm1_family(3, g, 4, 2));
}

TEST(Thm2Family, Examples) {
    auto w = thm2_family(3, std::vector<Int>{5}, 1, 2);
    EXPECT_EQ(to_ll(w.set), (std::vector<long long>{0, 5, 6, 8}));
    EXPECT_EQ(nontrivial_count(w), 8u);
    auto w2 = thm2_family(2, std::vector<Int>{1}, 1, 3);
    EXPECT_EQ(to_ll(w2.set), (std::vector<long long>{0, 1, 2, 5}));
    EXPECT_EQ(nontrivial_count(w2), 2u);
    auto w3 = thm2_family(5, std::vector<Int>{1, 2}, 2, 2);
    EXPECT_EQ(to_ll(w3.set), (std::vector<long long>{0, 1, 2, 4, 8}));
    EXPECT_EQ(nontrivial_count(w3), 15u);
    EXPECT_THROW(thm2_family(3, std::vector<Int>{5}, 1, 1), std::invalid_argument);
}

TEST(BaseCaseFamily, Examples) {
    auto w = base_case_family(3, 2);
    EXPECT_EQ(to_ll(w.set), (std::vector<long long>{0, 1, 3}));
    EXPECT_EQ(nontrivial_count(w), 2u);
    EXPECT_EQ(to_ll(base_case_family(2, 3).set), (std::vector<long long>{0, 1, 4}));
    EXPECT_EQ(nontrivial_count(base_case_family(2, 3)), 1u);
    EXPECT_EQ(to_ll(base_case_family(4, 5).set), (std::vector<long long>{0, 1, 6}));
    EXPECT_EQ(nontrivial_count(base_case_family(4, 5)), 6u);
    EXPECT_EQ(nontrivial_count(base_case_family(4, 2)), 3u);
    EXPECT_THROW(base_case_family(3, 1), std::invalid_argument);
}

TEST(MakeWitness, ParameterLayout) {
    auto w = make_witness({WitnessKind::thm1_family, 3, 5, {1, 2, 2, 5}});
    EXPECT_EQ(to_ll(w.set), (std::vector<long long>{0, 1, 2, 4, 9}));
    EXPECT_THROW(make_witness({WitnessKind::thm1_family, 3, 5, {1, 2, 5}}), std::invalid_argument);
    EXPECT_THROW(make_witness({WitnessKind::base_case, 3, 4, {2}}), std::invalid_argument);
    EXPECT_EQ(make_witness({WitnessKind::bh_max, 2, 3, {}}).set.size(), 3u);
    EXPECT_EQ(parse_witness_kind("max"), WitnessKind::bh_max);
    EXPECT_FALSE(parse_witness_kind("bogus"));
}

TEST(Witnesses, PredictionsHoldOnGrid) {
    for (int h = 2; h <= 6; ++h) {
        for (int k = 2; k <= 7; ++k) {
            for (Int a = 1; a <= 20; a += 3) {
                const auto ap = ap_witness(h, k, a);
                const auto c = check_witness(ap);
                EXPECT_TRUE(c.pass) << "ap h=" << h << " k=" << k;
                EXPECT_EQ(c.nontrivial, 0u);
                if (k >= 3) {
                    const auto hk = hk_witness(h, k, a);
                    const auto hc = check_witness(hk);
                    EXPECT_TRUE(hc.pass) << "hk h=" << h << " k=" << k;
                    EXPECT_GT(*hc.nontrivial, 0u);
                }
            }
            if (h <= 4 && k <= 6) {
                const auto bh = check_witness(bh_witness(h, k));
                EXPECT_TRUE(bh.pass);
                if (k >= 3) {
                    EXPECT_GT(*bh.nontrivial, 0u);
                }
            }
        }
    }
}

TEST(Witnesses, OnlyProgressionsLackNontrivialElements) {
    for (int h = 2; h <= 6; ++h) {
        for (Int e = 2; e <= 20; ++e) EXPECT_GT(nontrivial_count(base_case_family(h, e)), 0u);
        for (Int a1 = 1; a1 <= 20; a1 += 4)
            for (Int b = 1; b <= 20; b += 3) {
                for (Int c = 1; c <= 20; c += 2)
                    if (c < b || c % b != 0) {
                        EXPECT_GT(nontrivial_count(thm1_family(h, std::vector<Int>{a1}, b, c)), 0u);
                    }
                for (Int d = 2; d * b <= 20; ++d)
                    EXPECT_GT(nontrivial_count(thm2_family(h, std::vector<Int>{a1}, b, d)), 0u);
            }
    }
}
