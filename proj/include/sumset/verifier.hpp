#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "constructions.hpp"
#include "engine.hpp"
#include "group.hpp"
#include "spectrum.hpp"

namespace sumset {

/// One counterexample. `input` is enough to rebuild the failing case.
struct CheckFailure {
    std::string input;
    std::string detail;
};

struct CheckOutcome {
    std::string name;
    std::string grid;
    std::uint64_t cases = 0;
    std::vector<CheckFailure> failures;
    double elapsed_seconds = 0.0;
    /// Command line that reruns exactly this check.
    std::string replay;

    bool pass() const noexcept { return failures.empty(); }
};

namespace detail {

/// Times a check body and fills in the bookkeeping fields.
template <class Body>
CheckOutcome timed_check(std::string name, std::string grid, std::string replay, Body&& body) {
    CheckOutcome out;
    out.name = std::move(name);
    out.grid = std::move(grid);
    out.replay = std::move(replay);
    const auto start = std::chrono::steady_clock::now();
    body(out);
    out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

inline void fail(CheckOutcome& out, std::string input, std::string detail) {
    out.failures.push_back({std::move(input), std::move(detail)});
}

inline Int uniform(std::mt19937_64& rng, Int lo, Int hi) {
    std::uniform_int_distribution<std::int64_t> dist(static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi));
    return dist(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Point random_point(std::mt19937_64& rng, std::size_t d, Int lo, Int hi) {
    std::vector<Int> coords(d);
    for (auto& c : coords) c = uniform(rng, lo, hi);
    return Point(std::move(coords));
}

/// Uniform k-subset of [lo, hi]^d: candidates already present are rejected.
template <GroupElement T>
FiniteSet<T> random_set(std::mt19937_64& rng, std::size_t k, std::size_t d, Int lo, Int hi) {
    std::vector<T> out;
    while (out.size() < k) {
        T candidate;
        if constexpr (std::is_same_v<T, Int>) candidate = uniform(rng, lo, hi);
        else candidate = random_point(rng, d, lo, hi);
        bool seen = false;
        for (const T& e : out) seen = seen || lex_compare(e, candidate) == 0;
        if (!seen) out.push_back(std::move(candidate));
    }
    return FiniteSet<T>::from_elements(std::move(out));
}

template <GroupElement T>
std::string describe(const FiniteSet<T>& set) {
    return "A=" + format_set_literal(set);
}

inline std::string replay_command(std::string_view suite, std::uint64_t seed, std::uint64_t trials) {
    return "sumset_cli verify --suite " + std::string(suite) + " --seed " + std::to_string(seed) + " --trials " +
           std::to_string(trials);
}

/// Draws a set and runs `test` on it for d = 1 or d = 2 with equal probability.
template <class Test>
void run_dimension_mixed(std::mt19937_64& rng, int k_lo, int k_hi, Int lo, Int hi, Test&& test) {
    const int k = uniform_int(rng, k_lo, k_hi);
    if (uniform_int(rng, 0, 1) == 0) test(random_set<Int>(rng, k, 1, lo, hi), Int{0});
    else test(random_set<Point>(rng, k, 2, lo, hi), Point::zero(2));
}

} // namespace detail

/// |h(A + b)| = |hA| for random A (k <= 6, entries in [0, 50], d in {1, 2}),
/// offsets b and 2 <= h <= 5.
inline CheckOutcome check_translation_invariance(std::uint64_t seed, std::uint64_t trials) {
    return detail::timed_check(
        "translation_invariance", "k in [1,6], entries in [0,50], d in {1,2}, b in [-50,50]^d, h in [2,5]",
        detail::replay_command("translation", seed, trials), [&](CheckOutcome& out) {
            std::mt19937_64 rng(seed);
            for (std::uint64_t t = 0; t < trials; ++t) {
                const int h = detail::uniform_int(rng, 2, 5);
                detail::run_dimension_mixed(rng, 1, 6, 0, 50, [&](const auto& set, const auto& zero) {
                    using T = std::decay_t<decltype(zero)>;
                    T b;
                    if constexpr (std::is_same_v<T, Int>) b = detail::uniform(rng, -50, 50);
                    else b = detail::random_point(rng, 2, -50, 50);
                    const auto lhs = sumset_size(translate(set, b), h);
                    const auto rhs = sumset_size(set, h);
                    ++out.cases;
                    if (lhs != rhs)
                        detail::fail(out, detail::describe(set) + " b=" + format_element(b) + " h=" + std::to_string(h),
                                     std::to_string(lhs) + " != " + std::to_string(rhs));
                });
            }
        });
}

/// |h(sA)| = |hA| for random nonzero s in [-5, 5].
inline CheckOutcome check_dilation_invariance(std::uint64_t seed, std::uint64_t trials) {
    return detail::timed_check(
        "dilation_invariance", "k in [1,6], entries in [0,50], d in {1,2}, s in [-5,5]\\{0}, h in [2,5]",
        detail::replay_command("translation", seed, trials), [&](CheckOutcome& out) {
            std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
            for (std::uint64_t t = 0; t < trials; ++t) {
                const int h = detail::uniform_int(rng, 2, 5);
                Int s = detail::uniform(rng, 1, 5);
                if (detail::uniform_int(rng, 0, 1)) s = -s;
                detail::run_dimension_mixed(rng, 1, 6, 0, 50, [&](const auto& set, const auto&) {
                    const auto lhs = sumset_size(dilate(set, s), h);
                    const auto rhs = sumset_size(set, h);
                    ++out.cases;
                    if (lhs != rhs)
                        detail::fail(out, detail::describe(set) + " s=" + to_string(s) + " h=" + std::to_string(h),
                                     std::to_string(lhs) + " != " + std::to_string(rhs));
                });
            }
        });
}

/// |h{max - a}| = |hA|.
inline CheckOutcome check_reflection_invariance(std::uint64_t seed, std::uint64_t trials) {
    return detail::timed_check(
        "reflection_invariance", "k in [1,6], entries in [0,50], d in {1,2}, h in [2,5]",
        detail::replay_command("translation", seed, trials), [&](CheckOutcome& out) {
            std::mt19937_64 rng(seed ^ 0xbf58476d1ce4e5b9ULL);
            for (std::uint64_t t = 0; t < trials; ++t) {
                const int h = detail::uniform_int(rng, 2, 5);
                detail::run_dimension_mixed(rng, 1, 6, 0, 50, [&](const auto& set, const auto&) {
                    const auto lhs = sumset_size(reflect(set), h);
                    const auto rhs = sumset_size(set, h);
                    ++out.cases;
                    if (lhs != rhs)
                        detail::fail(out, detail::describe(set) + " h=" + std::to_string(h),
                                     std::to_string(lhs) + " != " + std::to_string(rhs));
                });
            }
        });
}

/// With B = A minus its largest element: hB is contained in hA and every
/// nontrivial element of hB is nontrivial in hA.
inline CheckOutcome check_nontrivial_monotonicity(std::uint64_t seed, std::uint64_t trials) {
    return detail::timed_check(
        "nontrivial_monotonicity", "k in [3,6], entries in [0,50], d in {1,2}, h in [2,5]",
        detail::replay_command("nontrivial", seed, trials), [&](CheckOutcome& out) {
            std::mt19937_64 rng(seed);
            for (std::uint64_t t = 0; t < trials; ++t) {
                const int h = detail::uniform_int(rng, 2, 5);
                detail::run_dimension_mixed(rng, 3, 6, 0, 50, [&](const auto& set, const auto& zero) {
                    using T = std::decay_t<decltype(zero)>;
                    std::vector<T> prefix(set.begin(), set.end() - 1);
                    const auto smaller = FiniteSet<T>::from_sorted(std::move(prefix));
                    const auto full = classify(set, h);
                    const auto part = classify(smaller, h);
                    detail::LexLess<T> less;
                    const bool sums = std::includes(full.elements.begin(), full.elements.end(),
                                                    part.elements.begin(), part.elements.end(), less);
                    const bool nontrivial = std::includes(full.nontrivial.begin(), full.nontrivial.end(),
                                                          part.nontrivial.begin(), part.nontrivial.end(), less);
                    ++out.cases;
                    if (!sums || !nontrivial)
                        detail::fail(out, detail::describe(set) + " h=" + std::to_string(h),
                                     !sums ? "hB not contained in hA" : "nontrivial(hB) not contained in nontrivial(hA)");
                });
            }
        });
}

/// Every thm1/thm2/base-case family member over 2 <= h <= 6 and parameters
/// <= max_param has at least h - 1 nontrivial elements (k in {4, 5} for the
/// two-parameter families).
inline CheckOutcome check_family_lower_bounds(int max_param = 12, int h_lo = 2, int h_hi = 6) {
    const std::string grid = "h in [" + std::to_string(h_lo) + "," + std::to_string(h_hi) +
                             "], k in {4,5} (thm1/thm2), k = 3 (base), parameters in [1," +
                             std::to_string(max_param) + "]";
    return detail::timed_check("family_lower_bounds", grid, "sumset_cli verify --suite families", [&](CheckOutcome& out) {
        auto run = [&](const Witness& w) {
            ++out.cases;
            const auto result = classify(w.set, w.spec.h);
            if (result.nontrivial.size() + 1 < static_cast<std::size_t>(w.spec.h))
                detail::fail(out,
                             std::string(to_string(w.spec.kind)) + " h=" + std::to_string(w.spec.h) +
                                 " A=" + format_set_literal(w.set),
                             std::to_string(result.nontrivial.size()) + " nontrivial < h-1");
        };
        std::vector<std::vector<Int>> gap_lists;
        for (Int a1 = 1; a1 <= max_param; ++a1) {
            gap_lists.push_back({a1});
            for (Int a2 = a1 + 1; a2 <= max_param; ++a2) gap_lists.push_back({a1, a2});
        }
        for (int h = h_lo; h <= h_hi; ++h) {
            for (const auto& gaps : gap_lists) {
                for (Int b = 1; b <= max_param; ++b) {
                    for (Int c = 1; c <= max_param; ++c) {
                        if (c >= b && c % b == 0) continue;
                        run(thm1_family(h, gaps, b, c));
                    }
                    for (Int d = 2; d * b <= max_param; ++d) run(thm2_family(h, gaps, b, d));
                }
            }
            for (Int e = 2; e <= max_param; ++e) run(base_case_family(h, e));
        }
    });
}

/// Full canonical scan at (h, k, M) followed by the gap and dichotomy checks.
inline CheckOutcome check_dichotomy(int h, int k, Int bound, unsigned jobs = 1) {
    const std::string grid = "h=" + std::to_string(h) + " k=" + std::to_string(k) + " M=" + to_string(bound);
    return detail::timed_check(
        "dichotomy", grid,
        "sumset_cli verify --suite gap --h " + std::to_string(h) + " --k " + std::to_string(k) + " --max " +
            to_string(bound),
        [&](CheckOutcome& out) {
            const auto report = compute_spectrum(h, k, bound, jobs);
            out.cases = report.sets_scanned;
            const auto gap = gap_check(report);
            if (!ok(gap.status)) {
                for (auto s : gap.offending)
                    detail::fail(out, "A=" + format_set_literal(report.witnesses.at(s)) + " h=" + std::to_string(h),
                                 "size " + std::to_string(s) + " lies in the gap interval");
            }
            const auto dich = min_dichotomy_check(report);
            if (!ok(dich.status))
                detail::fail(out,
                             dich.counterexample ? "A=" + format_set_literal(*dich.counterexample) + " h=" +
                                                       std::to_string(h)
                                                 : grid,
                             dich.detail);
        });
}

/// Random k-subsets of [0, 20]^2 under lexicographic order: each sample is a
/// progression with |hA| = hk - h + 1, or has |hA| >= hk.
inline CheckOutcome check_z2_gap_sampled(std::uint64_t seed, std::uint64_t trials, int h, int k) {
    const std::string grid = "k=" + std::to_string(k) + " h=" + std::to_string(h) + ", k-subsets of [0,20]^2";
    return detail::timed_check(
        "z2_gap_sampled", grid,
        detail::replay_command("z2", seed, trials) + " --h " + std::to_string(h) + " --k " + std::to_string(k),
        [&](CheckOutcome& out) {
            std::mt19937_64 rng(seed);
            const auto hk = static_cast<std::size_t>(h) * k;
            const std::size_t minimum = hk - h + 1;
            for (std::uint64_t t = 0; t < trials; ++t) {
                const auto set = detail::random_set<Point>(rng, k, 2, 0, 20);
                const auto size = sumset_size(set, h);
                const bool ap = is_arithmetic_progression(set);
                ++out.cases;
                if (ap ? size != minimum : size < hk)
                    detail::fail(out, detail::describe(set) + " h=" + std::to_string(h),
                                 std::string(ap ? "progression" : "non-progression") + " with size " +
                                     std::to_string(size));
            }
        });
}

/// Randomized order-group axioms and lemmas on Z^d (d in [1, 3]) under
/// lexicographic order.
inline CheckOutcome check_order_axioms(std::uint64_t seed, std::uint64_t trials) {
    return detail::timed_check(
        "order_axioms", "d in [1,3], coordinates in [-100,100], multipliers in [-64,64]",
        detail::replay_command("axioms", seed, trials), [&](CheckOutcome& out) {
            std::mt19937_64 rng(seed);
            for (std::uint64_t t = 0; t < trials; ++t) {
                const auto d = static_cast<std::size_t>(detail::uniform_int(rng, 1, 3));
                auto draw = [&] { return detail::random_point(rng, d, -100, 100); };
                const Point x = draw(), y = draw(), z = draw(), w = draw();
                const std::string input = "x=" + format_element(x) + " y=" + format_element(y) +
                                          " z=" + format_element(z) + " w=" + format_element(w);
                auto expect = [&](bool cond, const char* what) {
                    ++out.cases;
                    if (!cond) detail::fail(out, input, what);
                };
                const auto xy = lex_compare(x, y), yx = lex_compare(y, x);
                expect(lex_compare(x, x) == 0, "reflexivity");
                expect((xy < 0) == (yx > 0) && (xy == 0) == (yx == 0), "antisymmetry");
                if (xy <= 0 && lex_compare(y, z) <= 0) expect(lex_compare(x, z) <= 0, "transitivity");
                if (xy < 0) expect(lex_compare(add(x, z), add(y, z)) < 0, "translation compatibility");
                // a <= b and c < d imply a + c < b + d
                const auto [a, b] = xy <= 0 ? std::pair{x, y} : std::pair{y, x};
                const auto zw = lex_compare(z, w);
                if (zw != 0) {
                    const auto [c, e] = zw < 0 ? std::pair{z, w} : std::pair{w, z};
                    expect(lex_compare(add(a, c), add(b, e)) < 0, "a<=b, c<d implies a+c<b+d");
                }
                // for positive g: m <= n iff mg <= ng
                if (!x.is_zero()) {
                    const Point g = lex_compare(x, Point::zero(d)) > 0 ? x : neg(x);
                    const Int m = detail::uniform(rng, -64, 64), n = detail::uniform(rng, -64, 64);
                    expect((m <= n) == (lex_compare(scalar_mul(m, g), scalar_mul(n, g)) <= 0), "m<=n iff mg<=ng");
                    expect(scalar_mul(-m, x) == neg(scalar_mul(m, x)), "(-m)x = -(mx)");
                    const Int h = detail::uniform(rng, 1, 64);
                    expect(!scalar_mul(h, x).is_zero(), "torsion-free: hx != 0 for h >= 1");
                }
                expect(scalar_mul(0, x).is_zero(), "0x = 0");
            }
        });
}

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::uint64_t trials = 0; // 0 selects the per-check default
    int h = 0;                // 0 selects the default grid
    int k = 0;
    Int bound = 0;
    unsigned jobs = 1;
};

/// Suites: all, gap, translation (translation, dilation and reflection
/// invariance), nontrivial, families, axioms, z2.
inline std::vector<CheckOutcome> run_suite(std::string_view suite, const SuiteOptions& opt) {
    auto trials_or = [&](std::uint64_t fallback) { return opt.trials ? opt.trials : fallback; };
    const bool all = suite == "all";
    std::vector<CheckOutcome> out;
    bool known = all;
    if (all || suite == "translation") {
        known = true;
        out.push_back(check_translation_invariance(opt.seed, trials_or(500)));
        out.push_back(check_dilation_invariance(opt.seed, trials_or(500)));
        out.push_back(check_reflection_invariance(opt.seed, trials_or(500)));
    }
    if (all || suite == "nontrivial") {
        known = true;
        out.push_back(check_nontrivial_monotonicity(opt.seed, trials_or(300)));
    }
    if (all || suite == "axioms") {
        known = true;
        out.push_back(check_order_axioms(opt.seed, trials_or(500)));
    }
    if (all || suite == "families") {
        known = true;
        out.push_back(check_family_lower_bounds());
    }
    if (all || suite == "z2") {
        known = true;
        const int k = opt.k ? opt.k : 4;
        if (opt.h) out.push_back(check_z2_gap_sampled(opt.seed, trials_or(200), opt.h, k));
        else
            for (int h = 2; h <= 5; ++h) out.push_back(check_z2_gap_sampled(opt.seed, trials_or(200), h, k));
    }
    if (all || suite == "gap") {
        known = true;
        if (opt.h || opt.k || opt.bound) {
            const int h = opt.h ? opt.h : 3;
            const int k = opt.k ? opt.k : 4;
            const Int bound = opt.bound ? opt.bound : 3 * k;
            out.push_back(check_dichotomy(h, k, bound, opt.jobs));
        } else {
            for (auto [h, k, m] : {std::tuple{3, 4, 12}, std::tuple{4, 4, 10}, std::tuple{3, 5, 10}})
                out.push_back(check_dichotomy(h, k, m, opt.jobs));
        }
    }
    if (!known) throw std::invalid_argument("unknown verify suite '" + std::string(suite) + "'");
    return out;
}

} // namespace sumset
