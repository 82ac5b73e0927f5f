#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "engine.hpp"
#include "group.hpp"

namespace sumset {

enum class WitnessKind { ap, hk, bh_max, thm1_family, thm2_family, base_case };

inline std::string_view to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::ap: return "ap";
    case WitnessKind::hk: return "hk";
    case WitnessKind::bh_max: return "max";
    case WitnessKind::thm1_family: return "thm1";
    case WitnessKind::thm2_family: return "thm2";
    case WitnessKind::base_case: return "base";
    }
    return "?";
}

inline std::optional<WitnessKind> parse_witness_kind(std::string_view name) {
    for (auto kind : {WitnessKind::ap, WitnessKind::hk, WitnessKind::bh_max, WitnessKind::thm1_family,
                      WitnessKind::thm2_family, WitnessKind::base_case}) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

/// Recipe for a witness set. Parameter layout by kind:
///   ap, hk       {a}
///   max          {}
///   thm1         {gap_1, ..., gap_{k-3}, b, c}
///   thm2         {gap_1, ..., gap_{k-3}, b, d}
///   base         {e}
struct WitnessSpec {
    WitnessKind kind;
    int h = 0;
    int k = 0;
    std::vector<Int> params;
};

/// Properties the construction is proved to have. Unset fields make no claim.
struct Prediction {
    std::optional<std::size_t> exact_size;
    std::optional<std::size_t> min_size;
    std::optional<std::size_t> min_nontrivial;
    std::optional<std::size_t> exact_nontrivial;
    std::optional<std::vector<Int>> exact_elements;
};

struct Witness {
    WitnessSpec spec;
    IntSet set;
    Prediction predicted;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

inline std::size_t trivial_count(int h, int k) { return static_cast<std::size_t>(h) * k - h + 1; }

inline std::vector<Int> family_prefix(std::span<const Int> gaps) {
    std::vector<Int> out{0};
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        require(gaps[i] > 0, "family gaps must be positive");
        require(i == 0 || gaps[i - 1] < gaps[i], "family gaps must be strictly increasing");
        out.push_back(gaps[i]);
    }
    return out;
}

} // namespace detail

/// {0, a, 2a, ..., (k-1)a}; |hA| = hk - h + 1 with no nontrivial elements.
inline Witness ap_witness(int h, int k, Int a) {
    detail::require(h >= 1, "ap witness requires h >= 1");
    detail::require(k >= 2, "ap witness requires k >= 2");
    detail::require(a >= 1, "ap witness requires a >= 1");
    std::vector<Int> elements;
    for (int i = 0; i < k; ++i) elements.push_back(checked_mul(i, a));
    Prediction p;
    p.exact_size = detail::trivial_count(h, k);
    if (h >= 2) p.exact_nontrivial = 0;
    return {{WitnessKind::ap, h, k, {a}}, IntSet::from_sorted(std::move(elements)), p};
}

/// {0, a, ..., (k-2)a, ka}; hA = {ja : 0 <= j <= hk, j != hk - 1}, so |hA| = hk.
inline Witness hk_witness(int h, int k, Int a) {
    detail::require(h >= 1, "hk witness requires h >= 1");
    detail::require(k >= 3, "hk witness requires k >= 3");
    detail::require(a >= 1, "hk witness requires a >= 1");
    std::vector<Int> elements;
    for (int i = 0; i <= k - 2; ++i) elements.push_back(checked_mul(i, a));
    elements.push_back(checked_mul(k, a));
    std::vector<Int> expected;
    const int top = h * k;
    for (int j = 0; j <= top; ++j)
        if (j != top - 1) expected.push_back(checked_mul(j, a));
    Prediction p;
    p.exact_size = static_cast<std::size_t>(top);
    p.exact_elements = std::move(expected);
    return {{WitnessKind::hk, h, k, {a}}, IntSet::from_sorted(std::move(elements)), p};
}

/// {1, (h+1), (h+1)^2, ..., (h+1)^(k-1)}. Every h-fold sum has a distinct
/// base-(h+1) digit vector, so |hA| = C(h+k-1, h).
inline Witness bh_witness(int h, int k) {
    detail::require(h >= 2, "max witness requires h >= 2");
    detail::require(k >= 2, "max witness requires k >= 2");
    std::vector<Int> elements;
    Int power = 1;
    for (int i = 0; i < k; ++i) {
        elements.push_back(power);
        if (i + 1 < k) power = checked_mul(power, h + 1);
    }
    (void)checked_mul(h, elements.back());
    Prediction p;
    const Int max_size = binomial(h + k - 1, h);
    if (max_size > Int(std::numeric_limits<std::int64_t>::max()))
        throw OverflowError("binomial size does not fit a 64-bit count");
    p.exact_size = static_cast<std::size_t>(max_size);
    return {{WitnessKind::bh_max, h, k, {}}, IntSet::from_sorted(std::move(elements)), p};
}

/// {0, a_1, ..., a_{k-3}, a_{k-3}+b, a_{k-3}+b+c} with c not a multiple of b.
/// hA has at least h-1 nontrivial elements.
inline Witness thm1_family(int h, std::span<const Int> gaps, Int b, Int c) {
    const int k = static_cast<int>(gaps.size()) + 3;
    detail::require(h >= 2, "thm1 family requires h >= 2");
    detail::require(k >= 4, "thm1 family requires k >= 4 (at least one gap)");
    detail::require(b >= 1 && c >= 1, "thm1 family requires b, c >= 1");
    detail::require(c < b || c % b != 0, "thm1 family requires c != d*b for every natural d");
    auto elements = detail::family_prefix(gaps);
    const Int top = elements.back();
    elements.push_back(checked_add(top, b));
    elements.push_back(checked_add(checked_add(top, b), c));
    std::vector<Int> params(gaps.begin(), gaps.end());
    params.push_back(b);
    params.push_back(c);
    Prediction p;
    p.min_nontrivial = static_cast<std::size_t>(h - 1);
    p.min_size = static_cast<std::size_t>(h) * k;
    return {{WitnessKind::thm1_family, h, k, std::move(params)}, IntSet::from_sorted(std::move(elements)), p};
}

/// {0, a_1, ..., a_{k-3}, a_{k-3}+b, a_{k-3}+b+d*b} with d >= 2.
/// hA has at least h-1 nontrivial elements.
inline Witness thm2_family(int h, std::span<const Int> gaps, Int b, Int d) {
    const int k = static_cast<int>(gaps.size()) + 3;
    detail::require(h >= 2, "thm2 family requires h >= 2");
    detail::require(k >= 4, "thm2 family requires k >= 4 (at least one gap)");
    detail::require(b >= 1, "thm2 family requires b >= 1");
    detail::require(d >= 2, "thm2 family requires d >= 2");
    auto elements = detail::family_prefix(gaps);
    const Int top = elements.back();
    const Int c = checked_mul(d, b);
    elements.push_back(checked_add(top, b));
    elements.push_back(checked_add(checked_add(top, b), c));
    std::vector<Int> params(gaps.begin(), gaps.end());
    params.push_back(b);
    params.push_back(d);
    Prediction p;
    p.min_nontrivial = static_cast<std::size_t>(h - 1);
    p.min_size = static_cast<std::size_t>(h) * k;
    return {{WitnessKind::thm2_family, h, k, std::move(params)}, IntSet::from_sorted(std::move(elements)), p};
}

/// {0, 1, e+1} with e >= 2: the three-element set left over when a
/// four-element set with two equal top gaps is not an arithmetic progression.
/// hB has at least h-1 nontrivial elements.
inline Witness base_case_family(int h, Int e) {
    detail::require(h >= 2, "base case family requires h >= 2");
    detail::require(e >= 2, "base case family requires e >= 2 (e = 1 is the progression case)");
    Prediction p;
    p.min_nontrivial = static_cast<std::size_t>(h - 1);
    p.min_size = static_cast<std::size_t>(3 * h);
    return {{WitnessKind::base_case, h, 3, {e}}, IntSet::from_sorted({0, 1, checked_add(e, 1)}), p};
}

/// Builds a witness from a spec, validating the parameter layout against k.
inline Witness make_witness(const WitnessSpec& spec) {
    const auto& ps = spec.params;
    auto need = [&](std::size_t n) {
        detail::require(ps.size() == n, std::string(to_string(spec.kind)) + " witness expects " + std::to_string(n) +
                                            " parameter(s), got " + std::to_string(ps.size()));
    };
    switch (spec.kind) {
    case WitnessKind::ap:
        need(1);
        return ap_witness(spec.h, spec.k, ps[0]);
    case WitnessKind::hk:
        need(1);
        return hk_witness(spec.h, spec.k, ps[0]);
    case WitnessKind::bh_max:
        need(0);
        return bh_witness(spec.h, spec.k);
    case WitnessKind::thm1_family:
    case WitnessKind::thm2_family: {
        detail::require(spec.k >= 4, "family witnesses require k >= 4");
        need(static_cast<std::size_t>(spec.k - 1));
        std::span<const Int> gaps(ps.data(), ps.size() - 2);
        return spec.kind == WitnessKind::thm1_family ? thm1_family(spec.h, gaps, ps[ps.size() - 2], ps.back())
                                                     : thm2_family(spec.h, gaps, ps[ps.size() - 2], ps.back());
    }
    case WitnessKind::base_case:
        detail::require(spec.k == 3, "base case witnesses have k = 3");
        need(1);
        return base_case_family(spec.h, ps[0]);
    }
    throw std::invalid_argument("unknown witness kind");
}

struct WitnessCheck {
    bool pass = true;
    std::size_t size = 0;
    std::optional<std::size_t> nontrivial;
    std::vector<std::string> failures;
};

/// Runs the engine on the witness set and compares with every claim made.
inline WitnessCheck check_witness(const Witness& w) {
    WitnessCheck out;
    const int h = w.spec.h;
    std::vector<Int> elements;
    if (h >= 2 && w.set.size() >= 2) {
        auto result = classify(w.set, h);
        out.nontrivial = result.nontrivial.size();
        elements = std::move(result.elements);
    } else {
        elements = hfold_sumset(w.set, h);
    }
    out.size = elements.size();
    const auto& p = w.predicted;
    auto fail = [&](std::string msg) {
        out.pass = false;
        out.failures.push_back(std::move(msg));
    };
    if (p.exact_size && out.size != *p.exact_size)
        fail("size " + std::to_string(out.size) + " != predicted " + std::to_string(*p.exact_size));
    if (p.min_size && out.size < *p.min_size)
        fail("size " + std::to_string(out.size) + " < predicted minimum " + std::to_string(*p.min_size));
    if (p.min_nontrivial && (!out.nontrivial || *out.nontrivial < *p.min_nontrivial))
        fail("nontrivial count below predicted minimum " + std::to_string(*p.min_nontrivial));
    if (p.exact_nontrivial && (!out.nontrivial || *out.nontrivial != *p.exact_nontrivial))
        fail("nontrivial count != predicted " + std::to_string(*p.exact_nontrivial));
    if (p.exact_elements && elements != *p.exact_elements) fail("sumset differs from predicted element list");
    return out;
}

} // namespace sumset
