#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "group.hpp"

namespace sumset {

namespace detail {

template <GroupElement T>
struct LexLess {
    bool operator()(const T& x, const T& y) const { return lex_compare(x, y) < 0; }
};

/// Iterated Minkowski addition on sorted vectors: iA = (i-1)A + A, each
/// translate (i-1)A + a is already sorted, so the union is a sequence of
/// sorted merges.
template <GroupElement T>
std::vector<T> minkowski_iterate(const FiniteSet<T>& set, int h) {
    std::vector<T> current(set.begin(), set.end());
    std::vector<T> next, shifted, merged;
    for (int step = 2; step <= h; ++step) {
        next.clear();
        for (const T& a : set) {
            shifted.clear();
            shifted.reserve(current.size());
            for (const T& x : current) shifted.push_back(add(x, a));
            merged.clear();
            merged.reserve(next.size() + shifted.size());
            std::set_union(next.begin(), next.end(), shifted.begin(), shifted.end(), std::back_inserter(merged),
                           LexLess<T>{});
            next.swap(merged);
        }
        current.swap(next);
    }
    return current;
}

/// Largest sum range (h * diameter) handled by the dense bitmap path.
inline constexpr Int kDenseSpanLimit = Int(1) << 24;

/// Dense variant of the same iteration for one-dimensional sets whose sums
/// fit a bitmap: bit x of the map marks (min*i + x) in iA.
class Bitmap {
public:
    explicit Bitmap(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    /// this |= other << shift, truncated to this bitmap's length.
    void or_shifted(const Bitmap& other, std::size_t shift) {
        const std::size_t word_shift = shift >> 6;
        const unsigned bit_shift = shift & 63;
        const std::size_t n = words_.size();
        for (std::size_t i = n; i-- > word_shift;) {
            const std::size_t src = i - word_shift;
            std::uint64_t v = other.words_[src] << bit_shift;
            if (bit_shift != 0 && src > 0) v |= other.words_[src - 1] >> (64 - bit_shift);
            words_[i] |= v;
        }
    }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t bit_size() const { return words_.size() * 64; }

private:
    std::vector<std::uint64_t> words_;
};

inline bool dense_applicable(const IntSet& set, int h) {
    const Int span = set.back() - set.front();
    return span <= kDenseSpanLimit / h;
}

inline Bitmap dense_sumset(const IntSet& set, int h) {
    const Int lo = set.front();
    const std::size_t span = static_cast<std::size_t>(set.back() - lo);
    const std::size_t bits = span * static_cast<std::size_t>(h) + 1;
    Bitmap current(bits), next(bits);
    for (Int a : set) current.set(static_cast<std::size_t>(a - lo));
    for (int step = 2; step <= h; ++step) {
        next.clear();
        for (Int a : set) next.or_shifted(current, static_cast<std::size_t>(a - lo));
        std::swap(current, next);
    }
    return current;
}

} // namespace detail

/// hA = {b_1 a_1 + ... + b_k a_k : b_i >= 0, sum b_i = h}, sorted and
/// deduplicated. h = 1 returns A.
template <GroupElement T>
std::vector<T> hfold_sumset(const FiniteSet<T>& set, int h) {
    if (h < 1) throw std::invalid_argument("fold count h must be >= 1");
    if constexpr (std::is_same_v<T, Int>) {
        // h*min and h*max bound every sum
        const Int base = checked_mul(h, set.front());
        (void)checked_mul(h, set.back());
        if (detail::dense_applicable(set, h)) {
            const auto map = detail::dense_sumset(set, h);
            const std::size_t bits = static_cast<std::size_t>(set.back() - set.front()) * h + 1;
            std::vector<Int> out;
            for (std::size_t i = 0; i < bits; ++i)
                if (map.test(i)) out.push_back(base + static_cast<Int>(i));
            return out;
        }
    }
    return detail::minkowski_iterate(set, h);
}

/// |hA|
template <GroupElement T>
std::size_t sumset_size(const FiniteSet<T>& set, int h) {
    if constexpr (std::is_same_v<T, Int>) {
        if (h < 1) throw std::invalid_argument("fold count h must be >= 1");
        (void)checked_mul(h, set.front());
        (void)checked_mul(h, set.back());
        if (detail::dense_applicable(set, h)) return detail::dense_sumset(set, h).count();
    }
    return hfold_sumset(set, h).size();
}

/// The chain h a_1 < (h-1)a_1 + a_2 < ... < a_1 + (h-1)a_2 < h a_2 < ... < h a_k
/// of hk - h + 1 trivial elements, in chain order. Throws std::logic_error if
/// the chain is not strictly increasing.
template <GroupElement T>
std::vector<T> trivial_chain(const FiniteSet<T>& set, int h) {
    if (h < 1) throw std::invalid_argument("fold count h must be >= 1");
    const std::size_t k = set.size();
    std::vector<T> chain;
    chain.reserve(static_cast<std::size_t>(h) * (k - 1) + 1);
    for (std::size_t j = 0; j + 1 < k; ++j) {
        for (int i = 0; i < h; ++i) chain.push_back(add(scalar_mul(h - i, set[j]), scalar_mul(i, set[j + 1])));
    }
    chain.push_back(scalar_mul(h, set.back()));
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (lex_compare(chain[i - 1], chain[i]) >= 0)
            throw std::logic_error("trivial chain is not strictly increasing");
    }
    return chain;
}

template <GroupElement T>
struct SumsetResult {
    int h = 0;
    FiniteSet<T> base;
    std::vector<T> elements;
    std::vector<T> trivial;
    std::vector<T> nontrivial;

    std::size_t size() const noexcept { return elements.size(); }
    std::size_t k() const noexcept { return base.size(); }
};

/// Computes hA and splits it into trivial chain elements and the nontrivial
/// remainder. Requires h >= 2 and k >= 2.
template <GroupElement T>
SumsetResult<T> classify(const FiniteSet<T>& set, int h) {
    if (h < 2) throw std::invalid_argument("classify requires h >= 2");
    if (set.size() < 2) throw std::invalid_argument("classify requires at least two elements");
    auto elements = hfold_sumset(set, h);
    auto trivial = trivial_chain(set, h);
    std::vector<T> nontrivial;
    std::set_difference(elements.begin(), elements.end(), trivial.begin(), trivial.end(),
                        std::back_inserter(nontrivial), detail::LexLess<T>{});
    if (elements.size() != trivial.size() + nontrivial.size())
        throw std::logic_error("trivial chain element missing from sumset");
    return SumsetResult<T>{h, set, std::move(elements), std::move(trivial), std::move(nontrivial)};
}

} // namespace sumset
