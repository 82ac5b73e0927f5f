#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "checked_int.hpp"

namespace sumset {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A point of Z^d with exact coordinates, ordered lexicographically.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Int> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw DimensionError("point must have dimension >= 1");
    }
    Point(std::initializer_list<Int> coords) : Point(std::vector<Int>(coords)) {}

    std::size_t dimension() const noexcept { return coords_.size(); }
    std::span<const Int> coords() const noexcept { return coords_; }
    Int operator[](std::size_t i) const { return coords_[i]; }

    static Point zero(std::size_t d) { return Point(std::vector<Int>(d, 0)); }

    bool is_zero() const noexcept {
        return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
    }

private:
    std::vector<Int> coords_;
};

inline void require_same_dimension(const Point& x, const Point& y) {
    if (x.dimension() != y.dimension())
        throw DimensionError("dimension mismatch: " + std::to_string(x.dimension()) + " vs " +
                             std::to_string(y.dimension()));
}

// Element operations. Both Int (the d = 1 instance) and Point provide the same
// free-function surface so the algorithms below are written once.

inline std::strong_ordering lex_compare(Int x, Int y) noexcept { return x <=> y; }

inline std::strong_ordering lex_compare(const Point& x, const Point& y) {
    require_same_dimension(x, y);
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        if (auto c = x[i] <=> y[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const Point& x, const Point& y) { return lex_compare(x, y); }
inline bool operator==(const Point& x, const Point& y) { return lex_compare(x, y) == 0; }

inline Int add(Int x, Int y) { return checked_add(x, y); }
inline Int sub(Int x, Int y) { return checked_sub(x, y); }
inline Int neg(Int x) { return checked_neg(x); }
inline Int scalar_mul(Int n, Int x) { return checked_mul(n, x); }
inline Int zero_like(Int) noexcept { return 0; }
inline std::size_t dimension_of(Int) noexcept { return 1; }
inline bool is_zero(Int x) noexcept { return x == 0; }

inline Point add(const Point& x, const Point& y) {
    require_same_dimension(x, y);
    std::vector<Int> r(x.dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(x[i], y[i]);
    return Point(std::move(r));
}

inline Point sub(const Point& x, const Point& y) {
    require_same_dimension(x, y);
    std::vector<Int> r(x.dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_sub(x[i], y[i]);
    return Point(std::move(r));
}

inline Point neg(const Point& x) {
    std::vector<Int> r(x.dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_neg(x[i]);
    return Point(std::move(r));
}

inline Point scalar_mul(Int n, const Point& x) {
    std::vector<Int> r(x.dimension());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(n, x[i]);
    return Point(std::move(r));
}

inline Point zero_like(const Point& x) { return Point::zero(x.dimension()); }
inline std::size_t dimension_of(const Point& x) noexcept { return x.dimension(); }
inline bool is_zero(const Point& x) noexcept { return x.is_zero(); }

template <class T>
concept GroupElement = std::copyable<T> && requires(const T& x, const T& y, Int n) {
    { lex_compare(x, y) } -> std::same_as<std::strong_ordering>;
    { add(x, y) } -> std::same_as<T>;
    { sub(x, y) } -> std::same_as<T>;
    { neg(x) } -> std::same_as<T>;
    { scalar_mul(n, x) } -> std::same_as<T>;
    { zero_like(x) } -> std::same_as<T>;
    { dimension_of(x) } -> std::convertible_to<std::size_t>;
};

/// A nonempty, strictly increasing sequence of elements of one dimension.
template <GroupElement T>
class FiniteSet {
public:
    using value_type = T;

    /// Sorts the input. Rejects empty input, duplicates and mixed dimensions.
    static FiniteSet from_elements(std::vector<T> elements) {
        check_dimensions(elements);
        std::sort(elements.begin(), elements.end(),
                  [](const T& x, const T& y) { return lex_compare(x, y) < 0; });
        for (std::size_t i = 1; i < elements.size(); ++i) {
            if (lex_compare(elements[i - 1], elements[i]) == 0)
                throw std::invalid_argument("duplicate element in set");
        }
        return FiniteSet(std::move(elements));
    }

    /// Requires the input to be strictly increasing already.
    static FiniteSet from_sorted(std::vector<T> elements) {
        check_dimensions(elements);
        for (std::size_t i = 1; i < elements.size(); ++i) {
            if (lex_compare(elements[i - 1], elements[i]) >= 0)
                throw std::invalid_argument("set elements are not strictly increasing");
        }
        return FiniteSet(std::move(elements));
    }

    FiniteSet(std::initializer_list<T> elements) : FiniteSet(from_elements(std::vector<T>(elements))) {}

    std::span<const T> elements() const noexcept { return elements_; }
    const std::vector<T>& vector() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    std::size_t dimension() const noexcept { return dimension_of(elements_.front()); }
    const T& operator[](std::size_t i) const { return elements_[i]; }
    const T& front() const { return elements_.front(); }
    const T& back() const { return elements_.back(); }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.elements_ == b.elements_; }

    /// Lexicographic over the element sequences.
    friend std::strong_ordering operator<=>(const FiniteSet& a, const FiniteSet& b) {
        const std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (auto c = lex_compare(a[i], b[i]); c != 0) return c;
        }
        return a.size() <=> b.size();
    }

private:
    explicit FiniteSet(std::vector<T> elements) : elements_(std::move(elements)) {}

    static void check_dimensions(const std::vector<T>& elements) {
        if (elements.empty()) throw std::invalid_argument("set must be nonempty");
        const std::size_t d = dimension_of(elements.front());
        for (const T& e : elements) {
            if (dimension_of(e) != d) throw DimensionError("set mixes element dimensions");
        }
    }

    std::vector<T> elements_;
};

using IntSet = FiniteSet<Int>;
using PointSet = FiniteSet<Point>;

/// {a + b : a in A}
template <GroupElement T>
FiniteSet<T> translate(const FiniteSet<T>& set, const T& b) {
    std::vector<T> out;
    out.reserve(set.size());
    for (const T& a : set) out.push_back(add(a, b));
    // translation preserves order
    return FiniteSet<T>::from_sorted(std::move(out));
}

/// {s * a : a in A}, s != 0.
template <GroupElement T>
FiniteSet<T> dilate(const FiniteSet<T>& set, Int s) {
    if (s == 0) throw std::invalid_argument("dilation factor must be nonzero");
    std::vector<T> out;
    out.reserve(set.size());
    for (const T& a : set) out.push_back(scalar_mul(s, a));
    if (s < 0) std::reverse(out.begin(), out.end());
    return FiniteSet<T>::from_sorted(std::move(out));
}

/// {max - a : a in A}
template <GroupElement T>
FiniteSet<T> reflect(const FiniteSet<T>& set) {
    std::vector<T> out;
    out.reserve(set.size());
    for (auto it = set.vector().rbegin(); it != set.vector().rend(); ++it) out.push_back(sub(set.back(), *it));
    return FiniteSet<T>::from_sorted(std::move(out));
}

/// Consecutive differences all equal. Sets with at most two elements qualify.
template <GroupElement T>
bool is_arithmetic_progression(const FiniteSet<T>& set) {
    if (set.size() <= 2) return true;
    const T step = sub(set[1], set[0]);
    for (std::size_t i = 2; i < set.size(); ++i) {
        if (lex_compare(sub(set[i], set[i - 1]), step) != 0) return false;
    }
    return true;
}

/// Representative of the affine class of a one-dimensional set: minimum 0,
/// gcd of elements 1, and lexicographically no larger than its reflection.
inline IntSet canonicalize(const IntSet& set) {
    if (set.size() < 2) throw std::invalid_argument("canonicalize requires at least two elements");
    const Int lo = set.front();
    Int g = 0;
    for (Int a : set) g = gcd(g, checked_sub(a, lo));
    std::vector<Int> shifted;
    shifted.reserve(set.size());
    for (Int a : set) shifted.push_back(checked_sub(a, lo) / g);
    IntSet normal = IntSet::from_sorted(std::move(shifted));
    IntSet mirrored = reflect(normal);
    return mirrored < normal ? mirrored : normal;
}

inline bool is_canonical(const IntSet& set) { return set.size() >= 2 && canonicalize(set) == set; }

// Set literal text: "0,1,2,4" for d = 1, "0 0;1 2;2 4" for d > 1.

using AnySet = std::variant<IntSet, PointSet>;

namespace detail {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

inline std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
        if (i > start) parts.push_back(text.substr(start, i - start));
    }
    return parts;
}

} // namespace detail

inline AnySet parse_set_literal(std::string_view text) {
    const bool tuples = text.find(';') != std::string_view::npos ||
                        (text.find(',') == std::string_view::npos && detail::split_whitespace(text).size() > 1);
    if (!tuples) {
        std::vector<Int> values;
        for (auto part : detail::split(text, ',')) values.push_back(parse_int(part));
        return IntSet::from_elements(std::move(values));
    }
    std::vector<Point> points;
    for (auto part : detail::split(text, ';')) {
        std::vector<Int> coords;
        for (auto tok : detail::split_whitespace(part)) coords.push_back(parse_int(tok));
        if (coords.empty()) throw std::invalid_argument("empty coordinate tuple in set literal");
        points.emplace_back(std::move(coords));
    }
    return PointSet::from_elements(std::move(points));
}

inline std::string format_element(Int v) { return to_string(v); }

inline std::string format_element(const Point& p) {
    std::string out;
    for (std::size_t i = 0; i < p.dimension(); ++i) {
        if (i) out += ' ';
        out += to_string(p[i]);
    }
    return out;
}

template <GroupElement T>
std::string format_set_literal(std::span<const T> elements) {
    const char sep = std::is_same_v<T, Int> ? ',' : ';';
    std::string out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) out += sep;
        out += format_element(elements[i]);
    }
    return out;
}

template <GroupElement T>
std::string format_set_literal(const FiniteSet<T>& set) {
    return format_set_literal<T>(set.elements());
}

} // namespace sumset
