#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sumset {

/// Exact integer used for every coordinate. 128-bit signed; arithmetic that
/// leaves the representable range throws OverflowError instead of wrapping.
using Int = __int128;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

inline Int abs_value(Int a) { return a < 0 ? checked_neg(a) : a; }

inline Int gcd(Int a, Int b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Exact binomial coefficient C(n, r); throws OverflowError past 127 bits.
inline Int binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    Int result = 1;
    for (std::int64_t i = 1; i <= r; ++i) {
        // result * (n - r + i) is divisible by i at every step
        Int g = gcd(result, i);
        Int num = checked_mul(result / g, Int(n - r + i) / (Int(i) / g));
        result = num;
    }
    return result;
}

/// Integer power with overflow detection.
inline Int checked_pow(Int base, unsigned exp) {
    Int r = 1;
    for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

inline bool fits_int64(Int v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

inline std::string to_string(Int v) {
    if (v == 0) return "0";
    const bool negative = v < 0;
    // work with the negative magnitude so INT128_MIN is representable
    std::string out;
    Int n = negative ? v : -v;
    while (n != 0) {
        out.push_back(static_cast<char>('0' - static_cast<int>(n % 10)));
        n /= 10;
    }
    if (negative) out.push_back('-');
    return {out.rbegin(), out.rend()};
}

/// Parses an optionally signed decimal integer. Throws std::invalid_argument on
/// malformed text and OverflowError when the value does not fit.
inline Int parse_int(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
    text = text.substr(pos, end - pos);
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    Int value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        value = checked_sub(checked_mul(value, 10), c - '0');
    }
    return negative ? value : checked_neg(value);
}

} // namespace sumset
