#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

#include "aguiar/error.hpp"

namespace aguiar {

// Coefficients, character values and multiplicities.
using Int = std::int64_t;
// Accumulator for character sums (products of three characters times class
// sizes overflow 64 bits from degree ~13 on).
using Wide = __int128;

template <class T>
concept CheckedInteger = std::is_same_v<T, Int> || std::is_same_v<T, Wide> ||
                         std::is_same_v<T, int>;

template <CheckedInteger T>
[[nodiscard]] inline T checked_add(T a, T b) {
    T r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

template <CheckedInteger T>
[[nodiscard]] inline T checked_sub(T a, T b) {
    T r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

template <CheckedInteger T>
[[nodiscard]] inline T checked_mul(T a, T b) {
    T r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

[[nodiscard]] inline Int narrow(Wide w) {
    if (w > static_cast<Wide>(INT64_MAX) || w < static_cast<Wide>(INT64_MIN))
        throw OverflowError("value does not fit in 64 bits");
    return static_cast<Int>(w);
}

// Exact division; throws when the remainder is nonzero.
[[nodiscard]] inline Wide exact_div(Wide num, Wide den, const char *what) {
    if (den == 0 || num % den != 0)
        throw ArithmeticError(std::string("non-exact quotient in ") + what);
    return num / den;
}

[[nodiscard]] inline Wide factorial(int n) {
    Wide r = 1;
    for (int j = 2; j <= n; ++j)
        r = checked_mul(r, static_cast<Wide>(j));
    return r;
}

inline std::string to_string(Wide v) {
    if (v == 0)
        return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        s.push_back(static_cast<char>('0' + (neg ? -digit : digit)));
        v /= 10;
    }
    if (neg)
        s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace aguiar
