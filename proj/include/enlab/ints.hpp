#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "enlab/error.hpp"

namespace enlab {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;

// Exact integers of unbounded width. Assignments and box radii stay in i64;
// bounds of the form 2^(2^(n-1)) and polynomial values promote to BigInt.
using BigInt = boost::multiprecision::cpp_int;

inline constexpr i64 I64_MAX = std::numeric_limits<i64>::max();
inline constexpr i64 I64_MIN = std::numeric_limits<i64>::min();

inline bool add_overflows(i64 a, i64 b, i64& out) { return __builtin_add_overflow(a, b, &out); }
inline bool sub_overflows(i64 a, i64 b, i64& out) { return __builtin_sub_overflow(a, b, &out); }
inline bool mul_overflows(i64 a, i64 b, i64& out) { return __builtin_mul_overflow(a, b, &out); }

inline i64 checked_add(i64 a, i64 b, const char* what = "addition") {
    i64 r;
    if (add_overflows(a, b, r)) throw_domain(std::string("64-bit overflow in ") + what);
    return r;
}

inline i64 checked_mul(i64 a, i64 b, const char* what = "multiplication") {
    i64 r;
    if (mul_overflows(a, b, r)) throw_domain(std::string("64-bit overflow in ") + what);
    return r;
}

inline i64 abs64(i64 v, const char* what = "value") {
    if (v == I64_MIN) throw_domain(std::string("magnitude of ") + what + " exceeds 64-bit range");
    return v < 0 ? -v : v;
}

// Floor/ceil division with mathematically correct behavior on negatives.
inline i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

// Exact floor(sqrt(v)) for v >= 0, valid over the full unsigned 128-bit range.
inline i128 isqrt128(i128 v) {
    if (v < 0) throw_domain("isqrt of negative value");
    if (v < 2) return v;
    // long double gives ~64 mantissa bits; correct the estimate locally.
    i128 r = static_cast<i128>(sqrtl(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

inline i64 isqrt64(i64 v) { return static_cast<i64>(isqrt128(v)); }

// 2^e as a BigInt; e must be modest (the tower exponents used here are <= 2^20).
inline BigInt pow2_big(u64 e) {
    if (e > (1u << 24)) throw_budget("power-of-two exponent too large");
    BigInt r = 1;
    r <<= static_cast<unsigned>(e);
    return r;
}

// The conjecture's height bound 2^(2^(n-1)).
inline BigInt conjecture_bound(int n) {
    if (n < 1) throw_domain("conjecture bound requires n >= 1");
    if (n > 24) throw_budget("conjecture bound exponent tower too large");
    return pow2_big(u64(1) << (n - 1));
}

// The Psi_n outer bound 2^(2^n), also the default escape radius.
inline BigInt psi_outer_bound(int n) {
    if (n < 1) throw_domain("outer bound requires n >= 1");
    if (n > 24) throw_budget("outer bound exponent tower too large");
    return pow2_big(u64(1) << n);
}

inline std::optional<i64> to_i64(const BigInt& v) {
    if (v > I64_MAX || v < I64_MIN) return std::nullopt;
    return static_cast<i64>(v);
}

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

} // namespace enlab
