#pragma once

// Arbitrary-precision signed integers back every quantity that can outgrow
// 64 bits: distances, h, h0, R, exp(R), interval bounds E and U.

#include <boost/multiprecision/cpp_int.hpp>

#include "cubic/common.hpp"

namespace cubic {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bi_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

// floor(sqrt(n)) for n >= 0
inline BigInt bi_isqrt(const BigInt& n) {
    check(n >= 0, errc::invariant, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

inline BigInt bi_pow(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// nonnegative remainder
inline BigInt bi_mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

inline std::string bi_str(const BigInt& n) { return n.str(); }

inline BigInt bi_parse(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        fail_validation("not an integer: '" + s + "'");
    }
}

}  // namespace cubic
