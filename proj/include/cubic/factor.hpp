#pragma once

// Integer primality and factoring: Miller-Rabin (deterministic below 2^64,
// 64 pseudorandom rounds above) and Pollard's rho with Brent cycle finding.

#include <map>
#include <vector>

#include "cubic/bigint.hpp"

namespace cubic {

namespace detail {

inline u64 splitmix64(u64& s) {
    s += 0x9e3779b97f4a7c15ULL;
    u64 z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline BigInt bi_powmod(BigInt a, BigInt e, const BigInt& m) {
    BigInt r = 1;
    a %= m;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

inline bool miller_rabin_round(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
    BigInt x = bi_powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    if (n < BigInt("18446744073709551616")) {
        // deterministic base set for n < 2^64
        for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (!detail::miller_rabin_round(n, a, d, r)) return false;
        }
        return true;
    }
    u64 seed = 0x5eedULL;
    for (int i = 0; i < 64; ++i) {
        BigInt a = 2 + BigInt(detail::splitmix64(seed)) % (n - 3);
        if (!detail::miller_rabin_round(n, a, d, r)) return false;
    }
    return true;
}

namespace detail {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
inline BigInt pollard_brent(const BigInt& n, u64& seed) {
    if (n % 2 == 0) return 2;
    while (true) {
        BigInt y = 1 + BigInt(splitmix64(seed)) % (n - 1);
        BigInt c = 1 + BigInt(splitmix64(seed)) % (n - 1);
        BigInt m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = m < r - k ? m : r - k;
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = bi_gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = bi_gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

inline void factor_rec(const BigInt& n, std::map<BigInt, unsigned>& out, u64& seed) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt f = pollard_brent(n, seed);
    factor_rec(f, out, seed);
    factor_rec(n / f, out, seed);
}

}  // namespace detail

// n = prod p^e; every reported p passes is_prime. n = 1 gives the empty map.
inline std::map<BigInt, unsigned> int_factor(const BigInt& n) {
    check(n >= 1, errc::validation, "int_factor needs n >= 1");
    std::map<BigInt, unsigned> out;
    u64 seed = 0xfac702ULL;
    detail::factor_rec(n, out, seed);
    return out;
}

}  // namespace cubic
