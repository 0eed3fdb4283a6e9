#pragma once

// Prime field F_p for p < 2^62. Elements are raw u64 residues in [0, p);
// the ambient field descriptor Fq carries the modulus and (when p = 1 mod 3)
// a canonical primitive cube root of unity.

#include <optional>

#include "cubic/common.hpp"

namespace cubic {

struct Fq {
    u64 p = 0;
    u64 omega = 0;  // primitive cube root of unity, smaller of the two; 0 if p != 1 mod 3

    static Fq make(u64 p) {
        check(p >= 2, errc::validation, "modulus must be >= 2");
        check(p < (u64(1) << 62), errc::validation, "modulus too large");
        Fq f;
        f.p = p;
        if (p % 3 == 1) f.omega = f.find_omega();
        return f;
    }

    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a ? p - a : 0; }
    u64 mul(u64 a, u64 b) const { return (u64)((u128)a * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const {
        check(a % p != 0, errc::invariant, "inverse of zero");
        return pow(a, p - 2);
    }

    // omega with omega^3 = 1, omega != 1; canonicalized to the smaller of the pair
    u64 find_omega() const {
        check(p % 3 == 1, errc::validation, "p != 1 mod 3 has no primitive cube root of unity");
        for (u64 a = 2; a < p; ++a) {
            u64 w = pow(a, (p - 1) / 3);
            if (w != 1) {
                u64 w2 = mul(w, w);
                return w < w2 ? w : w2;
            }
        }
        fail_invariant("no cube root of unity found");
    }

    bool is_cube(u64 a) const {
        a %= p;
        if (a == 0) return true;
        if (p % 3 != 1) return true;  // cubing is a bijection
        return pow(a, (p - 1) / 3) == 1;
    }

    // Cube root of a cube, canonicalized to the numerically smallest of the
    // three roots. Adleman-Manders-Miller descent on the 3-Sylow subgroup.
    std::optional<u64> cube_root(u64 a) const {
        a %= p;
        if (a == 0) return 0;
        if (p % 3 != 1) return pow(a, (2 * p - 1) / 3);
        if (pow(a, (p - 1) / 3) != 1) return std::nullopt;

        u64 t = p - 1, s = 0;
        while (t % 3 == 0) { t /= 3; ++s; }
        u64 b = 2;
        while (pow(b, (p - 1) / 3) == 1) ++b;
        u64 g = pow(b, t);  // generates the 3-Sylow subgroup, order 3^s

        // Solve a^t = g^(3K) digit by digit in base 3 (a^t lies in <g^3>).
        u64 pow3s1 = 1;
        for (u64 i = 0; i + 1 < s; ++i) pow3s1 *= 3;  // 3^(s-1)
        u64 K = 0, three_i = 1;
        u64 cur = pow(a, t);
        for (u64 i = 0; i + 1 < s; ++i) {
            u64 e = pow3s1 / (3 * three_i);  // 3^(s-2-i)
            bool found = false;
            for (u64 d = 0; d < 3 && !found; ++d) {
                u64 shift = (u64)(((u128)3 * d % (p - 1)) * (three_i % (p - 1)) % (p - 1));
                u64 rem = mul(cur, inv(pow(g, shift)));
                if (pow(rem, e) == 1) {
                    K += d * three_i;
                    cur = rem;
                    found = true;
                }
            }
            check(found, errc::invariant, "cube root digit search failed");
            three_i *= 3;
        }

        u64 x;
        if (t == 1) {
            x = pow(g, K);  // a = g^(3K)
        } else {
            // 3*beta = 1 mod t, m = (3*beta - 1)/t: (a^beta)^3 = a * (a^t)^m
            u64 beta = 0;
            for (u64 c = 0; c < 3; ++c)
                if ((1 + (u128)c * t) % 3 == 0) { beta = (u64)((1 + (u128)c * t) / 3); break; }
            u64 m = (u64)(((u128)3 * beta - 1) / t);
            u64 e2 = (u64)((u128)(K % (p - 1)) * (m % (p - 1)) % (p - 1));
            x = mul(pow(a, beta % (p - 1)), inv(pow(g, e2)));
        }
        check(mul(mul(x, x), x) == a, errc::invariant, "cube root verification failed");
        u64 r1 = mul(x, omega), r2 = mul(r1, omega);
        u64 best = x < r1 ? x : r1;
        return r2 < best ? r2 : best;
    }
};

}  // namespace cubic
