#pragma once

// Dense polynomials over F_q, ascending coefficients, no trailing zeros.
// deg(0) is the -infinity sentinel neg_inf_deg (safe under addition).

#include <algorithm>
#include <string>
#include <vector>

#include "cubic/bigint.hpp"
#include "cubic/fp.hpp"

namespace cubic {

using Poly = std::vector<u64>;

inline constexpr int neg_inf_deg = std::numeric_limits<int>::min() / 4;

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline bool poly_is_zero(const Poly& f) { return f.empty(); }
inline int poly_deg(const Poly& f) { return f.empty() ? neg_inf_deg : (int)f.size() - 1; }
inline u64 poly_lc(const Poly& f) { return f.empty() ? 0 : f.back(); }
inline Poly poly_const(u64 c) { return c ? Poly{c} : Poly{}; }
inline Poly poly_x() { return Poly{0, 1}; }

inline Poly poly_add(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    poly_trim(r);
    return r;
}
inline Poly poly_sub(const Fq& F, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    poly_trim(r);
    return r;
}
inline Poly poly_neg(const Fq& F, Poly a) {
    for (u64& c : a) c = F.neg(c);
    return a;
}
inline Poly poly_smul(const Fq& F, const Poly& a, u64 s) {
    s %= F.p;
    if (s == 0 || a.empty()) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
    return r;
}
// multiply by x^e
inline Poly poly_shift(const Poly& a, int e) {
    if (a.empty()) return {};
    Poly r(a.size() + e, 0);
    std::copy(a.begin(), a.end(), r.begin() + e);
    return r;
}
inline Poly poly_mul(const Fq& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

// f = q*d + r with deg r < deg d
inline std::pair<Poly, Poly> poly_divmod(const Fq& F, const Poly& f, const Poly& d) {
    check(!d.empty(), errc::invariant, "polynomial division by zero");
    if (f.size() < d.size()) return {{}, f};
    Poly q(f.size() - d.size() + 1, 0), r = f;
    u64 inv = F.inv(d.back());
    for (int i = (int)f.size() - (int)d.size(); i >= 0; --i) {
        if (r.size() < d.size() + i) continue;
        u64 c = F.mul(r[d.size() - 1 + i], inv);
        if (!c) continue;
        q[i] = c;
        for (size_t j = 0; j < d.size(); ++j) r[i + j] = F.sub(r[i + j], F.mul(c, d[j]));
        poly_trim(r);
    }
    poly_trim(q);
    return {q, r};
}
inline Poly poly_mod(const Fq& F, const Poly& f, const Poly& d) { return poly_divmod(F, f, d).second; }
inline Poly poly_quot_exact(const Fq& F, const Poly& f, const Poly& d) {
    auto [q, r] = poly_divmod(F, f, d);
    check(r.empty(), errc::invariant, "division not exact");
    return q;
}

inline Poly poly_monic(const Fq& F, const Poly& f) {
    if (f.empty() || f.back() == 1) return f;
    return poly_smul(F, f, F.inv(f.back()));
}
inline Poly poly_gcd(const Fq& F, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}
inline u64 poly_eval(const Fq& F, const Poly& f, u64 x) {
    u64 r = 0;
    for (size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}
inline Poly poly_deriv(const Fq& F, const Poly& f) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(f[i], i % F.p);
    poly_trim(r);
    return r;
}

inline Poly poly_powmod(const Fq& F, Poly base, BigInt e, const Poly& mod) {
    Poly r = poly_const(1);
    base = poly_mod(F, base, mod);
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

// Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for primes r | n.
inline bool poly_is_irreducible(const Fq& F, const Poly& f) {
    int n = poly_deg(f);
    check(n >= 1, errc::validation, "irreducibility needs deg >= 1");
    Poly m = poly_monic(F, f);
    std::vector<int> primes;
    int nn = n;
    for (int r = 2; r * r <= nn; ++r)
        while (nn % r == 0) {
            if (primes.empty() || primes.back() != r) primes.push_back(r);
            nn /= r;
        }
    if (nn > 1) primes.push_back(nn);
    for (int r : primes) {
        Poly h = poly_powmod(F, poly_x(), bi_pow(F.p, n / r), m);
        Poly g = poly_gcd(F, poly_sub(F, h, poly_x()), m);
        if (poly_deg(g) != 0) return false;
    }
    Poly h = poly_powmod(F, poly_x(), bi_pow(F.p, n), m);
    return poly_sub(F, h, poly_x()).empty();
}

inline bool poly_is_squarefree(const Fq& F, const Poly& f) {
    if (poly_deg(f) <= 0) return !f.empty();
    Poly d = poly_deriv(F, f);
    if (d.empty()) return false;
    return poly_deg(poly_gcd(F, f, d)) == 0;
}

// F = F1 * F2^2 with F1, F2 squarefree and coprime; F2 monic.
// Relies on char >= 5 so multiplicities 1 and 2 survive differentiation.
inline std::pair<Poly, Poly> cube_free_decompose(const Fq& F, const Poly& f) {
    check(!f.empty(), errc::validation, "cube_free_decompose of zero");
    if (poly_deg(f) == 0) return {f, poly_const(1)};
    Poly f2 = poly_gcd(F, f, poly_deriv(F, f));
    Poly sq = poly_mul(F, f2, f2);
    auto [f1, rem] = poly_divmod(F, f, sq);
    if (!rem.empty()) fail_validation("NotCubeFree: an irreducible factor has multiplicity >= 3");
    if (!poly_is_squarefree(F, f1) || (poly_deg(f2) > 0 && !poly_is_squarefree(F, f2)) ||
        poly_deg(poly_gcd(F, f1, f2)) != 0)
        fail_validation("NotCubeFree: an irreducible factor has multiplicity >= 3");
    return {f1, f2};
}

// Number of distinct monic irreducible factors, by distinct-degree counting on
// the radical. Multiplicities must be < char (holds for cube-free inputs).
inline int distinct_irreducible_factor_count(const Fq& F, const Poly& f) {
    check(poly_deg(f) >= 0, errc::validation, "factor count of zero");
    if (poly_deg(f) == 0) return 0;
    Poly d = poly_deriv(F, f);
    Poly rad = d.empty() ? poly_monic(F, f) : poly_quot_exact(F, f, poly_gcd(F, f, d));
    rad = poly_monic(F, rad);
    int count = 0;
    Poly w = rad;
    for (int deg = 1; poly_deg(w) >= 1; ++deg) {
        if (2 * deg > poly_deg(w)) {
            ++count;  // leftover is irreducible
            break;
        }
        Poly h = poly_powmod(F, poly_x(), bi_pow(F.p, deg), w);
        Poly t = poly_gcd(F, poly_sub(F, h, poly_x()), w);
        if (poly_deg(t) >= 1) {
            count += poly_deg(t) / deg;
            w = poly_quot_exact(F, w, t);
        }
    }
    return count;
}

// deterministic search: smallest monic irreducible of degree n in counter order
inline Poly find_irreducible(const Fq& F, int n) {
    check(n >= 1, errc::validation, "need degree >= 1");
    if (n == 1) return poly_x();
    for (u64 counter = 0;; ++counter) {
        Poly cand(n + 1, 0);
        cand[n] = 1;
        u64 c = counter;
        for (int i = 0; i < n && (c || i == 0); ++i) {
            cand[i] = c % F.p;
            c /= F.p;
        }
        if (c) fail_budget("no irreducible found in range");
        if (poly_is_irreducible(F, cand)) return cand;
    }
}

// ---- text format: "c_d*x^d + ... + c_0", canonical descending, no zero terms ----

inline std::string poly_to_string(const Poly& f) {
    if (f.empty()) return "0";
    std::string out;
    for (int i = (int)f.size() - 1; i >= 0; --i) {
        if (!f[i]) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(f[i]);
        } else {
            if (f[i] != 1) {
                out += std::to_string(f[i]);
                out += "*";
            }
            out += "x";
            if (i != 1) {
                out += "^";
                out += std::to_string(i);
            }
        }
    }
    return out.empty() ? "0" : out;
}

inline Poly poly_parse(const Fq& F, const std::string& text) {
    Poly r;
    size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && isspace((unsigned char)text[i])) ++i; };
    bool first = true;
    skip_ws();
    if (i == n) fail_validation("empty polynomial");
    while (i < n) {
        skip_ws();
        u64 sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i >= n || (text[i] != '+' && text[i] != '-'))
                fail_validation("expected '+' or '-' in polynomial: '" + text + "'");
            if (text[i] == '-') sign = F.p - 1;
            ++i;
            skip_ws();
        }
        first = false;
        u64 coef = 1;
        bool saw_coef = false;
        if (i < n && isdigit((unsigned char)text[i])) {
            BigInt big = 0;
            while (i < n && isdigit((unsigned char)text[i])) {
                big = big * 10 + (text[i] - '0');
                ++i;
            }
            coef = (u64)(big % F.p);
            saw_coef = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        int exp = 0;
        if (i < n && text[i] == 'x') {
            ++i;
            exp = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= n || !isdigit((unsigned char)text[i])) fail_validation("bad exponent in polynomial");
                long e = 0;
                while (i < n && isdigit((unsigned char)text[i])) {
                    e = e * 10 + (text[i] - '0');
                    if (e > 1000000) fail_validation("exponent too large");
                    ++i;
                }
                exp = (int)e;
            }
        } else if (!saw_coef) {
            fail_validation("malformed term in polynomial: '" + text + "'");
        }
        if ((size_t)exp + 1 > r.size()) r.resize(exp + 1, 0);
        r[exp] = F.add(r[exp], F.mul(sign, coef % F.p));
        skip_ws();
    }
    poly_trim(r);
    return r;
}

}  // namespace cubic
