#pragma once

// Truncated Laurent series at the infinite place: sum_k c[k] * x^(-(lo+k)),
// valuation convention v(x) = -1. A series knows its coefficients on the
// window [lo, horizon); below lo it is exactly zero (c[0] != 0 when nonempty).
// An empty series is zero on (-inf, lo) and unknown beyond -- the ambiguity
// signal that triggers precision escalation in callers.

#include <optional>
#include <vector>

#include "cubic/poly.hpp"

namespace cubic {

inline constexpr i64 far_horizon = i64(1) << 56;  // "exact zero" horizon

struct Laurent {
    i64 lo = far_horizon;
    std::vector<u64> c;

    i64 horizon() const { return c.empty() ? lo : lo + (i64)c.size(); }
    bool zero_to_horizon() const { return c.empty(); }
    std::optional<i64> order() const {
        if (c.empty()) return std::nullopt;
        return lo;
    }
    u64 leading() const { return c.empty() ? 0 : c[0]; }
    // coefficient at valuation level v; v must be below the horizon
    u64 at(i64 v) const {
        check(v < horizon(), errc::invariant, "laurent coefficient beyond known window");
        if (c.empty() || v < lo) return 0;
        return c[(size_t)(v - lo)];
    }

    void normalize() {
        size_t i = 0;
        while (i < c.size() && c[i] == 0) ++i;
        if (i == c.size()) {
            lo = horizon();
            c.clear();
        } else if (i) {
            lo += (i64)i;
            c.erase(c.begin(), c.begin() + i);
        }
    }
};

inline Laurent laurent_zero() { return {}; }

// exact polynomial as a series, window padded out to `prec` terms
inline Laurent laurent_from_poly(const Poly& f, int prec) {
    Laurent s;
    if (f.empty()) return s;  // exactly zero, far horizon
    int d = poly_deg(f);
    s.lo = -d;
    s.c.assign(prec, 0);
    for (int k = 0; k <= d && k < prec; ++k) s.c[k] = f[d - k];
    return s;
}

inline Laurent laurent_add(const Fq& F, const Laurent& a, const Laurent& b) {
    i64 hz = std::min(a.horizon(), b.horizon());
    i64 lo = std::min(a.c.empty() ? hz : a.lo, b.c.empty() ? hz : b.lo);
    Laurent r;
    if (lo >= hz) {
        r.lo = hz;
        return r;
    }
    r.lo = lo;
    r.c.assign((size_t)(hz - lo), 0);
    for (i64 v = lo; v < hz; ++v) {
        u64 x = (!a.c.empty() && v >= a.lo && v < a.horizon()) ? a.c[(size_t)(v - a.lo)] : 0;
        u64 y = (!b.c.empty() && v >= b.lo && v < b.horizon()) ? b.c[(size_t)(v - b.lo)] : 0;
        r.c[(size_t)(v - lo)] = F.add(x, y);
    }
    r.normalize();
    return r;
}

inline Laurent laurent_smul(const Fq& F, const Laurent& a, u64 s) {
    s %= F.p;
    if (s == 0) return laurent_zero();
    Laurent r = a;
    for (u64& x : r.c) x = F.mul(x, s);
    return r;
}

inline Laurent laurent_mul(const Fq& F, const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.c.empty() || b.c.empty()) {
        // zero times a series of order >= lo_other: zero below the combined horizon
        i64 ha = a.c.empty() ? a.lo : a.lo;
        i64 hb = b.c.empty() ? b.lo : b.lo;
        r.lo = ha + hb;
        return r;
    }
    size_t n = std::min(a.c.size(), b.c.size());
    r.lo = a.lo + b.lo;
    r.c.assign(n, 0);
    for (size_t i = 0; i < a.c.size() && i < n; ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j + i < n && j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.normalize();  // leading product nonzero in a field, but stay defensive-free: cheap
    return r;
}

// multiply by x^e (valuation shifts by -e)
inline Laurent laurent_shift(const Laurent& a, i64 e) {
    Laurent r = a;
    r.lo -= e;
    return r;
}

// t with t^3 = s to the working window. Requires 3 | order(s) and leading
// coefficient a cube; errors name the failed condition.
inline Laurent laurent_cube_root(const Fq& F, const Laurent& s) {
    check(!s.c.empty(), errc::validation, "cube root of zero series");
    if (s.lo % 3 != 0) fail_validation("cube root: valuation not divisible by 3");
    auto t0 = F.cube_root(s.c[0]);
    if (!t0) fail_validation("cube root: leading coefficient is not a cube");
    size_t n = s.c.size();
    std::vector<u64> t(n, 0);
    t[0] = *t0;
    u64 inv3t2 = F.inv(F.mul(3 % F.p, F.mul(t[0], t[0])));
    for (size_t k = 1; k < n; ++k) {
        // coefficient k of t^3 with t_k unknown: 3 t0^2 t_k + (known terms)
        u64 acc = 0;
        for (size_t i = 0; i <= k; ++i) {
            if (!t[i]) continue;
            for (size_t j = 0; i + j <= k; ++j) {
                size_t l = k - i - j;
                if (i < k && j < k && l < k && t[j] && t[l]) acc = F.add(acc, F.mul(t[i], F.mul(t[j], t[l])));
            }
        }
        t[k] = F.mul(F.sub(s.c[k], acc), inv3t2);
    }
    Laurent r;
    r.lo = s.lo / 3;
    r.c = std::move(t);
    return r;
}

}  // namespace cubic
