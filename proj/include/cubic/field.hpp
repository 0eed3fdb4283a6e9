#pragma once

// Purely cubic function field K = F_q(x,y), y^3 = F, of unit rank 2:
// q = 1 mod 3 prime, 3 | deg F, lc(F) a cube. The infinite place of F_q(x)
// then splits completely into infty_0, infty_1, infty_2; the three Laurent
// embeddings of y are w^i * Y0 for the canonical cube root Y0 of F.

#include <array>

#include "cubic/factor.hpp"
#include "cubic/laurent.hpp"

namespace cubic {

// alpha = (a + b*y + c*y^2) / den, den monic nonzero, gcd(a,b,c,den) constant
struct FieldFunction {
    Poly a, b, c;
    Poly den = {1};
};

struct CubicField {
    Fq fq;
    Poly F, F1, F2;  // F = F1 * F2^2 cube-free
    int genus = 0;
    int dF = 0;
    int prec0 = 0;
    std::array<Laurent, 3> Y, Ysq;  // embeddings of y, y^2 at prec0

    std::array<Laurent, 2> embeddings_at(int prec) const {
        Laurent y0 = laurent_cube_root(fq, laurent_from_poly(F, prec));
        Laurent y0sq = laurent_mul(fq, y0, y0);
        return {y0, y0sq};
    }
};

inline CubicField build_field(u64 q, const Poly& F) {
    if (q < 5) fail_validation("CharTooSmall: q must be at least 5");
    if (q % 3 != 1) fail_validation("NotOneModThree: q must be congruent to 1 mod 3");
    if (!is_prime(BigInt(q))) fail_validation("NotPrime: q must be prime");
    CubicField K;
    K.fq = Fq::make(q);
    check(!F.empty(), errc::validation, "F must be nonzero");
    if (poly_deg(F) % 3 != 0) fail_validation("DegreeNotDivisibleBy3: deg F must be divisible by 3");
    auto [f1, f2] = cube_free_decompose(K.fq, F);
    if (!K.fq.is_cube(poly_lc(F))) fail_validation("LeadingCoeffNotCube: lc(F) must be a cube in F_q");
    K.F = F;
    K.F1 = f1;
    K.F2 = f2;
    K.dF = poly_deg(F);
    int dsupp = poly_deg(f1) + poly_deg(f2);
    if (dsupp < 2) fail_validation("deg(F1*F2) must be at least 2 (genus would be negative)");
    K.genus = dsupp - 2;
    K.prec0 = 4 * K.genus + K.dF + 16;
    auto emb = K.embeddings_at(K.prec0);
    u64 w = K.fq.omega;
    K.Y = {emb[0], laurent_smul(K.fq, emb[0], w), laurent_smul(K.fq, emb[0], K.fq.mul(w, w))};
    K.Ysq = {emb[1], laurent_smul(K.fq, emb[1], K.fq.mul(w, w)), laurent_smul(K.fq, emb[1], w)};
    return K;
}

// v_1(psi) = v_2(psi) for a typical giant-step reducer at genus g
inline int hpsi(int g) {
    check(g >= 1, errc::validation, "hpsi needs g >= 1");
    return g % 3 != 2 ? g / 3 : (g + 1) / 3;
}

// ---- arithmetic on numerator triples (coordinates over 1, y, y^2) ----

using Triple = std::array<Poly, 3>;

inline bool triple_is_zero(const Triple& t) { return t[0].empty() && t[1].empty() && t[2].empty(); }

inline Triple triple_mul(const CubicField& K, const Triple& u, const Triple& v) {
    const Fq& F = K.fq;
    const auto& [p, q, r] = u;
    const auto& [a, b, c] = v;
    Poly qc_rb = poly_add(F, poly_mul(F, q, c), poly_mul(F, r, b));
    return {poly_add(F, poly_mul(F, p, a), poly_mul(F, qc_rb, K.F)),
            poly_add(F, poly_add(F, poly_mul(F, p, b), poly_mul(F, q, a)), poly_mul(F, poly_mul(F, r, c), K.F)),
            poly_add(F, poly_add(F, poly_mul(F, p, c), poly_mul(F, q, b)), poly_mul(F, r, a))};
}

// product of the two conjugates sigma_1(u) * sigma_2(u), expressed back in K;
// u * adjugate(u) = norm(u) as an element of F_q[x]
inline Triple triple_adjugate(const CubicField& K, const Triple& u) {
    const Fq& F = K.fq;
    u64 w = F.omega, w2 = F.mul(w, w);
    Triple c1 = {u[0], poly_smul(F, u[1], w), poly_smul(F, u[2], w2)};
    Triple c2 = {u[0], poly_smul(F, u[1], w2), poly_smul(F, u[2], w)};
    return triple_mul(K, c1, c2);
}

// a^3 + b^3 F + c^3 F^2 - 3abcF
inline Poly triple_norm(const CubicField& K, const Triple& u) {
    const Fq& F = K.fq;
    const auto& [a, b, c] = u;
    Poly r = poly_mul(F, poly_mul(F, a, a), a);
    r = poly_add(F, r, poly_mul(F, poly_mul(F, poly_mul(F, b, b), b), K.F));
    r = poly_add(F, r, poly_mul(F, poly_mul(F, poly_mul(F, c, c), c), poly_mul(F, K.F, K.F)));
    Poly abc3 = poly_smul(F, poly_mul(F, poly_mul(F, a, b), c), 3 % F.p);
    return poly_sub(F, r, poly_mul(F, abc3, K.F));
}

inline bool fn_is_zero(const FieldFunction& f) { return f.a.empty() && f.b.empty() && f.c.empty(); }

inline FieldFunction fn_make(const CubicField& K, Poly a, Poly b, Poly c, Poly den) {
    const Fq& F = K.fq;
    check(!den.empty(), errc::validation, "zero denominator");
    Poly g = poly_gcd(F, poly_gcd(F, a, b), poly_gcd(F, c, den));
    if (poly_deg(g) > 0) {
        a = poly_quot_exact(F, a, g);
        b = poly_quot_exact(F, b, g);
        c = poly_quot_exact(F, c, g);
        den = poly_quot_exact(F, den, g);
    }
    if (poly_lc(den) != 1) {
        u64 inv = F.inv(poly_lc(den));
        a = poly_smul(F, a, inv);
        b = poly_smul(F, b, inv);
        c = poly_smul(F, c, inv);
        den = poly_smul(F, den, inv);
    }
    return {std::move(a), std::move(b), std::move(c), std::move(den)};
}

inline FieldFunction fn_from_poly(const Poly& a) { return {a, {}, {}, {1}}; }
inline FieldFunction fn_y() { return {{}, {1}, {}, {1}}; }

inline FieldFunction fn_mul(const CubicField& K, const FieldFunction& u, const FieldFunction& v) {
    Triple t = triple_mul(K, {u.a, u.b, u.c}, {v.a, v.b, v.c});
    return fn_make(K, t[0], t[1], t[2], poly_mul(K.fq, u.den, v.den));
}

// N(alpha) as an exact rational function: (a^3 + b^3 F + c^3 F^2 - 3abcF, den^3)
inline std::pair<Poly, Poly> function_norm(const CubicField& K, const FieldFunction& f) {
    check(!fn_is_zero(f), errc::validation, "ZeroFunction: norm of zero");
    Poly num = triple_norm(K, {f.a, f.b, f.c});
    Poly d3 = poly_mul(K.fq, poly_mul(K.fq, f.den, f.den), f.den);
    return {num, d3};
}

// ---- valuations at the three infinite places ----

namespace detail {

// embed a numerator triple at all three places, at precision prec
inline std::array<Laurent, 3> embed_triple(const CubicField& K, const Triple& t, int prec,
                                           const Laurent& y0, const Laurent& y0sq) {
    const Fq& F = K.fq;
    Laurent A = laurent_from_poly(t[0], prec);
    Laurent P = laurent_mul(F, laurent_from_poly(t[1], prec), y0);
    Laurent Q = laurent_mul(F, laurent_from_poly(t[2], prec), y0sq);
    u64 w = F.omega, w2 = F.mul(w, w);
    return {laurent_add(F, A, laurent_add(F, P, Q)),
            laurent_add(F, A, laurent_add(F, laurent_smul(F, P, w), laurent_smul(F, Q, w2))),
            laurent_add(F, A, laurent_add(F, laurent_smul(F, P, w2), laurent_smul(F, Q, w)))};
}

// rigorous ceiling for ord_i of a nonzero numerator triple: each order is at
// most S - 2L, S the exact order sum (from the norm), L the trivial lower bound
inline i64 triple_order_ceiling(const CubicField& K, const Triple& t) {
    i64 S = -(i64)poly_deg(triple_norm(K, t));
    i64 L = far_horizon;
    if (!t[0].empty()) L = std::min(L, (i64)-poly_deg(t[0]));
    if (!t[1].empty()) L = std::min(L, -poly_deg(t[1]) - (i64)K.dF / 3);
    if (!t[2].empty()) L = std::min(L, -poly_deg(t[2]) - 2 * (i64)K.dF / 3);
    return S - 2 * L;
}

}  // namespace detail

// exact (v_0, v_1, v_2) of a nonzero function; precision escalates on demand
inline std::array<i64, 3> valuations(const CubicField& K, const FieldFunction& f) {
    if (fn_is_zero(f)) fail_validation("ZeroFunction: valuations of zero");
    Triple t = {f.a, f.b, f.c};
    i64 dden = poly_deg(f.den);
    i64 ceiling = 0;
    bool have_ceiling = false;
    for (int prec = K.prec0;; prec *= 2) {
        std::array<Laurent, 3> s;
        if (prec == K.prec0) {
            s = detail::embed_triple(K, t, prec, K.Y[0], K.Ysq[0]);
        } else {
            auto emb = K.embeddings_at(prec);
            s = detail::embed_triple(K, t, prec, emb[0], emb[1]);
        }
        bool ok = true;
        std::array<i64, 3> v{};
        for (int i = 0; i < 3; ++i) {
            auto o = s[i].order();
            if (!o) {
                ok = false;
                if (!have_ceiling) {
                    ceiling = detail::triple_order_ceiling(K, t);
                    have_ceiling = true;
                }
                check(s[i].horizon() <= ceiling, errc::invariant,
                      "valuation of nonzero function not found below rigorous ceiling");
                break;
            }
            v[i] = *o + dden;
        }
        if (ok) return v;
    }
}

}  // namespace cubic
