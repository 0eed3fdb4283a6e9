#pragma once

// Fractional ideals of the maximal order O = F_q[x] + F_q[x] y + F_q[x] (y^2/F2)
// as rank-3 F_q[x]-modules: rows are generators in coordinates over (1, y, y^2),
// stored in canonical triangular Hermite normal form over a monic denominator.
//
//   rows[0] = (g0,   0,  0)        pivots g0, g1, g2 monic
//   rows[1] = (h10, g1,  0)        deg h10, h20 < deg g0, deg h21 < deg g1
//   rows[2] = (h20, h21, g2)
//
// Equality of ideals is byte equality of canonical_key.

#include <cmath>
#include <vector>

#include "cubic/field.hpp"

namespace cubic {

struct FractionalIdeal {
    std::array<Triple, 3> rows;
    Poly den = {1};

    bool operator==(const FractionalIdeal& o) const { return rows == o.rows && den == o.den; }
    bool operator!=(const FractionalIdeal& o) const { return !(*this == o); }
};

namespace detail {

// triangular HNF of a spanning set; throws on rank < 3
inline std::array<Triple, 3> hnf_rows(const Fq& F, std::vector<Triple> gens) {
    std::array<Triple, 3> basis;
    std::erase_if(gens, triple_is_zero);
    for (int col = 2; col >= 0; --col) {
        while (true) {
            int best = -1;
            for (size_t i = 0; i < gens.size(); ++i) {
                if (gens[i][col].empty()) continue;
                if (best < 0 || poly_deg(gens[i][col]) < poly_deg(gens[best][col])) best = (int)i;
            }
            if (best < 0) fail_invariant("ideal basis is not full rank");
            bool reduced_any = false;
            for (size_t i = 0; i < gens.size(); ++i) {
                if ((int)i == best || gens[i][col].empty()) continue;
                Poly q = poly_divmod(F, gens[i][col], gens[best][col]).first;
                for (int k = 0; k <= col; ++k)
                    gens[i][k] = poly_sub(F, gens[i][k], poly_mul(F, q, gens[best][k]));
                reduced_any = true;
            }
            bool others_live = false;
            for (size_t i = 0; i < gens.size(); ++i)
                if ((int)i != best && !gens[i][col].empty()) others_live = true;
            if (!others_live) {
                u64 inv = F.inv(poly_lc(gens[best][col]));
                Triple piv = gens[best];
                for (auto& p : piv) p = poly_smul(F, p, inv);
                basis[col] = piv;
                gens.erase(gens.begin() + best);
                std::erase_if(gens, triple_is_zero);
                break;
            }
            (void)reduced_any;
        }
    }
    // reduce off-pivot entries modulo the pivot of their column
    auto reduce_entry = [&](Triple& row, int col, const Triple& pivot) {
        Poly q = poly_divmod(F, row[col], pivot[col]).first;
        if (q.empty()) return;
        for (int k = 0; k <= col; ++k) row[k] = poly_sub(F, row[k], poly_mul(F, q, pivot[k]));
    };
    reduce_entry(basis[1], 0, basis[0]);
    reduce_entry(basis[2], 1, basis[1]);
    reduce_entry(basis[2], 0, basis[0]);
    return {basis[0], basis[1], basis[2]};
}

}  // namespace detail

// canonical form of the module (1/den) * span(gens)
inline FractionalIdeal make_ideal(const CubicField& K, std::vector<Triple> gens, Poly den) {
    const Fq& F = K.fq;
    check(!den.empty(), errc::invariant, "ideal with zero denominator");
    auto rows = detail::hnf_rows(F, std::move(gens));
    den = poly_monic(F, den);  // unit scaling leaves an F_q[x]-module unchanged
    Poly content = den;
    for (const auto& r : rows)
        for (const auto& p : r)
            if (!p.empty()) content = poly_gcd(F, content, p);
    if (poly_deg(content) > 0) {
        for (auto& r : rows)
            for (auto& p : r)
                if (!p.empty()) p = poly_quot_exact(F, p, content);
        den = poly_quot_exact(F, den, content);
    }
    FractionalIdeal f;
    f.rows = rows;
    f.den = std::move(den);
    return f;
}

inline FractionalIdeal ideal_one(const CubicField& K) {
    const Poly& F2 = K.F2;
    std::vector<Triple> gens = {{F2, {}, {}}, {{}, F2, {}}, {{}, {}, poly_const(1)}};
    return make_ideal(K, std::move(gens), F2);
}

inline FractionalIdeal ideal_mul(const CubicField& K, const FractionalIdeal& a, const FractionalIdeal& b) {
    std::vector<Triple> gens;
    gens.reserve(9);
    for (const auto& r : a.rows)
        for (const auto& s : b.rows) gens.push_back(triple_mul(K, r, s));
    return make_ideal(K, std::move(gens), poly_mul(K.fq, a.den, b.den));
}

// alpha * f
inline FractionalIdeal ideal_scale(const CubicField& K, const FractionalIdeal& f, const FieldFunction& alpha) {
    if (fn_is_zero(alpha)) fail_validation("ZeroFunction: scaling ideal by zero");
    Triple num = {alpha.a, alpha.b, alpha.c};
    std::vector<Triple> gens;
    gens.reserve(3);
    for (const auto& r : f.rows) gens.push_back(triple_mul(K, r, num));
    return make_ideal(K, std::move(gens), poly_mul(K.fq, f.den, alpha.den));
}

// alpha^(-1) * f without inverting alpha: multiply by den*adjugate(num)/norm(num)
inline FractionalIdeal ideal_scale_inv(const CubicField& K, const FractionalIdeal& f, const FieldFunction& alpha) {
    if (fn_is_zero(alpha)) fail_validation("ZeroFunction: scaling ideal by zero inverse");
    Triple num = {alpha.a, alpha.b, alpha.c};
    Triple adj = triple_adjugate(K, num);
    Poly nrm = triple_norm(K, num);
    std::vector<Triple> gens;
    gens.reserve(3);
    for (const auto& r : f.rows) {
        Triple t = triple_mul(K, r, adj);
        for (auto& p : t) p = poly_mul(K.fq, p, alpha.den);
        gens.push_back(std::move(t));
    }
    return make_ideal(K, std::move(gens), poly_mul(K.fq, f.den, nrm));
}

// 1 in f, i.e. O contained in f for an O-module
inline bool one_in(const CubicField& K, const FractionalIdeal& f) {
    return poly_divmod(K.fq, f.den, f.rows[0][0]).second.empty();
}

// membership via triangular solve over the HNF rows
inline bool ideal_contains(const CubicField& K, const FractionalIdeal& f, const FieldFunction& fn) {
    const Fq& F = K.fq;
    Triple t = {poly_mul(F, fn.a, f.den), poly_mul(F, fn.b, f.den), poly_mul(F, fn.c, f.den)};
    Poly coord[3];
    for (int col = 2; col >= 0; --col) {
        auto [q, r] = poly_divmod(F, t[col], f.rows[col][col]);
        if (!r.empty()) return false;
        coord[col] = q;
        for (int k = 0; k < col; ++k) t[k] = poly_sub(F, t[k], poly_mul(F, q, f.rows[col][k]));
    }
    for (int col = 0; col < 3; ++col)
        if (!poly_divmod(F, coord[col], fn.den).second.empty()) return false;
    return true;
}

// degree of the ideal norm, normalized so norm_degree(O) = 0
inline int norm_degree(const CubicField& K, const FractionalIdeal& f) {
    int det = poly_deg(f.rows[0][0]) + poly_deg(f.rows[1][1]) + poly_deg(f.rows[2][2]);
    return det - 3 * poly_deg(f.den) + poly_deg(K.F2);
}

// ---- canonical serialization (versioned; feeds hashes and the trap store) ----
//
// key := "K1|" q "|" P(den) "|" P(h00) "|" ... "|" P(h22)   (rows then columns)
// P(f) := n ":" c0 "," c1 "," ... with n = deg f + 1; the zero polynomial is "0:"

namespace detail {

inline void key_poly(std::string& out, const Poly& f) {
    out += std::to_string(f.size());
    out += ':';
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f[i]);
    }
}

}  // namespace detail

inline std::string canonical_key(const CubicField& K, const FractionalIdeal& f) {
    std::string out = "K1|";
    out += std::to_string(K.fq.p);
    out += '|';
    detail::key_poly(out, f.den);
    for (const auto& r : f.rows)
        for (const auto& p : r) {
            out += '|';
            detail::key_poly(out, p);
        }
    return out;
}

inline FractionalIdeal parse_key(const CubicField& K, const std::string& key) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t bar = key.find('|', start);
        if (bar == std::string::npos) {
            parts.push_back(key.substr(start));
            break;
        }
        parts.push_back(key.substr(start, bar - start));
        start = bar + 1;
    }
    check(parts.size() == 12 && parts[0] == "K1", errc::validation, "malformed ideal key");
    check(parts[1] == std::to_string(K.fq.p), errc::validation, "ideal key has wrong field");
    auto parse_poly = [&](const std::string& s) -> Poly {
        size_t colon = s.find(':');
        check(colon != std::string::npos, errc::validation, "malformed ideal key polynomial");
        size_t n = std::stoull(s.substr(0, colon));
        Poly f;
        size_t i = colon + 1;
        while (f.size() < n) {
            size_t comma = s.find(',', i);
            std::string tok = comma == std::string::npos ? s.substr(i) : s.substr(i, comma - i);
            check(!tok.empty(), errc::validation, "malformed ideal key polynomial");
            f.push_back(std::stoull(tok) % K.fq.p);
            i = comma == std::string::npos ? s.size() : comma + 1;
        }
        check(f.size() == n && (f.empty() || f.back() != 0), errc::validation, "non-canonical key polynomial");
        return f;
    };
    FractionalIdeal f;
    f.den = parse_poly(parts[2]);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) f.rows[r][c] = parse_poly(parts[3 + 3 * r + c]);
    check(!f.den.empty() && poly_lc(f.den) == 1, errc::validation, "key denominator not monic");
    for (int c = 0; c < 3; ++c) {
        check(poly_lc(f.rows[c][c]) == 1, errc::validation, "key pivot not monic");
        for (int c2 = c + 1; c2 < 3; ++c2)
            check(f.rows[c][c2].empty(), errc::validation, "key not triangular");
    }
    return f;
}

// All nonzero alpha in f with basis coordinates of degree <= B, up to F_q*
// scaling (the first nonzero coordinate coefficient is 1). Oracle-scale only.
inline std::vector<FieldFunction> ideal_elements_up_to(const CubicField& K, const FractionalIdeal& f,
                                                       int B, u64 budget = u64(1) << 25) {
    check(B >= 0, errc::validation, "coordinate degree bound must be >= 0");
    const Fq& F = K.fq;
    int slots = 3 * (B + 1);
    double total_log = slots * std::log2((double)F.p);
    if (total_log > 63 || bi_pow(F.p, slots) - 1 > BigInt(budget) * (F.p - 1))
        fail_budget("ideal element enumeration exceeds budget");
    std::vector<FieldFunction> out;
    std::vector<u64> coef(slots, 0);
    // first nonzero slot = lead, set to 1; later slots free
    for (int lead = 0; lead < slots; ++lead) {
        std::fill(coef.begin(), coef.end(), 0);
        coef[lead] = 1;
        while (true) {
            Triple acc{};
            for (int r = 0; r < 3; ++r) {
                Poly c(coef.begin() + r * (B + 1), coef.begin() + (r + 1) * (B + 1));
                poly_trim(c);
                if (c.empty()) continue;
                for (int k = 0; k < 3; ++k)
                    acc[k] = poly_add(F, acc[k], poly_mul(F, c, f.rows[r][k]));
            }
            out.push_back(fn_make(K, acc[0], acc[1], acc[2], f.den));
            // odometer over slots after lead
            int pos = slots - 1;
            while (pos > lead) {
                if (++coef[pos] < F.p) break;
                coef[pos] = 0;
                --pos;
            }
            if (pos == lead) break;
        }
    }
    return out;
}

}  // namespace cubic
