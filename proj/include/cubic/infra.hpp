#pragma once

// The two-dimensional infrastructure of a unit rank 2 purely cubic field:
// distinguished principal ideals tagged with exact distance vectors in Z^2.
// Baby steps move by the H_i-maximal element (unique up to F_q*), giant steps
// multiply ideals and strip the product back to the distinguished
// representative, red_to pins the second distance coordinate, and below
// navigates to a target distance by giant-step doubling plus baby-step walks.

#include "cubic/lattice.hpp"

namespace cubic {

struct InfraElement {
    FractionalIdeal ideal;
    BigInt d1, d2;

    bool operator==(const InfraElement& o) const { return ideal == o.ideal && d1 == o.d1 && d2 == o.d2; }
};

struct StepResult {
    InfraElement e;
    std::array<i64, 3> relgen_vals;  // valuations of the applied phi or psi
};

struct OpCounters {
    u64 baby = 0;
    u64 giant = 0;
};

inline InfraElement identity(const CubicField& K) { return {ideal_one(K), 0, 0}; }

// distinguished <=> O contained in f and the only elements with all三 v_i >= 0
// are the constants (dim of that space is 1)
inline bool is_distinguished(const CubicField& K, const FractionalIdeal& f) {
    if (!one_in(K, f)) return false;
    IdealLattice lat(K, f);
    lat.reduce({0, 0, 0});
    return lat.dim_nonneg() == 1;
}

// H_i-maximal element phi of a distinguished ideal under the >=_i lexicographic
// order on (v_i, v_{i+1}, v_{i+2}), normalized so sigma_0(phi) has leading
// coefficient 1. Scans v_i = -k upward, then maximizes v_{i+1}, then v_{i+2},
// reading existence off the reduced basis.
inline std::pair<FieldFunction, std::array<i64, 3>> minimal_element(const CubicField& K,
                                                                    const FractionalIdeal& f, int dir) {
    check(dir >= 0 && dir < 3, errc::validation, "direction must be 0, 1 or 2");
    IdealLattice lat(K, f);
    int i1 = (dir + 1) % 3, i2 = (dir + 2) % 3;
    i64 n = -norm_degree(K, f);
    // generator x^e row_j with v_dir exactly -k inside { v >= t }, if any
    auto probe = [&](i64 k, i64 m, i64 l) -> std::optional<std::pair<int, i64>> {
        std::array<i64, 3> t;
        t[dir] = -k;
        t[i1] = m;
        t[i2] = l;
        lat.reduce(t);
        for (int j = 0; j < 3; ++j) {
            i64 s = lat.svalue(j);
            if (s > 0) continue;
            i64 e = lat.row_vals(j)[dir] + k;  // v shifts down by e under x^e
            if (e >= 0 && e <= -s) return std::make_pair(j, e);
        }
        return std::nullopt;
    };
    i64 kmax = 3 * K.genus + K.dF + 16;
    for (i64 k = 1; k <= kmax; ++k) {
        if (!probe(k, 0, 0)) continue;
        i64 m = 0;
        while (probe(k, m + 1, 0)) {
            ++m;
            check(m <= n + k, errc::invariant, "H_i scan exceeded the degree-sum bound");
        }
        i64 l = 0;
        while (probe(k, m, l + 1)) {
            ++l;
            check(m + l <= n + k, errc::invariant, "H_i scan exceeded the degree-sum bound");
        }
        if (m == 0 && l == 0) continue;  // only the all-zero pattern: not in H_i
        auto hit = probe(k, m, l);
        check(hit.has_value(), errc::invariant, "H_i extraction lost the witness");
        auto [j, e] = *hit;
        std::array<i64, 3> v = lat.row_vals(j);
        for (auto& x : v) x -= e;
        check(v[dir] == -k && v[i1] == m && v[i2] == l, errc::invariant, "H_i maximum has unexpected valuations");
        FieldFunction phi = lat.row_fn(j, e);
        u64 lead = lat.leading_coeff0(j);
        u64 scale = K.fq.inv(lead);
        phi.a = poly_smul(K.fq, phi.a, scale);
        phi.b = poly_smul(K.fq, phi.b, scale);
        phi.c = poly_smul(K.fq, phi.c, scale);
        return {phi, v};
    }
    fail_invariant("SearchExhausted: no H_i element found within the degree window");
}

inline StepResult baby_step(const CubicField& K, const InfraElement& a, int dir, OpCounters* ctr = nullptr) {
    auto [phi, v] = minimal_element(K, a.ideal, dir);
    FractionalIdeal g = ideal_scale_inv(K, a.ideal, phi);
    if (ctr) ++ctr->baby;
    return {{std::move(g), a.d1 + v[1], a.d2 + v[2]}, v};
}

// product of two distinguished elements reduced back to the distinguished
// representative: repeatedly strip a nonconstant element with all v_i >= 0
// (largest valuation sum first), accumulating the reducer psi.
inline StepResult giant_step(const CubicField& K, const InfraElement& a1, const InfraElement& a2,
                             OpCounters* ctr = nullptr) {
    FractionalIdeal cur = ideal_mul(K, a1.ideal, a2.ideal);
    std::array<i64, 3> psi = {0, 0, 0};
    int budget = 6 * K.genus + 6;
    for (int iter = 0;; ++iter) {
        check(iter <= budget, errc::invariant, "ReductionStuck: giant-step reduction exceeded its budget");
        IdealLattice lat(K, cur);
        lat.reduce({0, 0, 0});
        if (lat.dim_nonneg() == 1) break;
        int best = -1;
        std::array<i64, 3> bestv{};
        for (int j = 0; j < 3; ++j) {
            if (lat.svalue(j) > 0) continue;
            // skip the constants: row on the 1-line with a = lambda * den
            const Triple& r = lat.row(j);
            if (r[1].empty() && r[2].empty()) {
                auto [q, rem] = poly_divmod(K.fq, r[0], lat.den());
                if (rem.empty() && poly_deg(q) == 0) continue;
            }
            std::array<i64, 3> v = lat.row_vals(j);
            if (best < 0) {
                best = j;
                bestv = v;
                continue;
            }
            i64 sv = v[0] + v[1] + v[2], sb = bestv[0] + bestv[1] + bestv[2];
            if (sv > sb || (sv == sb && v > bestv)) {
                best = j;
                bestv = v;
            }
        }
        check(best >= 0, errc::invariant, "no strip candidate despite dim > 1");
        check(bestv[0] >= 0 && bestv[1] >= 0 && bestv[2] >= 0, errc::invariant, "strip with negative valuation");
        cur = ideal_scale_inv(K, cur, lat.row_fn(best, 0));
        for (int i = 0; i < 3; ++i) psi[i] += bestv[i];
    }
    check(psi[0] + psi[1] + psi[2] <= 2 * K.genus, errc::invariant, "giant-step reducer exceeds the 2g bound");
    check(one_in(K, cur), errc::invariant, "giant-step output does not contain 1");
    if (ctr) ++ctr->giant;
    return {{std::move(cur), a1.d1 + a2.d1 + psi[1], a1.d2 + a2.d2 + psi[2]}, psi};
}

// pin delta_2 to t: bs_1 while below, then alternate one bs_0 with runs of
// bs_2, rolling back a bs_2 overshoot (generalization of the red_0 loop)
inline InfraElement red_to(const CubicField& K, InfraElement b, const BigInt& t, OpCounters* ctr = nullptr) {
    BigInt gap = t - b.d2;
    if (gap < 0) gap = -gap;
    BigInt phase1_budget = gap + 4 * K.genus + 24;
    BigInt used = 0;
    while (b.d2 < t) {
        check(++used <= phase1_budget, errc::invariant, "LoopBudget: red_to bs_1 phase exceeded");
        b = baby_step(K, b, 1, ctr).e;
    }
    int outer = 0, outer_budget = 8 * K.genus + 16;
    while (b.d2 > t) {
        check(++outer <= outer_budget, errc::invariant, "LoopBudget: red_to outer loop exceeded");
        b = baby_step(K, b, 0, ctr).e;
        InfraElement before = b;
        while (b.d2 > t) {
            before = b;
            b = baby_step(K, b, 2, ctr).e;
        }
        if (b.d2 < t) b = before;  // bs_2 overshot; retry from the element above t
    }
    return b;
}

inline InfraElement red0(const CubicField& K, InfraElement b, OpCounters* ctr = nullptr) {
    return red_to(K, std::move(b), 0, ctr);
}

// one forward step along the delta_2 = 0 line
inline InfraElement advance0(const CubicField& K, const InfraElement& e, OpCounters* ctr = nullptr) {
    InfraElement n = red0(K, baby_step(K, e, 0, ctr).e, ctr);
    check(n.d1 > e.d1, errc::invariant, "advance0 did not move forward");
    return n;
}

// giant-step doubling chain along delta_2 = 0, shared read-only by workers
struct BelowTable {
    std::vector<InfraElement> chain;  // chain[k].d1 roughly 2^k
};

inline BelowTable make_below_table(const CubicField& K, const BigInt& max_target, OpCounters* ctr = nullptr) {
    BelowTable t;
    t.chain.push_back(advance0(K, identity(K), ctr));
    while (t.chain.back().d1 <= max_target) {
        const InfraElement& e = t.chain.back();
        t.chain.push_back(red0(K, giant_step(K, e, e, ctr).e, ctr));
    }
    return t;
}

namespace detail {

// largest reachable element with delta_2 = 0 and delta_1 <= a
inline InfraElement below0(const CubicField& K, const BelowTable& tbl, const BigInt& a, i64 margin,
                           OpCounters* ctr) {
    InfraElement e = identity(K);
    if (a <= 0) return e;
    for (size_t k = tbl.chain.size(); k-- > 0;) {
        while (e.d1 + tbl.chain[k].d1 + margin <= a) {
            e = red0(K, giant_step(K, e, tbl.chain[k], ctr).e, ctr);
            check(e.d1 <= a, errc::invariant, "below0 overshot despite margin");
        }
    }
    while (true) {
        InfraElement n = advance0(K, e, ctr);
        if (n.d1 > a) break;
        e = std::move(n);
    }
    return e;
}

}  // namespace detail

// B(a, b): the element at delta_2 = b with the largest reachable delta_1 <= a.
// With probability 1 - O(1/q) its distance is exactly (a, b); hidden elements
// can make it fall short, which callers detect by inspecting d1. tweak varies
// the approach path (used by exponent extraction retries).
inline InfraElement below(const CubicField& K, const BelowTable& tbl, const BigInt& a, const BigInt& b,
                          int tweak = 0, OpCounters* ctr = nullptr) {
    check(a >= 0, errc::validation, "below needs a >= 0");
    i64 margin = 2 * K.genus + 4 + (tweak % 7);
    if (b == 0) return detail::below0(K, tbl, a, margin, ctr);
    BigInt babs = b < 0 ? -b : b;
    BigInt start = a - babs - margin;
    if (start < 0) start = 0;
    InfraElement e = detail::below0(K, tbl, start, margin, ctr);
    e = red_to(K, e, b, ctr);
    int guard = 0;
    while (e.d1 <= a) {
        InfraElement n = red_to(K, baby_step(K, e, 0, ctr).e, b, ctr);
        check(n.d2 == b, errc::invariant, "level walk left the target line");
        if (n.d1 > a) break;
        check(n.d1 > e.d1, errc::invariant, "level walk did not advance");
        e = std::move(n);
        check(++guard < (1 << 22), errc::budget, "below level walk budget exceeded");
    }
    check(e.d2 == b, errc::invariant, "below missed the target delta_2");
    return e;
}

}  // namespace cubic
