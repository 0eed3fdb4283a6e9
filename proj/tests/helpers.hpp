#pragma once

// Shared helpers for the test suites: a small deterministic RNG and
// generators for random polynomials and curves at test scale.

#include <vector>

#include "cubic/field.hpp"

namespace testutil {

using namespace cubic;

struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        state += 0x9e3779b97f4a7c15ULL;
        u64 z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    u64 below(u64 n) { return next() % n; }
};

inline Poly random_poly(Rng& rng, const Fq& F, int deg) {
    if (deg < 0) return {};
    Poly f(deg + 1);
    for (int i = 0; i < deg; ++i) f[i] = rng.below(F.p);
    f[deg] = 1 + rng.below(F.p - 1);
    return f;
}

inline Poly random_monic(Rng& rng, const Fq& F, int deg) {
    Poly f = random_poly(rng, F, deg);
    f[deg] = 1;
    return f;
}

// random genus-3 unit rank 2 curve of the shape F = G * x^2, G irreducible
// monic quartic with G(0) != 0
inline Poly random_g3_curve(Rng& rng, const Fq& F) {
    while (true) {
        Poly g = random_monic(rng, F, 4);
        if (g[0] == 0) continue;
        if (!poly_is_squarefree(F, g) || !poly_is_irreducible(F, g)) continue;
        return poly_shift(g, 2);
    }
}

// random genus-3 curve with a squarefree (not necessarily irreducible)
// quartic part and a random linear squared part
inline Poly random_g3_curve_mixed(Rng& rng, const Fq& F) {
    while (true) {
        Poly g = random_monic(rng, F, 4);
        u64 root = rng.below(F.p);
        Poly lin = {F.neg(root), 1};
        if (!poly_is_squarefree(F, g)) continue;
        if (poly_eval(F, g, root) == 0) continue;
        return poly_mul(F, g, poly_mul(F, lin, lin));
    }
}

}  // namespace testutil
