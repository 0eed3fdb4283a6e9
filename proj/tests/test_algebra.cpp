#include <catch2/catch_amalgamated.hpp>

#include "cubic/factor.hpp"
#include "cubic/laurent.hpp"
#include "cubic/poly.hpp"
#include "helpers.hpp"

using namespace cubic;
using testutil::Rng;

TEST_CASE("field axioms on random triples") {
    for (u64 p : {5ULL, 7ULL, 13ULL, 10007ULL, 1000003ULL}) {
        Fq F = Fq::make(p);
        Rng rng(p * 77 + 1);
        for (int it = 0; it < 200; ++it) {
            u64 a = rng.below(p), b = rng.below(p), c = rng.below(p);
            REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
            REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("primitive cube root of unity") {
    // exhaustive cube-map oracle at p = 7 and 13
    for (u64 p : {7ULL, 13ULL}) {
        Fq F = Fq::make(p);
        u64 smallest = 0;
        for (u64 w = 2; w < p; ++w)
            if (F.mul(F.mul(w, w), w) == 1) {
                smallest = w;
                break;
            }
        REQUIRE(F.omega == smallest);
    }
    REQUIRE(Fq::make(7).omega == 2);
    REQUIRE(Fq::make(13).omega == 3);
    // p = 5 is 2 mod 3: no primitive cube root
    REQUIRE_THROWS_AS(Fq::make(5).find_omega(), error);
}

TEST_CASE("cube roots in F_p") {
    for (u64 p : {7ULL, 13ULL, 31ULL, 10007ULL, 1000003ULL, 10000200031ULL}) {
        Fq F = Fq::make(p);
        Rng rng(p);
        for (int it = 0; it < 50; ++it) {
            u64 a = 1 + rng.below(p - 1);
            u64 cube = F.mul(F.mul(a, a), a);
            auto r = F.cube_root(cube);
            REQUIRE(r.has_value());
            REQUIRE(F.mul(F.mul(*r, *r), *r) == cube);
            if (p % 3 == 1) {
                // canonical root is the smallest of the orbit
                u64 r1 = F.mul(*r, F.omega), r2 = F.mul(r1, F.omega);
                REQUIRE(*r <= r1);
                REQUIRE(*r <= r2);
            }
        }
        if (p % 3 == 1) {
            // non-cubes have no root
            int seen = 0;
            for (u64 a = 2; a < p && seen < 5; ++a)
                if (!F.is_cube(a)) {
                    REQUIRE(!F.cube_root(a).has_value());
                    ++seen;
                }
        }
    }
}

TEST_CASE("polynomial divmod and gcd") {
    Fq F = Fq::make(13);
    Rng rng(99);
    for (int it = 0; it < 300; ++it) {
        Poly f = testutil::random_poly(rng, F, (int)rng.below(9));
        Poly d = testutil::random_poly(rng, F, (int)rng.below(5));
        if (d.empty()) continue;
        auto [q, r] = poly_divmod(F, f, d);
        REQUIRE(poly_add(F, poly_mul(F, q, d), r) == f);
        REQUIRE(poly_deg(r) < poly_deg(d));
    }
    // gcd divides both and is monic
    for (int it = 0; it < 100; ++it) {
        Poly a = testutil::random_poly(rng, F, 4);
        Poly b = testutil::random_poly(rng, F, 3);
        Poly g = poly_gcd(F, a, b);
        REQUIRE(poly_lc(g) == 1);
        REQUIRE(poly_divmod(F, a, g).second.empty());
        REQUIRE(poly_divmod(F, b, g).second.empty());
    }
}

TEST_CASE("irreducibility") {
    Fq F7 = Fq::make(7);
    // x^2 + 1 over F_7: no roots (oracle: exhaustive root search), degree 2
    Poly x2p1 = {1, 0, 1};
    bool has_root = false;
    for (u64 a = 0; a < 7; ++a)
        if (poly_eval(F7, x2p1, a) == 0) has_root = true;
    REQUIRE(!has_root);
    REQUIRE(poly_is_irreducible(F7, x2p1));
    REQUIRE(!poly_is_irreducible(F7, Poly{6, 0, 1}));  // x^2 - 1 = (x-1)(x+1)
    REQUIRE(poly_is_irreducible(F7, poly_x()));
    // cross-check against brute factor search at degree 4
    Rng rng(4711);
    for (int it = 0; it < 40; ++it) {
        Poly f = testutil::random_monic(rng, F7, 4);
        bool brute = true;
        for (u64 a = 0; a < 7 && brute; ++a)
            if (poly_eval(F7, f, a) == 0) brute = false;
        if (brute) {
            // check for quadratic factors
            for (u64 c1 = 0; c1 < 7 && brute; ++c1)
                for (u64 c0 = 0; c0 < 7 && brute; ++c0) {
                    Poly d = {c0, c1, 1};
                    if (poly_is_irreducible(F7, d) && poly_divmod(F7, f, d).second.empty()) brute = false;
                }
        }
        REQUIRE(poly_is_irreducible(F7, f) == brute);
    }
}

TEST_CASE("cube-free decomposition") {
    Fq F = Fq::make(7);
    Rng rng(5);
    // F = G x^2 with G squarefree, G(0) != 0 -> (G, x)
    for (int it = 0; it < 30; ++it) {
        Poly g = testutil::random_monic(rng, F, 4);
        if (g[0] == 0 || !poly_is_squarefree(F, g)) continue;
        Poly f = poly_shift(g, 2);
        auto [f1, f2] = cube_free_decompose(F, f);
        REQUIRE(f1 == g);
        REQUIRE(f2 == poly_x());
    }
    // irreducible F -> (F, 1)
    Poly irr = {1, 0, 1};
    auto [a1, a2] = cube_free_decompose(F, irr);
    REQUIRE(a1 == irr);
    REQUIRE(a2 == poly_const(1));
    // x^3 -> error
    REQUIRE_THROWS_AS(cube_free_decompose(F, poly_shift(poly_const(1), 3)), error);
    // round-trip property
    for (int it = 0; it < 200; ++it) {
        Poly f = testutil::random_poly(rng, F, 1 + (int)rng.below(8));
        try {
            auto [f1, f2] = cube_free_decompose(F, f);
            REQUIRE(poly_mul(F, f1, poly_mul(F, f2, f2)) == f);
            REQUIRE(poly_deg(poly_gcd(F, f1, f2)) == 0);
            REQUIRE(poly_is_squarefree(F, f1));
            if (poly_deg(f2) > 0) REQUIRE(poly_is_squarefree(F, f2));
        } catch (const error& e) {
            REQUIRE(e.kind == errc::validation);  // genuinely not cube-free
        }
    }
}

TEST_CASE("laurent cube root") {
    Fq F = Fq::make(13);
    // constant 1
    Laurent one = laurent_from_poly(poly_const(1), 20);
    Laurent r = laurent_cube_root(F, one);
    REQUIRE(r.order() == 0);
    REQUIRE(r.leading() == 1);
    // x^6: valuation -6 -> root x^2 (canonical leading coefficient)
    Laurent x6 = laurent_from_poly(poly_shift(poly_const(1), 6), 20);
    Laurent rx = laurent_cube_root(F, x6);
    REQUIRE(rx.order() == -2);
    REQUIRE(rx.leading() == 1);
    // round-trip property: cube a random unit series, root must be in the omega orbit
    Rng rng(321);
    for (int it = 0; it < 1000; ++it) {
        Laurent u;
        u.lo = -(i64)rng.below(7) * 3;
        u.c.resize(16);
        u.c[0] = 1 + rng.below(F.p - 1);
        for (size_t i = 1; i < u.c.size(); ++i) u.c[i] = rng.below(F.p);
        Laurent cu = laurent_mul(F, laurent_mul(F, u, u), u);
        Laurent root = laurent_cube_root(F, cu);
        bool match = false;
        for (u64 w : {(u64)1, F.omega, F.mul(F.omega, F.omega)}) {
            Laurent scaled = laurent_smul(F, u, w);
            Laurent diff = laurent_add(F, scaled, laurent_smul(F, root, F.p - 1));
            if (diff.zero_to_horizon()) match = true;
        }
        REQUIRE(match);
        // and the cube really reproduces the input on the window
        Laurent back = laurent_mul(F, laurent_mul(F, root, root), root);
        Laurent diff = laurent_add(F, back, laurent_smul(F, cu, F.p - 1));
        REQUIRE(diff.zero_to_horizon());
    }
    // error paths
    Laurent x1 = laurent_from_poly(poly_x(), 8);
    REQUIRE_THROWS_AS(laurent_cube_root(F, x1), error);  // valuation not divisible by 3
    Laurent bad = laurent_from_poly(poly_const(2), 8);   // 2 is not a cube mod 13
    REQUIRE(!F.is_cube(2));
    REQUIRE_THROWS_AS(laurent_cube_root(F, bad), error);
}

TEST_CASE("integer factoring") {
    auto f12 = int_factor(12);
    REQUIRE(f12.size() == 2);
    REQUIRE(f12[2] == 2);
    REQUIRE(f12[3] == 1);
    REQUIRE(int_factor(1).empty());
    // two random 32-bit primes recovered
    Rng rng(17);
    auto rand_prime32 = [&] {
        while (true) {
            u64 c = (rng.next() % (1ULL << 31)) | (1ULL << 30) | 1;
            if (is_prime(BigInt(c))) return c;
        }
    };
    for (int it = 0; it < 10; ++it) {
        u64 p = rand_prime32(), q = rand_prime32();
        auto f = int_factor(BigInt(p) * q);
        if (p == q) {
            REQUIRE(f.at(BigInt(p)) == 2);
        } else {
            REQUIRE(f.at(BigInt(p)) == 1);
            REQUIRE(f.at(BigInt(q)) == 1);
        }
    }
    // round-trip: 1000 random n <= 2^64
    for (int it = 0; it < 1000; ++it) {
        BigInt n = BigInt(rng.next()) + 1;
        auto f = int_factor(n);
        BigInt prod = 1;
        for (auto& [p, e] : f) {
            REQUIRE(is_prime(p));
            for (unsigned i = 0; i < e; ++i) prod *= p;
        }
        REQUIRE(prod == n);
    }
    // 20 structured 128-bit semiprimes
    auto rand_prime64 = [&] {
        while (true) {
            BigInt c = BigInt(rng.next() | (1ULL << 62) | 1);
            if (is_prime(c)) return c;
        }
    };
    for (int it = 0; it < 20; ++it) {
        BigInt p = rand_prime64(), q = rand_prime64();
        auto f = int_factor(p * q);
        BigInt prod = 1;
        for (auto& [pp, e] : f) {
            REQUIRE(is_prime(pp));
            for (unsigned i = 0; i < e; ++i) prod *= pp;
        }
        REQUIRE(prod == p * q);
    }
}

TEST_CASE("polynomial text format") {
    Fq F = Fq::make(1000003);
    Poly g1 = poly_parse(F, "x^6 + 858028*x^5 + 786068*x^4 + 69746*x^3 + 675670*x^2");
    REQUIRE(poly_deg(g1) == 6);
    REQUIRE(g1[2] == 675670);
    REQUIRE(poly_to_string(g1) == "x^6 + 858028*x^5 + 786068*x^4 + 69746*x^3 + 675670*x^2");
    // parse tolerates spacing, missing '*', and negatives
    Poly p2 = poly_parse(F, " 3x^2 - 1 + x ");
    REQUIRE(p2 == Poly{1000002, 1, 3});
    REQUIRE(poly_parse(F, "0") == Poly{});
    REQUIRE(poly_to_string(Poly{}) == "0");
    // round-trip on random polys
    Rng rng(8);
    for (int it = 0; it < 200; ++it) {
        Poly f = testutil::random_poly(rng, F, (int)rng.below(7));
        REQUIRE(poly_parse(F, poly_to_string(f)) == f);
    }
}

TEST_CASE("distinct irreducible factor counting") {
    Fq F = Fq::make(7);
    // x^2 * (x^2+1): factors x and x^2+1 -> 2
    Poly f = poly_mul(F, poly_shift(poly_const(1), 2), Poly{1, 0, 1});
    REQUIRE(distinct_irreducible_factor_count(F, f) == 2);
    // (x-1)(x-2)(x-3) -> 3
    Poly g = poly_mul(F, poly_mul(F, Poly{6, 1}, Poly{5, 1}), Poly{4, 1});
    REQUIRE(distinct_irreducible_factor_count(F, g) == 3);
    REQUIRE(distinct_irreducible_factor_count(F, Poly{1, 0, 1}) == 1);
}
