#include "nilcov/families.hpp"
#include "nilcov/galois.hpp"

#include <doctest.h>

using namespace nilcov;

TEST_CASE("family orders") {
    struct Row {
        Family f;
        std::uint32_t q;
        std::uint64_t order;
    };
    const Row rows[] = {
        {Family::Sz, 2, 20},          {Family::SU3, 2, 216},     {Family::PGU3, 2, 216},
        {Family::PSU3, 2, 72},        {Family::Ree3Full, 3, 1512}, {Family::ReeSylowP, 3, 27},
        {Family::ReeSylowP, 27, 19683}, {Family::SL2, 4, 60},    {Family::PGL2, 4, 60},
        {Family::SL2, 7, 336},        {Family::PGL2, 8, 504},    {Family::PSL2, 9, 360},
        {Family::PGL2, 9, 720},       {Family::SL2, 9, 720},     {Family::PSL2, 7, 168},
    };
    for (const Row& r : rows) {
        auto g = build_group(FamilySpec::make(r.f, r.q));
        CHECK(g->size() == r.order);
    }
}

TEST_CASE("SU3(2) equals the full unitary scan") {
    // independent oracle: every 3x3 matrix over GF(4) with A^T J A^sigma = J
    // and det 1
    FiniteField F = FiniteField::make(2, 2);
    auto bar = [&](std::uint32_t x) { return F.frobenius(x, 1); };
    auto unitary = [&](const std::uint32_t* A) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                std::uint32_t s = 0;
                for (int t = 0; t < 3; ++t) s = F.add(s, F.mul(A[t * 3 + i], bar(A[(2 - t) * 3 + j])));
                if (s != (i + j == 2 ? 1u : 0u)) return false;
            }
        return true;
    };
    auto det = [&](const std::uint32_t* A) {
        std::uint32_t d = 0;
        d = F.add(d, F.mul(A[0], F.sub(F.mul(A[4], A[8]), F.mul(A[5], A[7]))));
        d = F.sub(d, F.mul(A[1], F.sub(F.mul(A[3], A[8]), F.mul(A[5], A[6]))));
        d = F.add(d, F.mul(A[2], F.sub(F.mul(A[3], A[7]), F.mul(A[4], A[6]))));
        return d;
    };
    std::size_t su = 0, gu = 0;
    std::uint32_t A[9];
    for (std::uint32_t code = 0; code < 262144; ++code) {
        std::uint32_t c = code;
        for (int i = 0; i < 9; ++i) {
            A[i] = c & 3;
            c >>= 2;
        }
        if (!unitary(A)) continue;
        ++gu;
        if (det(A) == 1) ++su;
    }
    CHECK(gu == 648);
    CHECK(su == 216);
    auto g = build_group(FamilySpec::make(Family::SU3, 2));
    CHECK(g->size() == su);
}

TEST_CASE("ree triple multiplication") {
    FiniteField F3 = FiniteField::make(3, 1);
    // central slice multiplies by adding z
    for (std::uint32_t z1 = 0; z1 < 3; ++z1)
        for (std::uint32_t z2 = 0; z2 < 3; ++z2) {
            ReeTriple r = ree_mul(F3, 0, {0, 0, z1}, {0, 0, z2});
            CHECK(r == ReeTriple{0, 0, F3.add(z1, z2)});
        }
    // identity
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 3; ++y) {
            ReeTriple a{x, y, 1};
            CHECK(ree_mul(F3, 0, a, {0, 0, 0}) == a);
            CHECK(ree_mul(F3, 0, {0, 0, 0}, a) == a);
        }
    // closed-form inverse against brute-force search at q = 3
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 3; ++y)
            for (std::uint32_t z = 0; z < 3; ++z) {
                ReeTriple a{x, y, z};
                ReeTriple inv = ree_inv(F3, a);
                CHECK(ree_mul(F3, 0, a, inv) == ReeTriple{0, 0, 0});
                bool found = false;
                for (std::uint32_t u = 0; u < 3 && !found; ++u)
                    for (std::uint32_t v = 0; v < 3 && !found; ++v)
                        for (std::uint32_t w = 0; w < 3; ++w)
                            if (ree_mul(F3, 0, a, {u, v, w}) == ReeTriple{0, 0, 0}) {
                                CHECK(ReeTriple{u, v, w} == inv);
                                found = true;
                                break;
                            }
                CHECK(found);
            }
    // q = 27: inverse via the cyclic subgroup generated by a
    FiniteField F27 = FiniteField::make(3, 3);
    ReeTriple a{5, 17, 3};
    ReeTriple acc = a, prev = a;
    while (!(acc == ReeTriple{0, 0, 0})) {
        prev = acc;
        acc = ree_mul(F27, 1, acc, a);
    }
    CHECK(prev == ree_inv(F27, a));

    // cube of (x, y, z) lands in the centre slice: (x,y,z)^3 = (0, 0, x^(s+2))
    for (std::uint32_t x = 0; x < 3; ++x)
        for (std::uint32_t y = 0; y < 3; ++y)
            for (std::uint32_t z = 0; z < 3; ++z) {
                ReeTriple t{x, y, z};
                ReeTriple cube = ree_mul(F3, 0, ree_mul(F3, 0, t, t), t);
                CHECK(cube.x == 0);
                CHECK(cube.y == 0);
                CHECK(cube.z == F3.mul(F3.mul(x, x), F3.mul(x, F3.mul(x, x)))); // x^5 = x^(s+2), s = 3
            }
}

TEST_CASE("maximal tori of PGL2(5)") {
    FamilySpec spec = FamilySpec::make(Family::PGL2, 5);
    auto g = build_group(spec);
    auto tori = maximal_tori(*g, spec);
    REQUIRE(tori.size() == 2);
    CHECK(tori[0].order == 4);
    CHECK(tori[0].tori.size() == 15);
    CHECK(tori[1].order == 6);
    CHECK(tori[1].tori.size() == 10);
    // 15 + 10 = 25 = q^2
}

TEST_CASE("maximal tori of SU3(2) degenerate onto the centre") {
    FamilySpec spec = FamilySpec::make(Family::SU3, 2);
    auto g = build_group(spec);
    auto tori = maximal_tori(*g, spec);
    REQUIRE(tori.size() == 3);
    CHECK(tori[0].order == 3); // q^2 - 1
    CHECK(tori[0].degenerate_central);
    CHECK(tori[1].order == 9); // (q+1)^2
    CHECK(!tori[1].tori.empty());
    CHECK(tori[2].order == 3); // q^2 - q + 1
    CHECK(tori[2].degenerate_central);
}

TEST_CASE("torus representatives have squarefree characteristic polynomials") {
    // eigenvalue-distinctness check of the regular-semisimple surrogate
    FamilySpec spec = FamilySpec::make(Family::SL2, 7);
    auto g = build_group(spec);
    FiniteField F = FiniteField::make(7, 1);
    for (const TorusClass& tc : maximal_tori(*g, spec)) {
        REQUIRE(!tc.tori.empty());
        const Subgroup& T = tc.tori.front();
        // a generator of the cyclic torus: order = |T|
        std::uint32_t rep = g->size();
        for (std::uint32_t x : T.members)
            if (g->element_order(x) == T.size()) {
                rep = x;
                break;
            }
        REQUIRE(rep < g->size());
        const Enc& e = g->encoding(rep);
        std::uint32_t tr = F.add(e.b[1], e.b[4]);
        // disc = tr^2 - 4 det, det = 1; nonzero iff eigenvalues distinct
        std::uint32_t disc = F.sub(F.mul(tr, tr), 4 % 7);
        CHECK(disc != 0);
    }
}

TEST_CASE("family spec validation") {
    CHECK_THROWS_AS(FamilySpec::make(Family::Sz, 4), std::invalid_argument);  // 2^2 not 2^(2m+1)
    CHECK_THROWS_AS(FamilySpec::make(Family::Sz, 3), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::make(Family::ReeSylowP, 9), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::make(Family::Ree3Full, 27), std::invalid_argument);
    CHECK_THROWS_AS(FamilySpec::make(Family::SL2, 6), std::invalid_argument); // not a prime power
    CHECK(FamilySpec::make(Family::SU3, 5).delta == 3);
    CHECK(FamilySpec::make(Family::SU3, 3).delta == 1);
    CHECK(FamilySpec::make(Family::Sz, 8).m == 1);
    CHECK(spec_from_name("Sz(8)").q == 8);
}
