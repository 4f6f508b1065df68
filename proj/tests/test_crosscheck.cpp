// Heavier cross-checks: the pair_class fast paths against the pairwise
// commutator oracle on every built group of order <= 360, certified covers
// against brute-force search, and the larger structural counts.

#include "nilcov/covers.hpp"
#include "nilcov/closed_forms.hpp"
#include "nilcov/nilgraph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <atomic>
#include <thread>

using namespace nilcov;

TEST_CASE("fast paths agree with the oracle on every group of order <= 360") {
    struct Row {
        Family f;
        std::uint32_t q;
    };
    const Row rows[] = {
        {Family::PGL2, 2}, {Family::PSL2, 3}, {Family::Sz, 2},   {Family::SL2, 3},
        {Family::PGL2, 3}, {Family::ReeSylowP, 3}, {Family::PSL2, 5}, {Family::PGL2, 4},
        {Family::PSU3, 2}, {Family::SL2, 5},  {Family::PGL2, 5}, {Family::PSL2, 7},
        {Family::SU3, 2},  {Family::PGU3, 2}, {Family::SL2, 7},  {Family::PSL2, 9},
    };
    for (const Row& row : rows) {
        auto g = build_group(FamilySpec::make(row.f, row.q));
        REQUIRE(g->size() <= 360);
        g->element_orders();
        std::atomic<std::uint64_t> mismatches{0};
        std::uint32_t n = g->size();
        std::atomic<std::uint32_t> next{0};
        auto work = [&] {
            while (true) {
                std::uint32_t x = next.fetch_add(1);
                if (x >= n) break;
                for (std::uint32_t y = x; y < n; ++y) {
                    std::uint8_t fast = pair_class(*g, x, y).v;
                    std::uint8_t slow = oracle::naive_pair_class(*g, x, y).v;
                    if (fast != slow) ++mismatches;
                }
            }
        };
        unsigned nt = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        INFO(g->name());
        CHECK(mismatches.load() == 0);
    }
}

TEST_CASE("certified equals brute wherever both run") {
    struct Row {
        Family f;
        std::uint32_t q;
    };
    const Row rows[] = {{Family::PGL2, 5}, {Family::SL2, 5}, {Family::SU3, 2}, {Family::PGU3, 2}};
    for (const Row& row : rows) {
        FamilySpec spec = FamilySpec::make(row.f, row.q);
        auto table = std::make_shared<PairClassTable>(build_group(spec));
        for (ClassBound c : {ClassBound(1), ClassBound(2), kInfiniteBound}) {
            OmegaResult brute = omega_exact_on(table, spec, c, OmegaStrategy::mis);
            REQUIRE(brute.value.has_value());
            OmegaResult automatic_r = omega_exact_on(table, spec, c, OmegaStrategy::automatic);
            REQUIRE(automatic_r.value.has_value());
            INFO(spec.name(), " c=", bound_to_string(c));
            CHECK(*brute.value == *automatic_r.value);
            auto hybrid = hybrid_certified_cover(table, spec, c);
            if (hybrid) CHECK(hybrid->size() == *brute.value);
        }
    }
}

TEST_CASE("Suzuki structure at q = 8") {
    FamilySpec spec = FamilySpec::make(Family::Sz, 8);
    auto g = build_group(spec);
    REQUIRE(g->size() == 29120);

    auto tori = maximal_tori(*g, spec);
    std::uint64_t total = 0;
    for (const TorusClass& tc : tori) total += tc.tori.size();
    CHECK(total == 4096); // q^4, the Steinberg count under the squared convention
    CHECK(steinberg_count("2B2", 8) == total);

    // distinct maximal tori intersect trivially
    const Subgroup& t0 = tori[0].tori[0];
    const Subgroup& t1 = tori[0].tori[1];
    std::vector<std::uint32_t> inter;
    std::set_intersection(t0.members.begin(), t0.members.end(), t1.members.begin(),
                          t1.members.end(), std::back_inserter(inter));
    CHECK(inter == std::vector<std::uint32_t>{g->identity()});

    // all nontrivial 2-elements lie in a unique Sylow 2-subgroup
    auto sylows = sylow_subgroups(*g, 2);
    REQUIRE(sylows.size() == 65);
    auto uniq = unique_sylow_members(*g, sylows);
    std::uint64_t two_elements = 0;
    for (std::uint32_t i = 0; i < g->size(); ++i) {
        std::uint32_t o = g->element_order(i);
        if ((o & (o - 1)) == 0 && o > 1) ++two_elements;
    }
    CHECK(uniq.size() == two_elements); // the identity lies in all 65, so only nontrivial ones count
    // the abelian refinement subgroups have order 2q
    Cover refined = sz_abelian_refinement(g, spec);
    std::uint64_t hi_members = 0;
    for (const CoverMember& m : refined.members)
        if (m.kind == MemberKind::H_i) {
            CHECK(m.sub.size() == 16);
            ++hi_members;
        }
    CHECK(hi_members == 7 * 65); // (q - 1) per Sylow 2-subgroup
}

TEST_CASE("Ree(3) centralizer of an order-6 element has order 2q") {
    auto g = build_group(FamilySpec::make(Family::Ree3Full, 3));
    bool seen = false;
    for (std::uint32_t i = 0; i < g->size() && !seen; ++i)
        if (g->element_order(i) == 6) {
            CHECK(g->centralizer_order(i) == 6);
            seen = true;
        }
    CHECK(seen);
}

TEST_CASE("Ree Sylow-local families at q = 27") {
    FamilySpec spec = FamilySpec::make(Family::ReeSylowP, 27);
    auto P = build_group(spec);
    ReeSylowLocal c2 = ree_sylow_local(*P, spec, 2);
    CHECK(c2.family_count == 13); // (q - 1) / 2
    CHECK(c2.member_order == 3 * 27 * 27);
    CHECK(c2.covers_required_set);
    CHECK(c2.pairwise_ok);

    ReeSylowLocal c1 = ree_sylow_local(*P, spec, 1);
    CHECK(c1.family_count == 351); // q(q - 1) / 2
    CHECK(c1.member_order == 3 * 27);
    CHECK(c1.covers_required_set);
    CHECK(c1.pairwise_ok);
}

TEST_CASE("SU3(3) torus representatives pass the eigenvalue test") {
    FamilySpec spec = FamilySpec::make(Family::SU3, 3);
    auto g = build_group(spec);
    FiniteField F = FiniteField::make(3, 2); // GF(9)
    auto tori = maximal_tori(*g, spec);
    REQUIRE(tori.size() == 3);
    std::uint64_t total = 0;
    for (const TorusClass& tc : tori) total += tc.tori.size();
    CHECK(total == 729); // q^6

    // characteristic polynomial of a regular representative is squarefree:
    // gcd(f, f') = 1 over GF(9)
    for (const TorusClass& tc : tori) {
        const Subgroup& T = tc.tori.front();
        std::uint32_t rep = g->size();
        for (std::uint32_t x : T.members)
            if (x != g->identity() && g->centralizer_order(x) == T.size()) {
                rep = x;
                break;
            }
        REQUIRE(rep < g->size());
        const Enc& e = g->encoding(rep);
        std::uint32_t a[9];
        for (int i = 0; i < 9; ++i) a[i] = e.b[1 + i];
        // f(t) = t^3 - c2 t^2 + c1 t - c0
        std::uint32_t tr = F.add(F.add(a[0], a[4]), a[8]);
        std::uint32_t m00 = F.sub(F.mul(a[4], a[8]), F.mul(a[5], a[7]));
        std::uint32_t m11 = F.sub(F.mul(a[0], a[8]), F.mul(a[2], a[6]));
        std::uint32_t m22 = F.sub(F.mul(a[0], a[4]), F.mul(a[1], a[3]));
        std::uint32_t c1 = F.add(F.add(m00, m11), m22);
        std::uint32_t det = F.add(
            F.sub(F.mul(a[0], m00), F.mul(a[1], F.sub(F.mul(a[3], a[8]), F.mul(a[5], a[6])))),
            F.mul(a[2], F.sub(F.mul(a[3], a[7]), F.mul(a[4], a[6]))));
        // squarefree check by resultant-free gcd: evaluate gcd(f, f') degree
        // f' = 3t^2 - 2 c2 t + c1 = -2 c2 t + c1 in characteristic 3
        std::uint32_t A = F.neg(F.add(tr, tr)); // -2 c2 = c2 in char 3
        std::uint32_t B = c1;
        bool squarefree;
        if (A == 0) {
            squarefree = B != 0; // constant nonzero derivative
        } else {
            // root of f': t0 = -B/A; squarefree iff f(t0) != 0
            std::uint32_t t0 = F.neg(F.mul(B, F.inv(A)));
            std::uint32_t val = F.sub(F.mul(F.mul(t0, t0), t0), F.mul(tr, F.mul(t0, t0)));
            val = F.add(val, F.mul(c1, t0));
            val = F.sub(val, det);
            squarefree = val != 0;
        }
        CHECK(squarefree);
    }
}
