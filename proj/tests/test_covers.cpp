#include "nilcov/covers.hpp"
#include "nilcov/closed_forms.hpp"

#include <doctest.h>

using namespace nilcov;

TEST_CASE("partition cover of PGL2(5)") {
    FamilySpec spec = FamilySpec::make(Family::PGL2, 5);
    auto g = build_group(spec);
    Cover cv = partition_cover(g, spec);
    certify(cv);
    CHECK(cv.size() == 31); // q^2 + q + 1
    CHECK(cv.max_member_class <= 1);
    CHECK(cv.pairs_nonnilpotent);
    // partition identity: sum (|X| - 1) + 1 = |G|
    std::uint64_t sum = 1;
    for (const CoverMember& m : cv.members) sum += m.sub.size() - 1;
    CHECK(sum == g->size());
    // pairwise trivial intersections
    std::vector<std::uint32_t> count(g->size(), 0);
    for (const CoverMember& m : cv.members)
        for (std::uint32_t x : m.sub.members) ++count[x];
    for (std::uint32_t x = 0; x < g->size(); ++x)
        CHECK(count[x] == (x == g->identity() ? cv.size() : 1));
}

TEST_CASE("central-lift partition cover of SL2(7)") {
    FamilySpec spec = FamilySpec::make(Family::SL2, 7);
    auto g = build_group(spec);
    Cover cv = partition_cover(g, spec);
    certify(cv);
    CHECK(cv.size() == 57);
    CHECK(cv.max_member_class <= 1); // all members abelian
    // every member contains the centre
    Subgroup z = g->center();
    REQUIRE(z.size() == 2);
    for (const CoverMember& m : cv.members)
        for (std::uint32_t c : z.members) CHECK(m.sub.contains(c));
}

TEST_CASE("a corrupted cover fails verification") {
    FamilySpec spec = FamilySpec::make(Family::PGL2, 5);
    auto g = build_group(spec);
    Cover cv = partition_cover(g, spec);
    // duplicate one member: its distinguished element now lies in two members
    Cover bad = cv;
    bad.members.push_back(bad.members.front());
    bad.members.back().distinguished.reset();
    bad.members.front().distinguished.reset();
    auto w = verify_2minimal(bad);
    CHECK(w.has_value());
}

TEST_CASE("hybrid certification matches the direct route on Sz(2)") {
    FamilySpec spec = FamilySpec::make(Family::Sz, 2);
    auto table = std::make_shared<PairClassTable>(build_group(spec));
    for (ClassBound c : {ClassBound(1), ClassBound(2), kInfiniteBound}) {
        auto cv = hybrid_certified_cover(table, spec, c);
        REQUIRE(cv.has_value());
        CHECK(cv->size() == 6);
        certify(*cv);
    }
}

TEST_CASE("unitary cover counts") {
    CHECK(su3_cover_counts(FamilySpec::make(Family::SU3, 4), 2).total == 5201);
    CHECK(su3_cover_counts(FamilySpec::make(Family::SU3, 5), 1).total ==
          omega_formula(TheoremFamily::SU3, 5, 1));
    CHECK(su3_cover_counts(FamilySpec::make(Family::PGU3, 5), 1).total == 19531);
    CHECK(su3_cover_counts(FamilySpec::make(Family::PGU3, 5), 2).total ==
          omega_formula(TheoremFamily::PGU3, 5, 2));
    // component counts for SU3(5), c = 1: |U0 x Z| class has (q^4+q^3+q+1)/3 members
    CoverCounts cc = su3_cover_counts(FamilySpec::make(Family::SU3, 5), 1);
    REQUIRE(cc.components.size() == 3);
    CHECK(cc.components[0].count == 252);
    CHECK(cc.components[1].count == 25 * 126);
    CHECK(cc.components[2].count == 15625);
    CHECK_THROWS_AS(su3_cover_counts(FamilySpec::make(Family::SU3, 3), 2), std::invalid_argument);
}

TEST_CASE("Ree cover counts at q = 27") {
    FamilySpec spec = FamilySpec::make(Family::ReeSylowP, 27);
    for (ClassBound c : {ClassBound(1), ClassBound(2), ClassBound(3), kInfiniteBound}) {
        CoverCounts cc = ree_cover_counts(spec, c);
        CHECK(cc.total == omega_formula(TheoremFamily::Ree, 27, c));
    }
    // the per-Sylow family sizes: (q-1)/2 and q(q-1)/2
    CoverCounts c2 = ree_cover_counts(spec, 2);
    CHECK(c2.components.back().count == 13 * (19683 + 1));
    CoverCounts c1 = ree_cover_counts(spec, 1);
    CHECK(c1.components.back().count == 351 * (19683 + 1));
}

TEST_CASE("theorem-4.3 set for PGL2(4) meets omega") {
    FamilySpec spec = FamilySpec::make(Family::PGL2, 4);
    auto g = build_group(spec);
    SylowLowerBound lb = sylow_lower_bound_set(*g, spec, {5, 3});
    CHECK(lb.nu_p == 5);
    REQUIRE(lb.nu_t.size() == 2);
    CHECK(lb.nu_t[0].second == 6);  // nu_5
    CHECK(lb.nu_t[1].second == 10); // nu_3
    CHECK(lb.elements.size() == 21);
    CHECK(lb.verified_nonnilpotent);
    // matches omega_inf(PGL2(4)) = 21 exactly
    CHECK(lb.elements.size() == omega_formula(TheoremFamily::PGL2, 4, kInfiniteBound));
}

TEST_CASE("lower-bound set rejects bad torus primes") {
    FamilySpec spec = FamilySpec::make(Family::PGL2, 5);
    auto g = build_group(spec);
    CHECK_THROWS_AS(sylow_lower_bound_set(*g, spec, {2}), std::invalid_argument);
}

TEST_CASE("grown covers are valid covers by maximal nilpotent subgroups") {
    FamilySpec spec = FamilySpec::make(Family::PGL2, 5);
    auto g = build_group(spec);
    auto table = std::make_shared<PairClassTable>(g);
    std::vector<Subgroup> cover = grown_cover(*table, kInfiniteBound);
    CHECK(cover.size() >= 31); // omega_inf(PGL2(5)) members at least
    std::vector<bool> hit(g->size(), false);
    for (const Subgroup& s : cover) {
        CHECK(!nilpotency_class(s).nonnilpotent());
        for (std::uint32_t x : s.members) hit[x] = true;
    }
    CHECK(std::count(hit.begin(), hit.end(), false) == 0);
}
