#include "nilcov/classes.hpp"
#include "nilcov/families.hpp"

#include <doctest.h>

using namespace nilcov;

namespace {
std::shared_ptr<const PairClassTable> table_for(Family f, std::uint32_t q) {
    return std::make_shared<PairClassTable>(build_group(FamilySpec::make(f, q)));
}
} // namespace

TEST_CASE("A4 order-3 classes are non-nilpotent classes") {
    auto t = table_for(Family::PSL2, 3);
    const FiniteGroup& g = t->group();
    int seen = 0;
    for (const auto& klass : g.conjugacy_classes()) {
        if (g.element_order(klass.front()) != 3) continue;
        ++seen;
        ClassReport r = class_omega(*t, klass);
        CHECK(r.size == 4);
        CHECK(r.non_nilpotent_class);
        CHECK(r.omega_lo == 4);
    }
    CHECK(seen == 2);
    // A4 is a Frobenius group with abelian complement C3: the complement
    // classes are non-nilpotent, and A4 itself is not simple
    CHECK(!g.is_simple());
    auto iso = isolated_classes(g, 3);
    CHECK(iso.size() == 2);
}

TEST_CASE("A5 class ratios") {
    auto t = table_for(Family::PGL2, 4);
    const FiniteGroup& g = t->group();
    for (const auto& klass : g.conjugacy_classes()) {
        if (klass.size() == 1) continue;
        ClassReport r = class_omega(*t, klass);
        REQUIRE(r.exact);
        std::uint32_t o = g.element_order(klass.front());
        if (o == 3) {
            CHECK(r.size == 20);
            CHECK(r.omega_lo == 10); // exactly half
        }
        if (o == 5) {
            CHECK(r.size == 12);
            CHECK(r.omega_lo == 6);
        }
        CHECK(2 * r.omega_lo <= r.size);
    }
    RatioCheck rc = ratio_conjecture_check(*t);
    CHECK(rc.simple);
    CHECK(rc.conjecture_holds);
    CHECK(2 * rc.witness_omega == rc.witness_size);
    // order-5 elements share Sylow 5-subgroups within a class
    CHECK(isolated_classes(g, 5).empty());
}

TEST_CASE("central classes are trivially excluded") {
    auto t = table_for(Family::SL2, 3);
    const FiniteGroup& g = t->group();
    for (const auto& klass : g.conjugacy_classes()) {
        if (klass.size() != 1 || klass.front() == g.identity()) continue;
        ClassReport r = class_omega(*t, klass);
        CHECK(r.omega_lo == 1);
    }
    CHECK_THROWS_AS(ratio_conjecture_check(*t), std::invalid_argument); // not simple
    RatioCheck rc = ratio_conjecture_check(*t, true);
    CHECK(!rc.simple);
}

TEST_CASE("abelian groups have all order-t classes isolated") {
    FamilySpec spec = FamilySpec::make(Family::SL2, 5);
    auto sl25 = build_group(spec);
    auto tori = maximal_tori(*sl25, spec);
    std::vector<Enc> encs;
    for (std::uint32_t i : tori[1].tori.front().members) encs.push_back(sl25->encoding(i));
    auto cyc = FiniteGroup::from_elements(ops_for_spec(spec), encs, "torus"); // C6
    auto iso = isolated_classes(*cyc, 3);
    CHECK(iso.size() == 2); // both order-3 classes (singletons) are isolated
    CHECK(!cyc->is_simple());
}

TEST_CASE("PSL2(8) satisfies the half bound") {
    auto t = table_for(Family::PGL2, 8);
    RatioCheck rc = ratio_conjecture_check(*t);
    CHECK(rc.simple);
    CHECK(rc.all_exact);
    CHECK(rc.conjecture_holds);
}

TEST_CASE("Sz(2) frobenius complement classes are non-nilpotent") {
    auto t = table_for(Family::Sz, 2);
    const FiniteGroup& g = t->group();
    // Sz(2) = C5 : C4 is a Frobenius group with cyclic complement; classes of
    // complement elements (orders 2 and 4) are non-nilpotent sets
    for (const auto& klass : g.conjugacy_classes()) {
        std::uint32_t o = g.element_order(klass.front());
        if (o != 2 && o != 4) continue;
        ClassReport r = class_omega(*t, klass);
        CHECK(r.non_nilpotent_class);
        CHECK(r.size == 5);
    }
}
