#include "nilcov/families.hpp"
#include "nilcov/group.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace nilcov;

namespace {
std::shared_ptr<FiniteGroup> make(Family f, std::uint32_t q) {
    return build_group(FamilySpec::make(f, q));
}
} // namespace

TEST_CASE("closure basics on SL2(5)") {
    auto g = make(Family::SL2, 5);
    REQUIRE(g->size() == 120);

    Subgroup triv = close(*g, {g->identity()});
    CHECK(triv.size() == 1);

    // cyclic closures match element orders
    for (std::uint32_t i = 0; i < g->size(); i += 7) {
        Subgroup c = close(*g, {i});
        CHECK(c.size() == g->element_order(i));
        CHECK(120 % c.size() == 0); // Lagrange
    }

    // a generating pair reaches the whole group
    bool found = false;
    for (std::uint32_t x = 0; x < g->size() && !found; ++x)
        for (std::uint32_t y = x + 1; y < g->size() && !found; ++y)
            if (close(*g, {x, y}).size() == 120) found = true;
    CHECK(found);
}

TEST_CASE("nilpotency classes") {
    auto sl23 = make(Family::SL2, 3);
    // the quaternion Sylow 2-subgroup of SL2(3) has class 2
    auto syl2 = sylow_subgroups(*sl23, 2);
    REQUIRE(syl2.size() == 1);
    REQUIRE(syl2.front().size() == 8);
    NilClass q8 = nilpotency_class(syl2.front());
    CHECK(!q8.nonnilpotent());
    CHECK(q8.v == 2);
    // against the pairwise-commutator oracle
    CHECK(oracle::naive_nilpotency_class(*sl23, syl2.front().members).v == 2);

    Subgroup triv = close(*sl23, {sl23->identity()});
    CHECK(nilpotency_class(triv).v == 0);

    // dihedral Sylow 2-subgroup of PGL2(7) has order 16 and class 3
    auto pgl27 = make(Family::PGL2, 7);
    auto d16 = sylow_subgroups(*pgl27, 2);
    REQUIRE(d16.front().size() == 16);
    NilClass dc = nilpotency_class(d16.front());
    CHECK(dc.v == 3);
    CHECK(oracle::naive_nilpotency_class(*pgl27, d16.front().members).v == 3);
}

TEST_CASE("pair_class basics") {
    auto s3 = make(Family::PGL2, 2); // S3
    REQUIRE(s3->size() == 6);
    // identity against anything is cyclic
    for (std::uint32_t y = 0; y < 6; ++y)
        if (y != s3->identity()) CHECK(pair_class(*s3, s3->identity(), y).v == 1);
    // a noncommuting 2-element and 3-element generate S3, not nilpotent
    std::uint32_t t = 6, c = 6;
    for (std::uint32_t i = 0; i < 6; ++i) {
        if (s3->element_order(i) == 2) t = i;
        if (s3->element_order(i) == 3) c = i;
    }
    REQUIRE(t < 6);
    REQUIRE(c < 6);
    CHECK(pair_class(*s3, t, c).nonnilpotent());

    // two order-3 elements of A4 in different Sylow 3-subgroups
    auto a4 = make(Family::PSL2, 3);
    REQUIRE(a4->size() == 12);
    auto syl3 = sylow_subgroups(*a4, 3);
    REQUIRE(syl3.size() == 4);
    auto nontrivial = [&](const Subgroup& s) {
        for (std::uint32_t m : s.members)
            if (m != a4->identity()) return m;
        throw std::logic_error("trivial Sylow");
    };
    CHECK(pair_class(*a4, nontrivial(syl3[0]), nontrivial(syl3[1])).nonnilpotent());

    // symmetry
    for (std::uint32_t i = 0; i < 12; ++i)
        for (std::uint32_t j = 0; j < 12; ++j)
            CHECK(pair_class(*a4, i, j).v == pair_class(*a4, j, i).v);
}

TEST_CASE("conjugacy classes") {
    // abelian: a torus packaged as a standalone group has only singletons
    auto sl25 = make(Family::SL2, 5);
    FamilySpec spec = FamilySpec::make(Family::SL2, 5);
    auto tori = maximal_tori(*sl25, spec);
    const Subgroup& t0 = tori.front().tori.front();
    std::vector<Enc> encs;
    for (std::uint32_t i : t0.members) encs.push_back(sl25->encoding(i));
    auto torus_group = FiniteGroup::from_elements(ops_for_spec(spec), encs, "torus");
    for (const auto& cls : torus_group->conjugacy_classes()) CHECK(cls.size() == 1);

    // A5 class sizes 1, 15, 20, 12, 12
    auto a5 = make(Family::PGL2, 4);
    std::vector<std::size_t> sizes;
    for (const auto& cls : a5->conjugacy_classes()) sizes.push_back(cls.size());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 12, 12, 15, 20});

    // PGL2(3) = S4 has 5 classes
    auto s4 = make(Family::PGL2, 3);
    CHECK(s4->conjugacy_classes().size() == 5);

    // class sizes sum to |G| and divide |G|
    for (const auto& cls : s4->conjugacy_classes()) CHECK(24 % cls.size() == 0);
}

TEST_CASE("sylow subgroups") {
    auto sl23 = make(Family::SL2, 3);
    CHECK(sylow_subgroups(*sl23, 3).size() == 4);

    auto pgl27 = make(Family::PGL2, 7);
    auto s7 = sylow_subgroups(*pgl27, 7);
    CHECK(s7.size() == 8); // q + 1

    for (std::uint32_t t : {2u, 3u, 7u}) {
        auto sy = sylow_subgroups(*pgl27, t);
        CHECK(sy.size() % t == 1);
        CHECK(pgl27->size() % sy.size() == 0);
    }
    CHECK_THROWS_AS(sylow_subgroups(*pgl27, 5), std::invalid_argument);
}

TEST_CASE("unique sylow membership") {
    // all order-5 elements of SL2(5) lie in a unique Sylow 5-subgroup
    auto g = make(Family::SL2, 5);
    auto uniq = unique_sylow_members(*g, 5);
    std::size_t order5 = 0;
    for (std::uint32_t i = 0; i < g->size(); ++i)
        if (g->element_order(i) == 5) ++order5;
    CHECK(order5 == 24);
    std::size_t uniq5 = 0;
    for (std::uint32_t u : uniq)
        if (g->element_order(u) == 5) ++uniq5;
    CHECK(uniq5 == order5);

    // normal Sylow 2-subgroup: every member lies in exactly one
    auto sl23 = make(Family::SL2, 3);
    auto uniq2 = unique_sylow_members(*sl23, 2);
    CHECK(uniq2.size() == 8);
}

TEST_CASE("centralizers and centre") {
    auto sl23 = make(Family::SL2, 3);
    Subgroup z = sl23->center();
    CHECK(z.size() == 2);
    for (std::uint32_t c : z.members) CHECK(sl23->centralizer(c).size() == 24);

    auto a5 = make(Family::PGL2, 4);
    CHECK(a5->center().size() == 1);
    CHECK(a5->is_simple());
    CHECK(!sl23->is_simple());
}

TEST_CASE("group dump and load round-trip") {
    auto g = make(Family::SL2, 5);
    std::string path = (std::filesystem::temp_directory_path() / "sl25.ncgt").string();
    dump_group_file(*g, path);
    auto h = load_group_file(path);
    CHECK(h->size() == g->size());
    CHECK(h->name() == g->name());
    // identical canonical indexing, spot-check multiplication
    for (std::uint32_t i = 0; i < 120; i += 13)
        for (std::uint32_t j = 0; j < 120; j += 17) CHECK(h->mul(i, j) == g->mul(i, j));
    std::filesystem::remove(path);
}

TEST_CASE("closure cap is reported") {
    auto g = make(Family::PGL2, 5);
    std::size_t saved = global_config().closure_cap;
    global_config().closure_cap = 10;
    CHECK_THROWS_AS(close(*g, g->generator_indices()), closure_cap_exceeded);
    global_config().closure_cap = saved;
}
