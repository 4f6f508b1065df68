#include "nilcov/covers.hpp"
#include "nilcov/nilgraph.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <sstream>

using namespace nilcov;

namespace {
std::shared_ptr<const PairClassTable> table_for(Family f, std::uint32_t q) {
    return std::make_shared<PairClassTable>(build_group(FamilySpec::make(f, q)));
}
} // namespace

TEST_CASE("gamma of an abelian group is complete") {
    // package a cyclic torus of SL2(5) as a standalone group
    FamilySpec spec = FamilySpec::make(Family::SL2, 5);
    auto sl25 = build_group(spec);
    auto tori = maximal_tori(*sl25, spec);
    std::vector<Enc> encs;
    for (std::uint32_t i : tori[1].tori.front().members) encs.push_back(sl25->encoding(i));
    auto t = std::make_shared<PairClassTable>(
        FiniteGroup::from_elements(ops_for_spec(spec), encs, "torus"));
    NilGraph g1 = NilGraph::build(t, 1);
    std::uint32_t n = g1.order();
    CHECK(g1.edge_count() == std::uint64_t(n) * (n - 1) / 2);
    MisResult mis = independence_number(g1);
    CHECK(mis.exact);
    CHECK(mis.lo == 1); // complete graph
    GraphMetrics m = graph_metrics(g1);
    CHECK(m.equality);
    CHECK(m.greedy_cover_size == 1);
}

TEST_CASE("identity vertex is adjacent to everything") {
    auto t = table_for(Family::PGL2, 3);
    NilGraph g = NilGraph::build(t, kInfiniteBound);
    std::uint32_t id = t->group().identity();
    for (std::uint32_t v = 0; v < g.order(); ++v)
        if (v != id) CHECK(g.adjacent(id, v));
    // and never sits in a maximum independent set of size >= 2
    MisResult mis = independence_number(g);
    REQUIRE(mis.lo >= 2);
    for (std::uint32_t v : mis.witness) CHECK(v != id);
}

TEST_CASE("known independence numbers") {
    auto pgl23 = table_for(Family::PGL2, 3);
    MisResult inf = independence_number(NilGraph::build(pgl23, kInfiniteBound));
    CHECK(inf.exact);
    CHECK(inf.lo == 7);
    MisResult one = independence_number(NilGraph::build(pgl23, 1));
    CHECK(one.lo == 10);

    auto sl23 = table_for(Family::SL2, 3);
    MisResult sl = independence_number(NilGraph::build(sl23, kInfiniteBound));
    CHECK(sl.lo == 5);
}

TEST_CASE("edge count of the commuting graph of S3") {
    auto t = table_for(Family::PGL2, 2);
    const FiniteGroup& g = t->group();
    NilGraph g1 = NilGraph::build(t, 1);
    // direct enumeration of commuting pairs
    std::uint64_t commuting = 0;
    for (std::uint32_t x = 0; x < g.size(); ++x)
        for (std::uint32_t y = x + 1; y < g.size(); ++y)
            if (g.mul(x, y) == g.mul(y, x)) ++commuting;
    CHECK(g1.edge_count() == commuting);
}

TEST_CASE("solver agrees with exhaustive search on small graphs") {
    for (auto [f, q] : {std::pair<Family, std::uint32_t>{Family::PGL2, 2},
                        {Family::Sz, 2},
                        {Family::PSL2, 3},
                        {Family::SL2, 3}}) {
        auto t = table_for(f, q);
        for (ClassBound c : {ClassBound(1), ClassBound(2), kInfiniteBound}) {
            NilGraph gr = NilGraph::build(t, c);
            MisResult mis = independence_number(gr);
            CHECK(mis.exact);
            CHECK(mis.lo == oracle::naive_mis(gr));
        }
    }
}

TEST_CASE("independence numbers are nonincreasing in c") {
    for (auto [f, q] : {std::pair<Family, std::uint32_t>{Family::PGL2, 3},
                        {Family::SL2, 5},
                        {Family::SU3, 2}}) {
        auto t = table_for(f, q);
        std::uint32_t prev = 0xFFFFFFFF;
        for (ClassBound c : {ClassBound(1), ClassBound(2), ClassBound(3), kInfiniteBound}) {
            MisResult mis = independence_number(NilGraph::build(t, c));
            REQUIRE(mis.exact);
            CHECK(mis.lo <= prev);
            prev = mis.lo;
        }
    }
}

TEST_CASE("edgeless and complete bit views") {
    std::vector<std::uint64_t> edgeless(10, 0);
    MisResult a = mis_on_bits(BitGraphView{10, 1, edgeless.data()});
    CHECK(a.lo == 10);
    std::vector<std::uint64_t> complete(10, (1u << 10) - 1);
    for (std::uint32_t v = 0; v < 10; ++v) complete[v] &= ~(1ull << v);
    MisResult b = mis_on_bits(BitGraphView{10, 1, complete.data()});
    CHECK(b.lo == 1);
}

TEST_CASE("graph metrics certify equality for PGL2(3)") {
    auto t = table_for(Family::PGL2, 3);
    GraphMetrics m1 = graph_metrics(NilGraph::build(t, 1));
    CHECK(m1.independence_exact);
    CHECK(m1.independence_lo == 10);
    CHECK(m1.equality); // greedy cover also reaches 10

    auto sz2 = table_for(Family::Sz, 2);
    GraphMetrics minf = graph_metrics(NilGraph::build(sz2, kInfiniteBound));
    CHECK(minf.independence_lo == 6);
    CHECK(minf.equality);
}

TEST_CASE("dimacs export") {
    auto t = table_for(Family::PGL2, 2);
    NilGraph gr = NilGraph::build(t, 1);
    std::ostringstream os;
    export_dimacs(gr, os);
    std::string out = os.str();
    CHECK(out.rfind("p edge 6 ", 0) == 0);
    // every edge line is 1-based and within range
    std::istringstream is(out);
    std::string line;
    std::getline(is, line);
    std::size_t edges = 0;
    while (std::getline(is, line)) {
        unsigned u = 0, v = 0;
        CHECK(sscanf(line.c_str(), "e %u %u", &u, &v) == 2);
        CHECK(u >= 1);
        CHECK(v <= 6);
        ++edges;
    }
    CHECK(edges == gr.edge_count());
}

