#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "raagspace/partition.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace raagspace;

namespace {

SignedVertex sv(const DefiningGraph& g, const std::string& name, bool pos) {
    return {g.vertexId(name), pos};
}

std::vector<SignedVertex> side(const DefiningGraph& g,
                               std::initializer_list<std::pair<const char*, bool>> xs) {
    std::vector<SignedVertex> out;
    for (auto [name, pos] : xs) out.push_back(sv(g, name, pos));
    return out;
}

// the worked pieces: W = ({b,d}|{b-,d-}), Q = ({a,d}|{a-,d-,c,c-}), R = ({a,c,d}|{a-,c-,d-})
WPartition exampleW(const DefiningGraph& g) {
    return WPartition::fromSides(g, side(g, {{"b", true}, {"d", true}}),
                                 side(g, {{"b", false}, {"d", false}}));
}
WPartition exampleQ(const DefiningGraph& g) {
    return WPartition::fromSides(
        g, side(g, {{"a", true}, {"d", true}}),
        side(g, {{"a", false}, {"d", false}, {"c", true}, {"c", false}}));
}
WPartition exampleR(const DefiningGraph& g) {
    return WPartition::fromSides(g, side(g, {{"a", true}, {"c", true}, {"d", true}}),
                                 side(g, {{"a", false}, {"c", false}, {"d", false}}));
}

std::vector<std::string> maxNames(const DefiningGraph& g, const WPartition& p) {
    std::vector<std::string> out;
    for (VertexId v : p.maxSet()) out.push_back(g.vertexName(v));
    return out;
}

} // namespace

TEST_CASE("doubled graph adjacency") {
    DefiningGraph g = fixtures::pathABCplusD();
    DoubledGraph dbl(g);
    CHECK(dbl.nodeCount() == 8);
    CHECK(dbl.adjacent(sv(g, "a", true), sv(g, "b", true)));
    CHECK(dbl.adjacent(sv(g, "a", true), sv(g, "b", false)));
    CHECK_FALSE(dbl.adjacent(sv(g, "a", true), sv(g, "a", false)));
    CHECK_FALSE(dbl.adjacent(sv(g, "a", true), sv(g, "c", true)));

    DefiningGraph e2 = fixtures::edgeless(2);
    DoubledGraph d2(e2);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            CHECK_FALSE(d2.adjacent(DoubledGraph::signedVertex(x), DoubledGraph::signedVertex(y)));

    DoubledGraph d1(fixtures::single());
    CHECK(d1.nodeCount() == 2);
}

TEST_CASE("components relative to a base") {
    DefiningGraph g = fixtures::pathABCplusD();
    auto compsB = DoubledGraph(g).mComponents(g.vertexId("b"));
    REQUIRE(compsB.size() == 2);
    CHECK(compsB[0] == std::vector<SignedVertex>{sv(g, "d", true)});
    CHECK(compsB[1] == std::vector<SignedVertex>{sv(g, "d", false)});
    CHECK(DoubledGraph(g).mComponents(g.vertexId("a")).size() == 4);

    DefiningGraph e2 = fixtures::edgeless(2);
    auto comps = DoubledGraph(e2).mComponents(0);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].front().v == 1);
}

TEST_CASE("enumeration per base") {
    DefiningGraph g = fixtures::pathABCplusD();
    auto atB = enumeratePartitions(g, g.vertexId("b"));
    REQUIRE(atB.size() == 2);
    for (const auto& p : atB)
        CHECK(p.linkSet() == side(g, {{"a", true}, {"a", false}, {"c", true}, {"c", false}}));
    CHECK(std::find(atB.begin(), atB.end(), exampleW(g)) != atB.end());

    DefiningGraph e2 = fixtures::edgeless(2);
    CHECK(enumerateAllPartitions(e2).size() == 2);

    DefiningGraph k2 = fixtures::complete(2);
    CHECK(enumerateAllPartitions(k2).empty());
}

TEST_CASE("split vertices, maxima and bases") {
    DefiningGraph g = fixtures::pathABCplusD();
    WPartition q = exampleQ(g);
    CHECK(q.sing() == std::vector<VertexId>{g.vertexId("a"), g.vertexId("d")});
    CHECK(maxNames(g, q) == std::vector<std::string>{"a"});
    WPartition r = exampleR(g);
    CHECK(maxNames(g, r) == std::vector<std::string>{"a", "c"});
    WPartition w = exampleW(g);
    CHECK(w.sing() == std::vector<VertexId>{g.vertexId("b"), g.vertexId("d")});
    CHECK(maxNames(g, w) == std::vector<std::string>{"b"});
}

TEST_CASE("commutation, compatibility, consistency") {
    DefiningGraph g = fixtures::pathABCplusD();
    WPartition w = exampleW(g), q = exampleQ(g), r = exampleR(g);
    CHECK(commute(g, w, q));
    CHECK(compatible(g, w, q));
    for (int sw : {0, 1})
        for (int sq : {0, 1}) CHECK(consistentSides(g, w, sw, q, sq));

    CHECK_FALSE(commute(g, q, r));
    CHECK(compatible(g, q, r));
    CHECK(compatible(g, q, q));

    // exactly three of the four side choices are consistent here
    int consistentCount = 0;
    for (int sq : {0, 1})
        for (int sr : {0, 1})
            if (consistentSides(g, q, sq, r, sr)) ++consistentCount;
    CHECK(consistentCount == 3);
}

TEST_CASE("order between partitions") {
    DefiningGraph g = fixtures::pathABCplusD();
    CHECK(partitionOrder(g, exampleQ(g), exampleW(g)) == PartitionOrder::LessT);
    CHECK(partitionOrder(g, exampleQ(g), exampleQ(g)) == PartitionOrder::Equivalent);

    DefiningGraph c4 = fixtures::cycle4();
    auto pa = enumeratePartitions(c4, c4.vertexId("a")).front();
    auto pb = enumeratePartitions(c4, c4.vertexId("b")).front();
    CHECK(partitionOrder(c4, pa, pb) == PartitionOrder::Incomparable);
}

TEST_CASE("enumeration matches the brute-force oracle") {
    for (int n = 1; n <= 3; ++n) {
        for (const DefiningGraph& g : fixtures::allGraphs(n)) {
            std::set<oracle::NormalizedPartition> got;
            for (const auto& p : enumerateAllPartitions(g)) got.insert(oracle::normalize(p));
            CHECK(got == oracle::allPartitions(g));
        }
    }
}

TEST_CASE("splitting a twist-dominant vertex pins the maximum") {
    for (int n = 1; n <= 4; ++n) {
        for (const DefiningGraph& g : fixtures::allGraphs(n)) {
            for (const auto& p : enumerateAllPartitions(g)) {
                for (VertexId v : p.sing()) {
                    if (!g.twistDominant(v)) continue;
                    CHECK(p.maxSet() == std::vector<VertexId>{v});
                }
            }
        }
    }
}

TEST_CASE("disjoint sides of non-commuting partitions avoid the link") {
    for (int n = 2; n <= 4; ++n) {
        for (const DefiningGraph& g : fixtures::allGraphs(n)) {
            auto all = enumerateAllPartitions(g);
            for (const auto& p : all) {
                for (const auto& q : all) {
                    if (p == q || commute(g, p, q)) continue;
                    for (int sp : {0, 1}) {
                        for (int sq : {0, 1}) {
                            const auto& ps = p.side(sp);
                            const auto& qs = q.side(sq);
                            std::set<SignedVertex> qset(qs.begin(), qs.end());
                            bool disjoint = true;
                            for (auto s : ps)
                                if (qset.count(s)) disjoint = false;
                            if (!disjoint) continue;
                            // then the side avoids lk(q) and sits inside the other side
                            std::set<SignedVertex> qlink(q.linkSet().begin(), q.linkSet().end());
                            std::set<SignedVertex> qOther(q.side(1 - sq).begin(),
                                                          q.side(1 - sq).end());
                            for (auto s : ps) {
                                CHECK_FALSE(qlink.count(s));
                                CHECK(qOther.count(s));
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("canonical form is idempotent and enumeration is duplicate-free") {
    for (int n = 2; n <= 4; ++n) {
        for (const DefiningGraph& g : fixtures::allGraphs(n)) {
            auto all = enumerateAllPartitions(g);
            std::set<WPartition> seen(all.begin(), all.end());
            CHECK(seen.size() == all.size());
            for (const auto& p : all) {
                auto again = WPartition::fromSides(g, p.sideA(), p.sideB());
                CHECK(again == p);
                auto swapped = WPartition::fromSides(g, p.sideB(), p.sideA());
                CHECK(swapped == p);
            }
        }
    }
}

TEST_CASE("every maximal split vertex is an admissible base") {
    for (int n = 2; n <= 4; ++n) {
        for (const DefiningGraph& g : fixtures::allGraphs(n)) {
            DoubledGraph dbl(g);
            for (const auto& p : enumerateAllPartitions(g)) {
                CHECK(p.bases() == p.maxSet());
                for (VertexId m : p.maxSet()) {
                    // the link is the doubled link of the base
                    for (VertexId v = 0; v < n; ++v) {
                        bool shouldLink = g.adjacent(m, v);
                        CHECK(p.inLink(v) == shouldLink);
                    }
                    // sides minus the base are unions of whole components
                    for (const auto& comp : dbl.mComponents(m)) {
                        int s = p.sideOf(comp.front());
                        CHECK(s >= 0);
                        for (SignedVertex x : comp) CHECK(p.sideOf(x) == s);
                    }
                }
            }
        }
    }
}

TEST_CASE("family validation names the offenders") {
    DefiningGraph g = fixtures::pathABCplusD();
    WPartition q = exampleQ(g);
    // Q conflicts with the partition splitting d the other way against it
    auto all = enumerateAllPartitions(g);
    bool foundIncompatible = false;
    for (const auto& p : all) {
        if (compatible(g, p, q)) continue;
        foundIncompatible = true;
        CHECK_THROWS_AS(PartitionFamily(g, {q, p}), semantic_error);
        break;
    }
    CHECK(foundIncompatible);
    CHECK_THROWS_AS(PartitionFamily(g, {q, q}), semantic_error);
    CHECK_NOTHROW(PartitionFamily(g, {exampleW(g), q}));
}

TEST_CASE("side validation") {
    DefiningGraph g = fixtures::pathABCplusD();
    // thin partition
    CHECK_THROWS_AS(WPartition::fromSides(g, side(g, {{"b", true}}),
                                          side(g, {{"b", false}, {"d", true}, {"d", false}})),
                    semantic_error);
    // sides meeting the link of every candidate base
    CHECK_THROWS_AS(WPartition::fromSides(g, side(g, {{"a", true}, {"b", true}}),
                                          side(g, {{"a", false}, {"b", false}})),
                    semantic_error);
    // overlapping sides
    CHECK_THROWS_AS(WPartition::fromSides(g, side(g, {{"b", true}, {"d", true}}),
                                          side(g, {{"b", false}, {"d", true}})),
                    semantic_error);
}
