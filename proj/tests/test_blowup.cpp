#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "raagspace/blowup.hpp"
#include "support/fixtures.hpp"
#include "support/props.hpp"

using namespace raagspace;

namespace {

WPartition partitionFromSpec(const DefiningGraph& g,
                             std::initializer_list<std::pair<const char*, bool>> a,
                             std::initializer_list<std::pair<const char*, bool>> b) {
    std::vector<SignedVertex> sa, sb;
    for (auto [name, pos] : a) sa.push_back({g.vertexId(name), pos});
    for (auto [name, pos] : b) sb.push_back({g.vertexId(name), pos});
    return WPartition::fromSides(g, sa, sb);
}

WPartition exampleW(const DefiningGraph& g) {
    return partitionFromSpec(g, {{"b", true}, {"d", true}}, {{"b", false}, {"d", false}});
}
WPartition exampleQ(const DefiningGraph& g) {
    return partitionFromSpec(g, {{"a", true}, {"d", true}},
                             {{"a", false}, {"d", false}, {"c", true}, {"c", false}});
}
WPartition exampleR(const DefiningGraph& g) {
    return partitionFromSpec(g, {{"a", true}, {"c", true}, {"d", true}},
                             {{"a", false}, {"c", false}, {"d", false}});
}

int edgeCountWithLabel(const BlowupComplex& b, Label l) {
    int n = 0;
    for (const auto& e : b.edges())
        if (e.label == l) ++n;
    return n;
}

} // namespace

TEST_CASE("salvetti complexes count cliques") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex s = BlowupComplex::salvetti(g);
    CHECK(s.vertexCount() == 1);
    CHECK(s.edges().size() == 4);
    CHECK(s.cubeCountOfDim(2) == 2);
    CHECK(s.eulerCharacteristic() == -1);

    BlowupComplex one = BlowupComplex::salvetti(fixtures::single());
    CHECK(one.vertexCount() == 1);
    CHECK(one.edges().size() == 1);
    CHECK(one.edges().front().from == one.edges().front().to);

    BlowupComplex tri = BlowupComplex::salvetti(fixtures::triangle());
    CHECK(tri.vertexCount() == 1);
    CHECK(tri.edges().size() == 3);
    CHECK(tri.cubeCountOfDim(2) == 3);
    CHECK(tri.cubeCountOfDim(3) == 1);
}

TEST_CASE("regions of a family") {
    DefiningGraph g = fixtures::pathABCplusD();
    CHECK(enumerateRegions(g, PartitionFamily(g, {exampleQ(g)})).size() == 2);
    CHECK(enumerateRegions(g, PartitionFamily(g, {exampleW(g), exampleQ(g)})).size() == 4);
    CHECK(enumerateRegions(g, PartitionFamily(g, {})).size() == 1);
    // non-commuting compatible pair: exactly three side choices survive
    CHECK(enumerateRegions(g, PartitionFamily(g, {exampleQ(g), exampleR(g)})).size() == 3);
    CHECK_THROWS_AS(enumerateRegions(g, PartitionFamily(g, {exampleW(g), exampleQ(g)}), 3),
                    cap_error);
}

TEST_CASE("every consistent partial side choice extends to a region") {
    DefiningGraph g = fixtures::pathABCplusD();
    PartitionFamily fam(g, {exampleQ(g), exampleR(g)});
    auto regions = enumerateRegions(g, fam);
    for (int i = 0; i < fam.size(); ++i) {
        for (int s = 0; s < 2; ++s) {
            bool extended = false;
            for (const auto& r : regions)
                if (r.sides[i] == s) extended = true;
            CHECK(extended);
        }
    }
}

TEST_CASE("blowup of one partition") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g)}));
    CHECK(b.vertexCount() == 2);
    CHECK(b.edges().size() == 6);
    CHECK(b.cubeCountOfDim(2) == 3);
    CHECK(b.eulerCharacteristic() == -1);
    CHECK(edgeCountWithLabel(b, Label::vertexLabel(g.vertexId("b"))) == 2);
    CHECK(edgeCountWithLabel(b, Label::partLabel(0)) == 1);
    // the generator edge of a runs from the switched region to the terminal one
    int ea = -1;
    for (int e = 0; e < static_cast<int>(b.edges().size()); ++e)
        if (b.edges()[e].label == Label::vertexLabel(g.vertexId("a"))) ea = e;
    REQUIRE(ea >= 0);
    CHECK(b.edges()[ea].oriented);
    CHECK(b.edges()[ea].from != b.edges()[ea].to);
}

TEST_CASE("blowup of an edgeless pair is a theta graph") {
    DefiningGraph g = fixtures::edgeless(2);
    auto all = enumerateAllPartitions(g);
    REQUIRE(all.size() == 2);
    // pick the partition with both positives on one side
    WPartition p = partitionFromSpec(g, {{"v0", true}, {"v1", true}}, {{"v0", false}, {"v1", false}});
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {p}));
    CHECK(b.vertexCount() == 2);
    CHECK(b.edges().size() == 3);
    CHECK(b.cubes().empty());
    CHECK(b.eulerCharacteristic() == -1);
}

TEST_CASE("empty family reproduces the salvetti complex") {
    for (const DefiningGraph& g :
         {fixtures::pathABCplusD(), fixtures::cycle4(), fixtures::triangle()}) {
        BlowupComplex a = BlowupComplex::build(g, PartitionFamily(g, {}));
        BlowupComplex s = BlowupComplex::salvetti(g);
        CHECK(a.isomorphicTo(s));
    }
}

TEST_CASE("hyperplane census and carriers") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex s = BlowupComplex::salvetti(g);
    CHECK(s.hyperplanes().size() == 4);

    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g)}));
    CHECK(b.hyperplanes().size() == 5);
    const Hyperplane& hb = b.hyperplane(Label::vertexLabel(g.vertexId("b")));
    CHECK(hb.dualEdges.size() == 2);
    // carrier holds the three squares plus their faces
    int squares = 0;
    for (CubeRef r : hb.carrier)
        if (r.dim == 2) ++squares;
    CHECK(squares == 3);
    CHECK(props::hyperplanesMeetIffCommute(b));
}

TEST_CASE("collapse undoes one blowup member") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g)}));
    auto res = b.collapse(0);
    CHECK(res.complex.isomorphicTo(BlowupComplex::salvetti(g)));
    CHECK(res.vertexMap.size() == 2);
    CHECK(res.vertexMap[0] == res.vertexMap[1]);
    CHECK(res.complex.eulerCharacteristic() == b.eulerCharacteristic());
    CHECK_THROWS_AS(BlowupComplex::salvetti(g).collapse(0), semantic_error);
}

TEST_CASE("successive collapses commute up to isomorphism") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleW(g), exampleQ(g)}));
    auto first = b.collapse(0).complex;
    auto second = b.collapse(1).complex;
    CHECK(first.isomorphicTo(BlowupComplex::build(g, first.family())));
    CHECK(second.isomorphicTo(BlowupComplex::build(g, second.family())));
    auto viaFirst = first.collapse(0).complex;
    auto viaSecond = second.collapse(0).complex;
    BlowupComplex salv = BlowupComplex::salvetti(g);
    CHECK(viaFirst.isomorphicTo(salv));
    CHECK(viaSecond.isomorphicTo(salv));
    CHECK(viaFirst.isomorphicTo(viaSecond));
}

TEST_CASE("unique maximal cubes") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex s = BlowupComplex::salvetti(g);
    Label a = Label::vertexLabel(g.vertexId("a"));
    Label bb = Label::vertexLabel(g.vertexId("b"));
    Label c = Label::vertexLabel(g.vertexId("c"));
    CHECK(s.maxCubeFor({a, bb}).dim == 2);
    CHECK_THROWS_AS(s.maxCubeFor({a, c}), semantic_error);   // non-commuting
    CHECK_THROWS_AS(s.maxCubeFor({a}), semantic_error);      // not maximal

    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g)}));
    CHECK(b.maxCubeFor({Label::partLabel(0), bb}).dim == 2);
    CHECK(props::uniqueMaxCubes(b));
}

TEST_CASE("characteristic cycles cross each splitting hyperplane once") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g)}));

    CharacteristicCycle ca = b.characteristicCycle(g.vertexId("a"));
    REQUIRE(ca.edgeLoop.size() == 2);
    CHECK(b.edges()[ca.edgeLoop[0]].label == Label::partLabel(0));
    CHECK(b.edges()[ca.edgeLoop[1]].label == Label::vertexLabel(g.vertexId("a")));

    CharacteristicCycle cb = b.characteristicCycle(g.vertexId("b"));
    REQUIRE(cb.edgeLoop.size() == 1);
    CHECK(b.edges()[cb.edgeLoop[0]].from == b.edges()[cb.edgeLoop[0]].to);

    BlowupComplex wq = BlowupComplex::build(g, PartitionFamily(g, {exampleW(g), exampleQ(g)}));
    CharacteristicCycle cd = wq.characteristicCycle(g.vertexId("d"));
    REQUIRE(cd.edgeLoop.size() == 3);
    std::set<std::pair<Label::Kind, int>> labels;
    for (int e : cd.edgeLoop) labels.insert({wq.edges()[e].label.kind, wq.edges()[e].label.index});
    CHECK(labels.size() == 3);

    // a region that is not terminal for the generator is rejected
    Region bad = wq.terminalRegion(g.vertexId("d"));
    bad.sides[0] ^= 1;
    CHECK_THROWS_AS(wq.characteristicCycle(g.vertexId("d"), bad), semantic_error);
}

TEST_CASE("nested splitters are crossed innermost first") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g), exampleR(g)}));
    CharacteristicCycle ca = b.characteristicCycle(g.vertexId("a"));
    REQUIRE(ca.edgeLoop.size() == 3);
    // Q sits inside R on the a-side, so the Q edge comes first
    CHECK(b.edges()[ca.edgeLoop[0]].label == Label::partLabel(0));
    CHECK(b.edges()[ca.edgeLoop[1]].label == Label::partLabel(1));
    // the loop closes: walk the endpoints
    int cur = ca.startVertex;
    for (int e : ca.edgeLoop) {
        const auto& ed = b.edges()[e];
        cur = (ed.from == cur) ? ed.to : ed.from;
    }
    CHECK(cur == ca.startVertex);
}

TEST_CASE("the family subcomplex reaches every vertex and collapses") {
    DefiningGraph g = fixtures::pathABCplusD();
    for (PartitionFamily fam :
         {PartitionFamily(g, {exampleQ(g)}), PartitionFamily(g, {exampleW(g), exampleQ(g)}),
          PartitionFamily(g, {exampleQ(g), exampleR(g)})}) {
        BlowupComplex b = BlowupComplex::build(g, fam);
        CHECK(props::eSubcomplexConnected(b));
        CHECK(props::collapsesToPoint(b, b.eSubcomplex()));
    }
}

TEST_CASE("structure sanity on the worked examples") {
    DefiningGraph g = fixtures::pathABCplusD();
    for (PartitionFamily fam :
         {PartitionFamily(g, {}), PartitionFamily(g, {exampleQ(g)}),
          PartitionFamily(g, {exampleW(g), exampleQ(g)}), PartitionFamily(g, {exampleQ(g), exampleR(g)})}) {
        BlowupComplex b = BlowupComplex::build(g, fam);
        CHECK(props::oneEdgePerLabelPerVertex(b));
        CHECK(props::flagLinkViolations(b).empty());
        CHECK(props::parallelClassesConnected(b));
        CHECK(props::cubesMatchInductiveClosure(b));
    }
}

TEST_CASE("cube filling agrees with inductive square closure") {
    // complexes with cubes up to dimension four
    for (const DefiningGraph& g :
         {fixtures::triangle(), fixtures::complete(4), fixtures::cycle4(),
          fixtures::hubAndSpokes()}) {
        CHECK(props::cubesMatchInductiveClosure(BlowupComplex::salvetti(g)));
    }
    // a blowup with a square times a member direction
    DefiningGraph tt({"u", "v", "w", "x"}, {{"u", "v"}, {"v", "w"}, {"w", "u"}, {"w", "x"}});
    WPartition p = WPartition::fromSides(
        tt, {{tt.vertexId("u"), true}, {tt.vertexId("x"), true}},
        {{tt.vertexId("u"), false}, {tt.vertexId("x"), false}});
    BlowupComplex b = BlowupComplex::build(tt, PartitionFamily(tt, {p}));
    CHECK(b.cubeCountOfDim(3) > 0);
    CHECK(props::cubesMatchInductiveClosure(b));
}

TEST_CASE("terminal regions force sides of non-commuting members") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g), exampleR(g)}));
    Region td = b.terminalRegion(g.vertexId("d"));
    // d lies on side A of both worked partitions
    CHECK(td.sides == std::vector<uint8_t>{0, 0});
    CHECK(b.isTerminalRegion(g.vertexId("d"), td));
}

TEST_CASE("label order refines the class order of maxima") {
    DefiningGraph g = fixtures::pathABCplusD();
    BlowupComplex b = BlowupComplex::build(g, PartitionFamily(g, {exampleQ(g)}));
    auto order = b.labelsByPrec();
    // d before the a-class (a, Q0, c), b last
    CHECK(b.labelName(order.front()) == "d");
    CHECK(b.labelName(order.back()) == "b");
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        VertexId x = b.labelRep(order[i]), y = b.labelRep(order[i + 1]);
        CHECK(b.graph().totalOrderPos(x) <= b.graph().totalOrderPos(y));
    }
}
