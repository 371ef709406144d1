#ifndef RAAGSPACE_BLOWUP_HPP
#define RAAGSPACE_BLOWUP_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raagspace/graph.hpp"
#include "raagspace/partition.hpp"

namespace raagspace {

/// An edge label of a blowup: either a generator or a family member.
struct Label {
    enum class Kind { vertex, part };
    Kind kind = Kind::vertex;
    int index = -1;

    static Label vertexLabel(VertexId v) { return {Kind::vertex, v}; }
    static Label partLabel(int i) { return {Kind::part, i}; }
    bool isVertex() const { return kind == Kind::vertex; }
    auto operator<=>(const Label&) const = default;
};

/// A consistent choice of one side per family member; the vertices of a blowup.
struct Region {
    std::vector<uint8_t> sides;  // 0 = side A, 1 = side B
    auto operator<=>(const Region&) const = default;
};

struct BlowupEdge {
    int from = -1;
    int to = -1;
    Label label;
    bool oriented = false;  // only generator edges carry an orientation
};

/// A cube of dimension >= 2.  corners[mask] is the vertex reached from
/// corner 0 by flipping the directions in mask.  In direction j the edges
/// all carry labels[j]; for a generator label the edge runs from the
/// mask-1 corner to the mask-0 corner.
struct BlowupCube {
    std::vector<Label> labels;  // sorted, pairwise commuting
    std::vector<int> corners;   // size 2^dim
    int dim() const { return static_cast<int>(labels.size()); }
};

/// Reference to a cell of any dimension: 0 = vertex, 1 = edge, >= 2 = cube.
struct CubeRef {
    int dim = 0;
    int index = -1;
    auto operator<=>(const CubeRef&) const = default;
};

struct Hyperplane {
    Label label;
    std::vector<int> dualEdges;      // exactly the edges bearing the label
    std::vector<CubeRef> carrier;    // closure of the cells meeting the hyperplane
};

/// The loop made of one generator edge and one edge per family member
/// splitting the generator, crossing each such hyperplane exactly once.
struct CharacteristicCycle {
    VertexId vertex = -1;
    int startVertex = -1;        // a terminal region for the generator
    std::vector<int> edgeLoop;   // partition edges innermost-first, then the generator edge
};

/*
 * The blowup of the Salvetti complex along a compatible family of
 * Whitehead partitions: one vertex per region, an unoriented edge per
 * side-switch of a family member, an oriented edge per generator at each
 * of its terminal regions, and a cube wherever a set of pairwise-commuting
 * edge labels closes up.  The empty family gives the Salvetti complex
 * itself (one k-cube per k-clique).
 *
 * Construction is deterministic; the result is immutable and can be shared
 * freely.  At most one edge with a given label occurs at any vertex, which
 * several algorithms below rely on.
 */
class BlowupComplex {
public:
    static BlowupComplex salvetti(const DefiningGraph& g);
    static BlowupComplex build(const DefiningGraph& g, PartitionFamily family,
                               long regionCap = kDefaultRegionCap);

    static constexpr long kDefaultRegionCap = 10000;

    const DefiningGraph& graph() const { return graph_; }
    const PartitionFamily& family() const { return family_; }

    int vertexCount() const { return static_cast<int>(regions_.size()); }
    const std::vector<Region>& regions() const { return regions_; }
    const std::vector<BlowupEdge>& edges() const { return edges_; }
    const std::vector<BlowupCube>& cubes() const { return cubes_; }

    /// All labels, generator labels first (declared order), then members.
    std::vector<Label> labels() const;
    std::string labelName(Label l) const;
    Label labelFromName(const std::string& name) const;

    /// Maximal split vertices of the label (a single vertex for generators).
    const std::vector<VertexId>& labelMax(Label l) const;
    /// Representative of labelMax, the earliest in the graph's total order.
    VertexId labelRep(Label l) const;
    bool labelsCommute(Label a, Label b) const;
    bool labelSplits(Label l, VertexId v) const;
    /// Total order on labels refining the class order of their maxima.
    bool labelPrec(Label a, Label b) const;
    std::vector<Label> labelsByPrec() const;

    /// Unique edge with the given label at a vertex, or -1.
    int edgeAt(int vertex, Label l) const;
    std::vector<int> edgesAt(int vertex) const;
    /// Cube lookup by label set and corner set, or -1.
    int cubeIndex(const std::vector<Label>& labels, const std::vector<int>& cornerSet) const;

    long eulerCharacteristic() const;
    int cubeCountOfDim(int dim) const;

    bool isTerminalRegion(VertexId v, const Region& r) const;
    /// Deterministic terminal region: forced sides for every member not
    /// commuting with v, the rest extended greedily (side A first).
    Region terminalRegion(VertexId v) const;
    std::optional<int> regionIndex(const Region& r) const;

    const std::vector<Hyperplane>& hyperplanes() const;
    const Hyperplane& hyperplane(Label l) const;

    /// Cells of the subcomplex whose edge labels all lie in the family.
    std::vector<CubeRef> eSubcomplex() const;

    /// Unique maximal cube with exactly the given commuting label set.
    /// Throws when the labels do not commute or the set is not maximal.
    CubeRef maxCubeFor(std::vector<Label> want) const;

    CharacteristicCycle characteristicCycle(VertexId v) const;
    CharacteristicCycle characteristicCycle(VertexId v, const Region& start) const;

    /// Collapse the carrier of the hyperplane of family member i onto the
    /// hyperplane.  The result is the quotient complex over the family
    /// without member i (later member labels shift down by one).
    struct BlowupCollapse collapse(int familyIndex) const;

    /// Label-preserving isomorphism of labeled cube complexes.
    bool isomorphicTo(const BlowupComplex& other) const;

    /// All corner cells of a cube: face lookup helpers used by carrier,
    /// collapse and the cyclicity test.
    std::vector<int> cubeCornerSet(int cubeIdx) const;
    /// Edge of cube `c` in direction `dir` at the corner `mask` (bit dir ignored).
    int cubeEdge(int cubeIdx, int dir, unsigned mask) const;
    /// Facet of a cube across direction dir on the given side: an edge id
    /// (dim 2) or a cube id (dim >= 3).
    CubeRef cubeFacet(int cubeIdx, int dir, int side) const;

private:
    BlowupComplex() = default;
    void finalize();

    DefiningGraph graph_;
    PartitionFamily family_;
    std::vector<Region> regions_;
    std::vector<BlowupEdge> edges_;
    std::vector<BlowupCube> cubes_;

    std::map<Region, int> regionIndex_;
    std::map<std::pair<int, Label>, int> edgeAt_;
    std::map<std::pair<std::vector<Label>, std::vector<int>>, int> cubeIndex_;
    std::vector<std::vector<VertexId>> vertexLabelMax_;
    std::vector<std::vector<VertexId>> partLabelMax_;
    mutable std::vector<Hyperplane> hyperplanes_;  // built lazily, complex is logically const
    mutable bool hyperplanesBuilt_ = false;

    friend struct BlowupBuilder;
};

struct BlowupCollapse {
    BlowupComplex complex;
    std::vector<int> vertexMap;  // old vertex index -> new vertex index
};

std::vector<Region> enumerateRegions(const DefiningGraph& g, const PartitionFamily& family,
                                     long cap = BlowupComplex::kDefaultRegionCap);

} // namespace raagspace

#endif
