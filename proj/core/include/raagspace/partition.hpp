#ifndef RAAGSPACE_PARTITION_HPP
#define RAAGSPACE_PARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "raagspace/graph.hpp"

namespace raagspace {

/// A generator or its inverse.  Ordered by (vertex, sign), positive first.
struct SignedVertex {
    VertexId v = -1;
    bool positive = true;

    SignedVertex() = default;
    SignedVertex(VertexId vertex, bool pos) : v(vertex), positive(pos) {}
    SignedVertex inverse() const { return {v, !positive}; }
    std::strong_ordering operator<=>(const SignedVertex& o) const {
        if (auto c = v <=> o.v; c != 0) return c;
        return (positive ? 0 : 1) <=> (o.positive ? 0 : 1);
    }
    bool operator==(const SignedVertex& o) const { return v == o.v && positive == o.positive; }
};

/*
 * The doubled graph: one node per signed generator, with an edge between
 * distinct nodes whenever the underlying generators commute and the nodes
 * are not inverse to each other.  Removing the (signed) link of a vertex m
 * leaves m and its inverse isolated; the remaining connected components are
 * the m-components from which partitions based at m are assembled.
 */
class DoubledGraph {
public:
    explicit DoubledGraph(const DefiningGraph& g);

    int nodeCount() const { return 2 * n_; }
    static int node(SignedVertex s) { return 2 * s.v + (s.positive ? 0 : 1); }
    static SignedVertex signedVertex(int node) { return {node / 2, node % 2 == 0}; }
    bool adjacent(SignedVertex a, SignedVertex b) const;

    /// Connected components of the doubled graph minus lk(m)^±, excluding
    /// the singletons {m} and {m^-1}.  Each component is sorted; components
    /// are ordered by their least node.
    std::vector<std::vector<SignedVertex>> mComponents(VertexId m) const;

private:
    int n_;
    const DefiningGraph* g_;
};

/*
 * A Whitehead partition of the signed generators relative to the defining
 * graph: two thick sides plus the link of its base(s).  Stored in canonical
 * form -- sides sorted, and the side holding the earliest split vertex
 * (in the graph's total order) with positive sign is side A -- so equality
 * of partitions is plain equality of the stored data.
 */
class WPartition {
public:
    /// Canonicalize and validate a partition given by its two sides.
    /// Throws semantic_error when the data is not a Whitehead partition.
    static WPartition fromSides(const DefiningGraph& g,
                                std::vector<SignedVertex> sideA,
                                std::vector<SignedVertex> sideB);

    const std::vector<SignedVertex>& sideA() const { return sideA_; }
    const std::vector<SignedVertex>& sideB() const { return sideB_; }
    const std::vector<SignedVertex>& linkSet() const { return link_; }
    const std::vector<SignedVertex>& side(int which) const { return which == 0 ? sideA_ : sideB_; }

    /// Vertices split by the partition (v and v^-1 on different sides).
    const std::vector<VertexId>& sing() const { return sing_; }
    /// <=-maximal split vertices; these are exactly the admissible bases.
    const std::vector<VertexId>& maxSet() const { return max_; }
    const std::vector<VertexId>& bases() const { return max_; }

    bool splits(VertexId v) const;
    bool inLink(VertexId v) const;
    /// 0 if s lies in side A, 1 if in side B, -1 if in the link.
    int sideOf(SignedVertex s) const;
    /// The side containing the positive generator v (the "v-side").
    /// Requires that v is not in the link.
    int vertexSide(VertexId v) const;

    auto operator<=>(const WPartition&) const = default;

private:
    WPartition() = default;
    std::vector<SignedVertex> sideA_, sideB_, link_;
    std::vector<VertexId> sing_, max_;
};

/// P and Q commute: some pair of bases is adjacent in the graph.
bool commute(const DefiningGraph& g, const WPartition& p, const WPartition& q);
/// Compatible: equal, commuting, or having a disjoint pair of sides.
bool compatible(const DefiningGraph& g, const WPartition& p, const WPartition& q);
/// Chosen sides are consistent: the partitions commute or the sides meet.
bool consistentSides(const DefiningGraph& g, const WPartition& p, int sideP,
                     const WPartition& q, int sideQ);

enum class PartitionOrder { LessF, LessT, Equivalent, Incomparable };
PartitionOrder partitionOrder(const DefiningGraph& g, const WPartition& p, const WPartition& q);

/// All partitions based at m, canonical, sorted.
std::vector<WPartition> enumeratePartitions(const DefiningGraph& g, VertexId m);
/// All partitions of the graph, deduplicated across shared bases, sorted.
std::vector<WPartition> enumerateAllPartitions(const DefiningGraph& g);

/*
 * An ordered family of pairwise-compatible partitions.  The member order is
 * the family order used for labels elsewhere.
 */
class PartitionFamily {
public:
    PartitionFamily() = default;
    /// Validates pairwise compatibility and distinctness; the error message
    /// names the first offending pair of member indices.
    PartitionFamily(const DefiningGraph& g, std::vector<WPartition> members);

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    const WPartition& operator[](int i) const { return members_.at(i); }
    const std::vector<WPartition>& members() const { return members_; }

    /// Family with member i removed; the remaining order is preserved.
    PartitionFamily erased(const DefiningGraph& g, int i) const;

private:
    std::vector<WPartition> members_;
};

} // namespace raagspace

#endif
