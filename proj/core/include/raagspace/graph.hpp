#ifndef RAAGSPACE_GRAPH_HPP
#define RAAGSPACE_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "raagspace/errors.hpp"

namespace raagspace {

using VertexId = int;

/// Order-theoretic data attached to one vertex, bundled for reports.
struct VertexRelations {
    VertexId vertex = -1;
    std::vector<VertexId> link;
    std::vector<VertexId> star;
    std::vector<VertexId> leqF;       // all w with v <=_f w
    std::vector<VertexId> leqT;       // all w with v <=_t w
    std::vector<VertexId> foldClass;  // [v] under ~_f
    std::vector<VertexId> ul;         // lk^+(v) = UL(v)
    std::vector<VertexId> uf;         // UF(v), always contains v
    bool twistDominant = false;
};

/*
 * The defining graph of a right-angled Artin group: a finite simplicial
 * graph together with the vertex orderings derived from it.
 *
 * For vertices v, w we write
 *     v <=   w   when lk(v) is contained in st(w),
 *     v <=_f w   when lk(v) is contained in lk(w)   (fold order),
 *     v <=_t w   when st(v) is contained in st(w)   (twist order).
 * The last two are mutually exclusive unless v = w, and <= descends to a
 * partial order on the equivalence classes of mutually related vertices.
 * A vertex is twist-dominant when some other vertex sits strictly below it
 * in the twist order, and twist-minimal otherwise.
 *
 * Everything is recomputed deterministically from (vertices, edges); the
 * object is immutable after construction and safe to share across threads.
 */
class DefiningGraph {
public:
    DefiningGraph() = default;
    DefiningGraph(std::vector<std::string> vertexNames,
                  const std::vector<std::pair<std::string, std::string>>& edges);

    int vertexCount() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& vertexNames() const { return names_; }
    const std::string& vertexName(VertexId v) const { return names_.at(v); }
    VertexId vertexId(const std::string& name) const;  // semantic_error if unknown
    bool hasVertex(const std::string& name) const;

    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    bool adjacent(VertexId v, VertexId w) const;

    const std::vector<VertexId>& link(VertexId v) const;
    std::vector<VertexId> star(VertexId v) const;

    bool leqF(VertexId v, VertexId w) const;
    bool leqT(VertexId v, VertexId w) const;
    bool leq(VertexId v, VertexId w) const;

    bool twistDominant(VertexId v) const;
    std::vector<VertexId> twistDominantSet() const;

    std::vector<VertexId> ul(VertexId v) const;
    std::vector<VertexId> uf(VertexId v) const;

    /// Fold class [v] = vertices with the same link as v, sorted.
    std::vector<VertexId> foldClass(VertexId v) const;
    bool foldEquivalent(VertexId v, VertexId w) const;

    /// Index of the ~-class of v in the chosen linear extension of <=.
    int orderClassIndex(VertexId v) const;

    /// A deterministic total order on V consistent with <= on classes;
    /// ties inside a class follow the declared vertex order.
    const std::vector<VertexId>& totalOrder() const { return totalOrder_; }
    int totalOrderPos(VertexId v) const;

    VertexRelations relations(VertexId v) const;

private:
    void requireVertex(VertexId v) const;

    std::vector<std::string> names_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::vector<VertexId>> links_;
    std::vector<int> classIndex_;
    std::vector<VertexId> totalOrder_;
    std::vector<int> totalOrderPos_;
    std::vector<bool> twistDominant_;
};

} // namespace raagspace

#endif
