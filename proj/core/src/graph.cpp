#include "raagspace/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace raagspace {

DefiningGraph::DefiningGraph(std::vector<std::string> vertexNames,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertexNames)) {
    const int n = static_cast<int>(names_.size());
    {
        std::set<std::string> seen;
        for (const auto& name : names_) {
            if (name.empty()) throw parse_error("empty vertex name");
            if (!seen.insert(name).second) throw parse_error("duplicate vertex name: " + name);
        }
    }
    adj_.assign(n, std::vector<bool>(n, false));
    std::set<std::pair<VertexId, VertexId>> seenEdges;
    for (const auto& [a, b] : edges) {
        if (!hasVertex(a)) throw parse_error("edge endpoint is not a declared vertex: " + a);
        if (!hasVertex(b)) throw parse_error("edge endpoint is not a declared vertex: " + b);
        VertexId va = vertexId(a), vb = vertexId(b);
        if (va == vb) throw parse_error("self-loop at vertex: " + a);
        auto key = std::minmax(va, vb);
        if (!seenEdges.insert({key.first, key.second}).second)
            throw parse_error("duplicate edge: " + a + "-" + b);
        adj_[va][vb] = adj_[vb][va] = true;
    }
    for (const auto& e : seenEdges) edges_.push_back(e);

    links_.resize(n);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w)
            if (adj_[v][w]) links_[v].push_back(w);

    twistDominant_.assign(n, false);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u = 0; u < n; ++u)
            if (u != v && leqT(u, v)) { twistDominant_[v] = true; break; }

    // Equivalence classes under mutual <=, then a linear extension of the
    // induced class order.  Ready classes are emitted smallest declared
    // vertex first, so the output is deterministic.
    std::vector<int> comp(n, -1);
    int nComp = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (comp[v] != -1) continue;
        comp[v] = nComp;
        for (VertexId w = v + 1; w < n; ++w)
            if (comp[w] == -1 && leq(v, w) && leq(w, v)) comp[w] = nComp;
        ++nComp;
    }
    std::vector<std::vector<VertexId>> members(nComp);
    for (VertexId v = 0; v < n; ++v) members[comp[v]].push_back(v);
    std::vector<std::set<int>> preds(nComp);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w)
            if (comp[v] != comp[w] && leq(v, w)) preds[comp[w]].insert(comp[v]);
    classIndex_.assign(n, -1);
    std::vector<bool> done(nComp, false);
    for (int rank = 0; rank < nComp; ++rank) {
        int pick = -1;
        for (int c = 0; c < nComp; ++c) {
            if (done[c]) continue;
            bool ready = true;
            for (int p : preds[c]) if (!done[p]) { ready = false; break; }
            if (!ready) continue;
            if (pick == -1 || members[c].front() < members[pick].front()) pick = c;
        }
        done[pick] = true;
        for (VertexId v : members[pick]) {
            classIndex_[v] = rank;
            totalOrder_.push_back(v);
        }
    }
    totalOrderPos_.assign(n, -1);
    for (int i = 0; i < n; ++i) totalOrderPos_[totalOrder_[i]] = i;
}

VertexId DefiningGraph::vertexId(const std::string& name) const {
    for (int i = 0; i < vertexCount(); ++i)
        if (names_[i] == name) return i;
    throw semantic_error("unknown vertex: " + name);
}

bool DefiningGraph::hasVertex(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool DefiningGraph::adjacent(VertexId v, VertexId w) const {
    requireVertex(v);
    requireVertex(w);
    return adj_[v][w];
}

const std::vector<VertexId>& DefiningGraph::link(VertexId v) const {
    requireVertex(v);
    return links_[v];
}

std::vector<VertexId> DefiningGraph::star(VertexId v) const {
    std::vector<VertexId> s = link(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
}

bool DefiningGraph::leqF(VertexId v, VertexId w) const {
    requireVertex(v);
    requireVertex(w);
    for (VertexId u : links_[v])
        if (!adj_[w][u]) return false;
    return true;
}

bool DefiningGraph::leqT(VertexId v, VertexId w) const {
    requireVertex(v);
    requireVertex(w);
    if (v != w && !adj_[w][v]) return false;
    for (VertexId u : links_[v])
        if (u != w && !adj_[w][u]) return false;
    return true;
}

bool DefiningGraph::leq(VertexId v, VertexId w) const {
    requireVertex(v);
    requireVertex(w);
    for (VertexId u : links_[v])
        if (u != w && !adj_[w][u]) return false;
    return true;
}

bool DefiningGraph::twistDominant(VertexId v) const {
    requireVertex(v);
    return twistDominant_[v];
}

std::vector<VertexId> DefiningGraph::twistDominantSet() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertexCount(); ++v)
        if (twistDominant_[v]) out.push_back(v);
    return out;
}

std::vector<VertexId> DefiningGraph::ul(VertexId v) const {
    requireVertex(v);
    std::vector<VertexId> out;
    for (VertexId u : links_[v])
        if (leq(v, u)) out.push_back(u);
    return out;
}

std::vector<VertexId> DefiningGraph::uf(VertexId v) const {
    requireVertex(v);
    std::vector<VertexId> out;
    for (VertexId u = 0; u < vertexCount(); ++u)
        if (!adj_[v][u] && leq(v, u)) out.push_back(u);
    return out;
}

std::vector<VertexId> DefiningGraph::foldClass(VertexId v) const {
    requireVertex(v);
    std::vector<VertexId> out;
    for (VertexId w = 0; w < vertexCount(); ++w)
        if (links_[w] == links_[v]) out.push_back(w);
    return out;
}

bool DefiningGraph::foldEquivalent(VertexId v, VertexId w) const {
    requireVertex(v);
    requireVertex(w);
    return links_[v] == links_[w];
}

int DefiningGraph::orderClassIndex(VertexId v) const {
    requireVertex(v);
    return classIndex_[v];
}

int DefiningGraph::totalOrderPos(VertexId v) const {
    requireVertex(v);
    return totalOrderPos_[v];
}

VertexRelations DefiningGraph::relations(VertexId v) const {
    requireVertex(v);
    VertexRelations r;
    r.vertex = v;
    r.link = link(v);
    r.star = star(v);
    for (VertexId w = 0; w < vertexCount(); ++w) {
        if (leqF(v, w)) r.leqF.push_back(w);
        if (leqT(v, w)) r.leqT.push_back(w);
    }
    r.foldClass = foldClass(v);
    r.ul = ul(v);
    r.uf = uf(v);
    r.twistDominant = twistDominant_[v];
    return r;
}

void DefiningGraph::requireVertex(VertexId v) const {
    if (v < 0 || v >= vertexCount()) throw semantic_error("vertex id out of range");
}

} // namespace raagspace
