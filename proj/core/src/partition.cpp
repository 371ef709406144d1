#include "raagspace/partition.hpp"

#include <algorithm>
#include <set>

namespace raagspace {

namespace {

bool sortedContains(const std::vector<SignedVertex>& xs, SignedVertex s) {
    return std::binary_search(xs.begin(), xs.end(), s);
}

bool sortedDisjoint(const std::vector<SignedVertex>& a, const std::vector<SignedVertex>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return false;
    }
    return true;
}

std::vector<SignedVertex> signedLink(const DefiningGraph& g, VertexId m) {
    std::vector<SignedVertex> out;
    for (VertexId u : g.link(m)) {
        out.emplace_back(u, true);
        out.emplace_back(u, false);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

DoubledGraph::DoubledGraph(const DefiningGraph& g) : n_(g.vertexCount()), g_(&g) {}

bool DoubledGraph::adjacent(SignedVertex a, SignedVertex b) const {
    if (a.v == b.v) return false;  // equal or inverse generators never commute here
    return g_->adjacent(a.v, b.v);
}

std::vector<std::vector<SignedVertex>> DoubledGraph::mComponents(VertexId m) const {
    if (m < 0 || m >= n_) throw semantic_error("unknown vertex id in mComponents");
    std::vector<bool> removed(nodeCount(), false);
    for (VertexId u : g_->link(m)) {
        removed[node({u, true})] = true;
        removed[node({u, false})] = true;
    }
    std::vector<bool> seen(nodeCount(), false);
    seen[node({m, true})] = seen[node({m, false})] = true;
    std::vector<std::vector<SignedVertex>> comps;
    for (int start = 0; start < nodeCount(); ++start) {
        if (removed[start] || seen[start]) continue;
        std::vector<SignedVertex> comp;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int cur = stack.back();
            stack.pop_back();
            comp.push_back(signedVertex(cur));
            for (int nb = 0; nb < nodeCount(); ++nb) {
                if (removed[nb] || seen[nb]) continue;
                if (adjacent(signedVertex(cur), signedVertex(nb))) {
                    seen[nb] = true;
                    stack.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

WPartition WPartition::fromSides(const DefiningGraph& g,
                                 std::vector<SignedVertex> sideA,
                                 std::vector<SignedVertex> sideB) {
    const int n = g.vertexCount();
    auto validate = [&](const std::vector<SignedVertex>& xs) {
        for (SignedVertex s : xs)
            if (s.v < 0 || s.v >= n) throw semantic_error("partition side mentions an unknown vertex");
    };
    validate(sideA);
    validate(sideB);
    std::sort(sideA.begin(), sideA.end());
    std::sort(sideB.begin(), sideB.end());
    if (std::adjacent_find(sideA.begin(), sideA.end()) != sideA.end() ||
        std::adjacent_find(sideB.begin(), sideB.end()) != sideB.end())
        throw semantic_error("partition side contains a repeated generator");
    if (!sortedDisjoint(sideA, sideB)) throw semantic_error("partition sides are not disjoint");
    if (sideA.size() < 2 || sideB.size() < 2) throw semantic_error("partition is not thick");

    WPartition p;
    p.sideA_ = std::move(sideA);
    p.sideB_ = std::move(sideB);
    for (VertexId v = 0; v < n; ++v) {
        for (bool sign : {true, false}) {
            SignedVertex s{v, sign};
            if (!sortedContains(p.sideA_, s) && !sortedContains(p.sideB_, s)) p.link_.push_back(s);
        }
    }
    std::sort(p.link_.begin(), p.link_.end());
    for (VertexId v = 0; v < n; ++v) {
        bool posLink = sortedContains(p.link_, {v, true});
        bool negLink = sortedContains(p.link_, {v, false});
        if (posLink != negLink)
            throw semantic_error("partition link is not closed under inverses at vertex " + g.vertexName(v));
        if (posLink) continue;
        if (p.sideOf({v, true}) != p.sideOf({v, false})) p.sing_.push_back(v);
    }
    if (p.sing_.empty()) throw semantic_error("partition splits no vertex");
    for (VertexId v : p.sing_) {
        bool maximal = true;
        for (VertexId w : p.sing_)
            if (w != v && g.leq(v, w) && !g.leq(w, v)) { maximal = false; break; }
        if (maximal) p.max_.push_back(v);
    }

    // A valid base must exist among the maximal split vertices.
    DoubledGraph dbl(g);
    bool hasBase = false;
    for (VertexId m : p.max_) {
        if (p.linkSet() != signedLink(g, m)) continue;
        bool ok = true;
        for (const auto& comp : dbl.mComponents(m)) {
            int side = p.sideOf(comp.front());
            if (side < 0) { ok = false; break; }
            for (SignedVertex s : comp)
                if (p.sideOf(s) != side) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) { hasBase = true; break; }
    }
    if (!hasBase) throw semantic_error("partition has no admissible base");

    VertexId least = p.sing_.front();
    for (VertexId v : p.sing_)
        if (g.totalOrderPos(v) < g.totalOrderPos(least)) least = v;
    if (p.sideOf({least, true}) == 1) std::swap(p.sideA_, p.sideB_);
    return p;
}

bool WPartition::splits(VertexId v) const {
    return std::binary_search(sing_.begin(), sing_.end(), v);
}

bool WPartition::inLink(VertexId v) const {
    return sortedContains(link_, {v, true});
}

int WPartition::sideOf(SignedVertex s) const {
    if (sortedContains(sideA_, s)) return 0;
    if (sortedContains(sideB_, s)) return 1;
    return -1;
}

int WPartition::vertexSide(VertexId v) const {
    int side = sideOf({v, true});
    if (side < 0) throw semantic_error("vertexSide: vertex lies in the partition link");
    return side;
}

bool commute(const DefiningGraph& g, const WPartition& p, const WPartition& q) {
    for (VertexId v : p.maxSet())
        for (VertexId w : q.maxSet())
            if (g.adjacent(v, w)) return true;
    return false;
}

bool compatible(const DefiningGraph& g, const WPartition& p, const WPartition& q) {
    if (p == q) return true;
    if (commute(g, p, q)) return true;
    for (int sp : {0, 1})
        for (int sq : {0, 1})
            if (sortedDisjoint(p.side(sp), q.side(sq))) return true;
    return false;
}

bool consistentSides(const DefiningGraph& g, const WPartition& p, int sideP,
                     const WPartition& q, int sideQ) {
    if (commute(g, p, q)) return true;
    return !sortedDisjoint(p.side(sideP), q.side(sideQ));
}

PartitionOrder partitionOrder(const DefiningGraph& g, const WPartition& p, const WPartition& q) {
    VertexId v = p.maxSet().front();
    VertexId w = q.maxSet().front();
    if (g.leq(v, w) && g.leq(w, v)) return PartitionOrder::Equivalent;
    if (g.leqF(v, w)) return PartitionOrder::LessF;
    if (g.leqT(v, w)) return PartitionOrder::LessT;
    return PartitionOrder::Incomparable;
}

std::vector<WPartition> enumeratePartitions(const DefiningGraph& g, VertexId m) {
    if (m < 0 || m >= g.vertexCount()) throw semantic_error("unknown vertex id in enumeratePartitions");
    DoubledGraph dbl(g);
    auto comps = dbl.mComponents(m);
    const int k = static_cast<int>(comps.size());
    std::vector<WPartition> out;
    // every proper nonempty set of m-components gives one side
    for (unsigned mask = 1; k > 0 && mask + 1 < (1u << k); ++mask) {
        std::vector<SignedVertex> a{{m, true}}, b{{m, false}};
        for (int i = 0; i < k; ++i) {
            auto& dst = (mask >> i) & 1u ? a : b;
            dst.insert(dst.end(), comps[i].begin(), comps[i].end());
        }
        out.push_back(WPartition::fromSides(g, std::move(a), std::move(b)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<WPartition> enumerateAllPartitions(const DefiningGraph& g) {
    std::vector<WPartition> out;
    for (VertexId m = 0; m < g.vertexCount(); ++m) {
        auto part = enumeratePartitions(g, m);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PartitionFamily::PartitionFamily(const DefiningGraph& g, std::vector<WPartition> members)
    : members_(std::move(members)) {
    for (size_t i = 0; i < members_.size(); ++i) {
        for (size_t j = i + 1; j < members_.size(); ++j) {
            if (members_[i] == members_[j])
                throw semantic_error("family members " + std::to_string(i) + " and " +
                                     std::to_string(j) + " coincide");
            if (!compatible(g, members_[i], members_[j]))
                throw semantic_error("family members " + std::to_string(i) + " and " +
                                     std::to_string(j) + " are incompatible");
        }
    }
}

PartitionFamily PartitionFamily::erased(const DefiningGraph& g, int i) const {
    if (i < 0 || i >= size()) throw semantic_error("family index out of range");
    std::vector<WPartition> rest;
    for (int j = 0; j < size(); ++j)
        if (j != i) rest.push_back(members_[j]);
    return PartitionFamily(g, std::move(rest));
}

} // namespace raagspace
