#include "raagspace/blowup.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace raagspace {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

bool properSubset(const std::vector<SignedVertex>& a, const std::vector<SignedVertex>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

std::vector<Region> enumerateRegions(const DefiningGraph& g, const PartitionFamily& family, long cap) {
    if (cap <= 0) throw semantic_error("region cap must be positive");
    const int k = family.size();
    // consistentPair[i][j][si][sj], valid for i != j
    std::vector<std::vector<std::array<std::array<bool, 2>, 2>>> cons(
        k, std::vector<std::array<std::array<bool, 2>, 2>>(k));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            for (int si = 0; si < 2; ++si)
                for (int sj = 0; sj < 2; ++sj)
                    cons[i][j][si][sj] = consistentSides(g, family[i], si, family[j], sj);
        }
    }
    std::vector<Region> out;
    Region cur;
    cur.sides.assign(k, 0);
    // iterative lexicographic backtracking
    auto emit = [&](const Region& r) {
        if (static_cast<long>(out.size()) >= cap)
            throw cap_error("region enumeration exceeded cap of " + std::to_string(cap));
        out.push_back(r);
    };
    if (k == 0) {
        emit(cur);
        return out;
    }
    std::vector<int> choice(k, -1);
    int depth = 0;
    while (depth >= 0) {
        if (choice[depth] == 1) {
            choice[depth] = -1;
            --depth;
            continue;
        }
        ++choice[depth];
        cur.sides[depth] = static_cast<uint8_t>(choice[depth]);
        bool ok = true;
        for (int j = 0; j < depth; ++j)
            if (!cons[depth][j][choice[depth]][cur.sides[j]]) { ok = false; break; }
        if (!ok) continue;
        if (depth == k - 1) {
            emit(cur);
        } else {
            ++depth;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BlowupComplex BlowupComplex::salvetti(const DefiningGraph& g) {
    return build(g, PartitionFamily(), kDefaultRegionCap);
}

BlowupComplex BlowupComplex::build(const DefiningGraph& g, PartitionFamily family, long regionCap) {
    // revalidate compatibility in case the family was default-constructed piecemeal
    PartitionFamily checked(g, family.members());
    BlowupComplex b;
    b.graph_ = g;
    b.family_ = std::move(checked);
    b.regions_ = enumerateRegions(g, b.family_, regionCap);
    for (int i = 0; i < static_cast<int>(b.regions_.size()); ++i) b.regionIndex_[b.regions_[i]] = i;

    const int n = g.vertexCount();
    const int k = b.family_.size();
    const int R = b.vertexCount();

    // per-generator relation to each family member
    std::vector<std::vector<bool>> vcomm(n, std::vector<bool>(k, false));
    std::vector<std::vector<int>> vside(n, std::vector<int>(k, -1));
    std::vector<std::vector<int>> vsplits(n);
    for (VertexId v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            if (b.family_[i].inLink(v)) {
                vcomm[v][i] = true;
            } else {
                vside[v][i] = b.family_[i].vertexSide(v);
                if (b.family_[i].splits(v)) vsplits[v].push_back(i);
            }
        }
    }
    auto terminal = [&](VertexId v, const Region& r) {
        for (int i = 0; i < k; ++i)
            if (!vcomm[v][i] && r.sides[i] != vside[v][i]) return false;
        return true;
    };
    auto flipRegion = [&](Region r, const std::vector<int>& which) {
        for (int i : which) r.sides[i] ^= 1;
        return r;
    };

    // edges labeled by family members
    for (int i = 0; i < k; ++i) {
        std::vector<int> one{i};
        for (int r = 0; r < R; ++r) {
            auto it = b.regionIndex_.find(flipRegion(b.regions_[r], one));
            if (it == b.regionIndex_.end() || it->second < r) continue;
            b.edges_.push_back({r, it->second, Label::partLabel(i), false});
        }
    }
    // edges labeled by generators, one per terminal region
    for (VertexId v = 0; v < n; ++v) {
        for (int r = 0; r < R; ++r) {
            if (!terminal(v, b.regions_[r])) continue;
            auto it = b.regionIndex_.find(flipRegion(b.regions_[r], vsplits[v]));
            if (it == b.regionIndex_.end())
                throw semantic_error("switched terminal region is not consistent (invariant violation)");
            b.edges_.push_back({it->second, r, Label::vertexLabel(v), true});
        }
    }

    // label commutation via maxima
    b.vertexLabelMax_.resize(n);
    for (VertexId v = 0; v < n; ++v) b.vertexLabelMax_[v] = {v};
    b.partLabelMax_.resize(k);
    for (int i = 0; i < k; ++i) b.partLabelMax_[i] = b.family_[i].maxSet();

    std::vector<Label> all = [&] {
        std::vector<Label> ls;
        for (VertexId v = 0; v < n; ++v) ls.push_back(Label::vertexLabel(v));
        for (int i = 0; i < k; ++i) ls.push_back(Label::partLabel(i));
        return ls;
    }();
    const int L = static_cast<int>(all.size());
    std::vector<std::vector<bool>> lcomm(L, std::vector<bool>(L, false));
    for (int a = 0; a < L; ++a)
        for (int c = a + 1; c < L; ++c) {
            bool comm = false;
            for (VertexId x : b.labelMax(all[a])) {
                for (VertexId y : b.labelMax(all[c]))
                    if (g.adjacent(x, y)) { comm = true; break; }
                if (comm) break;
            }
            lcomm[a][c] = lcomm[c][a] = comm;
        }

    // precompute which regions are terminal per generator
    std::vector<std::vector<bool>> isTerm(n, std::vector<bool>(R, false));
    for (VertexId v = 0; v < n; ++v)
        for (int r = 0; r < R; ++r) isTerm[v][r] = terminal(v, b.regions_[r]);

    // cubes: a pairwise-commuting label set spans a cube at a region exactly
    // when the region is terminal for every generator label, and all corner
    // side-switches land on consistent regions
    std::set<std::pair<std::vector<Label>, std::vector<int>>> seen;
    std::vector<int> clique;
    auto tryClique = [&](const std::vector<int>& cliqueIdx) {
        std::vector<Label> labels;
        std::vector<std::vector<int>> flips;
        std::vector<VertexId> gens;
        for (int li : cliqueIdx) {
            Label lab = all[li];
            labels.push_back(lab);
            if (lab.isVertex()) {
                flips.push_back(vsplits[lab.index]);
                gens.push_back(lab.index);
            } else {
                flips.push_back({lab.index});
            }
        }
        const int dim = static_cast<int>(labels.size());
        for (int r = 0; r < R; ++r) {
            bool baseOk = true;
            for (VertexId v : gens)
                if (!isTerm[v][r]) { baseOk = false; break; }
            if (!baseOk) continue;
            std::vector<int> corners(1u << dim, -1);
            bool ok = true;
            for (unsigned mask = 0; mask < (1u << dim) && ok; ++mask) {
                Region c = b.regions_[r];
                for (int d = 0; d < dim; ++d)
                    if ((mask >> d) & 1u)
                        for (int i : flips[d]) c.sides[i] ^= 1;
                auto it = b.regionIndex_.find(c);
                if (it == b.regionIndex_.end()) ok = false;
                else corners[mask] = it->second;
            }
            if (!ok) continue;
            std::vector<int> cset(corners);
            std::sort(cset.begin(), cset.end());
            cset.erase(std::unique(cset.begin(), cset.end()), cset.end());
            if (seen.insert({labels, cset}).second)
                b.cubes_.push_back({labels, corners});
        }
    };
    std::vector<int> stack;
    auto extend = [&](auto&& self, int start) -> void {
        if (stack.size() >= 2) tryClique(stack);
        for (int nxt = start; nxt < L; ++nxt) {
            bool ok = true;
            for (int s : stack)
                if (!lcomm[s][nxt]) { ok = false; break; }
            if (!ok) continue;
            stack.push_back(nxt);
            self(self, nxt + 1);
            stack.pop_back();
        }
    };
    extend(extend, 0);

    b.finalize();
    return b;
}

void BlowupComplex::finalize() {
    auto labelOrder = [](const Label& a, const Label& b) { return a < b; };
    std::sort(edges_.begin(), edges_.end(), [&](const BlowupEdge& a, const BlowupEdge& c) {
        if (a.label != c.label) return labelOrder(a.label, c.label);
        if (a.from != c.from) return a.from < c.from;
        return a.to < c.to;
    });
    std::sort(cubes_.begin(), cubes_.end(), [](const BlowupCube& a, const BlowupCube& c) {
        if (a.dim() != c.dim()) return a.dim() < c.dim();
        if (a.labels != c.labels) return a.labels < c.labels;
        return a.corners < c.corners;
    });
    regionIndex_.clear();
    for (int i = 0; i < vertexCount(); ++i) regionIndex_[regions_[i]] = i;
    edgeAt_.clear();
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        for (int endpoint : {edges_[e].from, edges_[e].to}) {
            auto key = std::make_pair(endpoint, edges_[e].label);
            auto [it, inserted] = edgeAt_.insert({key, e});
            if (!inserted && it->second != e)
                throw semantic_error("two edges with one label at a vertex (invariant violation)");
        }
    }
    cubeIndex_.clear();
    for (int c = 0; c < static_cast<int>(cubes_.size()); ++c)
        cubeIndex_[{cubes_[c].labels, cubeCornerSet(c)}] = c;
    hyperplanes_.clear();
    hyperplanesBuilt_ = false;
    hyperplanes();  // built here so the finished complex is read-only
}

std::vector<Label> BlowupComplex::labels() const {
    std::vector<Label> out;
    for (VertexId v = 0; v < graph_.vertexCount(); ++v) out.push_back(Label::vertexLabel(v));
    for (int i = 0; i < family_.size(); ++i) out.push_back(Label::partLabel(i));
    return out;
}

std::string BlowupComplex::labelName(Label l) const {
    if (l.isVertex()) return graph_.vertexName(l.index);
    return "Q" + std::to_string(l.index);
}

Label BlowupComplex::labelFromName(const std::string& name) const {
    if (name.size() >= 2 && name[0] == 'Q' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int i = std::stoi(name.substr(1));
        if (i < 0 || i >= family_.size()) throw semantic_error("unknown partition label: " + name);
        return Label::partLabel(i);
    }
    return Label::vertexLabel(graph_.vertexId(name));
}

const std::vector<VertexId>& BlowupComplex::labelMax(Label l) const {
    if (l.isVertex()) return vertexLabelMax_.at(l.index);
    return partLabelMax_.at(l.index);
}

VertexId BlowupComplex::labelRep(Label l) const {
    const auto& m = labelMax(l);
    VertexId best = m.front();
    for (VertexId v : m)
        if (graph_.totalOrderPos(v) < graph_.totalOrderPos(best)) best = v;
    return best;
}

bool BlowupComplex::labelsCommute(Label a, Label b) const {
    for (VertexId x : labelMax(a))
        for (VertexId y : labelMax(b))
            if (graph_.adjacent(x, y)) return true;
    return false;
}

bool BlowupComplex::labelSplits(Label l, VertexId v) const {
    if (l.isVertex()) return l.index == v;
    return family_[l.index].splits(v);
}

bool BlowupComplex::labelPrec(Label a, Label b) const {
    int pa = graph_.totalOrderPos(labelRep(a));
    int pb = graph_.totalOrderPos(labelRep(b));
    if (pa != pb) return pa < pb;
    if (a.kind != b.kind) return a.kind == Label::Kind::vertex;
    return a.index < b.index;
}

std::vector<Label> BlowupComplex::labelsByPrec() const {
    std::vector<Label> ls = labels();
    std::sort(ls.begin(), ls.end(), [&](Label a, Label b) { return labelPrec(a, b); });
    return ls;
}

int BlowupComplex::edgeAt(int vertex, Label l) const {
    auto it = edgeAt_.find({vertex, l});
    return it == edgeAt_.end() ? -1 : it->second;
}

std::vector<int> BlowupComplex::edgesAt(int vertex) const {
    std::vector<int> out;
    for (auto it = edgeAt_.lower_bound({vertex, Label{Label::Kind::vertex, -1}});
         it != edgeAt_.end() && it->first.first == vertex; ++it)
        out.push_back(it->second);
    return out;
}

int BlowupComplex::cubeIndex(const std::vector<Label>& labels, const std::vector<int>& cornerSet) const {
    auto it = cubeIndex_.find({labels, cornerSet});
    return it == cubeIndex_.end() ? -1 : it->second;
}

long BlowupComplex::eulerCharacteristic() const {
    long chi = vertexCount() - static_cast<long>(edges_.size());
    for (const auto& c : cubes_) chi += (c.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

int BlowupComplex::cubeCountOfDim(int dim) const {
    if (dim == 0) return vertexCount();
    if (dim == 1) return static_cast<int>(edges_.size());
    int count = 0;
    for (const auto& c : cubes_)
        if (c.dim() == dim) ++count;
    return count;
}

bool BlowupComplex::isTerminalRegion(VertexId v, const Region& r) const {
    if (static_cast<int>(r.sides.size()) != family_.size())
        throw semantic_error("region has the wrong number of sides");
    for (int i = 0; i < family_.size(); ++i) {
        if (family_[i].inLink(v)) continue;
        if (r.sides[i] != family_[i].vertexSide(v)) return false;
    }
    return true;
}

Region BlowupComplex::terminalRegion(VertexId v) const {
    const int k = family_.size();
    Region r;
    r.sides.assign(k, 0);
    std::vector<bool> fixed(k, false);
    for (int i = 0; i < k; ++i) {
        if (!family_[i].inLink(v)) {
            fixed[i] = true;
            r.sides[i] = static_cast<uint8_t>(family_[i].vertexSide(v));
        }
    }
    std::vector<int> free;
    for (int i = 0; i < k; ++i)
        if (!fixed[i]) free.push_back(i);
    auto consistentSoFar = [&](int idx, int upTo) {
        for (int j = 0; j < k; ++j) {
            if (j == idx) continue;
            bool decided = fixed[j];
            for (int t = 0; t < upTo && !decided; ++t) decided = (free[t] == j);
            if (!decided) continue;
            if (!consistentSides(graph_, family_[idx], r.sides[idx], family_[j], r.sides[j]))
                return false;
        }
        return true;
    };
    // the fixed sides are pairwise consistent; extend greedily, side A first
    auto rec = [&](auto&& self, int pos) -> bool {
        if (pos == static_cast<int>(free.size())) return true;
        for (int s : {0, 1}) {
            r.sides[free[pos]] = static_cast<uint8_t>(s);
            if (consistentSoFar(free[pos], pos) && self(self, pos + 1)) return true;
        }
        return false;
    };
    if (!rec(rec, 0)) throw semantic_error("no terminal region exists (invariant violation)");
    if (!regionIndex_.count(r)) throw semantic_error("terminal region not found among regions");
    return r;
}

std::optional<int> BlowupComplex::regionIndex(const Region& r) const {
    auto it = regionIndex_.find(r);
    if (it == regionIndex_.end()) return std::nullopt;
    return it->second;
}

const std::vector<Hyperplane>& BlowupComplex::hyperplanes() const {
    if (hyperplanesBuilt_) return hyperplanes_;
    for (Label l : labels()) {
        Hyperplane h;
        h.label = l;
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
            if (edges_[e].label == l) h.dualEdges.push_back(e);
        if (h.dualEdges.empty()) continue;  // only labels that occur
        std::set<CubeRef> closure;
        std::vector<CubeRef> work;
        for (int e : h.dualEdges) work.push_back({1, e});
        for (int c = 0; c < static_cast<int>(cubes_.size()); ++c)
            if (std::binary_search(cubes_[c].labels.begin(), cubes_[c].labels.end(), l))
                work.push_back({cubes_[c].dim(), c});
        while (!work.empty()) {
            CubeRef cur = work.back();
            work.pop_back();
            if (!closure.insert(cur).second) continue;
            if (cur.dim == 0) continue;
            if (cur.dim == 1) {
                work.push_back({0, edges_[cur.index].from});
                work.push_back({0, edges_[cur.index].to});
                continue;
            }
            for (int d = 0; d < cur.dim; ++d)
                for (int side = 0; side < 2; ++side) work.push_back(cubeFacet(cur.index, d, side));
        }
        h.carrier.assign(closure.begin(), closure.end());
        hyperplanes_.push_back(std::move(h));
    }
    hyperplanesBuilt_ = true;
    return hyperplanes_;
}

const Hyperplane& BlowupComplex::hyperplane(Label l) const {
    for (const auto& h : hyperplanes())
        if (h.label == l) return h;
    throw semantic_error("no hyperplane with the requested label");
}

std::vector<CubeRef> BlowupComplex::eSubcomplex() const {
    std::vector<CubeRef> out;
    for (int v = 0; v < vertexCount(); ++v) out.push_back({0, v});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (!edges_[e].label.isVertex()) out.push_back({1, e});
    for (int c = 0; c < static_cast<int>(cubes_.size()); ++c) {
        bool allPart = true;
        for (Label l : cubes_[c].labels)
            if (l.isVertex()) { allPart = false; break; }
        if (allPart) out.push_back({cubes_[c].dim(), c});
    }
    return out;
}

CubeRef BlowupComplex::maxCubeFor(std::vector<Label> want) const {
    if (want.empty()) throw semantic_error("empty label set");
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    for (size_t i = 0; i < want.size(); ++i)
        for (size_t j = i + 1; j < want.size(); ++j)
            if (!labelsCommute(want[i], want[j]))
                throw semantic_error("labels " + labelName(want[i]) + " and " + labelName(want[j]) +
                                     " do not commute");
    for (Label l : labels()) {
        if (std::binary_search(want.begin(), want.end(), l)) continue;
        bool commutesAll = true;
        for (Label w : want)
            if (!labelsCommute(l, w)) { commutesAll = false; break; }
        if (commutesAll)
            throw semantic_error("label set is not maximal: " + labelName(l) + " commutes with all");
    }
    std::vector<CubeRef> found;
    if (want.size() == 1) {
        for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
            if (edges_[e].label == want.front()) found.push_back({1, e});
    } else {
        for (int c = 0; c < static_cast<int>(cubes_.size()); ++c)
            if (cubes_[c].labels == want) found.push_back({cubes_[c].dim(), c});
    }
    if (found.size() != 1)
        throw semantic_error("expected a unique maximal cube, found " + std::to_string(found.size()));
    return found.front();
}

CharacteristicCycle BlowupComplex::characteristicCycle(VertexId v) const {
    return characteristicCycle(v, terminalRegion(v));
}

CharacteristicCycle BlowupComplex::characteristicCycle(VertexId v, const Region& start) const {
    if (v < 0 || v >= graph_.vertexCount()) throw semantic_error("unknown vertex id");
    if (!isTerminalRegion(v, start))
        throw semantic_error("start region is not terminal for " + graph_.vertexName(v));
    auto startIdx = regionIndex(start);
    if (!startIdx) throw semantic_error("start region is not a region of this blowup");

    std::vector<int> remaining;
    for (int i = 0; i < family_.size(); ++i)
        if (family_[i].splits(v)) remaining.push_back(i);

    CharacteristicCycle cyc;
    cyc.vertex = v;
    cyc.startVertex = *startIdx;
    auto vSideSet = [&](int i) -> const std::vector<SignedVertex>& {
        return family_[i].side(family_[i].vertexSide(v));
    };
    Region cur = start;
    int curIdx = *startIdx;
    while (!remaining.empty()) {
        // innermost members: the v-side contains no other remaining v-side
        int pick = -1;
        for (int i : remaining) {
            bool innermost = true;
            for (int j : remaining)
                if (j != i && properSubset(vSideSet(j), vSideSet(i))) { innermost = false; break; }
            if (!innermost) continue;
            if (pick == -1 || labelPrec(Label::partLabel(i), Label::partLabel(pick))) pick = i;
        }
        if (pick == -1) throw semantic_error("no innermost member (invariant violation)");
        int e = edgeAt(curIdx, Label::partLabel(pick));
        if (e < 0) throw semantic_error("missing nest edge (invariant violation)");
        cyc.edgeLoop.push_back(e);
        cur.sides[pick] ^= 1;
        auto next = regionIndex(cur);
        if (!next || (edges_[e].from != curIdx && edges_[e].to != curIdx))
            throw semantic_error("nest edge mismatch (invariant violation)");
        curIdx = *next;
        remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
    }
    int ev = edgeAt(*startIdx, Label::vertexLabel(v));
    if (ev < 0 || edges_[ev].from != curIdx || edges_[ev].to != *startIdx)
        throw semantic_error("generator edge does not close the cycle (invariant violation)");
    cyc.edgeLoop.push_back(ev);
    return cyc;
}

std::vector<int> BlowupComplex::cubeCornerSet(int cubeIdx) const {
    std::vector<int> cset = cubes_.at(cubeIdx).corners;
    std::sort(cset.begin(), cset.end());
    cset.erase(std::unique(cset.begin(), cset.end()), cset.end());
    return cset;
}

int BlowupComplex::cubeEdge(int cubeIdx, int dir, unsigned mask) const {
    const BlowupCube& c = cubes_.at(cubeIdx);
    unsigned m0 = mask & ~(1u << dir);
    int e = edgeAt(c.corners[m0], c.labels[dir]);
    if (e < 0) throw semantic_error("cube edge missing (invariant violation)");
    return e;
}

CubeRef BlowupComplex::cubeFacet(int cubeIdx, int dir, int side) const {
    const BlowupCube& c = cubes_.at(cubeIdx);
    const int dim = c.dim();
    if (dim == 2) {
        int other = 1 - dir;
        unsigned mask = side ? (1u << dir) : 0u;
        return {1, cubeEdge(cubeIdx, other, mask)};
    }
    std::vector<Label> labels;
    for (int d = 0; d < dim; ++d)
        if (d != dir) labels.push_back(c.labels[d]);
    std::vector<int> corners;
    for (unsigned sub = 0; sub < (1u << (dim - 1)); ++sub) {
        unsigned mask = side ? (1u << dir) : 0u;
        int bit = 0;
        for (int d = 0; d < dim; ++d) {
            if (d == dir) continue;
            if ((sub >> bit) & 1u) mask |= (1u << d);
            ++bit;
        }
        corners.push_back(c.corners[mask]);
    }
    std::sort(corners.begin(), corners.end());
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    int idx = cubeIndex(labels, corners);
    if (idx < 0) throw semantic_error("cube facet missing (invariant violation)");
    return {dim - 1, idx};
}

BlowupCollapse BlowupComplex::collapse(int familyIndex) const {
    if (familyIndex < 0 || familyIndex >= family_.size())
        throw semantic_error("collapse index out of range");
    const Label dropped = Label::partLabel(familyIndex);
    const int R = vertexCount();
    const int E = static_cast<int>(edges_.size());
    const int C = static_cast<int>(cubes_.size());

    UnionFind ufV(R), ufE(E), ufC(C);
    for (int e = 0; e < E; ++e)
        if (edges_[e].label == dropped) ufV.unite(edges_[e].from, edges_[e].to);
    for (int c = 0; c < C; ++c) {
        auto it = std::find(cubes_[c].labels.begin(), cubes_[c].labels.end(), dropped);
        if (it == cubes_[c].labels.end()) continue;
        int dir = static_cast<int>(it - cubes_[c].labels.begin());
        CubeRef f0 = cubeFacet(c, dir, 0);
        CubeRef f1 = cubeFacet(c, dir, 1);
        if (f0.dim == 1) ufE.unite(f0.index, f1.index);
        else ufC.unite(f0.index, f1.index);
    }

    // quotient vertices, ordered by the projected side vectors
    std::vector<Region> projected(R);
    for (int r = 0; r < R; ++r) {
        Region p;
        for (int i = 0; i < family_.size(); ++i)
            if (i != familyIndex) p.sides.push_back(regions_[r].sides[i]);
        projected[r] = std::move(p);
    }
    std::map<Region, int> newIndex;
    for (int r = 0; r < R; ++r) {
        int root = ufV.find(r);
        if (projected[root] != projected[r])
            throw semantic_error("merged regions disagree off the collapsed member");
        newIndex[projected[root]];  // insert
    }
    {
        int next = 0;
        for (auto& [reg, idx] : newIndex) idx = next++;
    }
    std::vector<int> vertexMap(R);
    for (int r = 0; r < R; ++r) vertexMap[r] = newIndex.at(projected[ufV.find(r)]);

    auto remapLabel = [&](Label l) {
        if (l.isVertex()) return l;
        return Label::partLabel(l.index > familyIndex ? l.index - 1 : l.index);
    };

    BlowupComplex out;
    out.graph_ = graph_;
    out.family_ = family_.erased(graph_, familyIndex);
    out.regions_.resize(newIndex.size());
    for (const auto& [reg, idx] : newIndex) out.regions_[idx] = reg;

    for (int e = 0; e < E; ++e) {
        if (edges_[e].label == dropped || ufE.find(e) != e) continue;
        BlowupEdge ne = edges_[e];
        ne.from = vertexMap[ne.from];
        ne.to = vertexMap[ne.to];
        ne.label = remapLabel(ne.label);
        if (!ne.oriented && ne.from > ne.to) std::swap(ne.from, ne.to);
        out.edges_.push_back(ne);
    }
    for (int c = 0; c < C; ++c) {
        if (ufC.find(c) != c) continue;
        if (std::find(cubes_[c].labels.begin(), cubes_[c].labels.end(), dropped) != cubes_[c].labels.end())
            continue;
        BlowupCube nc = cubes_[c];
        for (Label& l : nc.labels) l = remapLabel(l);
        for (int& corner : nc.corners) corner = vertexMap[corner];
        out.cubes_.push_back(std::move(nc));
    }

    const int n = graph_.vertexCount();
    out.vertexLabelMax_.resize(n);
    for (VertexId v = 0; v < n; ++v) out.vertexLabelMax_[v] = {v};
    out.partLabelMax_.resize(out.family_.size());
    for (int i = 0; i < out.family_.size(); ++i) out.partLabelMax_[i] = out.family_[i].maxSet();
    out.finalize();
    return {std::move(out), std::move(vertexMap)};
}

bool BlowupComplex::isomorphicTo(const BlowupComplex& other) const {
    if (vertexCount() != other.vertexCount() || edges_.size() != other.edges_.size() ||
        cubes_.size() != other.cubes_.size())
        return false;
    const int V = vertexCount();
    if (V == 0) return true;
    for (int w0 = 0; w0 < V; ++w0) {
        std::vector<int> img(V, -1);
        img[0] = w0;
        std::vector<int> stack{0};
        bool ok = true;
        int covered = 1;
        auto assign = [&](int x, int y) {
            if (img[x] == -1) {
                img[x] = y;
                ++covered;
                stack.push_back(x);
                return true;
            }
            return img[x] == y;
        };
        while (ok && !stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            int y = img[x];
            for (int e : edgesAt(x)) {
                const BlowupEdge& ed = edges_[e];
                int e2 = other.edgeAt(y, ed.label);
                if (e2 < 0) { ok = false; break; }
                const BlowupEdge& ed2 = other.edges_[e2];
                if (ed.oriented != ed2.oriented) { ok = false; break; }
                if (ed.from == ed.to) {
                    if (ed2.from != y || ed2.to != y) { ok = false; break; }
                    continue;
                }
                if (ed2.from == ed2.to) { ok = false; break; }
                if (ed.oriented) {
                    if (x == ed.from) {
                        if (ed2.from != y || !assign(ed.to, ed2.to)) { ok = false; break; }
                    } else {
                        if (ed2.to != y || !assign(ed.from, ed2.from)) { ok = false; break; }
                    }
                } else {
                    int partner = (x == ed.from) ? ed.to : ed.from;
                    int partner2 = (y == ed2.from) ? ed2.to : ed2.from;
                    if (!assign(partner, partner2)) { ok = false; break; }
                }
            }
        }
        if (!ok || covered != V) continue;
        std::vector<bool> hit(V, false);
        for (int x = 0; x < V && ok; ++x) {
            if (img[x] < 0 || hit[img[x]]) ok = false;
            else hit[img[x]] = true;
        }
        for (int c = 0; c < static_cast<int>(cubes_.size()) && ok; ++c) {
            std::vector<int> mapped;
            for (int corner : cubeCornerSet(c)) mapped.push_back(img[corner]);
            std::sort(mapped.begin(), mapped.end());
            mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
            if (other.cubeIndex(cubes_[c].labels, mapped) < 0) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

} // namespace raagspace
