#ifndef RAAGSPACE_TESTS_ORACLE_HPP
#define RAAGSPACE_TESTS_ORACLE_HPP

// Independent brute-force oracles.  These work from first principles and do
// not call the enumeration or construction code they are used to check.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "raagspace/graph.hpp"
#include "raagspace/partition.hpp"

namespace oracle {

using raagspace::DefiningGraph;
using raagspace::VertexId;

// A partition normalized as an unordered pair of sorted side strings, so
// results can be compared without relying on any canonicalization code.
using NormalizedPartition = std::pair<std::string, std::string>;

inline std::string sideString(const std::vector<int>& nodes) {
    std::string s;
    for (int x : nodes) s += std::to_string(x) + ";";
    return s;
}

inline NormalizedPartition normalize(std::vector<int> sideA, std::vector<int> sideB) {
    std::sort(sideA.begin(), sideA.end());
    std::sort(sideB.begin(), sideB.end());
    std::string a = sideString(sideA), b = sideString(sideB);
    return a < b ? NormalizedPartition{a, b} : NormalizedPartition{b, a};
}

inline NormalizedPartition normalize(const raagspace::WPartition& p) {
    auto encode = [](const std::vector<raagspace::SignedVertex>& xs) {
        std::vector<int> out;
        for (auto s : xs) out.push_back(2 * s.v + (s.positive ? 0 : 1));
        return out;
    };
    return normalize(encode(p.sideA()), encode(p.sideB()));
}

// connected components of the graph minus the closed star of m
inline std::vector<std::vector<VertexId>> componentsMinusStar(const DefiningGraph& g, VertexId m) {
    int n = g.vertexCount();
    std::vector<bool> removed(n, false);
    removed[m] = true;
    for (VertexId u : g.link(m)) removed[u] = true;
    std::vector<bool> seen(n, false);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < n; ++s) {
        if (removed[s] || seen[s]) continue;
        std::vector<VertexId> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            VertexId cur = stack.back();
            stack.pop_back();
            comp.push_back(cur);
            for (VertexId nb = 0; nb < n; ++nb)
                if (!removed[nb] && !seen[nb] && g.adjacent(cur, nb)) {
                    seen[nb] = true;
                    stack.push_back(nb);
                }
        }
        comps.push_back(comp);
    }
    return comps;
}

// All partitions of the signed generators, by sheer enumeration: assign each
// signed generator to side 0, side 1 or the link slot, then keep exactly the
// assignments satisfying the defining conditions for some base m.
inline std::set<NormalizedPartition> allPartitions(const DefiningGraph& g) {
    const int n = g.vertexCount();
    const int nodes = 2 * n;  // node 2v = v, node 2v+1 = v^-1
    std::set<NormalizedPartition> out;
    std::vector<int> slot(nodes, 0);
    std::vector<long> pow3(nodes + 1, 1);
    for (int i = 0; i < nodes; ++i) pow3[i + 1] = pow3[i] * 3;
    for (long code = 0; code < pow3[nodes]; ++code) {
        long c = code;
        for (int i = 0; i < nodes; ++i) {
            slot[i] = static_cast<int>(c % 3);
            c /= 3;
        }
        std::vector<int> sideA, sideB;
        for (int i = 0; i < nodes; ++i) {
            if (slot[i] == 0) sideA.push_back(i);
            else if (slot[i] == 1) sideB.push_back(i);
        }
        if (sideA.size() < 2 || sideB.size() < 2) continue;  // thickness
        bool valid = false;
        for (VertexId m = 0; m < n && !valid; ++m) {
            // the link slot must hold exactly lk(m) and its inverses
            bool ok = true;
            for (VertexId v = 0; v < n && ok; ++v) {
                bool inLink = g.adjacent(m, v);
                if ((slot[2 * v] == 2) != inLink || (slot[2 * v + 1] == 2) != inLink) ok = false;
            }
            if (!ok) continue;
            // m and its inverse on different sides
            if (slot[2 * m] == 2 || slot[2 * m + 1] == 2 || slot[2 * m] == slot[2 * m + 1]) continue;
            // distinct vertices sharing a component away from st(m) stay
            // together with their inverses; lone vertices are unconstrained
            for (const auto& comp : componentsMinusStar(g, m)) {
                if (comp.size() < 2) continue;
                int side = slot[2 * comp.front()];
                for (VertexId v : comp)
                    for (int node : {2 * v, 2 * v + 1})
                        if (slot[node] != side) ok = false;
                if (!ok) break;
            }
            if (ok) valid = true;
        }
        if (valid) out.insert(normalize(sideA, sideB));
    }
    return out;
}

// number of k-cliques, by direct subset enumeration
inline long cliqueCount(const DefiningGraph& g, int k) {
    const int n = g.vertexCount();
    if (k < 0 || k > n) return 0;
    std::vector<int> pick;
    long count = 0;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(pick.size()) == k) {
            ++count;
            return;
        }
        for (int v = start; v < n; ++v) {
            bool ok = true;
            for (int u : pick)
                if (!g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return count;
}

} // namespace oracle

#endif
