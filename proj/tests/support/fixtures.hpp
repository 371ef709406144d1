#ifndef RAAGSPACE_TESTS_FIXTURES_HPP
#define RAAGSPACE_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "raagspace/blowup.hpp"
#include "raagspace/graph.hpp"

namespace fixtures {

using raagspace::DefiningGraph;

inline std::vector<std::string> names(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
    return out;
}

/// Path a-b-c plus an isolated vertex d.
inline DefiningGraph pathABCplusD() {
    return DefiningGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
}

inline DefiningGraph cycle4() {
    return DefiningGraph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline DefiningGraph triangle() {
    return DefiningGraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline DefiningGraph edgeless(int n) { return DefiningGraph(names(n), {}); }

inline DefiningGraph single() { return DefiningGraph({"a"}, {}); }

inline DefiningGraph empty() { return DefiningGraph({}, {}); }

inline DefiningGraph complete(int n) {
    auto ns = names(n);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({ns[i], ns[j]});
    return DefiningGraph(ns, es);
}

inline DefiningGraph path(int n) {
    auto ns = names(n);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({ns[i], ns[i + 1]});
    return DefiningGraph(ns, es);
}

inline DefiningGraph cycle(int n) {
    auto ns = names(n);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i) es.push_back({ns[i], ns[(i + 1) % n]});
    return DefiningGraph(ns, es);
}

inline DefiningGraph star(int leaves) {
    std::vector<std::string> ns{"hub"};
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < leaves; ++i) {
        ns.push_back("l" + std::to_string(i));
        es.push_back({"hub", ns.back()});
    }
    return DefiningGraph(ns, es);
}

/// Hub adjacent to everything, two commuting non-twist-related spokes u, u'
/// distinguished by private neighbors x, y.  The pair (u, u') shares the hub
/// in both upper links, so its orthogonality constraint is non-trivial.
inline DefiningGraph hubAndSpokes() {
    return DefiningGraph({"w", "u", "p", "x", "y"},
                         {{"w", "u"}, {"w", "p"}, {"w", "x"}, {"w", "y"},
                          {"u", "p"}, {"u", "x"}, {"p", "y"}});
}

/// The ten-vertex graph with lk(v) = {u1,u2,u3}, UL(v) = {u3},
/// UF(v) = {v,w1,w2}.
inline DefiningGraph tenVertex() {
    return DefiningGraph(
        {"v", "u1", "u2", "u3", "w1", "w2", "w3", "x", "y", "z"},
        {{"v", "u1"}, {"u1", "w1"}, {"w1", "u2"}, {"u2", "v"},
         {"u1", "u3"}, {"u3", "w3"}, {"w3", "u2"}, {"u2", "u3"},
         {"u1", "w2"}, {"y", "w2"}, {"w2", "z"}, {"u1", "x"},
         {"v", "u3"}, {"u3", "w2"}, {"u3", "w1"}, {"w2", "w3"}, {"w2", "u2"}});
}

/// Every labeled graph on exactly n vertices (one per edge subset).
inline std::vector<DefiningGraph> allGraphs(int n) {
    auto ns = names(n);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
    std::vector<DefiningGraph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<std::string, std::string>> es;
        for (size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1u) es.push_back({ns[slots[s].first], ns[slots[s].second]});
        out.push_back(DefiningGraph(ns, es));
    }
    return out;
}

inline DefiningGraph randomGraph(int n, std::mt19937& rng, double p = 0.4) {
    auto ns = names(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) es.push_back({ns[i], ns[j]});
    return DefiningGraph(ns, es);
}

} // namespace fixtures

#endif
