#pragma once

// Hand-built graphs and naive oracles for the tests. Nothing here calls into
// the library beyond the Graph constructor.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cyclespec/graph.hpp"

namespace testutil {

using cyclespec::Edge;
using cyclespec::Graph;
using cyclespec::Vertex;

inline Graph make(Vertex n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make(n, e);
}

inline Graph kab(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return make(a + b, e);
}

inline Graph star(int leaves) { return kab(1, leaves); }

inline Graph cube(int d) {
    std::vector<Edge> e;
    for (int v = 0; v < (1 << d); ++v)
        for (int b = 0; b < d; ++b)
            if (!(v >> b & 1)) e.emplace_back(v, v | (1 << b));
    return make(1 << d, e);
}

// Heawood graph as the 14-cycle with chords i ~ i+5 for even i.
inline Graph heawood() {
    std::vector<Edge> e;
    for (int i = 0; i < 14; ++i) e.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) e.emplace_back(i, (i + 5) % 14);
    return make(14, e);
}

inline Graph gnp(int n, double p, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return make(n, e);
}

inline Graph bipartite_gnp(int n1, int n2, double p, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            if (coin(rng)) e.emplace_back(i, n1 + j);
    return make(n1 + n2, e);
}

// Every simple cycle length, by plain DFS from each start vertex over larger
// vertices. Exponential; small graphs only.
inline std::set<int> all_cycle_lengths(const Graph& g, int max_len = 1 << 30) {
    std::set<int> out;
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(Vertex, Vertex, int)> dfs = [&](Vertex s, Vertex v, int len) {
        for (Vertex w : g.neighbors(v)) {
            if (w == s && len >= 3) out.insert(len);
            if (w <= s || used[static_cast<std::size_t>(w)] || len + 1 > max_len) continue;
            used[static_cast<std::size_t>(w)] = 1;
            dfs(s, w, len + 1);
            used[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        used[static_cast<std::size_t>(s)] = 1;
        dfs(s, s, 1);
        used[static_cast<std::size_t>(s)] = 0;
    }
    return out;
}

inline std::optional<int> naive_girth(const Graph& g) {
    auto s = all_cycle_lengths(g);
    if (s.empty()) return std::nullopt;
    return *s.begin();
}

inline int naive_max_cut(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int cut = 0;
        for (auto [u, v] : g.edges()) cut += ((mask >> u) & 1) != ((mask >> v) & 1);
        best = std::max(best, cut);
    }
    return best;
}

// BFS distance oracle written independently of the library.
inline std::vector<int> naive_dist(const Graph& g, Vertex s) {
    std::vector<int> d(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> q{s};
    d[static_cast<std::size_t>(s)] = 0;
    for (std::size_t h = 0; h < q.size(); ++h)
        for (Vertex w : g.neighbors(q[h]))
            if (d[static_cast<std::size_t>(w)] < 0) {
                d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(q[h])] + 1;
                q.push_back(w);
            }
    return d;
}

inline bool is_cycle(const Graph& g, const std::vector<Vertex>& c) {
    if (c.size() < 3) return false;
    std::set<Vertex> seen(c.begin(), c.end());
    if (seen.size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

}  // namespace testutil
