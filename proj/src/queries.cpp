#include "cyclespec/queries.hpp"

#include <algorithm>
#include <limits>

#include "cyclespec/errors.hpp"

namespace cyclespec {
namespace {

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Reusable BFS scratch space; reset() only touches visited entries.
struct BfsScratch {
    std::vector<int> dist;
    std::vector<Vertex> parent;
    std::vector<Vertex> queue;

    explicit BfsScratch(Vertex n) : dist(idx(n), -1), parent(idx(n), -1) { queue.reserve(idx(n)); }

    void reset() {
        for (Vertex v : queue) {
            dist[idx(v)] = -1;
            parent[idx(v)] = -1;
        }
        queue.clear();
    }
};

// Both walks to `w` are shortest paths, so they first re-meet at equal depth
// and the two segments have equal length.
std::vector<Vertex> even_cycle_from_two_parents(const BfsScratch& s, Vertex w, Vertex other_parent) {
    std::vector<Vertex> left{w}, right{};
    Vertex a = s.parent[idx(w)];
    Vertex b = other_parent;
    left.push_back(a);
    right.push_back(b);
    while (a != b) {
        a = s.parent[idx(a)];
        b = s.parent[idx(b)];
        left.push_back(a);
        right.push_back(b);
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

}  // namespace

Rational average_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw InvalidArgument("average degree of the empty graph is undefined");
    return Rational(BigInt(2 * g.edge_count()), BigInt(g.vertex_count()));
}

std::vector<Vertex> close_tree_cycle(std::span<const Vertex> parent, std::span<const int> depth, Vertex u,
                                     Vertex w) {
    std::vector<Vertex> left{u}, right{w};
    Vertex a = u, b = w;
    while (a != b) {
        if (depth[idx(a)] >= depth[idx(b)]) {
            a = parent[idx(a)];
            left.push_back(a);
        } else {
            b = parent[idx(b)];
            right.push_back(b);
        }
    }
    right.pop_back();
    left.insert(left.end(), right.rbegin(), right.rend());
    return left;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<Vertex> best_cycle;
    BfsScratch s(n);
    for (Vertex root = 0; root < n && best > 3; ++root) {
        s.reset();
        s.dist[idx(root)] = 0;
        s.queue.push_back(root);
        for (std::size_t head = 0; head < s.queue.size(); ++head) {
            Vertex u = s.queue[head];
            const auto du = static_cast<std::size_t>(s.dist[idx(u)]);
            if (2 * du + 1 >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (s.dist[idx(w)] < 0) {
                    s.dist[idx(w)] = static_cast<int>(du) + 1;
                    s.parent[idx(w)] = u;
                    s.queue.push_back(w);
                } else if (w != s.parent[idx(u)] && s.parent[idx(w)] != u) {
                    if (du + static_cast<std::size_t>(s.dist[idx(w)]) + 1 >= best) continue;
                    auto cyc = close_tree_cycle(s.parent, s.dist, u, w);
                    if (cyc.size() < best) {
                        best = cyc.size();
                        best_cycle = std::move(cyc);
                    }
                }
            }
        }
    }
    if (best_cycle.empty()) return std::nullopt;
    return best_cycle;
}

std::optional<std::size_t> girth(const Graph& g) {
    auto c = shortest_cycle(g);
    if (!c) return std::nullopt;
    return c->size();
}

std::optional<std::size_t> even_girth(const Graph& g) {
    const Vertex n = g.vertex_count();
    auto shortest = girth(g);
    if (!shortest) return std::nullopt;
    if (*shortest % 2 == 0) return shortest;
    if (bipartition(g).is_bipartite()) return shortest;

    std::size_t best = std::numeric_limits<std::size_t>::max();
    BfsScratch s(n);
    for (Vertex root = 0; root < n && best > 4; ++root) {
        s.reset();
        s.dist[idx(root)] = 0;
        s.queue.push_back(root);
        for (std::size_t head = 0; head < s.queue.size(); ++head) {
            Vertex u = s.queue[head];
            const auto du = static_cast<std::size_t>(s.dist[idx(u)]);
            if (2 * (du + 1) >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (s.dist[idx(w)] < 0) {
                    s.dist[idx(w)] = static_cast<int>(du) + 1;
                    s.parent[idx(w)] = u;
                    s.queue.push_back(w);
                } else if (static_cast<std::size_t>(s.dist[idx(w)]) == du + 1 && s.parent[idx(w)] != u) {
                    best = std::min(best, even_cycle_from_two_parents(s, w, u).size());
                }
            }
        }
    }

    // Exact refinement: every cycle is found from its smallest vertex.
    std::vector<int> dist(idx(n), -1);
    std::vector<char> on_path(idx(n), 0);
    for (Vertex root = 0; root < n && best > 4; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<Vertex> queue{root};
        dist[idx(root)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : g.neighbors(queue[head]))
                if (w > root && dist[idx(w)] < 0) {
                    dist[idx(w)] = dist[idx(queue[head])] + 1;
                    queue.push_back(w);
                }

        // Iterative DFS over simple paths root = p0, p1, ..., pt.
        std::vector<Vertex> path{root};
        std::vector<std::size_t> next{0};
        on_path[idx(root)] = 1;
        while (!path.empty()) {
            Vertex v = path.back();
            const std::size_t t = path.size() - 1;
            auto nbrs = g.neighbors(v);
            if (next.back() >= nbrs.size()) {
                on_path[idx(v)] = 0;
                path.pop_back();
                next.pop_back();
                continue;
            }
            Vertex w = nbrs[next.back()++];
            if (w == root) {
                if (t >= 2 && (t + 1) % 2 == 0 && t + 1 < best) best = t + 1;
                continue;
            }
            if (w < root || on_path[idx(w)] || dist[idx(w)] < 0) continue;
            if (t + 1 + static_cast<std::size_t>(dist[idx(w)]) >= best) continue;
            on_path[idx(w)] = 1;
            path.push_back(w);
            next.push_back(0);
        }
    }
    if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return best;
}

BipartitionResult bipartition(const Graph& g) {
    const Vertex n = g.vertex_count();
    BipartitionResult res;
    res.side.assign(idx(n), 0);
    std::vector<int> depth(idx(n), -1);
    std::vector<Vertex> parent(idx(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (depth[idx(s)] >= 0) continue;
        depth[idx(s)] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex u = queue[head];
            for (Vertex w : g.neighbors(u)) {
                if (depth[idx(w)] < 0) {
                    depth[idx(w)] = depth[idx(u)] + 1;
                    parent[idx(w)] = u;
                    res.side[idx(w)] = static_cast<std::uint8_t>(1 - res.side[idx(u)]);
                    queue.push_back(w);
                } else if (res.side[idx(w)] == res.side[idx(u)]) {
                    res.odd_cycle_witness = close_tree_cycle(parent, depth, u, w);
                    res.side.clear();
                    return res;
                }
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) (res.side[idx(v)] ? res.y : res.x).push_back(v);
    return res;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (!g.contains(source)) throw InvalidArgument("source vertex out of range");
    std::vector<int> dist(idx(g.vertex_count()), -1);
    std::vector<Vertex> queue{source};
    dist[idx(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (Vertex w : g.neighbors(queue[head]))
            if (dist[idx(w)] < 0) {
                dist[idx(w)] = dist[idx(queue[head])] + 1;
                queue.push_back(w);
            }
    return dist;
}

LayerDecomposition bfs_layers(const Graph& g, Vertex root) {
    if (!g.contains(root)) throw InvalidArgument("root vertex " + std::to_string(root) + " out of range");
    LayerDecomposition ld;
    ld.root = root;
    ld.parent.assign(idx(g.vertex_count()), -1);
    ld.depth.assign(idx(g.vertex_count()), -1);
    ld.depth[idx(root)] = 0;
    ld.layers.push_back({root});
    while (true) {
        std::vector<Vertex> next;
        for (Vertex u : ld.layers.back())
            for (Vertex w : g.neighbors(u))
                if (ld.depth[idx(w)] < 0) {
                    ld.depth[idx(w)] = ld.depth[idx(u)] + 1;
                    ld.parent[idx(w)] = u;
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        ld.layers.push_back(std::move(next));
    }
    return ld;
}

RadiusCenter radius_center(const Graph& g) {
    const Vertex n = g.vertex_count();
    if (n == 0) throw InvalidArgument("radius of the empty graph is undefined");
    if (connected_components(g).size() != 1) throw InvalidArgument("radius requires a connected graph");

    RadiusCenter best{std::numeric_limits<int>::max(), 0};
    BfsScratch s(n);
    for (Vertex root = 0; root < n; ++root) {
        s.reset();
        s.dist[idx(root)] = 0;
        s.queue.push_back(root);
        int ecc = 0;
        bool abandoned = false;
        for (std::size_t head = 0; head < s.queue.size() && !abandoned; ++head) {
            Vertex u = s.queue[head];
            for (Vertex w : g.neighbors(u))
                if (s.dist[idx(w)] < 0) {
                    s.dist[idx(w)] = s.dist[idx(u)] + 1;
                    s.queue.push_back(w);
                    ecc = s.dist[idx(w)];
                    if (ecc >= best.radius) {
                        abandoned = true;
                        break;
                    }
                }
        }
        if (!abandoned) best = {ecc, root};
    }
    return best;
}

BipartiteHalf spanning_bipartite_half(const Graph& g) {
    const Vertex n = g.vertex_count();
    BipartiteHalf out;
    out.side.assign(idx(n), 0);
    std::vector<char> seen(idx(n), 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[idx(s)]) continue;
        seen[idx(s)] = 1;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex w : g.neighbors(queue[head]))
                if (!seen[idx(w)]) {
                    seen[idx(w)] = 1;
                    out.side[idx(w)] = static_cast<std::uint8_t>(1 - out.side[idx(queue[head])]);
                    queue.push_back(w);
                }
    }
    // Each flip strictly increases the cut, so this terminates.
    for (bool flipped = true; flipped;) {
        flipped = false;
        for (Vertex v = 0; v < n; ++v) {
            std::size_t same = 0;
            for (Vertex w : g.neighbors(v)) same += out.side[idx(w)] == out.side[idx(v)];
            if (2 * same > g.degree(v)) {
                out.side[idx(v)] ^= 1;
                flipped = true;
            }
        }
    }
    std::vector<Edge> kept;
    for (auto [u, v] : g.edges())
        if (out.side[idx(u)] != out.side[idx(v)]) kept.emplace_back(u, v);
    out.graph = Graph(n, kept);
    return out;
}

CycleCheck verify_cycle(const Graph& g, std::span<const Vertex> cycle) {
    if (cycle.size() < 3) return {false, "cycle has fewer than 3 vertices"};
    std::vector<Vertex> sorted(cycle.begin(), cycle.end());
    for (Vertex v : cycle)
        if (!g.contains(v)) return {false, "vertex " + std::to_string(v) + " out of range"};
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
        return {false, "repeated vertex " + std::to_string(*it)};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        Vertex a = cycle[i], b = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(a, b)) return {false, std::to_string(a) + "-" + std::to_string(b) + " is not an edge"};
    }
    return {true, {}};
}

}  // namespace cyclespec
