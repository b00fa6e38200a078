#include "cyclespec/extract.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "cyclespec/errors.hpp"

namespace cyclespec {
namespace {

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Smallest integer degree d with d >= c * n^(1/k).
std::uint64_t min_allowed_degree(std::uint64_t n, const Rational& c, int k) {
    double est = c.convert_to<double>() * std::pow(static_cast<double>(n), 1.0 / k);
    auto d = static_cast<std::uint64_t>(std::max(0.0, std::ceil(est)));
    while (!meets_root_threshold(d, n, c, k)) ++d;
    while (d > 0 && meets_root_threshold(d - 1, n, c, k)) --d;
    return d;
}

}  // namespace

std::string check_chorded_cycle(const Graph& g, const ChordedCycle& h) {
    if (auto chk = verify_cycle(g, h.cycle); !chk) return chk.reason;
    const int len = h.length();
    auto [i, j] = h.chord;
    if (i < 0 || j < 0 || i >= len || j >= len || i == j) return "chord positions out of range";
    int gap = std::abs(i - j);
    if (gap == 1 || gap == len - 1) return "chord joins cycle-adjacent positions";
    if (!g.has_edge(h.cycle[idx(i)], h.cycle[idx(j)])) return "chord is not an edge";
    return {};
}

Subgraph core_peel(const Graph& g, int k) {
    if (k < 1) throw InvalidArgument("core_peel needs k >= 1");
    const Vertex n = g.vertex_count();
    const auto uk = static_cast<std::size_t>(k);
    std::vector<std::size_t> deg(idx(n));
    std::vector<char> removed(idx(n), 0);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[idx(v)] = g.degree(v);
        if (deg[idx(v)] <= uk) queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (removed[idx(v)]) continue;
        removed[idx(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (!removed[idx(w)] && deg[idx(w)]-- == uk + 1) queue.push_back(w);
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[idx(v)]) keep.push_back(v);
    if (keep.empty()) {
        if (n > 0 && g.edge_count() >= uk * static_cast<std::size_t>(n))
            throw InternalContradiction("(k+1)-core empty although average degree >= 2k");
        throw HypothesisNotMet("(k+1)-core is empty: average degree " +
                               (n ? to_string(average_degree(g)) : std::string("undefined")) + " < " +
                               std::to_string(2 * k));
    }
    return induced_subgraph(g, keep);
}

std::vector<Vertex> maximal_path(const Graph& g) {
    if (g.empty()) throw InvalidArgument("maximal_path of the empty graph");
    std::vector<char> used(idx(g.vertex_count()), 0);
    std::deque<Vertex> path{0};
    used[0] = 1;
    bool stuck[2] = {false, false};  // [0] back, [1] front
    int turn = 0;
    while (!stuck[0] || !stuck[1]) {
        if (stuck[turn]) turn ^= 1;
        Vertex end = turn == 0 ? path.back() : path.front();
        Vertex pick = -1;
        for (Vertex w : g.neighbors(end))
            if (!used[idx(w)]) {
                pick = w;
                break;
            }
        if (pick < 0) {
            stuck[turn] = true;
            continue;
        }
        used[idx(pick)] = 1;
        if (turn == 0)
            path.push_back(pick);
        else
            path.push_front(pick);
        turn ^= 1;
    }
    return {path.begin(), path.end()};
}

ChordedCycle chorded_cycle(const Graph& g, int k) {
    if (k < 2) throw InvalidArgument("chorded_cycle needs k >= 2");
    Subgraph core = core_peel(g, k);
    const Graph& h = core.graph;
    auto core_girth = girth(h);
    if (!core_girth) throw InternalContradiction("(k+1)-core with k >= 2 is acyclic");

    auto path = maximal_path(h);
    std::vector<int> pos(idx(h.vertex_count()), -1);
    for (std::size_t i = 0; i < path.size(); ++i) pos[idx(path[i])] = static_cast<int>(i);

    const Vertex v = path.front();
    int far = 0;
    for (Vertex w : h.neighbors(v)) {
        if (pos[idx(w)] < 0) throw InternalContradiction("maximal path endpoint has an off-path neighbour");
        far = std::max(far, pos[idx(w)]);
    }
    int chord_to = far;
    for (Vertex w : h.neighbors(v))
        if (pos[idx(w)] > 1 && pos[idx(w)] < far) chord_to = std::min(chord_to, pos[idx(w)]);
    if (chord_to == far) throw InternalContradiction("endpoint of degree >= 3 has no chord");

    ChordedCycle out;
    out.cycle = core.lift(std::span<const Vertex>(path.data(), idx(far) + 1));
    out.chord = {0, chord_to};
    out.source_girth = *core_girth;
    const auto promised = (*core_girth - 2) * static_cast<std::size_t>(k) + 2;
    if (out.cycle.size() < promised)
        throw InternalContradiction("chorded cycle of length " + std::to_string(out.cycle.size()) +
                                    " is shorter than the promised " + std::to_string(promised));
    return out;
}

DenseBall dense_ball(const Graph& g, const Rational& c, int k) {
    if (k < 1) throw InvalidArgument("dense_ball needs k >= 1");
    if (c < 1) throw InvalidArgument("dense_ball needs c >= 1");
    const Vertex n = g.vertex_count();
    if (n == 0 || !meets_power_gate(g.edge_count(), static_cast<std::uint64_t>(n), c, k)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", power_gate_value(static_cast<std::uint64_t>(n), c, k));
        throw HypothesisNotMet("e=" + std::to_string(g.edge_count()) + " < " + to_string(c) + "*n^(1+1/" +
                               std::to_string(k) + ") = " + buf + " for n=" + std::to_string(n));
    }

    std::vector<std::uint64_t> deg(idx(n));
    for (Vertex v = 0; v < n; ++v) deg[idx(v)] = g.degree(v);
    std::vector<char> removed(idx(n), 0);
    auto alive = static_cast<std::uint64_t>(n);
    std::uint64_t threshold = min_allowed_degree(alive, c, k);
    for (bool changed = true; changed;) {
        changed = false;
        for (Vertex v = 0; v < n; ++v) {
            if (removed[idx(v)] || deg[idx(v)] >= threshold) continue;
            removed[idx(v)] = 1;
            for (Vertex w : g.neighbors(v))
                if (!removed[idx(w)]) --deg[idx(w)];
            if (--alive == 0) throw InternalContradiction("dense_ball peeling emptied the graph");
            while (threshold > 0 && meets_root_threshold(threshold - 1, alive, c, k)) --threshold;
            changed = true;
        }
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[idx(v)]) keep.push_back(v);
    Subgraph peeled = induced_subgraph(g, keep);
    const Graph& p = peeled.graph;

    DenseBall ball;
    ball.center = peeled.to_host.front();
    ball.radius_bound = k;
    std::vector<int> dist(idx(p.vertex_count()), -1);
    dist[0] = 0;
    std::vector<Vertex> members{0};
    std::vector<Vertex> frontier{0};
    std::size_t edges = 0;
    for (int i = 0;; ++i) {
        if (i > 0) {
            std::vector<Vertex> next;
            for (Vertex u : frontier)
                for (Vertex w : p.neighbors(u))
                    if (dist[idx(w)] < 0) {
                        dist[idx(w)] = i;
                        next.push_back(w);
                    }
            if (next.empty()) throw InternalContradiction("dense_ball exhausted a component without density");
            for (Vertex w : next)
                for (Vertex x : p.neighbors(w))
                    if (dist[idx(x)] >= 0 && (dist[idx(x)] < i || x < w)) ++edges;
            members.insert(members.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        ball.ball_sizes.push_back(members.size());
        ball.ball_edges.push_back(edges);
        if (Rational(BigInt(2 * edges)) >= c * Rational(BigInt(members.size()))) {
            ball.radius_reached = i;
            break;
        }
        if (i >= k) throw InternalContradiction("dense_ball radius exceeded k");
    }
    ball.subgraph = induced_subgraph(g, peeled.lift(members));
    ball.achieved_avg_degree = Rational(BigInt(2 * edges), BigInt(members.size()));
    return ball;
}

std::vector<Vertex> short_cycle(const Graph& g, int k) {
    if (k < 2) throw InvalidArgument("short_cycle needs k >= 2");
    DenseBall ball = dense_ball(g, Rational(2), k);
    const Graph& h = ball.subgraph.graph;
    const Vertex root = ball.subgraph.from_host(ball.center);
    std::vector<int> depth(idx(h.vertex_count()), -1);
    std::vector<Vertex> parent(idx(h.vertex_count()), -1);
    std::vector<Vertex> queue{root};
    depth[idx(root)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : h.neighbors(u)) {
            if (depth[idx(w)] < 0) {
                depth[idx(w)] = depth[idx(u)] + 1;
                parent[idx(w)] = u;
                queue.push_back(w);
            } else if (w != parent[idx(u)] && parent[idx(w)] != u) {
                auto cyc = ball.subgraph.lift(close_tree_cycle(parent, depth, u, w));
                if (cyc.size() > static_cast<std::size_t>(2 * k + 1))
                    throw InternalContradiction("short_cycle found a cycle longer than 2k+1");
                return cyc;
            }
        }
    }
    throw InternalContradiction("dense ball of average degree >= 2 is acyclic");
}

LayerPair dense_layer_pair(const Graph& g, const LayerDecomposition& layers, int k) {
    if (k < 1) throw InvalidArgument("dense_layer_pair needs k >= 1");
    for (int l = 0; l + 1 < static_cast<int>(layers.layers.size()); ++l) {
        const auto& lower = layers.layers[idx(l)];
        const auto& upper = layers.layers[idx(l + 1)];
        std::size_t edges = 0;
        for (const auto* layer : {&lower, &upper})
            for (Vertex u : *layer)
                for (Vertex w : g.neighbors(u)) {
                    int d = layers.depth[idx(w)];
                    if ((d == l || d == l + 1) && u < w) ++edges;
                }
        const std::size_t size = lower.size() + upper.size();
        if (edges >= static_cast<std::size_t>(k) * size) {
            std::vector<Vertex> verts(lower);
            verts.insert(verts.end(), upper.begin(), upper.end());
            return {l, induced_subgraph(g, verts)};
        }
    }
    throw HypothesisNotMet("no BFS layer pair spans k|V_l ∪ V_{l+1}| edges for k=" + std::to_string(k));
}

Subgraph cross_layer_graph(const Graph& g, const LayerDecomposition& layers, int l) {
    if (l < 0 || l + 1 >= static_cast<int>(layers.layers.size())) throw InvalidArgument("layer index out of range");
    const auto& lower = layers.layers[idx(l)];
    const auto& upper = layers.layers[idx(l + 1)];
    Subgraph sub;
    sub.to_host = lower;
    sub.to_host.insert(sub.to_host.end(), upper.begin(), upper.end());
    std::sort(sub.to_host.begin(), sub.to_host.end());
    std::vector<Edge> edges;
    for (Vertex u : lower)
        for (Vertex w : g.neighbors(u))
            if (layers.depth[idx(w)] == l + 1) edges.emplace_back(sub.from_host(u), sub.from_host(w));
    sub.graph = Graph(static_cast<Vertex>(sub.to_host.size()), edges);
    return sub;
}

}  // namespace cyclespec
