#include "cyclespec/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cyclespec/errors.hpp"

namespace cyclespec {

Graph::Graph(Vertex vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) throw InvalidArgument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(vertex_count));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(vertex_count));
        if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        nbrs.shrink_to_fit();
        degree_sum += nbrs.size();
    }
    edge_count_ = degree_sum / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) return false;
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Vertex Subgraph::from_host(Vertex host_vertex) const {
    auto it = std::lower_bound(to_host.begin(), to_host.end(), host_vertex);
    if (it == to_host.end() || *it != host_vertex) return -1;
    return static_cast<Vertex>(it - to_host.begin());
}

std::vector<Vertex> Subgraph::lift(std::span<const Vertex> local) const {
    std::vector<Vertex> out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(to_host.at(static_cast<std::size_t>(v)));
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    Subgraph sub;
    sub.to_host.assign(vertices.begin(), vertices.end());
    std::sort(sub.to_host.begin(), sub.to_host.end());
    sub.to_host.erase(std::unique(sub.to_host.begin(), sub.to_host.end()), sub.to_host.end());

    std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
        Vertex h = sub.to_host[i];
        if (!g.contains(h)) throw InvalidArgument("vertex " + std::to_string(h) + " out of range");
        local[static_cast<std::size_t>(h)] = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sub.to_host.size(); ++i)
        for (Vertex w : g.neighbors(sub.to_host[i])) {
            Vertex j = local[static_cast<std::size_t>(w)];
            if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    sub.graph = Graph(static_cast<Vertex>(sub.to_host.size()), edges);
    return sub;
}

Subgraph identity_subgraph(const Graph& g) {
    Subgraph sub;
    sub.graph = g;
    sub.to_host.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) sub.to_host[static_cast<std::size_t>(v)] = v;
    return sub;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Subgraph densest_component(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.empty()) return {};
    std::size_t best = 0;
    std::size_t best_edges = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        std::size_t degree_sum = 0;
        for (Vertex v : comps[i]) degree_sum += g.degree(v);
        std::size_t edges = degree_sum / 2;
        // edges/size > best_edges/best_size, cross-multiplied
        if (i == 0 || edges * comps[best].size() > best_edges * comps[i].size()) {
            best = i;
            best_edges = edges;
        }
    }
    if (comps.size() == 1) return identity_subgraph(g);
    return induced_subgraph(g, comps[best]);
}

}  // namespace cyclespec
