#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cyclespec {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Adjacency lists are sorted and duplicate-free, adjacency is symmetric and
/// there are no self-loops. Instances are immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range ids throw
    /// InvalidArgument.
    Graph(Vertex vertex_count, std::span<const Edge> edges);

    Vertex vertex_count() const noexcept { return static_cast<Vertex>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// A graph together with the host ids of its vertices. `to_host` is strictly
/// increasing, so vertex order is preserved in both directions.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_host;

    /// Inverse of `to_host`; -1 when `host_vertex` is not retained.
    Vertex from_host(Vertex host_vertex) const;
    std::vector<Vertex> lift(std::span<const Vertex> local) const;
};

/// Induced subgraph on `vertices` (any order, duplicates ignored).
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Wraps `g` with the identity mapping.
Subgraph identity_subgraph(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Component maximising e/n (ties: smallest member id). Empty input yields an
/// empty subgraph.
Subgraph densest_component(const Graph& g);

}  // namespace cyclespec
