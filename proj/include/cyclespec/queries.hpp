#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclespec/exact.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

/// 2e/n. Throws InvalidArgument on the empty graph.
Rational average_degree(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// A shortest cycle as a vertex sequence, or nullopt for forests.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g);

/// Length of a shortest even cycle; nullopt when there is none.
///
/// Bipartite graphs reduce to girth. Otherwise an upper bound comes from BFS
/// (two distinct shortest walks to a vertex close an even cycle) and is then
/// tightened by a distance-pruned search below that bound, so the result is
/// exact. Worst-case exponential on adversarial non-bipartite inputs.
std::optional<std::size_t> even_girth(const Graph& g);

struct BipartitionResult {
    /// Per-vertex colour in {0, 1}; meaningful only when bipartite.
    std::vector<std::uint8_t> side;
    std::vector<Vertex> x, y;
    /// Odd cycle, empty iff the graph is bipartite.
    std::vector<Vertex> odd_cycle_witness;

    bool is_bipartite() const noexcept { return odd_cycle_witness.empty(); }
};

/// BFS parity colouring per component (roots in ascending id order).
BipartitionResult bipartition(const Graph& g);

struct LayerDecomposition {
    Vertex root = 0;
    std::vector<std::vector<Vertex>> layers;
    /// -1 for the root and for vertices outside the root's component.
    std::vector<Vertex> parent;
    /// -1 for vertices outside the root's component.
    std::vector<int> depth;

    int eccentricity() const noexcept { return static_cast<int>(layers.size()) - 1; }
};

/// BFS layering from `root`, neighbours visited in ascending id order. Only
/// the root's component is covered.
LayerDecomposition bfs_layers(const Graph& g, Vertex root);

/// Distances from `source`; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

struct RadiusCenter {
    int radius = 0;
    Vertex center = 0;
};

/// Minimum eccentricity and the smallest vertex attaining it. Throws
/// InvalidArgument on empty or disconnected input.
RadiusCenter radius_center(const Graph& g);

struct BipartiteHalf {
    Graph graph;
    std::vector<std::uint8_t> side;
};

/// Spanning bipartite subgraph from a greedy local-move max cut: start from
/// the BFS parity colouring, then scan vertices in id order flipping any
/// vertex with strictly more same-side than cross neighbours, until a full
/// scan makes no flip. Every vertex keeps at least half its degree.
BipartiteHalf spanning_bipartite_half(const Graph& g);

struct CycleCheck {
    bool ok = false;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/// Accepts iff the vertices are distinct, there are at least three, and all
/// consecutive pairs including the closing pair are edges.
CycleCheck verify_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Cycle closed by the non-tree edge u-w through the tree paths to their
/// lowest common ancestor. Returned as u, ..., lca, ..., w.
std::vector<Vertex> close_tree_cycle(std::span<const Vertex> parent, std::span<const int> depth, Vertex u,
                                     Vertex w);

}  // namespace cyclespec
