#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cyclespec/exact.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/queries.hpp"

namespace cyclespec {

/// A cycle c_0 ... c_{L-1} (host ids) plus one chord between cycle positions.
struct ChordedCycle {
    std::vector<Vertex> cycle;
    /// Positions (i, j), i < j, not cyclically adjacent.
    std::pair<int, int> chord{0, 0};
    /// Girth of the graph the cycle was extracted from (0 if acyclic).
    std::size_t source_girth = 0;

    int length() const noexcept { return static_cast<int>(cycle.size()); }
};

/// Empty string when `h` is a valid chorded cycle of `g`, else the first
/// violated condition.
std::string check_chorded_cycle(const Graph& g, const ChordedCycle& h);

/// Deletes vertices of degree <= k (scanning a queue seeded in id order)
/// until the minimum degree is at least k + 1.
///
/// Throws HypothesisNotMet when the result is empty and the average degree is
/// below 2k; an empty result with average degree >= 2k is impossible and
/// raises InternalContradiction.
Subgraph core_peel(const Graph& g, int k);

/// Non-extendable path grown from vertex 0, alternately appending at the
/// back and prepending at the front the smallest unused neighbour; once one
/// end is stuck the other keeps growing. Both endpoints end up with all
/// neighbours on the path.
std::vector<Vertex> maximal_path(const Graph& g);

/// Long cycle with a chord in a graph of average degree at least 2k, k >= 2.
///
/// Peels to the (k+1)-core, takes a maximal path, and closes it at the front
/// endpoint v through v's neighbour farthest along the path. The chord joins
/// v to its nearest other path neighbour. The cycle has length at least
/// (g' - 2)k + 2 where g' is the girth of the core, recorded in
/// `source_girth`.
ChordedCycle chorded_cycle(const Graph& g, int k);

struct DenseBall {
    /// Induced on the ball; ids lifted into the input graph.
    Subgraph subgraph;
    Vertex center = 0;
    int radius_bound = 0;
    /// Index r of the ball that first satisfied e >= c|H|/2.
    int radius_reached = 0;
    Rational achieved_avg_degree;
    /// |H_0|, ..., |H_r| and e(H_0), ..., e(H_r).
    std::vector<std::size_t> ball_sizes;
    std::vector<std::size_t> ball_edges;
};

/// Subgraph of average degree >= c and radius <= k from a graph with
/// e >= c n^(1 + 1/k), c >= 1.
///
/// Peels vertices of degree < c * n_cur^(1/k), with n_cur the current order,
/// re-evaluating the threshold after each deletion and rescanning in id order
/// until stable. Then grows balls H_0, H_1, ... around the smallest surviving
/// vertex and stops at the first with e(H_i) >= c|H_i|/2.
DenseBall dense_ball(const Graph& g, const Rational& c, int k);

/// Cycle of length at most 2k + 1 in a graph with e >= 2 n^(1 + 1/k).
/// Closes the first non-tree edge met by BFS from the dense ball's centre.
std::vector<Vertex> short_cycle(const Graph& g, int k);

struct LayerPair {
    int layer = 0;
    /// G[V_l ∪ V_{l+1}], ids lifted into the input graph.
    Subgraph graph;
};

/// Smallest l with e(G[V_l ∪ V_{l+1}]) >= k |V_l ∪ V_{l+1}|. Throws
/// HypothesisNotMet if there is none.
LayerPair dense_layer_pair(const Graph& g, const LayerDecomposition& layers, int k);

/// Edges between V_l and V_{l+1} only, on the vertex set V_l ∪ V_{l+1}.
/// Bipartite by construction.
Subgraph cross_layer_graph(const Graph& g, const LayerDecomposition& layers, int l);

}  // namespace cyclespec
