#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cyclespec/chordlemma.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/queries.hpp"

namespace cyclespec {

/// Strict refuses inputs outside the proven hypotheses; permissive runs the
/// construction anyway and marks the result as not guaranteed.
enum class GateMode { Strict, Permissive };

enum class Parity { Even, Odd, All };

std::string_view parity_name(Parity p);
Parity parse_parity(std::string_view s);

/// Minimal subtree of the BFS tree (levels <= l) spanning a set of level-l
/// vertices. Its root branches into at least two children.
struct SubtreeAssembly {
    Vertex tree_root = 0;
    /// Distance from level l up to tree_root.
    int r = 0;
    /// Level-l vertex -> child of tree_root whose subtree holds it.
    std::map<Vertex, Vertex> branch_of;
    /// Level-l vertex -> its tree path up to and including tree_root.
    std::map<Vertex, std::vector<Vertex>> tree_paths;
};

/// Builds the assembly for `leaves`, all on level `l` of `layers`.
SubtreeAssembly assemble_subtree(const LayerDecomposition& layers, const std::vector<Vertex>& leaves);

struct SpectrumCycle {
    std::size_t length = 0;
    std::vector<Vertex> vertices;
};

struct CycleSpectrumCertificate {
    int k = 0;
    /// Girth of the core the chorded cycle was taken from.
    std::size_t girth_used = 0;
    /// Depth of the tree root above the working layer.
    int r = 0;
    Parity parity = Parity::Even;
    /// Sorted by length; consecutive lengths differ by 2 (1 for Parity::All).
    std::vector<SpectrumCycle> cycles;
    /// Twice the radius of the host the construction ran on.
    int radius_bound = 0;
    /// "densest-component" or "bipartite-subgraph".
    std::string host;
    bool guaranteed = true;
    Vertex bfs_root = 0;
    int layer = 0;
    Vertex tree_root = 0;
    /// 2r+2 for the bipartite driver, 2r+1 for the parity driver.
    int interval_start = 0;
    ChordCase chord_case = ChordCase::AllChordless;
};

/// Number of cycles guaranteed for a certificate of this shape.
std::size_t promised_count(Parity parity, int k, std::size_t girth_used);

/// Cycles of consecutive even lengths 2r+2, 2r+4, ... in a bipartite graph of
/// average degree >= 4k, k >= 2. Runs on the densest component.
///
/// Central vertex -> BFS layers -> dense layer pair G' -> chorded cycle H in
/// G' -> minimal BFS subtree over H's vertices on the lower layer -> A =
/// those vertices in one branch -> A–B paths of every length in H -> each
/// even path closed through the tree into a cycle of length s + 2r.
CycleSpectrumCertificate consecutive_even_cycles(const Graph& g, int k, GateMode mode = GateMode::Strict);

/// General graphs with average degree >= 8k: the same construction on a
/// spanning bipartite subgraph keeping at least half of every degree.
CycleSpectrumCertificate consecutive_even_cycles_general(const Graph& g, int k, GateMode mode = GateMode::Strict);

/// Graphs with average degree >= 6k: either a BFS layer pair whose cross
/// edges have density k (even lengths, as above), or a single layer of
/// average degree >= 2k whose chorded cycle gives cycles of every length or,
/// when the layer partition is the cycle's bipartition, every odd length.
/// Layers are scanned upward, the pair (l, l+1) before layer l alone.
CycleSpectrumCertificate parity_interval_cycles(const Graph& g, int k, GateMode mode = GateMode::Strict);

struct EvenCycleResult {
    std::vector<Vertex> cycle;
    int k = 0;
    bool gate_met = false;
    /// "girth" when the shortest cycle already has length 2k, else
    /// "dense-ball".
    std::string branch;
    /// Girth of the bipartite graph the search ran on (0 for forests).
    std::size_t girth = 0;
    std::string host;
};

/// Cycle of length exactly 2k in a bipartite graph with
/// e >= 4 ceil(2(k-1)/(g-2)) n^(1+1/k). A girth of exactly 2k short-circuits
/// the size gate.
EvenCycleResult find_even_cycle_2k_bipartite(const Graph& g, int k, GateMode mode = GateMode::Strict);

/// Cycle of length exactly 2k in any graph with e >= 8(k-1) n^(1+1/k).
EvenCycleResult find_even_cycle_2k(const Graph& g, int k, GateMode mode = GateMode::Strict);

/// Re-checks every cycle against `g`, the length progression (step, parity,
/// count against the promise), the start 2r+1 or 2r+2, the radius bound
/// and, for densest-component hosts, that the bound is twice the radius.
CycleCheck verify_spectrum(const Graph& g, const CycleSpectrumCertificate& cert);

/// Cycle validity plus length exactly 2k.
CycleCheck verify_even_cycle(const Graph& g, const EvenCycleResult& res);

}  // namespace cyclespec
