#include "cyclespec/pipeline.hpp"

#include <algorithm>
#include <set>

#include "cyclespec/errors.hpp"
#include "cyclespec/extract.hpp"

namespace cyclespec {
namespace {

inline std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// Runs `f`; when the hypotheses held, a HypothesisNotMet from inside is a bug.
template <class F>
auto guarded(bool guaranteed, F&& f) {
    try {
        return f();
    } catch (const HypothesisNotMet& e) {
        if (guaranteed) throw InternalContradiction(std::string("guaranteed step failed: ") + e.what());
        throw;
    }
}

void require_k(int k) {
    if (k < 2) throw InvalidArgument("k must be at least 2");
}

Subgraph working_component(const Graph& g) {
    if (g.empty()) throw HypothesisNotMet("empty graph");
    return densest_component(g);
}

// Gate avg >= factor*k on the working component.
bool average_gate(const Graph& g, int factor, int k, GateMode mode) {
    Rational avg = average_degree(g);
    const int need = factor * k;
    bool met = avg >= need;
    if (!met && mode == GateMode::Strict)
        throw HypothesisNotMet("average degree " + to_string(avg) + " < " + std::to_string(need));
    return met;
}

// Closes the A–B paths of the chorded cycle found in `layer_graph` through
// the BFS tree. `layer_graph` ids are lifted into `host`.
CycleSpectrumCertificate close_through_tree(const Graph& host, const LayerDecomposition& ld, int l,
                                            const Subgraph& layer_graph, int k, bool guaranteed) {
    ChordedCycle h = guarded(guaranteed, [&] { return chorded_cycle(layer_graph.graph, k); });
    h.cycle = layer_graph.lift(h.cycle);

    std::vector<Vertex> leaves;
    for (Vertex v : h.cycle)
        if (ld.depth[idx(v)] == l) leaves.push_back(v);
    std::sort(leaves.begin(), leaves.end());
    if (leaves.size() < 2) throw InternalContradiction("chorded cycle meets the working layer in fewer than 2 vertices");
    SubtreeAssembly tree = assemble_subtree(ld, leaves);

    std::map<Vertex, Vertex> branch_min;
    for (auto [leaf, branch] : tree.branch_of)
        if (!branch_min.count(branch) || leaf < branch_min[branch]) branch_min[branch] = leaf;
    Vertex chosen = std::min_element(branch_min.begin(), branch_min.end(), [](auto& a, auto& b) {
                        return a.second < b.second;
                    })->first;

    PartitionAB part;
    part.in_a.resize(h.cycle.size());
    for (std::size_t i = 0; i < h.cycle.size(); ++i) {
        auto it = tree.branch_of.find(h.cycle[i]);
        part.in_a[i] = it != tree.branch_of.end() && it->second == chosen;
    }
    SpectrumResult spectrum = path_spectrum_constructive(h, part);

    CycleSpectrumCertificate cert;
    cert.k = k;
    cert.girth_used = h.source_girth;
    cert.r = tree.r;
    cert.bfs_root = ld.root;
    cert.layer = l;
    cert.tree_root = tree.tree_root;
    cert.chord_case = spectrum.trace.branch;
    for (const auto& [s, path] : spectrum.paths) {
        Vertex a = h.cycle[static_cast<std::size_t>(path.positions.front())];
        Vertex b = h.cycle[static_cast<std::size_t>(path.positions.back())];
        if (ld.depth[idx(b)] != l) continue;
        if (tree.branch_of.at(a) == tree.branch_of.at(b))
            throw InternalContradiction("A–B path ends in a single branch");
        SpectrumCycle cyc;
        for (int p : path.positions) cyc.vertices.push_back(h.cycle[static_cast<std::size_t>(p)]);
        const auto& up_b = tree.tree_paths.at(b);
        const auto& up_a = tree.tree_paths.at(a);
        cyc.vertices.insert(cyc.vertices.end(), up_b.begin() + 1, up_b.end());
        cyc.vertices.insert(cyc.vertices.end(), up_a.rbegin() + 1, up_a.rend() - 1);
        cyc.length = cyc.vertices.size();
        if (cyc.length != static_cast<std::size_t>(s + 2 * tree.r))
            throw InternalContradiction("closed cycle has unexpected length");
        if (auto chk = verify_cycle(host, cyc.vertices); !chk)
            throw InternalContradiction("closed cycle invalid: " + chk.reason);
        cert.cycles.push_back(std::move(cyc));
    }
    return cert;
}

void finish(CycleSpectrumCertificate& cert, const Subgraph& comp) {
    if (promised_count(cert.parity, cert.k, cert.girth_used) > cert.cycles.size())
        throw InternalContradiction("certificate holds fewer cycles than promised");
    for (auto& c : cert.cycles) c.vertices = comp.lift(c.vertices);
    cert.bfs_root = comp.to_host[idx(cert.bfs_root)];
    cert.tree_root = comp.to_host[idx(cert.tree_root)];
}

}  // namespace

std::string_view parity_name(Parity p) {
    switch (p) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::All: return "all";
    }
    return "?";
}

Parity parse_parity(std::string_view s) {
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
    if (s == "all") return Parity::All;
    throw InvalidArgument("unknown parity '" + std::string(s) + "'");
}

std::size_t promised_count(Parity parity, int k, std::size_t girth_used) {
    if (girth_used < 3) return 0;
    const std::size_t span = (girth_used - 2) * static_cast<std::size_t>(k);
    switch (parity) {
        case Parity::Even: return span / 2;
        case Parity::Odd: return span / 2 + 1;
        case Parity::All: return span + 1;
    }
    return 0;
}

SubtreeAssembly assemble_subtree(const LayerDecomposition& layers, const std::vector<Vertex>& leaves) {
    std::vector<Vertex> cur(leaves);
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    if (cur.size() < 2) throw InvalidArgument("subtree assembly needs at least two leaves");
    const int l = layers.depth.at(idx(cur.front()));
    for (Vertex v : cur)
        if (layers.depth.at(idx(v)) != l) throw InvalidArgument("subtree leaves must share one BFS level");

    SubtreeAssembly out;
    while (cur.size() > 1) {
        for (Vertex& v : cur) v = layers.parent[idx(v)];
        std::sort(cur.begin(), cur.end());
        cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
        ++out.r;
    }
    out.tree_root = cur.front();
    for (Vertex leaf : leaves) {
        std::vector<Vertex> path{leaf};
        for (int i = 0; i < out.r; ++i) path.push_back(layers.parent[idx(path.back())]);
        out.branch_of[leaf] = path[path.size() - 2];
        out.tree_paths[leaf] = std::move(path);
    }
    return out;
}

CycleSpectrumCertificate consecutive_even_cycles(const Graph& g, int k, GateMode mode) {
    require_k(k);
    Subgraph comp = working_component(g);
    const Graph& host = comp.graph;
    if (auto bp = bipartition(host); !bp.is_bipartite())
        throw NotBipartite("graph is not bipartite; odd cycle of length " + std::to_string(bp.odd_cycle_witness.size()));
    const bool guaranteed = average_gate(host, 4, k, mode);

    RadiusCenter rc = radius_center(host);
    LayerDecomposition ld = bfs_layers(host, rc.center);
    LayerPair pair = guarded(guaranteed, [&] { return dense_layer_pair(host, ld, k); });

    CycleSpectrumCertificate cert = close_through_tree(host, ld, pair.layer, pair.graph, k, guaranteed);
    if (cert.chord_case == ChordCase::BipartiteException)
        throw InternalContradiction("one-branch partition coincided with the cycle's bipartition");
    cert.parity = Parity::Even;
    cert.radius_bound = 2 * rc.radius;
    cert.host = "densest-component";
    cert.guaranteed = guaranteed;
    cert.interval_start = 2 * cert.r + 2;
    if (cert.cycles.empty() || static_cast<int>(cert.cycles.front().length) > cert.radius_bound)
        throw InternalContradiction("shortest cycle exceeds twice the radius");
    finish(cert, comp);
    return cert;
}

CycleSpectrumCertificate consecutive_even_cycles_general(const Graph& g, int k, GateMode mode) {
    require_k(k);
    Subgraph comp = working_component(g);
    const bool guaranteed = average_gate(comp.graph, 8, k, mode);
    BipartiteHalf half = spanning_bipartite_half(comp.graph);
    CycleSpectrumCertificate cert = guarded(guaranteed, [&] {
        return consecutive_even_cycles(half.graph, k, guaranteed ? GateMode::Strict : GateMode::Permissive);
    });
    for (auto& c : cert.cycles) c.vertices = comp.lift(c.vertices);
    cert.bfs_root = comp.to_host[idx(cert.bfs_root)];
    cert.tree_root = comp.to_host[idx(cert.tree_root)];
    cert.host = "bipartite-subgraph";
    cert.guaranteed = guaranteed;
    return cert;
}

CycleSpectrumCertificate parity_interval_cycles(const Graph& g, int k, GateMode mode) {
    require_k(k);
    Subgraph comp = working_component(g);
    const Graph& host = comp.graph;
    const bool guaranteed = average_gate(host, 6, k, mode);
    RadiusCenter rc = radius_center(host);
    LayerDecomposition ld = bfs_layers(host, rc.center);
    const auto uk = static_cast<std::size_t>(k);

    std::optional<CycleSpectrumCertificate> cert;
    for (int l = 0; l < static_cast<int>(ld.layers.size()) && !cert; ++l) {
        const auto& layer = ld.layers[idx(l)];
        if (l + 1 < static_cast<int>(ld.layers.size())) {
            Subgraph cross = cross_layer_graph(host, ld, l);
            if (cross.graph.edge_count() >= uk * cross.graph.vertex_count()) {
                cert = close_through_tree(host, ld, l, cross, k, guaranteed);
                if (cert->chord_case == ChordCase::BipartiteException)
                    throw InternalContradiction("one-branch partition coincided with the cycle's bipartition");
                cert->parity = Parity::Even;
                break;
            }
        }
        Subgraph inside = induced_subgraph(host, layer);
        if (inside.graph.edge_count() >= uk * layer.size() && inside.graph.edge_count() > 0) {
            cert = close_through_tree(host, ld, l, inside, k, guaranteed);
            cert->parity = cert->chord_case == ChordCase::BipartiteException ? Parity::Odd : Parity::All;
        }
    }
    if (!cert) {
        if (guaranteed) throw InternalContradiction("no dense layer or layer pair despite average degree >= 6k");
        throw HypothesisNotMet("no BFS layer or layer pair of the required density");
    }
    cert->radius_bound = 2 * rc.radius;
    cert->host = "densest-component";
    cert->guaranteed = guaranteed;
    cert->interval_start = 2 * cert->r + 1;
    finish(*cert, comp);
    return *cert;
}

EvenCycleResult find_even_cycle_2k_bipartite(const Graph& g, int k, GateMode mode) {
    require_k(k);
    if (auto bp = bipartition(g); !bp.is_bipartite()) throw NotBipartite("graph is not bipartite");
    EvenCycleResult res;
    res.k = k;
    res.host = "input";
    auto shortest = shortest_cycle(g);
    res.girth = shortest ? shortest->size() : 0;

    // ceil(2(k-1)/(g-2)); a forest behaves like very large girth.
    const std::size_t two_k = 2 * static_cast<std::size_t>(k);
    const int mult = shortest ? static_cast<int>((two_k - 2 + res.girth - 3) / (res.girth - 2)) : 1;
    const Rational c(4 * mult);
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    res.gate_met = n > 0 && meets_power_gate(g.edge_count(), n, c, k);

    if (shortest && shortest->size() == two_k) {
        res.cycle = *shortest;
        res.branch = "girth";
        return res;
    }
    if (!res.gate_met && mode == GateMode::Strict) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", power_gate_value(n, c, k));
        throw HypothesisNotMet("e=" + std::to_string(g.edge_count()) + " < " + to_string(c) + "*n^(1+1/" +
                               std::to_string(k) + ") = " + buf + " for n=" + std::to_string(n));
    }
    if (!shortest || shortest->size() > two_k || mult < 2) {
        if (res.gate_met) throw InternalContradiction("size gate met but girth exceeds 2k");
        throw HypothesisNotMet("girth exceeds 2k and the size gate fails");
    }

    res.branch = "dense-ball";
    DenseBall ball = guarded(res.gate_met, [&] { return dense_ball(g, c, k); });
    CycleSpectrumCertificate cert = guarded(res.gate_met, [&] {
        return consecutive_even_cycles(ball.subgraph.graph, mult, res.gate_met ? GateMode::Strict : GateMode::Permissive);
    });
    for (const auto& cyc : cert.cycles)
        if (cyc.length == two_k) {
            res.cycle = ball.subgraph.lift(cyc.vertices);
            return res;
        }
    if (res.gate_met) throw InternalContradiction("consecutive even lengths skipped 2k");
    throw HypothesisNotMet("no cycle of length " + std::to_string(two_k) + " in the certified progression");
}

EvenCycleResult find_even_cycle_2k(const Graph& g, int k, GateMode mode) {
    require_k(k);
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    const Rational c(8 * (k - 1));
    const bool gate = n > 0 && meets_power_gate(g.edge_count(), n, c, k);
    if (!gate && mode == GateMode::Strict) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f", power_gate_value(n, c, k));
        throw HypothesisNotMet("e=" + std::to_string(g.edge_count()) + " < " + to_string(c) + "*n^(1+1/" +
                               std::to_string(k) + ") = " + buf + " for n=" + std::to_string(n));
    }
    BipartiteHalf half = spanning_bipartite_half(g);
    EvenCycleResult res = guarded(gate, [&] {
        return find_even_cycle_2k_bipartite(half.graph, k, gate ? GateMode::Strict : GateMode::Permissive);
    });
    res.gate_met = gate;
    res.host = "bipartite-subgraph";
    return res;
}

CycleCheck verify_spectrum(const Graph& g, const CycleSpectrumCertificate& cert) {
    if (cert.k < 2) return {false, "k must be at least 2"};
    if (cert.cycles.empty()) return {false, "certificate has no cycles"};
    for (std::size_t i = 0; i < cert.cycles.size(); ++i) {
        const auto& c = cert.cycles[i];
        if (auto chk = verify_cycle(g, c.vertices); !chk)
            return {false, "cycle " + std::to_string(i) + " (length " + std::to_string(c.length) + "): " + chk.reason};
        if (c.length != c.vertices.size())
            return {false, "cycle " + std::to_string(i) + " declares length " + std::to_string(c.length) + " but has " +
                               std::to_string(c.vertices.size()) + " vertices"};
    }
    const std::size_t step = cert.parity == Parity::All ? 1 : 2;
    for (std::size_t i = 1; i < cert.cycles.size(); ++i)
        if (cert.cycles[i].length != cert.cycles[i - 1].length + step)
            return {false, "progression violated between lengths " + std::to_string(cert.cycles[i - 1].length) +
                               " and " + std::to_string(cert.cycles[i].length)};
    const std::size_t first = cert.cycles.front().length;
    if (cert.parity == Parity::Even && first % 2 != 0) return {false, "parity violated: odd length in even certificate"};
    if (cert.parity == Parity::Odd && first % 2 != 1) return {false, "parity violated: even length in odd certificate"};
    const bool parity_driver = cert.interval_start % 2 == 1;
    const std::size_t expected_first = 2 * static_cast<std::size_t>(cert.r) + (cert.parity == Parity::Even ? 2 : 1);
    if (cert.r < 1 || first != expected_first)
        return {false, "shortest length " + std::to_string(first) + " does not match tree depth r=" + std::to_string(cert.r)};
    if (cert.cycles.size() < promised_count(cert.parity, cert.k, cert.girth_used))
        return {false, "count " + std::to_string(cert.cycles.size()) + " below the promised " +
                           std::to_string(promised_count(cert.parity, cert.k, cert.girth_used))};
    const auto limit = static_cast<std::size_t>(cert.radius_bound) + (parity_driver ? 1 : 0);
    if (first > limit) return {false, "shortest cycle exceeds the radius bound"};
    if (auto gg = girth(g); !gg || *gg > cert.girth_used) return {false, "girth_used below the girth of the graph"};
    if (cert.host == "densest-component") {
        auto comps = connected_components(g);
        Vertex probe = cert.cycles.front().vertices.front();
        for (const auto& comp : comps)
            if (std::binary_search(comp.begin(), comp.end(), probe)) {
                auto rc = radius_center(induced_subgraph(g, comp).graph);
                if (2 * rc.radius != cert.radius_bound)
                    return {false, "radius bound " + std::to_string(cert.radius_bound) + " is not twice the radius " +
                                       std::to_string(rc.radius)};
            }
    }
    return {true, {}};
}

CycleCheck verify_even_cycle(const Graph& g, const EvenCycleResult& res) {
    if (auto chk = verify_cycle(g, res.cycle); !chk) return chk;
    if (res.cycle.size() != 2 * static_cast<std::size_t>(res.k))
        return {false, "cycle length " + std::to_string(res.cycle.size()) + " differs from 2k=" + std::to_string(2 * res.k)};
    return {true, {}};
}

}  // namespace cyclespec
