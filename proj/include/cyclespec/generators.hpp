#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cyclespec/graph.hpp"

namespace cyclespec {

enum class Model {
    Hypercube,
    CompleteBipartite,
    RandomBipartite,
    RegularBipartite,
    ProjectiveIncidence,
    Complete,
    Cycle,
    RandomGraph,
};

std::string_view model_name(Model m);
Model parse_model(std::string_view name);

/// Parameters for one generated graph. Only the fields a model uses matter.
struct GenSpec {
    Model model = Model::Cycle;
    int d = 0;        // hypercube dimension; regular_bipartite degree
    int a = 0, b = 0;  // complete_bipartite sides
    int n = 0;        // complete, cycle, random_graph, regular_bipartite side
    int n1 = 0, n2 = 0;  // random_bipartite sides
    int q = 0;        // projective plane order (prime)
    double p = 0.0;   // edge probability
    std::uint64_t seed = 0;

    static GenSpec hypercube(int d);
    static GenSpec complete_bipartite(int a, int b);
    static GenSpec random_bipartite(int n1, int n2, double p, std::uint64_t seed);
    static GenSpec regular_bipartite(int n, int d, std::uint64_t seed);
    static GenSpec projective_incidence(int q);
    static GenSpec complete(int n);
    static GenSpec cycle(int n);
    static GenSpec random_graph(int n, double p, std::uint64_t seed);

    /// One-line "gen: model=... key=value ..." record for file headers.
    std::string describe() const;
};

/// Deterministic: identical specs give identical graphs.
///
/// Vertex layouts: complete_bipartite puts side a on 0..a-1; random_bipartite
/// draws one Bernoulli(p) per pair (i, j) in lexicographic order with i on
/// the left side (0..n1-1) and n1+j on the right; regular_bipartite unions d
/// uniformly random perfect matchings between 0..n-1 and n..2n-1,
/// redrawing a matching that collides with an earlier one (at most 1000
/// redraws each); projective_incidence puts the q^2+q+1 points first and the
/// lines after them; random_graph draws pairs (i, j), i < j, in
/// lexicographic order.
Graph generate(const GenSpec& spec);

}  // namespace cyclespec
