#include "cyclespec/generators.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <vector>

#include "cyclespec/errors.hpp"
#include "cyclespec/rng.hpp"

namespace cyclespec {
namespace {

constexpr int kMatchingRedraws = 1000;

bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

void require(bool ok, const char* what) {
    if (!ok) throw InvalidArgument(what);
}

std::string fmt_double(double p) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

Graph projective_incidence_graph(int q) {
    // Normalised homogeneous coordinates: first nonzero entry is 1.
    std::vector<std::array<int, 3>> pts;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});
    const auto count = static_cast<Vertex>(pts.size());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < count; ++i)
        for (Vertex j = 0; j < count; ++j) {
            const auto& p = pts[static_cast<std::size_t>(i)];
            const auto& l = pts[static_cast<std::size_t>(j)];
            if ((p[0] * l[0] + p[1] * l[1] + p[2] * l[2]) % q == 0) edges.emplace_back(i, count + j);
        }
    return Graph(2 * count, edges);
}

Graph regular_bipartite_graph(int n, int d, SplitMix64& rng) {
    std::vector<std::vector<Vertex>> taken(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    for (int m = 0; m < d; ++m) {
        bool placed = false;
        for (int attempt = 0; attempt < kMatchingRedraws && !placed; ++attempt) {
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[static_cast<std::size_t>(i)], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
            placed = true;
            for (int i = 0; i < n && placed; ++i) {
                const auto& t = taken[static_cast<std::size_t>(i)];
                placed = std::find(t.begin(), t.end(), perm[static_cast<std::size_t>(i)]) == t.end();
            }
        }
        if (!placed) throw BudgetExceeded("regular_bipartite: matching redraw budget exhausted");
        for (int i = 0; i < n; ++i) {
            taken[static_cast<std::size_t>(i)].push_back(perm[static_cast<std::size_t>(i)]);
            edges.emplace_back(i, n + perm[static_cast<std::size_t>(i)]);
        }
    }
    return Graph(2 * n, edges);
}

}  // namespace

std::string_view model_name(Model m) {
    switch (m) {
        case Model::Hypercube: return "hypercube";
        case Model::CompleteBipartite: return "complete-bipartite";
        case Model::RandomBipartite: return "random-bipartite";
        case Model::RegularBipartite: return "regular-bipartite";
        case Model::ProjectiveIncidence: return "projective";
        case Model::Complete: return "complete";
        case Model::Cycle: return "cycle";
        case Model::RandomGraph: return "random";
    }
    return "?";
}

Model parse_model(std::string_view name) {
    for (Model m : {Model::Hypercube, Model::CompleteBipartite, Model::RandomBipartite, Model::RegularBipartite,
                    Model::ProjectiveIncidence, Model::Complete, Model::Cycle, Model::RandomGraph})
        if (model_name(m) == name) return m;
    throw InvalidArgument("unknown model '" + std::string(name) + "'");
}

GenSpec GenSpec::hypercube(int d) {
    GenSpec s;
    s.model = Model::Hypercube;
    s.d = d;
    return s;
}
GenSpec GenSpec::complete_bipartite(int a, int b) {
    GenSpec s;
    s.model = Model::CompleteBipartite;
    s.a = a;
    s.b = b;
    return s;
}
GenSpec GenSpec::random_bipartite(int n1, int n2, double p, std::uint64_t seed) {
    GenSpec s;
    s.model = Model::RandomBipartite;
    s.n1 = n1;
    s.n2 = n2;
    s.p = p;
    s.seed = seed;
    return s;
}
GenSpec GenSpec::regular_bipartite(int n, int d, std::uint64_t seed) {
    GenSpec s;
    s.model = Model::RegularBipartite;
    s.n = n;
    s.d = d;
    s.seed = seed;
    return s;
}
GenSpec GenSpec::projective_incidence(int q) {
    GenSpec s;
    s.model = Model::ProjectiveIncidence;
    s.q = q;
    return s;
}
GenSpec GenSpec::complete(int n) {
    GenSpec s;
    s.model = Model::Complete;
    s.n = n;
    return s;
}
GenSpec GenSpec::cycle(int n) {
    GenSpec s;
    s.model = Model::Cycle;
    s.n = n;
    return s;
}
GenSpec GenSpec::random_graph(int n, double p, std::uint64_t seed) {
    GenSpec s;
    s.model = Model::RandomGraph;
    s.n = n;
    s.p = p;
    s.seed = seed;
    return s;
}

std::string GenSpec::describe() const {
    std::string out = "gen: model=" + std::string(model_name(model));
    auto kv = [&](const char* key, const std::string& v) { out += std::string(" ") + key + "=" + v; };
    switch (model) {
        case Model::Hypercube: kv("d", std::to_string(d)); break;
        case Model::CompleteBipartite: kv("a", std::to_string(a)); kv("b", std::to_string(b)); break;
        case Model::RandomBipartite:
            kv("n1", std::to_string(n1));
            kv("n2", std::to_string(n2));
            kv("p", fmt_double(p));
            kv("seed", std::to_string(seed));
            break;
        case Model::RegularBipartite:
            kv("n", std::to_string(n));
            kv("d", std::to_string(d));
            kv("seed", std::to_string(seed));
            break;
        case Model::ProjectiveIncidence: kv("q", std::to_string(q)); break;
        case Model::Complete:
        case Model::Cycle: kv("n", std::to_string(n)); break;
        case Model::RandomGraph:
            kv("n", std::to_string(n));
            kv("p", fmt_double(p));
            kv("seed", std::to_string(seed));
            break;
    }
    return out;
}

Graph generate(const GenSpec& s) {
    std::vector<Edge> edges;
    SplitMix64 rng(s.seed);
    switch (s.model) {
        case Model::Hypercube: {
            require(s.d >= 0 && s.d <= 24, "hypercube needs 0 <= d <= 24");
            const Vertex n = Vertex{1} << s.d;
            for (Vertex v = 0; v < n; ++v)
                for (int bit = 0; bit < s.d; ++bit)
                    if (Vertex w = v ^ (Vertex{1} << bit); v < w) edges.emplace_back(v, w);
            return Graph(n, edges);
        }
        case Model::CompleteBipartite:
            require(s.a >= 0 && s.b >= 0, "complete_bipartite needs a, b >= 0");
            for (Vertex i = 0; i < s.a; ++i)
                for (Vertex j = 0; j < s.b; ++j) edges.emplace_back(i, s.a + j);
            return Graph(s.a + s.b, edges);
        case Model::RandomBipartite:
            require(s.n1 >= 0 && s.n2 >= 0, "random_bipartite needs n1, n2 >= 0");
            require(s.p >= 0.0 && s.p <= 1.0, "edge probability must lie in [0, 1]");
            for (Vertex i = 0; i < s.n1; ++i)
                for (Vertex j = 0; j < s.n2; ++j)
                    if (rng.bernoulli(s.p)) edges.emplace_back(i, s.n1 + j);
            return Graph(s.n1 + s.n2, edges);
        case Model::RegularBipartite:
            require(s.n >= 1 && s.d >= 0 && s.d <= s.n, "regular_bipartite needs 0 <= d <= n, n >= 1");
            return regular_bipartite_graph(s.n, s.d, rng);
        case Model::ProjectiveIncidence:
            require(is_prime(s.q) && s.q <= 97, "projective_incidence needs a prime q <= 97");
            return projective_incidence_graph(s.q);
        case Model::Complete:
            require(s.n >= 0, "complete needs n >= 0");
            for (Vertex i = 0; i < s.n; ++i)
                for (Vertex j = i + 1; j < s.n; ++j) edges.emplace_back(i, j);
            return Graph(s.n, edges);
        case Model::Cycle:
            require(s.n >= 3, "cycle needs n >= 3");
            for (Vertex i = 0; i < s.n; ++i) edges.emplace_back(i, (i + 1) % s.n);
            return Graph(s.n, edges);
        case Model::RandomGraph:
            require(s.n >= 0, "random graph needs n >= 0");
            require(s.p >= 0.0 && s.p <= 1.0, "edge probability must lie in [0, 1]");
            for (Vertex i = 0; i < s.n; ++i)
                for (Vertex j = i + 1; j < s.n; ++j)
                    if (rng.bernoulli(s.p)) edges.emplace_back(i, j);
            return Graph(s.n, edges);
    }
    throw InvalidArgument("unknown model");
}

}  // namespace cyclespec
