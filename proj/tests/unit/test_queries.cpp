#include <doctest.h>

#include "cyclespec/errors.hpp"
#include "cyclespec/queries.hpp"
#include "helpers.hpp"

using namespace cyclespec;
namespace tu = testutil;

TEST_CASE("average degree") {
    CHECK(average_degree(tu::cycle(6)) == 2);
    CHECK(average_degree(tu::kab(3, 3)) == 3);
    CHECK(average_degree(tu::kab(3, 40)) == Rational(240, 43));
    CHECK_THROWS_AS(average_degree(Graph{}), InvalidArgument);
}

TEST_CASE("girth and even girth on small families") {
    CHECK(girth(tu::complete(4)) == 3u);
    CHECK(girth(tu::cycle(5)) == 5u);
    CHECK(girth(tu::cycle(6)) == 6u);
    CHECK_FALSE(girth(tu::path(5)).has_value());
    CHECK(girth(tu::heawood()) == 6u);
    CHECK(girth(tu::cube(8)) == 4u);

    CHECK(even_girth(tu::cycle(6)) == 6u);
    CHECK(even_girth(tu::kab(3, 3)) == 4u);
    CHECK_FALSE(even_girth(tu::path(5)).has_value());
    CHECK_FALSE(even_girth(tu::cycle(5)).has_value());
    CHECK(even_girth(tu::complete(4)) == 4u);
}

TEST_CASE("shortest cycle is a real cycle of girth length") {
    for (unsigned s = 0; s < 30; ++s) {
        auto g = tu::gnp(25, 0.12, s);
        auto c = shortest_cycle(g);
        auto gg = girth(g);
        REQUIRE(c.has_value() == gg.has_value());
        if (c) {
            CHECK(tu::is_cycle(g, *c));
            CHECK(c->size() == *gg);
        }
    }
}

TEST_CASE("girth and even girth agree with exhaustive enumeration") {
    for (unsigned s = 0; s < 60; ++s) {
        auto g = tu::gnp(12, 0.15 + 0.01 * (s % 20), s);
        auto lens = tu::all_cycle_lengths(g);
        std::optional<std::size_t> g0, e0;
        for (int l : lens) {
            if (!g0) g0 = static_cast<std::size_t>(l);
            if (!e0 && l % 2 == 0) e0 = static_cast<std::size_t>(l);
        }
        CHECK(girth(g) == g0);
        CHECK(even_girth(g) == e0);
    }
}

TEST_CASE("bipartition") {
    auto c6 = bipartition(tu::cycle(6));
    CHECK(c6.is_bipartite());
    CHECK(c6.x == std::vector<Vertex>{0, 2, 4});
    CHECK(c6.y == std::vector<Vertex>{1, 3, 5});

    auto tri = bipartition(tu::complete(3));
    CHECK_FALSE(tri.is_bipartite());
    CHECK(tri.odd_cycle_witness.size() == 3);
    CHECK(tu::is_cycle(tu::complete(3), tri.odd_cycle_witness));

    auto q3 = bipartition(tu::cube(3));
    REQUIRE(q3.is_bipartite());
    for (Vertex v = 0; v < 8; ++v) CHECK(q3.side[static_cast<std::size_t>(v)] == (__builtin_popcount(v) & 1));

    for (unsigned s = 0; s < 30; ++s) {
        auto g = tu::gnp(30, 0.08, s);
        auto b = bipartition(g);
        if (b.is_bipartite()) {
            for (auto [u, v] : g.edges()) CHECK(b.side[static_cast<std::size_t>(u)] != b.side[static_cast<std::size_t>(v)]);
        } else {
            CHECK(b.odd_cycle_witness.size() % 2 == 1);
            CHECK(tu::is_cycle(g, b.odd_cycle_witness));
        }
    }
}

TEST_CASE("bfs layers") {
    auto c6 = bfs_layers(tu::cycle(6), 0);
    CHECK(c6.layers == std::vector<std::vector<Vertex>>{{0}, {1, 5}, {2, 4}, {3}});
    CHECK(c6.eccentricity() == 3);

    auto k33 = bfs_layers(tu::kab(3, 3), 0);
    CHECK(k33.layers == std::vector<std::vector<Vertex>>{{0}, {3, 4, 5}, {1, 2}});

    auto q8 = bfs_layers(tu::cube(8), 0);
    const std::size_t binom[] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
    REQUIRE(q8.layers.size() == 9);
    for (int i = 0; i <= 8; ++i) {
        CHECK(q8.layers[static_cast<std::size_t>(i)].size() == binom[i]);
        for (Vertex v : q8.layers[static_cast<std::size_t>(i)]) CHECK(__builtin_popcount(v) == i);
    }
    for (Vertex v = 1; v < 256; ++v) {
        Vertex p = q8.parent[static_cast<std::size_t>(v)];
        CHECK(q8.depth[static_cast<std::size_t>(p)] + 1 == q8.depth[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("radius and center") {
    auto c6 = radius_center(tu::cycle(6));
    CHECK(c6.radius == 3);
    CHECK(c6.center == 0);
    auto st = radius_center(tu::star(5));
    CHECK(st.radius == 1);
    CHECK(st.center == 0);
    auto q8 = radius_center(tu::cube(8));
    CHECK(q8.radius == 8);
    CHECK(q8.center == 0);
    CHECK_THROWS_AS(radius_center(Graph{}), InvalidArgument);
    std::vector<Edge> two{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(radius_center(Graph(4, two)), InvalidArgument);

    for (unsigned s = 0; s < 10; ++s) {
        auto g = tu::gnp(30, 0.2, s);
        if (connected_components(g).size() != 1) continue;
        int best = 1 << 30;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            auto d = tu::naive_dist(g, v);
            best = std::min(best, *std::max_element(d.begin(), d.end()));
        }
        CHECK(radius_center(g).radius == best);
    }
}

TEST_CASE("spanning bipartite half") {
    auto c4 = spanning_bipartite_half(tu::cycle(4));
    CHECK(c4.graph.edge_count() == 4);
    auto tri = spanning_bipartite_half(tu::complete(3));
    CHECK(tri.graph.edge_count() == 2);
    auto k5 = spanning_bipartite_half(tu::complete(5));
    CHECK(k5.graph.edge_count() >= 5);
    CHECK(k5.graph.edge_count() == static_cast<std::size_t>(tu::naive_max_cut(tu::complete(5))));

    for (unsigned s = 0; s < 30; ++s) {
        auto g = tu::gnp(40, 0.2, s);
        auto h = spanning_bipartite_half(g);
        CHECK(h.graph.vertex_count() == g.vertex_count());
        for (auto [u, v] : h.graph.edges()) {
            CHECK(g.has_edge(u, v));
            CHECK(h.side[static_cast<std::size_t>(u)] != h.side[static_cast<std::size_t>(v)]);
        }
        for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(2 * h.graph.degree(v) >= g.degree(v));
    }
}

TEST_CASE("verify_cycle") {
    auto c6 = tu::cycle(6);
    std::vector<Vertex> ok{0, 1, 2, 3, 4, 5}, gap{0, 1, 2}, rep{0, 1, 0}, out{0, 1, 9};
    CHECK(verify_cycle(c6, ok).ok);
    auto r1 = verify_cycle(c6, gap);
    CHECK_FALSE(r1.ok);
    CHECK(r1.reason.find("2-0") != std::string::npos);
    CHECK_FALSE(verify_cycle(c6, rep).ok);
    CHECK_FALSE(verify_cycle(c6, out).ok);
}
