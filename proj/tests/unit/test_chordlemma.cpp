#include <doctest.h>

#include "cyclespec/chordlemma.hpp"
#include "cyclespec/errors.hpp"
#include "helpers.hpp"

using namespace cyclespec;

namespace {

ChordedCycle positions_cycle(int L, int a, int b) {
    ChordedCycle h;
    for (int i = 0; i < L; ++i) h.cycle.push_back(i);
    h.chord = {a, b};
    return h;
}

// Independent oracle: BFS over (vertex, visited-set) states on the theta
// graph, small L only.
std::set<int> naive_ab_lengths(const ChordedCycle& h, const PartitionAB& part) {
    const int L = h.length();
    auto adj = [&](int x) {
        std::vector<int> out{(x + 1) % L, (x + L - 1) % L};
        if (x == h.chord.first) out.push_back(h.chord.second);
        if (x == h.chord.second) out.push_back(h.chord.first);
        return out;
    };
    std::set<int> lens;
    std::function<void(int, std::uint32_t, int, bool)> go = [&](int x, std::uint32_t used, int len, bool start_a) {
        if (len > 0 && part.is_a(x) != start_a) lens.insert(len);
        for (int y : adj(x))
            if (!(used >> y & 1)) go(y, used | (1u << y), len + 1, start_a);
    };
    for (int s = 0; s < L; ++s)
        if (part.is_a(s)) go(s, 1u << s, 0, true);
    return lens;
}

std::set<int> keys(const std::map<int, PathCertificate>& m) {
    std::set<int> s;
    for (const auto& kv : m) s.insert(kv.first);
    return s;
}

}  // namespace

TEST_CASE("smallest missing m") {
    auto h6 = positions_cycle(6, 0, 3);
    CHECK_FALSE(smallest_missing_m(h6, PartitionAB::from_a_positions(6, {0, 1, 2})).has_value());
    CHECK(smallest_missing_m(h6, PartitionAB::from_a_positions(6, {0, 2, 4})) == 2);
    CHECK(smallest_missing_m(h6, PartitionAB::from_a_positions(6, {0, 2, 3, 5})) == 3);
}

TEST_CASE("worked spectra") {
    auto h4 = positions_cycle(4, 0, 2);
    auto a0 = PartitionAB::from_a_positions(4, {0});
    auto r = path_spectrum_constructive(h4, a0);
    CHECK_FALSE(r.bipartite_exception);
    CHECK(keys(r.paths) == std::set<int>{1, 2, 3});
    for (const auto& [l, p] : r.paths) {
        CHECK(p.length() == l);
        CHECK(check_path_certificate(h4, a0, p).empty());
    }

    auto h6 = positions_cycle(6, 0, 3);
    auto alt = PartitionAB::from_a_positions(6, {0, 2, 4});
    auto ex = path_spectrum_constructive(h6, alt);
    CHECK(ex.bipartite_exception);
    CHECK(ex.trace.branch == ChordCase::BipartiteException);
    CHECK(keys(ex.paths) == std::set<int>{1, 3, 5});
    CHECK(keys(path_spectrum_oracle(h6, alt)) == std::set<int>{1, 3, 5});

    auto a01 = PartitionAB::from_a_positions(6, {0, 1});
    CHECK(keys(path_spectrum_constructive(h6, a01).paths) == std::set<int>{1, 2, 3, 4, 5});
    CHECK(keys(path_spectrum_oracle(h4, a0)) == std::set<int>{1, 2, 3});
}

TEST_CASE("trivial partitions are rejected") {
    auto h6 = positions_cycle(6, 0, 3);
    auto all = PartitionAB::from_a_positions(6, {0, 1, 2, 3, 4, 5});
    CHECK_FALSE(all.nontrivial());
    CHECK_THROWS_AS(path_spectrum_constructive(h6, all), InvalidArgument);
    CHECK_THROWS_AS(path_spectrum_constructive(h6, PartitionAB::from_a_positions(6, {})), InvalidArgument);
    CHECK_THROWS_AS(path_spectrum_oracle(h6, all), InvalidArgument);
}

TEST_CASE("malformed chorded cycles are rejected") {
    auto part = PartitionAB::from_a_positions(6, {0});
    CHECK_THROWS_AS(path_spectrum_constructive(positions_cycle(6, 0, 1), part), InvalidArgument);
    CHECK_THROWS_AS(path_spectrum_constructive(positions_cycle(6, 0, 5), part), InvalidArgument);
    CHECK_THROWS_AS(path_spectrum_constructive(positions_cycle(6, 0, 7), part), InvalidArgument);
}

TEST_CASE("path certificates are checked") {
    auto h = positions_cycle(6, 0, 3);
    auto part = PartitionAB::from_a_positions(6, {0});
    CHECK(check_path_certificate(h, part, {{0, 1}}).empty());
    CHECK(check_path_certificate(h, part, {{0, 3, 4}}).empty());
    CHECK_FALSE(check_path_certificate(h, part, {{0, 2}}).empty());     // not adjacent
    CHECK_FALSE(check_path_certificate(h, part, {{1, 2}}).empty());     // starts in B
    CHECK_FALSE(check_path_certificate(h, part, {{0, 1, 0}}).empty());  // repeats
}

TEST_CASE("constructive matches a naive oracle for every small case") {
    for (int L = 4; L <= 9; ++L)
        for (int b = 2; b <= L - 2; ++b) {
            auto h = positions_cycle(L, 0, b);
            ChordedPathTable table(h);
            for (std::uint32_t mask = 1; mask + 1 < (1u << L); ++mask) {
                PartitionAB part;
                for (int i = 0; i < L; ++i) part.in_a.push_back(static_cast<std::uint8_t>(mask >> i & 1));
                auto naive = naive_ab_lengths(h, part);
                auto built = path_spectrum_constructive(h, part);
                REQUIRE_MESSAGE(keys(built.paths) == naive, "L=" << L << " chord=" << b << " mask=" << mask);
                std::uint64_t bits = 0;
                for (int l : naive) bits |= 1ULL << l;
                CHECK(table.lengths_mask(part) == bits);
                CHECK(lengths_mask(built) == bits);
            }
        }
}

TEST_CASE("exception fires exactly on alternating partitions with crossing chords") {
    for (int L = 4; L <= 10; L += 2)
        for (int b = 2; b <= L - 2; ++b) {
            auto h = positions_cycle(L, 0, b);
            for (std::uint32_t mask = 1; mask + 1 < (1u << L); ++mask) {
                PartitionAB part;
                bool alternating = true;
                for (int i = 0; i < L; ++i) {
                    part.in_a.push_back(static_cast<std::uint8_t>(mask >> i & 1));
                    if (i && part.in_a[static_cast<std::size_t>(i)] == part.in_a[static_cast<std::size_t>(i - 1)]) alternating = false;
                }
                bool crossing = part.is_a(0) != part.is_a(b);
                CHECK(path_spectrum_constructive(h, part).bipartite_exception == (alternating && crossing));
            }
        }
}

TEST_CASE("oracle budget on long cycles") {
    auto h = positions_cycle(61, 0, 30);
    CHECK_THROWS_AS(path_spectrum_oracle(h, PartitionAB::from_a_positions(61, {0})), BudgetExceeded);
}
