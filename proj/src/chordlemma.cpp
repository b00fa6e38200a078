#include "cyclespec/chordlemma.hpp"

#include <algorithm>
#include <numeric>

#include "cyclespec/errors.hpp"

namespace cyclespec {
namespace {

constexpr int kOracleMaxLength = 60;

inline int mod(int x, int n) { return ((x % n) + n) % n; }

void validate(const ChordedCycle& h, const PartitionAB& part) {
    const int len = h.length();
    if (len < 4) throw InvalidArgument("a chorded cycle needs at least 4 vertices");
    auto [a, b] = h.chord;
    if (a < 0 || b < 0 || a >= len || b >= len || a == b) throw InvalidArgument("chord positions out of range");
    int gap = mod(a - b, len);
    if (gap == 1 || gap == len - 1) throw InvalidArgument("chord joins cycle-adjacent positions");
    std::vector<Vertex> ids(h.cycle);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) throw InvalidArgument("repeated cycle vertex");
    if (static_cast<int>(part.in_a.size()) != len) throw InvalidArgument("partition size differs from cycle length");
    if (!part.nontrivial()) throw InvalidArgument("trivial partition: both classes must be nonempty");
}

bool adjacent(int x, int y, int len, std::pair<int, int> chord) {
    int gap = mod(x - y, len);
    if (gap == 1 || gap == len - 1) return true;
    return (x == chord.first && y == chord.second) || (x == chord.second && y == chord.first);
}

std::vector<std::vector<int>> position_adjacency(int len, std::pair<int, int> chord) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(len));
    for (int x = 0; x < len; ++x) {
        adj[static_cast<std::size_t>(x)] = {mod(x - 1, len), mod(x + 1, len)};
    }
    adj[static_cast<std::size_t>(chord.first)].push_back(chord.second);
    adj[static_cast<std::size_t>(chord.second)].push_back(chord.first);
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    long long x1 = 0, y1 = 0;
    long long g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// Working frame: rotated so the chord is (0, r), r <= L/2.
class Frame {
public:
    Frame(const ChordedCycle& h, const PartitionAB& part) : len_(h.length()), part_(part) {
        auto [a, b] = h.chord;
        int forward = mod(b - a, len_);
        if (forward <= len_ - forward) {
            base_ = a;
            span_ = forward;
        } else {
            base_ = b;
            span_ = len_ - forward;
        }
    }

    int len() const { return len_; }
    int base() const { return base_; }
    int span() const { return span_; }
    int orig(int x) const { return mod(x + base_, len_); }
    bool chi(int x) const { return part_.is_a(orig(x)); }

    // Rotated positions -> certificate in original positions, A end first.
    PathCertificate certificate(std::vector<int> rotated) const {
        PathCertificate p;
        p.positions.reserve(rotated.size());
        for (int x : rotated) p.positions.push_back(orig(x));
        if (!part_.is_a(p.positions.front())) std::reverse(p.positions.begin(), p.positions.end());
        return p;
    }

private:
    int len_;
    int base_ = 0;
    int span_ = 0;
    const PartitionAB& part_;
};

// Path made of an arc ending at chord end 0, the chord, and an arc starting
// at chord end r. Arc lengths a and b run in directions da and db.
struct ChordRoute {
    int a, da, b, db;

    std::vector<int> positions(int r, int len) const {
        std::vector<int> out;
        for (int i = a; i >= 1; --i) out.push_back(mod(i * da, len));
        out.push_back(0);
        out.push_back(r);
        for (int i = 1; i <= b; ++i) out.push_back(mod(r + i * db, len));
        return out;
    }
    int first(int len) const { return mod(a * da, len); }
    int last(int r, int len) const { return mod(r + b * db, len); }
};

// Interior capacity of the arc a segment runs into. From 0 forward and from
// r backward use the arc 1..r-1; the other two use r+1..L-1.
int arc_capacity(bool from_zero, int dir, int r, int len) {
    bool inner = from_zero ? dir > 0 : dir < 0;
    return inner ? r - 1 : len - r - 1;
}

void chordless_paths(const Frame& f, const std::optional<int>& m, std::map<int, PathCertificate>& out) {
    const int len = f.len();
    for (int l = 1; l < len; ++l) {
        if (m && l % *m == 0) continue;
        int j = 0;
        while (j < len && f.chi(j) == f.chi(j + l)) ++j;
        if (j == len) throw InternalContradiction("no chordless A-B path of length " + std::to_string(l));
        std::vector<int> pos;
        for (int i = 0; i <= l; ++i) pos.push_back(mod(j + i, len));
        out[l] = f.certificate(std::move(pos));
    }
}

bool chord_near(const Frame& f, int m, ChordLemmaTrace& trace, std::map<int, PathCertificate>& out) {
    const int len = f.len(), r = f.span();
    std::optional<int> seed;
    for (int j = -m + 1; j <= 0 && !seed; ++j)
        if (f.chi(j) != f.chi(j + m + r - 1)) seed = j;
    if (!seed) return false;
    const int j = *seed;
    for (int t = 1; t * m < len; ++t) {
        std::vector<int> pos;
        for (int x = j; x <= 0; ++x) pos.push_back(mod(x, len));
        for (int x = r; x <= j + t * m + r - 1; ++x) pos.push_back(mod(x, len));
        out[t * m] = f.certificate(std::move(pos));
    }
    trace.seed_j = j;
    trace.seed_family = "near-chord arc";
    return true;
}

bool chord_far(const Frame& f, int m, ChordLemmaTrace& trace, std::map<int, PathCertificate>& out) {
    const int len = f.len(), r = f.span();
    struct Candidate {
        ChordRoute route;
        std::optional<int> j;
        const char* family;
    };
    std::vector<Candidate> candidates;
    for (int j = -m + 1; j < 0; ++j) {
        candidates.push_back({{-j, -1, j + m - 1, -1}, j, "back-back seed"});
        candidates.push_back({{m + j, +1, -j - 1, +1}, j, "forward-forward seed"});
    }
    candidates.push_back({{0, -1, m - 1, -1}, std::nullopt, "chord-then-back seed"});
    candidates.push_back({{0, +1, m - 1, +1}, std::nullopt, "chord-then-forward seed"});

    for (const auto& cand : candidates) {
        ChordRoute route = cand.route;
        if (f.chi(route.first(len)) == f.chi(route.last(r, len))) continue;
        const int cap_a = arc_capacity(true, route.da, r, len);
        const int cap_b = arc_capacity(false, route.db, r, len);
        out[route.a + route.b + 1] = f.certificate(route.positions(r, len));
        while (route.a + m <= cap_a) {
            route.a += m;
            out[route.a + route.b + 1] = f.certificate(route.positions(r, len));
        }
        while (route.b + m <= cap_b) {
            route.b += m;
            out[route.a + route.b + 1] = f.certificate(route.positions(r, len));
        }
        trace.seed_j = cand.j;
        trace.seed_family = cand.family;
        return true;
    }
    return false;
}

}  // namespace

bool PartitionAB::nontrivial() const {
    bool any_a = std::any_of(in_a.begin(), in_a.end(), [](auto x) { return x != 0; });
    bool any_b = std::any_of(in_a.begin(), in_a.end(), [](auto x) { return x == 0; });
    return any_a && any_b;
}

PartitionAB PartitionAB::from_a_positions(int length, const std::vector<int>& a_positions) {
    PartitionAB p;
    p.in_a.assign(static_cast<std::size_t>(length), 0);
    for (int x : a_positions) {
        if (x < 0 || x >= length) throw InvalidArgument("position out of range");
        p.in_a[static_cast<std::size_t>(x)] = 1;
    }
    return p;
}

std::string_view chord_case_name(ChordCase c) {
    switch (c) {
        case ChordCase::AllChordless: return "all-chordless";
        case ChordCase::ChordNear: return "chord-near";
        case ChordCase::ChordFar: return "chord-far";
        case ChordCase::BipartiteException: return "bipartite-exception";
    }
    return "?";
}

std::string check_path_certificate(const ChordedCycle& h, const PartitionAB& part, const PathCertificate& path) {
    const int len = h.length();
    const auto& pos = path.positions;
    if (pos.size() < 2) return "path has no edge";
    std::vector<char> seen(static_cast<std::size_t>(len), 0);
    for (int x : pos) {
        if (x < 0 || x >= len) return "position " + std::to_string(x) + " out of range";
        if (seen[static_cast<std::size_t>(x)]++) return "repeated position " + std::to_string(x);
    }
    for (std::size_t i = 0; i + 1 < pos.size(); ++i)
        if (!adjacent(pos[i], pos[i + 1], len, h.chord))
            return "positions " + std::to_string(pos[i]) + " and " + std::to_string(pos[i + 1]) + " not adjacent";
    if (!part.is_a(pos.front())) return "first endpoint not in A";
    if (part.is_a(pos.back())) return "last endpoint not in B";
    return {};
}

std::optional<int> smallest_missing_m(const ChordedCycle& h, const PartitionAB& part) {
    const int len = h.length();
    if (static_cast<int>(part.in_a.size()) != len) throw InvalidArgument("partition size differs from cycle length");
    if (!part.nontrivial()) throw InvalidArgument("trivial partition: both classes must be nonempty");
    for (int l = 1; l < len; ++l) {
        bool present = false;
        for (int j = 0; j < len && !present; ++j) present = part.is_a(j) != part.is_a((j + l) % len);
        if (!present) return l;
    }
    return std::nullopt;
}

SpectrumResult path_spectrum_constructive(const ChordedCycle& h, const PartitionAB& part) {
    validate(h, part);
    const int len = h.length();
    Frame frame(h, part);
    SpectrumResult res;
    auto& trace = res.trace;
    trace.rotation = frame.base();
    trace.chord_span = frame.span();
    trace.m = smallest_missing_m(h, part);

    if (!trace.m) {
        trace.branch = ChordCase::AllChordless;
        chordless_paths(frame, std::nullopt, res.paths);
    } else {
        const int m = *trace.m;
        long long p = 0, q = 0;
        trace.d = static_cast<int>(ext_gcd(m, len, p, q));
        trace.bezout = {p, q};
        if (trace.d != m || len % m != 0 || 2 * m > len)
            throw InternalContradiction("period argument failed: m=" + std::to_string(m) +
                                        " d=" + std::to_string(trace.d) + " L=" + std::to_string(len));
        trace.extension_count = len / m - 1;
        chordless_paths(frame, m, res.paths);

        bool routed = false;
        if (frame.span() <= m) {
            trace.branch = ChordCase::ChordNear;
            routed = chord_near(frame, m, trace, res.paths);
        } else {
            trace.branch = ChordCase::ChordFar;
            routed = chord_far(frame, m, trace, res.paths);
        }
        if (!routed) {
            bool alternating = m == 2;
            bool crossing = part.is_a(h.chord.first) != part.is_a(h.chord.second);
            if (!alternating || !crossing)
                throw InternalContradiction("no chord route although the partition is not the bipartition");
            trace.branch = ChordCase::BipartiteException;
            res.bipartite_exception = true;
        }
    }

    for (int l = 1; l < len; ++l) {
        bool expected = !res.bipartite_exception || l % 2 == 1;
        auto it = res.paths.find(l);
        if (expected && it == res.paths.end())
            throw InternalContradiction("length " + std::to_string(l) + " not realised");
        if (it != res.paths.end()) {
            if (it->second.length() != l) throw InternalContradiction("certificate length mismatch at " + std::to_string(l));
            if (auto why = check_path_certificate(h, part, it->second); !why.empty())
                throw InternalContradiction("invalid certificate for length " + std::to_string(l) + ": " + why);
        }
    }
    if (static_cast<int>(res.paths.size()) != (res.bipartite_exception ? len / 2 : len - 1))
        throw InternalContradiction("unexpected lengths in spectrum");
    return res;
}

std::map<int, PathCertificate> path_spectrum_oracle(const ChordedCycle& h, const PartitionAB& part) {
    const int len = h.length();
    if (len > kOracleMaxLength) throw BudgetExceeded("path oracle limited to cycles of length <= 60");
    validate(h, part);
    auto adj = position_adjacency(len, h.chord);
    std::map<int, PathCertificate> found;
    std::vector<char> on_path(static_cast<std::size_t>(len), 0);
    std::vector<int> path;
    auto dfs = [&](auto&& self, int x) -> void {
        path.push_back(x);
        on_path[static_cast<std::size_t>(x)] = 1;
        if (path.size() > 1 && !part.is_a(x)) {
            int l = static_cast<int>(path.size()) - 1;
            if (!found.count(l)) found[l] = PathCertificate{path};
        }
        for (int y : adj[static_cast<std::size_t>(x)])
            if (!on_path[static_cast<std::size_t>(y)]) self(self, y);
        on_path[static_cast<std::size_t>(x)] = 0;
        path.pop_back();
    };
    for (int s = 0; s < len; ++s)
        if (part.is_a(s)) dfs(dfs, s);
    return found;
}

ChordedPathTable::ChordedPathTable(const ChordedCycle& h) : length_(h.length()) {
    if (length_ > kOracleMaxLength) throw BudgetExceeded("path oracle limited to cycles of length <= 60");
    auto adj = position_adjacency(length_, h.chord);
    masks_.assign(static_cast<std::size_t>(length_ * length_), 0);
    std::vector<char> on_path(static_cast<std::size_t>(length_), 0);
    for (int s = 0; s < length_; ++s) {
        auto dfs = [&](auto&& self, int x, int depth) -> void {
            on_path[static_cast<std::size_t>(x)] = 1;
            if (x > s) masks_[static_cast<std::size_t>(s * length_ + x)] |= std::uint64_t{1} << depth;
            for (int y : adj[static_cast<std::size_t>(x)])
                if (!on_path[static_cast<std::size_t>(y)]) self(self, y, depth + 1);
            on_path[static_cast<std::size_t>(x)] = 0;
        };
        dfs(dfs, s, 0);
    }
}

std::uint64_t ChordedPathTable::lengths_mask(const PartitionAB& part) const {
    std::uint64_t mask = 0;
    for (int s = 0; s < length_; ++s)
        for (int e = s + 1; e < length_; ++e)
            if (part.is_a(s) != part.is_a(e)) mask |= masks_[static_cast<std::size_t>(s * length_ + e)];
    return mask;
}

std::uint64_t lengths_mask(const SpectrumResult& r) {
    std::uint64_t mask = 0;
    for (const auto& [l, _] : r.paths) mask |= std::uint64_t{1} << l;
    return mask;
}

}  // namespace cyclespec
