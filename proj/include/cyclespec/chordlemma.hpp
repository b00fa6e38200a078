#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclespec/extract.hpp"

// A–B paths of every length in a cycle with one chord.
//
// Everything here works on cycle positions 0..L-1 rather than host ids; the
// cycle's vertex ids are only used to validate the input. Position x is
// adjacent to x±1 (mod L) and the two chord ends are adjacent to each other.

namespace cyclespec {

/// Membership of each cycle position in class A (1) or B (0).
struct PartitionAB {
    std::vector<std::uint8_t> in_a;

    bool is_a(int pos) const { return in_a[static_cast<std::size_t>(pos)] != 0; }
    bool nontrivial() const;

    static PartitionAB from_a_positions(int length, const std::vector<int>& a_positions);
};

/// A path through cycle positions, first endpoint in A and last in B.
struct PathCertificate {
    std::vector<int> positions;

    int length() const noexcept { return static_cast<int>(positions.size()) - 1; }
};

enum class ChordCase {
    /// Every length is realised around the cycle without the chord.
    AllChordless,
    /// Chord ends within distance m of each other on the cycle.
    ChordNear,
    /// Chord ends more than m apart; a length-m seed path is extended.
    ChordFar,
    /// Alternating partition with a chord crossing A–B: only odd lengths.
    BipartiteException,
};

std::string_view chord_case_name(ChordCase c);

struct ChordLemmaTrace {
    /// Smallest length with no chordless A–B path.
    std::optional<int> m;
    /// gcd(L, m) and a Bézout pair p*m + q*L = d; meaningful only with m.
    int d = 0;
    std::pair<long long, long long> bezout{0, 0};
    ChordCase branch = ChordCase::AllChordless;
    /// Rotation that puts the chord at (0, chord_span), chord_span <= L/2:
    /// rotated position x is original position (x + rotation) mod L.
    int rotation = 0;
    int chord_span = 0;
    /// The seed offset j chosen for the chord-routed paths (if any) and the
    /// name of the seed family that produced them.
    std::optional<int> seed_j;
    std::string seed_family;
    /// Number of lengths realised through the chord: L/m - 1.
    int extension_count = 0;
};

struct SpectrumResult {
    /// True iff the cycle alternates A/B and the chord crosses A–B.
    bool bipartite_exception = false;
    /// One certificate per realised length. Without the exception this covers
    /// 1..L-1, with it exactly the odd lengths below L.
    std::map<int, PathCertificate> paths;
    ChordLemmaTrace trace;
};

/// Empty when `path` is a valid A–B path in the chorded cycle, else the
/// first violated condition.
std::string check_path_certificate(const ChordedCycle& h, const PartitionAB& part, const PathCertificate& path);

/// Smallest l in 1..L-1 with chi(j) == chi(j+l) for every j, or nullopt.
std::optional<int> smallest_missing_m(const ChordedCycle& h, const PartitionAB& part);

/// Constructive A–B path spectrum following the periodicity argument and
/// its two chord cases. Throws InvalidArgument for malformed input and
/// InternalContradiction if a length outside the exception is not realised.
SpectrumResult path_spectrum_constructive(const ChordedCycle& h, const PartitionAB& part);

/// Realisable lengths with one witness each, by exhaustive DFS over simple
/// paths. L <= 60.
std::map<int, PathCertificate> path_spectrum_oracle(const ChordedCycle& h, const PartitionAB& part);

/// All simple-path lengths between every pair of positions, enumerated once
/// by DFS; answers oracle queries for many partitions of the same shape.
class ChordedPathTable {
public:
    explicit ChordedPathTable(const ChordedCycle& h);

    /// Bit l set iff some A–B path of length l exists.
    std::uint64_t lengths_mask(const PartitionAB& part) const;

private:
    int length_;
    std::vector<std::uint64_t> masks_;  // [s * L + e], s < e
};

/// Bit mask of the lengths in a spectrum result.
std::uint64_t lengths_mask(const SpectrumResult& r);

}  // namespace cyclespec
