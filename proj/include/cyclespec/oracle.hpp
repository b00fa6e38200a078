#pragma once

#include <cstdint>
#include <set>

#include "cyclespec/chordlemma.hpp"
#include "cyclespec/graph.hpp"

namespace cyclespec {

/// Default DFS step budget for the brute-force oracles.
inline constexpr std::uint64_t kDefaultOracleBudget = 2'000'000'000ULL;

/// Budget from the CYCLESPEC_BUDGET environment variable, else the default.
std::uint64_t oracle_budget_from_env();

/// Exact set of cycle lengths <= max_len, by exhaustive search.
///
/// Every cycle is found from its smallest vertex with the second vertex
/// smaller than the last, so each is met in one orientation only. The
/// search for a length stops at its first witness; odd lengths are skipped
/// on bipartite inputs. Requires n <= 20 or max_len <= 12; throws
/// BudgetExceeded past either guard or after `budget` DFS steps.
std::set<int> brute_cycle_spectrum(const Graph& g, int max_len, std::uint64_t budget = kDefaultOracleBudget);

/// Realisable A–B path lengths in a chorded cycle (exhaustive DFS).
std::set<int> brute_ab_path_lengths(const ChordedCycle& h, const PartitionAB& part);

}  // namespace cyclespec
