#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "intersum/exact.hpp"
#include "intersum/setcore.hpp"

namespace intersum {

/// One extremal configuration: a family, or a cross pair when `second` is set.
struct Witness {
  Family first;
  std::optional<Family> second;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct HeuristicConfig {
  std::uint64_t seed = 1;
  std::uint64_t iterations = 10000;
  int restarts = 8;
  double initial_temperature = 2.0;
  double decay = 0.999;  // geometric, per step

  friend bool operator==(const HeuristicConfig&, const HeuristicConfig&) = default;
};

struct SearchStats {
  std::uint64_t nodes = 0;              // branch-and-bound nodes or annealing steps
  std::uint64_t families_evaluated = 0;  // maximal families / closed pairs / accepted moves
};

struct SearchResult {
  int n = 0;
  int k = 0;
  std::optional<int> l;
  Exact best_value = 0;
  std::vector<Witness> witnesses;  // canonical forms, pairwise non-isomorphic when exhaustive
  std::optional<Exact> bound;
  bool tight = false;
  bool exhaustive = false;
  std::optional<HeuristicConfig> heuristic;
  std::int64_t runtime_ms = 0;
  SearchStats stats;
};

struct SearchOptions {
  int workers = 1;
  // Disable to visit every maximal family (the bound-pruned tree is the default).
  bool prune = true;
  std::size_t max_universe = 35;        // C(n,k) budget for intersecting search
  std::size_t max_cross_universe = 20;  // C(n,k) budget for cross search (2^C(n,k) choices)
};

// Maximum of omega over intersecting families of k-subsets of [n].
// Hypothesis unless n >= 2k >= 2; TooLarge past the universe budget or n > 10.
SearchResult max_omega_intersecting(int n, int k, const SearchOptions& options = {});

// Maximum of omega(A, B) over cross-intersecting A of k-sets and B of l-sets.
// Hypothesis unless k >= l >= 1 and n >= k + l.
SearchResult max_omega_cross(int n, int k, int l, const SearchOptions& options = {});

// Simulated annealing; the bound is a falsification sentinel, exceeding it
// throws Counterexample.
SearchResult heuristic_max(int n, int k, std::optional<int> l, const HeuristicConfig& config);

struct WitnessUniqueness {
  std::optional<int> star_centre;        // common centre when the witness is a star (pair)
  bool interval_pattern_checked = false;  // n <= 8
  std::uint64_t permutations_checked = 0;
  std::uint64_t permutations_with_pattern = 0;

  bool pattern_everywhere() const { return interval_pattern_checked && permutations_with_pattern == permutations_checked; }
};

struct UniquenessReport {
  std::vector<WitnessUniqueness> witnesses;
  bool all_stars = true;
  bool uniqueness_claimed = false;  // n > 2k, or n > k + l for pairs
};

// For each witness: star status and, for n <= 8, the count of cyclic orders
// whose member intervals are exactly the intervals through one element.
// NotExhaustive for heuristic results.
UniquenessReport uniqueness_report(const SearchResult& result);

// Re-evaluates every witness; false if any misses best_value or is infeasible.
bool witnesses_attain_best(const SearchResult& result);

}  // namespace intersum
