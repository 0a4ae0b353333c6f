#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "intersum/exact.hpp"
#include "intersum/setcore.hpp"

namespace intersum {

// Cyclic orders are enumerated exhaustively only up to this n.
inline constexpr int kCyclicEnumerationLimit = 10;

// All-permutation verification sweeps (double counting) stop here.
inline constexpr int kDoubleCountLimit = 8;

/// An oriented cyclic order of [n]. Rotations are identified by pinning
/// element 1 at position 0; reflections stay distinct, so there are (n-1)!.
class CyclicPerm {
 public:
  explicit CyclicPerm(std::vector<int> order);

  static CyclicPerm identity(int n);

  int n() const noexcept { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const noexcept { return order_; }

  // Element at position pos, taken modulo n.
  int at(int pos) const noexcept;
  int position_of(int x) const { return position_.at(static_cast<std::size_t>(x)); }

  // Bit i set iff the element at position i is in the set.
  Mask to_positions(Mask elements) const noexcept;

  friend bool operator==(const CyclicPerm& a, const CyclicPerm& b) { return a.order_ == b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> position_;  // indexed by element, slot 0 unused
};

/// length consecutive elements starting at position start.
struct Interval {
  int start = 0;
  int length = 0;
  KSet set;
  int left = 0;   // element at start
  int right = 0;  // element at start + length - 1

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Run {
  int start = 0;
  int length = 0;
};

// Cyclic run of consecutive set bits in an n-bit positional mask; none if the
// mask is empty, full, or not contiguous around the cycle.
std::optional<Run> cyclic_run(Mask positions, int n) noexcept;

std::vector<CyclicPerm> enumerate_cyclic(int n);

// Visits the cyclic orders whose second element c satisfies
// (c - 2) % shards == shard, in lexicographic order of the sequence.
void for_each_cyclic(int n, const std::function<void(const CyclicPerm&)>& visit, int shard = 0, int shards = 1);

// Runs step(perm, acc) over every cyclic order of [n], split across workers
// by second element; per-worker accumulators are folded with merge(into, from)
// in shard order, so the result is independent of scheduling.
template <typename Acc, typename Step, typename Merge>
Acc sweep_cyclic(int n, int workers, Acc init, Step step, Merge merge) {
  const int shards = std::clamp(workers, 1, std::max(1, n - 1));
  std::vector<Acc> partial(static_cast<std::size_t>(shards), init);
  auto run_shard = [&](int s) {
    for_each_cyclic(
        n, [&](const CyclicPerm& p) { step(p, partial[static_cast<std::size_t>(s)]); }, s, shards);
  };
  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < shards; ++s) pool.emplace_back(run_shard, s);
    for (auto& t : pool) t.join();
  }
  Acc result = std::move(partial.front());
  for (std::size_t s = 1; s < partial.size(); ++s) merge(result, partial[s]);
  return result;
}

// BadLength unless 1 <= k < n.
std::vector<Interval> intervals_of_length(const CyclicPerm& p, int k);

std::optional<Interval> interval_of(const CyclicPerm& p, const KSet& s);

struct KatonaReport {
  int n = 0;
  int k = 0;
  bool all_permutations = false;
  std::uint64_t permutations_checked = 0;
  int max_size = 0;
  // Maximum-size intersecting interval families, counted across the checked orders.
  std::uint64_t maximum_families = 0;
  bool uniqueness_required = false;  // n > 2k
  bool all_maxima_fixed_element = true;
  std::vector<Family> counterexamples;

  bool passed() const { return max_size == k && (!uniqueness_required || all_maxima_fixed_element); }
};

// Exhausts every subfamily of the k-intervals of the identity order (or of
// every cyclic order when all_permutations is set). Needs n >= 2k, n <= 10.
KatonaReport katona_verify(int n, int k, bool all_permutations = false);

struct RepresentablePair {
  KSet a;
  KSet b;
  KSet meet;

  friend bool operator==(const RepresentablePair&, const RepresentablePair&) = default;
};

// a and b are intervals of p, their meet is an interval ending where a ends
// and starting where b starts.
bool is_representable(const CyclicPerm& p, const KSet& a, const KSet& b);

std::vector<RepresentablePair> representable_pairs(const CyclicPerm& p, const Family& a, const Family& b);

// Meets of size m over the representable pairs of p, as a family of m-sets.
Family interval_meet_family(const CyclicPerm& p, const Family& a, const Family& b, int m);

// Number of cyclic orders in which a fixed pair with |a ∩ b| = m is
// representable: (n-k-l+m)! (k-m)! m! (l-m)!.
Exact representation_factor(int n, int k, int l, int m);

struct DoubleCountReport {
  int n = 0;
  int k = 0;
  int l = 0;
  int m = 0;
  std::uint64_t permutations = 0;
  Exact pm_size = 0;             // |P_m|
  Exact factor = 0;              // representation_factor
  Exact sum_over_perms = 0;      // sum over orders of |P_m ∩ R_pi|
  Exact expected = 0;            // pm_size * factor
  bool per_pair_counts_ok = true;
  bool meets_distinct = true;
  bool meet_bound_applicable = false;  // A, B cross-intersecting and n >= k + l
  bool meet_families_ok = true;        // intersecting with at most m members
  int max_meet_family_size = 0;
  std::string counterexample;

  bool passed() const {
    return sum_over_perms == expected && per_pair_counts_ok && meets_distinct &&
           (!meet_bound_applicable || meet_families_ok);
  }
};

// Full census over all (n-1)! cyclic orders; needs n <= 8.
DoubleCountReport double_count_check(const Family& a, const Family& b, int m, int workers = 1);

// Recovers omega(A, B) = sum_m m |P_m| with |P_m| obtained from the census
// divided by the representation factor. Needs n <= 8.
Exact reconstruct_omega_cross(const Family& a, const Family& b, int workers = 1);

}  // namespace intersum
