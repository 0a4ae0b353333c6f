#include "intersum/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "intersum/bounds.hpp"
#include "intersum/cyclic.hpp"
#include "intersum/weights.hpp"

namespace intersum {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void require_universe(int n, std::size_t size, std::size_t budget) {
  if (n > kCanonicalLimit)
    throw Error(Errc::TooLarge, "exhaustive search needs n <= " + std::to_string(kCanonicalLimit) +
                                    " for isomorph rejection, got " + std::to_string(n));
  if (size > budget || size > 64)
    throw Error(Errc::TooLarge, "exhaustive budget is C(n,k) <= " + std::to_string(std::min<std::size_t>(budget, 64)) +
                                    ", got " + std::to_string(size));
}

template <typename Task>
void run_workers(int workers, Task task) {
  if (workers <= 1) {
    task(0, 1);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(task, w, workers);
  for (auto& t : pool) t.join();
}

std::vector<Mask> select(const std::vector<Mask>& universe, std::uint64_t chosen) {
  std::vector<Mask> out;
  for (std::uint64_t rest = chosen; rest != 0; rest &= rest - 1) out.push_back(universe[static_cast<std::size_t>(std::countr_zero(rest))]);
  return out;
}

// Bron-Kerbosch with pivoting over the "meets" graph of the k-subsets: its
// maximal cliques are exactly the maximal intersecting families. Each node
// carries the omega of the current clique and the gain each candidate would add.
class MaximalFamilySearch {
 public:
  MaximalFamilySearch(const std::vector<Mask>& universe, int k, bool prune)
      : size_(universe.size()), k_(k), prune_(prune), weight_(size_ * size_), adjacent_(size_, 0) {
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) {
        const int w = std::popcount(universe[i] & universe[j]);
        weight_[i * size_ + j] = w;
        if (i != j && w > 0) adjacent_[i] |= std::uint64_t{1} << j;
      }
  }

  std::uint64_t all() const { return size_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size_) - 1; }

  // Root branches in pivot order; branch i is independent of the others once
  // the earlier root vertices are moved from P to X.
  std::vector<std::size_t> root_order() const {
    const std::vector<std::int64_t> zero(size_, 0);
    return branch_order(all(), 0, zero);
  }

  void run_root_branch(const std::vector<std::size_t>& order, std::size_t index) {
    std::uint64_t before = 0;
    for (std::size_t i = 0; i < index; ++i) before |= std::uint64_t{1} << order[i];
    const std::size_t v = order[index];
    std::vector<std::int64_t> gain(size_, 0);
    for (std::size_t c = 0; c < size_; ++c) gain[c] = weight_[c * size_ + v];
    ++nodes_;
    expand(std::uint64_t{1} << v, 0, (all() & ~before) & adjacent_[v], before & adjacent_[v], gain);
  }

  std::int64_t best() const { return best_; }
  const std::vector<std::uint64_t>& best_cliques() const { return best_cliques_; }
  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t leaves() const { return leaves_; }

 private:
  std::vector<std::size_t> branch_order(std::uint64_t p, std::uint64_t x, const std::vector<std::int64_t>& gain) const {
    std::size_t pivot = 0;
    int pivot_cover = -1;
    for (std::uint64_t rest = p | x; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(rest));
      const int cover = std::popcount(p & adjacent_[u]);
      if (cover > pivot_cover) {
        pivot_cover = cover;
        pivot = u;
      }
    }
    std::vector<std::size_t> order;
    const std::uint64_t branch = pivot_cover < 0 ? 0 : p & ~adjacent_[pivot];
    for (std::uint64_t rest = branch; rest != 0; rest &= rest - 1) order.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gain[a] > gain[b]; });
    return order;
  }

  void expand(std::uint64_t clique, std::int64_t value, std::uint64_t p, std::uint64_t x,
              const std::vector<std::int64_t>& gain) {
    if (p == 0) {
      if (x == 0) record(clique, value);
      return;
    }
    std::vector<std::int64_t> next_gain(size_);
    for (std::size_t v : branch_order(p, x, gain)) {
      if (prune_ && upper_bound(value, p, gain) < best_) return;
      const std::uint64_t bit = std::uint64_t{1} << v;
      for (std::size_t c = 0; c < size_; ++c) next_gain[c] = gain[c] + weight_[c * size_ + v];
      ++nodes_;
      expand(clique | bit, value + gain[v], p & adjacent_[v], x & adjacent_[v], next_gain);
      p &= ~bit;
      x |= bit;
    }
  }

  // Existing pairs are exact; each candidate adds its gain against the clique,
  // and two distinct k-sets share at most k - 1 elements.
  std::int64_t upper_bound(std::int64_t value, std::uint64_t p, const std::vector<std::int64_t>& gain) const {
    std::int64_t ub = value;
    for (std::uint64_t rest = p; rest != 0; rest &= rest - 1) ub += gain[static_cast<std::size_t>(std::countr_zero(rest))];
    const std::int64_t free = std::popcount(p);
    return ub + free * (free - 1) / 2 * (k_ - 1);
  }

  void record(std::uint64_t clique, std::int64_t value) {
    ++leaves_;
    if (value > best_) {
      best_ = value;
      best_cliques_.clear();
    }
    if (value == best_) best_cliques_.push_back(clique);
  }

  std::size_t size_;
  int k_;
  bool prune_;
  std::vector<std::int64_t> weight_;
  std::vector<std::uint64_t> adjacent_;
  std::int64_t best_ = -1;
  std::vector<std::uint64_t> best_cliques_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
};

}  // namespace

SearchResult max_omega_intersecting(int n, int k, const SearchOptions& options) {
  const auto start = Clock::now();
  const BoundValue bound = omega_intersecting_bound(n, k);
  const std::vector<Mask> universe = all_k_subsets(n, k);
  require_universe(n, universe.size(), options.max_universe);

  const MaximalFamilySearch prototype(universe, k, options.prune);
  const auto order = prototype.root_order();
  const int workers = std::clamp(options.workers, 1, std::max(1, static_cast<int>(order.size())));
  std::vector<MaximalFamilySearch> partial(static_cast<std::size_t>(workers), prototype);
  run_workers(workers, [&](int w, int stride) {
    for (std::size_t i = static_cast<std::size_t>(w); i < order.size(); i += static_cast<std::size_t>(stride))
      partial[static_cast<std::size_t>(w)].run_root_branch(order, i);
  });

  SearchResult result;
  result.n = n;
  result.k = k;
  result.exhaustive = true;
  std::int64_t best = -1;
  for (const auto& part : partial) {
    best = std::max(best, part.best());
    result.stats.nodes += part.nodes();
    result.stats.families_evaluated += part.leaves();
  }
  std::set<Family> classes;
  for (const auto& part : partial)
    if (part.best() == best)
      for (std::uint64_t clique : part.best_cliques())
        classes.insert(canonical_form(Family::from_masks(n, k, select(universe, clique))));
  result.best_value = best;
  for (const auto& f : classes) result.witnesses.push_back({f, std::nullopt});
  result.bound = bound.value;
  result.tight = result.best_value == bound.value;
  result.runtime_ms = elapsed_ms(start);
  return result;
}

SearchResult max_omega_cross(int n, int k, int l, const SearchOptions& options) {
  const auto start = Clock::now();
  const BoundValue bound = omega_cross_bound(n, k, l);
  const std::vector<Mask> big = all_k_subsets(n, k);
  const std::vector<Mask> small = all_k_subsets(n, l);
  require_universe(n, big.size(), options.max_cross_universe);

  // meets_big[j]: members of the k-universe meeting l-set j; meets_small[i] likewise.
  std::vector<std::uint64_t> meets_big(small.size(), 0), meets_small(big.size(), 0);
  for (std::size_t i = 0; i < big.size(); ++i)
    for (std::size_t j = 0; j < small.size(); ++j)
      if (big[i] & small[j]) {
        meets_big[j] |= std::uint64_t{1} << i;
        meets_small[i] |= std::uint64_t{1} << j;
      }

  struct Partial {
    std::int64_t best = -1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::uint64_t closed = 0;
  };
  const int workers = std::max(1, options.workers);
  std::vector<Partial> partial(static_cast<std::size_t>(workers));
  const std::uint64_t total = std::uint64_t{1} << big.size();

  run_workers(workers, [&](int w, int stride) {
    Partial& out = partial[static_cast<std::size_t>(w)];
    for (std::uint64_t a = 1 + static_cast<std::uint64_t>(w); a < total; a += static_cast<std::uint64_t>(stride)) {
      // B is forced: every l-set meeting all of A. Enlarging B never lowers omega.
      std::uint64_t b = 0;
      for (std::size_t j = 0; j < small.size(); ++j)
        if ((meets_big[j] & a) == a) b |= std::uint64_t{1} << j;
      if (b == 0) continue;
      // Only pairs where A is also forced by B; any other A is dominated.
      std::uint64_t closure = 0;
      for (std::size_t i = 0; i < big.size(); ++i)
        if ((meets_small[i] & b) == b) closure |= std::uint64_t{1} << i;
      if (closure != a) continue;
      ++out.closed;
      std::int64_t value = 0;
      for (std::uint64_t ra = a; ra != 0; ra &= ra - 1)
        for (std::uint64_t rb = b; rb != 0; rb &= rb - 1)
          value += std::popcount(big[static_cast<std::size_t>(std::countr_zero(ra))] &
                                 small[static_cast<std::size_t>(std::countr_zero(rb))]);
      if (value > out.best) {
        out.best = value;
        out.pairs.clear();
      }
      if (value == out.best) out.pairs.emplace_back(a, b);
    }
  });

  SearchResult result;
  result.n = n;
  result.k = k;
  result.l = l;
  result.exhaustive = true;
  std::int64_t best = 0;
  for (const auto& part : partial) {
    best = std::max(best, part.best);
    result.stats.families_evaluated += part.closed;
  }
  result.stats.nodes = total - 1;
  std::set<std::pair<Family, Family>> classes;
  for (const auto& part : partial)
    if (part.best == best)
      for (const auto& [a, b] : part.pairs)
        classes.insert(canonical_pair(Family::from_masks(n, k, select(big, a)), Family::from_masks(n, l, select(small, b))));
  result.best_value = best;
  for (const auto& [a, b] : classes) result.witnesses.push_back({a, b});
  result.bound = bound.value;
  result.tight = result.best_value == bound.value;
  result.runtime_ms = elapsed_ms(start);
  return result;
}

namespace {

// Bounded draws built directly on the engine output so trajectories do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r >= limit);
    return r % bound;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// One side of the annealing state: the sets of a family plus the partner
// family they must meet (the family itself for the intersecting problem).
struct Side {
  int size = 0;  // member size
  std::vector<Mask> members;
};

std::int64_t meet_sum(Mask s, const std::vector<Mask>& family, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (i != skip) sum += std::popcount(s & family[i]);
  return sum;
}

bool meets_all(Mask s, const std::vector<Mask>& family, std::size_t skip = static_cast<std::size_t>(-1)) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (i != skip && (s & family[i]) == 0) return false;
  return true;
}

class Annealer {
 public:
  Annealer(int n, int k, std::optional<int> l, const HeuristicConfig& config) : n_(n), config_(config) {
    sides_.push_back({k, {}});
    if (l) sides_.push_back({*l, {}});
  }

  bool cross() const { return sides_.size() == 2; }

  struct Outcome {
    std::int64_t value = -1;
    std::vector<std::vector<Mask>> families;
    std::uint64_t accepted = 0;
  };

  Outcome run(std::uint64_t restart) {
    Rng rng(config_.seed, restart);
    for (auto& side : sides_) side.members.clear();
    std::int64_t value = 0;
    Outcome best;
    best.value = 0;
    best.families = snapshot();
    double temperature = config_.initial_temperature;
    for (std::uint64_t step = 0; step < config_.iterations; ++step) {
      const std::size_t which = cross() ? static_cast<std::size_t>(rng.below(2)) : 0;
      Side& side = sides_[which];
      const std::vector<Mask>& partner = sides_[cross() ? 1 - which : 0].members;
      const bool same = !cross();
      const auto move = side.members.empty() ? 0 : rng.below(3);

      std::int64_t delta = 0;
      std::size_t drop = static_cast<std::size_t>(-1);
      Mask add = 0;
      if (move == 1 || move == 2) drop = static_cast<std::size_t>(rng.below(side.members.size()));
      if (move == 0 || move == 2) {
        add = propose(rng, side.size, partner, same ? drop : static_cast<std::size_t>(-1));
        const bool present = std::find(side.members.begin(), side.members.end(), add) != side.members.end();
        if (present || !meets_all(add, partner, same ? drop : static_cast<std::size_t>(-1))) {
          temperature = cool(temperature);
          continue;
        }
        delta += meet_sum(add, partner, same ? drop : static_cast<std::size_t>(-1));
      }
      if (drop != static_cast<std::size_t>(-1)) delta -= meet_sum(side.members[drop], partner, same ? drop : static_cast<std::size_t>(-1));

      if (delta >= 0 || rng.unit() < std::exp(static_cast<double>(delta) / temperature)) {
        if (drop != static_cast<std::size_t>(-1)) side.members.erase(side.members.begin() + static_cast<std::ptrdiff_t>(drop));
        if (add != 0) side.members.push_back(add);
        value += delta;
        ++best.accepted;
        if (value > best.value) {
          best.value = value;
          best.families = snapshot();
        }
      }
      temperature = cool(temperature);
    }
    return best;
  }

 private:
  double cool(double t) const { return std::max(t * config_.decay, 1e-9); }

  std::vector<std::vector<Mask>> snapshot() const {
    std::vector<std::vector<Mask>> out;
    for (const auto& side : sides_) out.push_back(side.members);
    return out;
  }

  // A random set of the given size, seeded with an element of a random
  // partner member so that it meets at least one of them.
  Mask propose(Rng& rng, int size, const std::vector<Mask>& partner, std::size_t skip) {
    Mask chosen = 0;
    int remaining = size;
    std::size_t available = partner.size() - (skip < partner.size() ? 1 : 0);
    if (available > 0) {
      auto index = static_cast<std::size_t>(rng.below(available));
      if (skip < partner.size() && index >= skip) ++index;
      const Mask source = partner[index];
      auto pick = rng.below(static_cast<std::uint64_t>(std::popcount(source)));
      Mask m = source;
      while (pick-- > 0) m &= m - 1;
      chosen = m & -m;
      --remaining;
    }
    // Floyd's sampling of `remaining` further elements from the unused ones.
    std::vector<int> pool;
    for (int x = 1; x <= n_; ++x)
      if (!(chosen & element_bit(x))) pool.push_back(x);
    const auto count = static_cast<int>(pool.size());
    for (int j = count - remaining; j < count; ++j) {
      const auto t = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
      const Mask bit = element_bit(pool[static_cast<std::size_t>(t)]);
      chosen |= (chosen & bit) ? element_bit(pool[static_cast<std::size_t>(j)]) : bit;
    }
    return chosen;
  }

  int n_;
  HeuristicConfig config_;
  std::vector<Side> sides_;
};

}  // namespace

SearchResult heuristic_max(int n, int k, std::optional<int> l, const HeuristicConfig& config) {
  const auto start = Clock::now();
  if (n < 1 || n > kMaxGround) throw Error(Errc::TooLarge, "heuristic needs 1 <= n <= 63");
  if (k < 1 || k > n || (l && (*l < 1 || *l > n))) throw Error(Errc::BadSize, "member sizes must lie in 1..n");
  if (config.restarts < 1) throw Error(Errc::Hypothesis, "at least one restart is required");
  if (!(config.initial_temperature > 0.0) || !(config.decay > 0.0 && config.decay <= 1.0))
    throw Error(Errc::Hypothesis, "temperature must be positive and decay in (0, 1]");

  SearchResult result;
  result.n = n;
  result.k = k;
  result.l = l;
  result.exhaustive = false;
  result.heuristic = config;
  if (l) {
    const int hi = std::max(k, *l), lo = std::min(k, *l);
    if (lo >= 1 && n >= hi + lo) result.bound = omega_cross_bound(n, hi, lo).value;
  } else if (n >= 2 * k) {
    result.bound = omega_intersecting_bound(n, k).value;
  }

  Annealer annealer(n, k, l, config);
  std::int64_t best = -1;
  std::vector<std::vector<Mask>> best_families;
  for (int r = 0; r < config.restarts; ++r) {
    auto outcome = annealer.run(static_cast<std::uint64_t>(r));
    result.stats.nodes += config.iterations;
    result.stats.families_evaluated += outcome.accepted;
    if (outcome.value > best) {
      best = outcome.value;
      best_families = std::move(outcome.families);
    }
  }
  result.best_value = best;
  Witness w{Family::from_masks(n, k, best_families[0]), std::nullopt};
  if (l) w.second = Family::from_masks(n, *l, best_families[1]);
  result.witnesses.push_back(std::move(w));
  result.tight = result.bound && result.best_value == *result.bound;
  result.runtime_ms = elapsed_ms(start);

  if (result.bound && result.best_value > *result.bound)
    throw Error(Errc::Counterexample, "annealing reached " + to_decimal(result.best_value) + " above the bound " +
                                          to_decimal(*result.bound) + " (seed " + std::to_string(config.seed) + ")");
  return result;
}

namespace {

std::uint64_t interval_members(const std::vector<Interval>& intervals, const Family& f) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    if (f.contains(intervals[i].set)) out |= std::uint64_t{1} << i;
  return out;
}

std::uint64_t intervals_through(const std::vector<Interval>& intervals, int x) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    if (intervals[i].set.contains(x)) out |= std::uint64_t{1} << i;
  return out;
}

}  // namespace

UniquenessReport uniqueness_report(const SearchResult& result) {
  if (!result.exhaustive) throw Error(Errc::NotExhaustive, "uniqueness needs an exhaustive search result");
  UniquenessReport report;
  report.uniqueness_claimed = result.l ? result.n > result.k + *result.l : result.n > 2 * result.k;
  const int n = result.n;
  for (const auto& w : result.witnesses) {
    WitnessUniqueness u;
    const auto c1 = is_star(w.first);
    if (w.second) {
      const auto c2 = is_star(*w.second);
      if (c1 && c2 && *c1 == *c2) u.star_centre = c1;
    } else {
      u.star_centre = c1;
    }
    if (!u.star_centre) report.all_stars = false;

    const int k = w.first.k();
    const int l = w.second ? w.second->k() : k;
    if (n <= kDoubleCountLimit && n >= 2 && k < n && l < n) {
      u.interval_pattern_checked = true;
      for_each_cyclic(n, [&](const CyclicPerm& p) {
        ++u.permutations_checked;
        const auto ik = intervals_of_length(p, k);
        const auto il = intervals_of_length(p, l);
        const auto first = interval_members(ik, w.first);
        const auto second = w.second ? interval_members(il, *w.second) : 0;
        for (int x = 1; x <= n; ++x) {
          if (first != intervals_through(ik, x)) continue;
          if (w.second && second != intervals_through(il, x)) continue;
          ++u.permutations_with_pattern;
          break;
        }
      });
    }
    report.witnesses.push_back(u);
  }
  return report;
}

bool witnesses_attain_best(const SearchResult& result) {
  for (const auto& w : result.witnesses) {
    if (w.second) {
      if (!is_cross_intersecting(w.first, *w.second) || omega_cross(w.first, *w.second) != result.best_value) return false;
    } else if (!is_intersecting(w.first) || omega_family(w.first) != result.best_value) {
      return false;
    }
  }
  return true;
}

}  // namespace intersum
