#include "intersum/cyclic.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "intersum/bounds.hpp"

namespace intersum {

namespace {

Mask low_bits(int n) { return (Mask{1} << n) - 1; }

Mask rotate_left_one(Mask q, int n) { return ((q << 1) | (q >> (n - 1))) & low_bits(n); }

void require_enumerable(int n, int limit) {
  if (n < 2) throw Error(Errc::Hypothesis, "cyclic orders need n >= 2");
  if (n > limit)
    throw Error(Errc::TooLarge, "cyclic enumeration cutoff is n <= " + std::to_string(limit) + ", got " + std::to_string(n));
}

}  // namespace

CyclicPerm::CyclicPerm(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 2 || n > kMaxGround) throw Error(Errc::TooLarge, "cyclic order size outside 2.." + std::to_string(kMaxGround));
  if (order_.front() != 1) throw Error(Errc::BadElement, "cyclic order must start at element 1");
  position_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int x = order_[static_cast<std::size_t>(i)];
    if (x < 1 || x > n || position_[static_cast<std::size_t>(x)] != -1)
      throw Error(Errc::BadElement, "cyclic order is not a permutation of 1..n");
    position_[static_cast<std::size_t>(x)] = i;
  }
}

CyclicPerm CyclicPerm::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  return CyclicPerm(std::move(order));
}

int CyclicPerm::at(int pos) const noexcept {
  const int n = this->n();
  return order_[static_cast<std::size_t>(((pos % n) + n) % n)];
}

Mask CyclicPerm::to_positions(Mask elements) const noexcept {
  Mask out = 0;
  for (Mask m = elements; m != 0; m &= m - 1)
    out |= Mask{1} << position_[static_cast<std::size_t>(std::countr_zero(m))];
  return out;
}

std::optional<Run> cyclic_run(Mask positions, int n) noexcept {
  const int length = std::popcount(positions);
  if (length == 0 || length >= n) return std::nullopt;
  // A run start is a set bit whose cyclic predecessor is clear; contiguous iff exactly one.
  const Mask starts = positions & ~rotate_left_one(positions, n);
  if (std::popcount(starts) != 1) return std::nullopt;
  return Run{std::countr_zero(starts), length};
}

void for_each_cyclic(int n, const std::function<void(const CyclicPerm&)>& visit, int shard, int shards) {
  require_enumerable(n, kCyclicEnumerationLimit);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int second = 2; second <= n; ++second) {
    if ((second - 2) % shards != shard) continue;
    order[0] = 1;
    order[1] = second;
    std::size_t i = 2;
    for (int x = 2; x <= n; ++x)
      if (x != second) order[i++] = x;
    do {
      visit(CyclicPerm(order));
    } while (std::next_permutation(order.begin() + 2, order.end()));
  }
}

std::vector<CyclicPerm> enumerate_cyclic(int n) {
  std::vector<CyclicPerm> out;
  for_each_cyclic(n, [&](const CyclicPerm& p) { out.push_back(p); });
  return out;
}

std::vector<Interval> intervals_of_length(const CyclicPerm& p, int k) {
  const int n = p.n();
  if (k < 1 || k >= n)
    throw Error(Errc::BadLength, "interval length " + std::to_string(k) + " outside 1.." + std::to_string(n - 1));
  std::vector<Interval> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    Mask bits = 0;
    for (int j = 0; j < k; ++j) bits |= element_bit(p.at(start + j));
    out.push_back({start, k, KSet(n, bits), p.at(start), p.at(start + k - 1)});
  }
  return out;
}

std::optional<Interval> interval_of(const CyclicPerm& p, const KSet& s) {
  if (s.n() != p.n()) throw Error(Errc::GroundMismatch, "set and cyclic order use different ground sets");
  const auto run = cyclic_run(p.to_positions(s.bits()), p.n());
  if (!run) return std::nullopt;
  return Interval{run->start, run->length, s, p.at(run->start), p.at(run->start + run->length - 1)};
}

KatonaReport katona_verify(int n, int k, bool all_permutations) {
  if (k < 1 || n < 2 * k) throw Error(Errc::Hypothesis, "interval check needs n >= 2k >= 2");
  require_enumerable(n, kCyclicEnumerationLimit);

  KatonaReport report;
  report.n = n;
  report.k = k;
  report.all_permutations = all_permutations;
  report.uniqueness_required = n > 2 * k;

  auto check_order = [&](const CyclicPerm& p) {
    ++report.permutations_checked;
    const auto intervals = intervals_of_length(p, k);
    const auto count = static_cast<std::size_t>(n);
    // compatible[i]: intervals meeting interval i (i itself included).
    std::vector<std::uint32_t> compatible(count, 0);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        if (intervals[i].set.bits() & intervals[j].set.bits()) compatible[i] |= 1u << j;
    // through[x]: intervals containing element x.
    std::vector<std::uint32_t> through(count + 1, 0);
    for (std::size_t i = 0; i < count; ++i)
      for (int x : intervals[i].set.elements()) through[static_cast<std::size_t>(x)] |= 1u << i;

    for (std::uint32_t chosen = 1; chosen < (1u << count); ++chosen) {
      bool intersecting = true;
      for (std::uint32_t rest = chosen; rest != 0 && intersecting; rest &= rest - 1)
        intersecting = (compatible[static_cast<std::size_t>(std::countr_zero(rest))] & chosen) == chosen;
      if (!intersecting) continue;
      const int size = std::popcount(chosen);
      if (size < report.max_size) continue;
      if (size > report.max_size) {
        // Smaller families seen so far are no longer maxima.
        report.max_size = size;
        report.maximum_families = 0;
        report.all_maxima_fixed_element = true;
        report.counterexamples.clear();
      }
      ++report.maximum_families;
      const bool fixed = std::find(through.begin() + 1, through.end(), chosen) != through.end();
      if (!fixed) report.all_maxima_fixed_element = false;
      if ((size > k || (!fixed && report.uniqueness_required)) && report.counterexamples.size() < 8) {
        std::vector<Mask> masks;
        for (std::uint32_t rest = chosen; rest != 0; rest &= rest - 1)
          masks.push_back(intervals[static_cast<std::size_t>(std::countr_zero(rest))].set.bits());
        report.counterexamples.push_back(Family::from_masks(n, k, masks));
      }
    }
  };

  if (all_permutations) {
    for_each_cyclic(n, check_order);
  } else {
    check_order(CyclicPerm::identity(n));
  }
  return report;
}

namespace {

bool representable_positions(Mask pa, Mask pb, int n) {
  const auto ra = cyclic_run(pa, n);
  if (!ra) return false;
  const auto rb = cyclic_run(pb, n);
  if (!rb) return false;
  const auto rm = cyclic_run(pa & pb, n);
  if (!rm) return false;
  const int right_a = (ra->start + ra->length - 1) % n;
  const int right_m = (rm->start + rm->length - 1) % n;
  return right_a == right_m && rm->start == rb->start;
}

}  // namespace

bool is_representable(const CyclicPerm& p, const KSet& a, const KSet& b) {
  if (a.n() != p.n() || b.n() != p.n()) throw Error(Errc::GroundMismatch, "sets and cyclic order use different ground sets");
  return representable_positions(p.to_positions(a.bits()), p.to_positions(b.bits()), p.n());
}

std::vector<RepresentablePair> representable_pairs(const CyclicPerm& p, const Family& a, const Family& b) {
  require_same_ground(a, b);
  if (a.n() != p.n()) throw Error(Errc::GroundMismatch, "families and cyclic order use different ground sets");
  std::vector<RepresentablePair> out;
  for (const auto& x : a)
    for (const auto& y : b)
      if (is_representable(p, x, y)) out.push_back({x, y, KSet(p.n(), x.bits() & y.bits())});
  return out;
}

Family interval_meet_family(const CyclicPerm& p, const Family& a, const Family& b, int m) {
  if (m < 1 || m > std::min(a.k(), b.k()))
    throw Error(Errc::Hypothesis, "meet size m=" + std::to_string(m) + " outside 1..min(k, l)");
  std::set<Mask> meets;
  for (const auto& pair : representable_pairs(p, a, b))
    if (pair.meet.size() == m) meets.insert(pair.meet.bits());
  const std::vector<Mask> masks(meets.begin(), meets.end());
  return Family::from_masks(p.n(), m, masks);
}

Exact representation_factor(int n, int k, int l, int m) {
  const int free = n - k - l + m;
  if (m < 1 || m > std::min(k, l) || free < 0)
    throw Error(Errc::Hypothesis, "no pair of a " + std::to_string(k) + "-set and an " + std::to_string(l) +
                                      "-set meets in " + std::to_string(m) + " elements of [" + std::to_string(n) + "]");
  return checked_mul(checked_mul(factorial(free), factorial(k - m)), checked_mul(factorial(m), factorial(l - m)));
}

namespace {

struct CensusAcc {
  std::uint64_t permutations = 0;
  std::vector<std::uint64_t> per_pair;
  bool meets_distinct = true;
  bool meet_families_ok = true;
  int max_meet_family_size = 0;
  std::string counterexample;
};

std::string describe_order(const CyclicPerm& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.order().size(); ++i) s += (i ? " " : "") + std::to_string(p.order()[i]);
  return s + ")";
}

std::string describe_set(const KSet& s) {
  std::string out = "{";
  const auto elements = s.elements();
  for (std::size_t i = 0; i < elements.size(); ++i) out += (i ? "," : "") + std::to_string(elements[i]);
  return out + "}";
}

}  // namespace

DoubleCountReport double_count_check(const Family& a, const Family& b, int m, int workers) {
  require_same_ground(a, b);
  const int n = a.n();
  require_enumerable(n, kDoubleCountLimit);

  DoubleCountReport report;
  report.n = n;
  report.k = a.k();
  report.l = b.k();
  report.m = m;
  report.factor = representation_factor(n, a.k(), b.k(), m);

  std::vector<std::pair<Mask, Mask>> pairs;
  for (const auto& x : a)
    for (const auto& y : b)
      if (meet_size(x, y) == m) pairs.emplace_back(x.bits(), y.bits());
  report.pm_size = static_cast<Exact>(pairs.size());
  report.meet_bound_applicable = n >= a.k() + b.k() && is_cross_intersecting(a, b);

  CensusAcc init;
  init.per_pair.assign(pairs.size(), 0);

  auto step = [&](const CyclicPerm& p, CensusAcc& acc) {
    ++acc.permutations;
    std::vector<Mask> meets;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const Mask pa = p.to_positions(pairs[i].first);
      const Mask pb = p.to_positions(pairs[i].second);
      if (representable_positions(pa, pb, n)) {
        ++acc.per_pair[i];
        meets.push_back(pairs[i].first & pairs[i].second);
      }
    }
    std::sort(meets.begin(), meets.end());
    const bool distinct = std::adjacent_find(meets.begin(), meets.end()) == meets.end();
    bool intersecting = true;
    for (std::size_t i = 0; i < meets.size() && intersecting; ++i)
      for (std::size_t j = i + 1; j < meets.size() && intersecting; ++j) intersecting = (meets[i] & meets[j]) != 0;
    const int size = static_cast<int>(meets.size());
    acc.max_meet_family_size = std::max(acc.max_meet_family_size, size);
    const bool families_ok = intersecting && size <= m;
    if (!distinct) acc.meets_distinct = false;
    if (report.meet_bound_applicable && !families_ok) acc.meet_families_ok = false;
    if (acc.counterexample.empty() && (!distinct || (report.meet_bound_applicable && !families_ok)))
      acc.counterexample = "cyclic order " + describe_order(p) + ": " + std::to_string(size) +
                           " meets, distinct=" + (distinct ? "yes" : "no") +
                           ", intersecting=" + (intersecting ? "yes" : "no");
  };
  auto merge = [](CensusAcc& into, const CensusAcc& from) {
    into.permutations += from.permutations;
    for (std::size_t i = 0; i < into.per_pair.size(); ++i) into.per_pair[i] += from.per_pair[i];
    into.meets_distinct = into.meets_distinct && from.meets_distinct;
    into.meet_families_ok = into.meet_families_ok && from.meet_families_ok;
    into.max_meet_family_size = std::max(into.max_meet_family_size, from.max_meet_family_size);
    if (into.counterexample.empty()) into.counterexample = from.counterexample;
  };

  const CensusAcc acc = sweep_cyclic(n, workers, init, step, merge);

  report.permutations = acc.permutations;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    report.sum_over_perms = checked_add(report.sum_over_perms, static_cast<Exact>(acc.per_pair[i]));
    if (static_cast<Exact>(acc.per_pair[i]) != report.factor) {
      if (report.per_pair_counts_ok)
        report.counterexample = "pair " + describe_set(KSet(n, pairs[i].first)) + ", " +
                                describe_set(KSet(n, pairs[i].second)) + " representable in " +
                                std::to_string(acc.per_pair[i]) + " cyclic orders, expected " +
                                to_decimal(report.factor);
      report.per_pair_counts_ok = false;
    }
  }
  if (report.counterexample.empty()) report.counterexample = acc.counterexample;
  report.meets_distinct = acc.meets_distinct;
  report.meet_families_ok = acc.meet_families_ok;
  report.max_meet_family_size = acc.max_meet_family_size;
  report.expected = checked_mul(report.pm_size, report.factor);
  return report;
}

Exact reconstruct_omega_cross(const Family& a, const Family& b, int workers) {
  require_same_ground(a, b);
  Exact total = 0;
  for (int m = 1; m <= std::min(a.k(), b.k()); ++m) {
    if (a.n() - a.k() - b.k() + m < 0) continue;  // no pair meets in only m elements
    const auto report = double_count_check(a, b, m, workers);
    total = checked_add(total, checked_mul(m, report.sum_over_perms / report.factor));
  }
  return total;
}

}  // namespace intersum
