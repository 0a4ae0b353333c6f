#include "intersum/weights.hpp"

#include <algorithm>

namespace intersum {

Exact Profile::total() const {
  Exact sum = 0;
  for (Exact c : counts) sum = checked_add(sum, c);
  return sum;
}

Exact Profile::weighted_sum() const {
  Exact sum = 0;
  for (std::size_t m = 0; m < counts.size(); ++m) sum = checked_add(sum, checked_mul(static_cast<Exact>(m), counts[m]));
  return sum;
}

PairWeight meet_weight() {
  return [](const KSet& a, const KSet& b) -> Exact { return meet_size(a, b); };
}

PairWeight unit_weight() {
  return [](const KSet&, const KSet&) -> Exact { return 1; };
}

namespace {

// Row sums stay below 64 * |B|, far inside 64 bits; rows are folded in checked.
template <typename Skip>
Exact sum_meets(const Family& a, const Family& b, Skip skip) {
  Exact total = 0;
  for (const auto& x : a) {
    std::uint64_t row = 0;
    for (const auto& y : b)
      if (!skip(x, y)) row += static_cast<std::uint64_t>(meet_size(x, y));
    total = checked_add(total, static_cast<Exact>(row));
  }
  return total;
}

}  // namespace

Exact omega_family(const Family& f) {
  const auto& m = f.members();
  Exact total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::uint64_t row = 0;
    for (std::size_t j = i + 1; j < m.size(); ++j) row += static_cast<std::uint64_t>(meet_size(m[i], m[j]));
    total = checked_add(total, static_cast<Exact>(row));
  }
  return total;
}

Exact omega_cross(const Family& a, const Family& b) {
  require_same_ground(a, b);
  return sum_meets(a, b, [](const KSet&, const KSet&) { return false; });
}

Exact omega_cross_strict(const Family& a, const Family& b) {
  require_same_ground(a, b);
  return sum_meets(a, b, [](const KSet& x, const KSet& y) { return x == y; });
}

Profile intersection_profile(const Family& a, const Family& b) {
  require_same_ground(a, b);
  const auto top = static_cast<std::size_t>(std::min(a.k(), b.k()));
  std::vector<std::uint64_t> raw(top + 1, 0);
  for (const auto& x : a)
    for (const auto& y : b) ++raw[static_cast<std::size_t>(meet_size(x, y))];
  Profile p;
  p.counts.assign(raw.begin(), raw.end());
  return p;
}

Exact omega_generic(const Family& a, const Family& b, const PairWeight& w, bool strict) {
  require_same_ground(a, b);
  Exact total = 0;
  for (const auto& x : a)
    for (const auto& y : b)
      if (!(strict && x == y)) total = checked_add(total, w(x, y));
  return total;
}

Exact degree_product_sum(const Family& a, const Family& b) {
  require_same_ground(a, b);
  Exact total = 0;
  for (int x = 1; x <= a.n(); ++x) {
    const auto has_x = [x](const KSet& s) { return s.contains(x); };
    const auto da = std::count_if(a.begin(), a.end(), has_x);
    const auto db = std::count_if(b.begin(), b.end(), has_x);
    total = checked_add(total, checked_mul(da, db));
  }
  return total;
}

}  // namespace intersum
