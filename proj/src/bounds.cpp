#include "intersum/bounds.hpp"

#include <string>

namespace intersum {

namespace {

std::string config(int n, int k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

void require_intersecting_range(int n, int k) {
  if (k < 1 || n < 2 * k) throw Error(Errc::Hypothesis, "requires n >= 2k >= 2, got " + config(n, k));
}

void require_cross_range(int n, int k, int l) {
  if (l < 1 || k < l || n < k + l)
    throw Error(Errc::Hypothesis, "requires k >= l >= 1 and n >= k + l, got (n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k) + ", l=" + std::to_string(l) + ")");
}

}  // namespace

Exact binom(Exact a, Exact b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Exact r = 1;
  // r stays C(a, i) after each step, so the division is exact.
  for (Exact i = 0; i < b; ++i) r = checked_mul(r, a - i) / (i + 1);
  return r;
}

Exact factorial(int n) {
  if (n < 0) throw Error(Errc::Hypothesis, "factorial of a negative number");
  Exact r = 1;
  for (int i = 2; i <= n; ++i) r = checked_mul(r, i);
  return r;
}

BoundValue ekr_bound(int n, int k) {
  require_intersecting_range(n, k);
  return {binom(n - 1, k - 1), n, k, std::nullopt, std::nullopt};
}

BoundValue omega_intersecting_bound(int n, int k) {
  require_intersecting_range(n, k);
  const Exact through_one = binom(n - 1, k - 1);
  const Exact through_pair = binom(n - 2, k - 2);
  const Exact value = checked_add(binom(through_one, 2), checked_mul(n - 1, binom(through_pair, 2)));
  return {value, n, k, std::nullopt, std::nullopt};
}

BoundValue omega_cross_bound(int n, int k, int l) {
  require_cross_range(n, k, l);
  const Exact head = checked_mul(binom(n - 1, k - 1), binom(n - 1, l - 1));
  const Exact tail = checked_mul(n - 1, checked_mul(binom(n - 2, k - 2), binom(n - 2, l - 2)));
  return {checked_add(head, tail), n, k, l, std::nullopt};
}

BoundValue omega_strict_bound(int n, int k) {
  require_intersecting_range(n, k);
  const Exact s1 = binom(n - 1, k - 1);
  const Exact s2 = binom(n - 2, k - 2);
  // s2 == 0 at k == 1, where the factor (s2 - 1) is multiplied away.
  const Exact value = checked_add(checked_mul(s1, s1 - 1), checked_mul(n - 1, checked_mul(s2, s2 - 1)));
  return {value, n, k, std::nullopt, std::nullopt};
}

Exact pm_star_count(int n, int k, int l, int m) {
  require_cross_range(n, k, l);
  if (m < 1 || m > l)
    throw Error(Errc::Hypothesis, "meet size m=" + std::to_string(m) + " outside 1.." + std::to_string(l));
  return checked_mul(binom(n - 1, m - 1), checked_mul(binom(n - m, k - m), binom(n - k, l - m)));
}

bool star_identity_check(int n, int k, int l) {
  Exact sum = 0;
  for (int m = 1; m <= l; ++m) sum = checked_add(sum, checked_mul(m, pm_star_count(n, k, l, m)));
  return sum == omega_cross_bound(n, k, l).value;
}

}  // namespace intersum
