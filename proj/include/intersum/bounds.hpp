#pragma once

#include <optional>

#include "intersum/exact.hpp"

namespace intersum {

struct BoundValue {
  Exact value = 0;
  int n = 0;
  int k = 0;
  std::optional<int> l;
  std::optional<int> m;

  friend bool operator==(const BoundValue&, const BoundValue&) = default;
};

// C(a, b), zero whenever b < 0, b > a or a < 0. Throws Overflow.
Exact binom(Exact a, Exact b);

Exact factorial(int n);

// The functions below throw Hypothesis outside their stated parameter range.

// C(n-1, k-1); needs n >= 2k >= 2.
BoundValue ekr_bound(int n, int k);

// C(C(n-1,k-1), 2) + (n-1) C(C(n-2,k-2), 2); needs n >= 2k >= 2.
BoundValue omega_intersecting_bound(int n, int k);

// C(n-1,k-1) C(n-1,l-1) + (n-1) C(n-2,k-2) C(n-2,l-2); needs k >= l >= 1, n >= k + l.
BoundValue omega_cross_bound(int n, int k, int l);

// Bound on the off-diagonal cross sum for two families of k-sets; needs n >= 2k >= 2.
BoundValue omega_strict_bound(int n, int k);

// Ordered pairs of star(n,k,1) x star(n,l,1) meeting in exactly m elements:
// C(n-1,m-1) C(n-m,k-m) C(n-k,l-m).
Exact pm_star_count(int n, int k, int l, int m);

// sum_{m=1..l} m * pm_star_count(n,k,l,m) == omega_cross_bound(n,k,l).
bool star_identity_check(int n, int k, int l);

}  // namespace intersum
