#pragma once

#include <functional>
#include <vector>

#include "intersum/exact.hpp"
#include "intersum/setcore.hpp"

namespace intersum {

/// counts[m] = number of ordered pairs (a, b) in A x B with |a ∩ b| = m,
/// for m = 0..min(A.k, B.k). counts[0] == 0 certifies cross-intersection.
struct Profile {
  std::vector<Exact> counts;

  Exact total() const;
  Exact weighted_sum() const;  // sum of m * counts[m]

  friend bool operator==(const Profile&, const Profile&) = default;
};

using PairWeight = std::function<Exact(const KSet&, const KSet&)>;

PairWeight meet_weight();  // |a ∩ b|
PairWeight unit_weight();  // 1

// Sum of |a ∩ b| over unordered pairs of distinct members.
Exact omega_family(const Family& f);

// Sum over all ordered pairs of A x B, diagonal included.
Exact omega_cross(const Family& a, const Family& b);

// As omega_cross, skipping pairs with a == b.
Exact omega_cross_strict(const Family& a, const Family& b);

Profile intersection_profile(const Family& a, const Family& b);

Exact omega_generic(const Family& a, const Family& b, const PairWeight& w, bool strict);

// sum over elements x of deg_A(x) * deg_B(x); equals omega_cross(A, B).
Exact degree_product_sum(const Family& a, const Family& b);

}  // namespace intersum
