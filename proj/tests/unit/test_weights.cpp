#include <random>

#include "doctest.h"
#include "intersum/weights.hpp"
#include "oracles.hpp"

using namespace intersum;

namespace {
Family fam(int n, int k, std::vector<std::vector<int>> sets) { return make_family(n, k, sets); }
}  // namespace

TEST_CASE("omega_family") {
  CHECK(omega_family(fam(4, 2, {{1, 2}, {1, 3}, {1, 4}})) == 3);
  CHECK(omega_family(fam(4, 2, {})) == 0);
  CHECK(omega_family(fam(4, 2, {{2, 3}})) == 0);
  CHECK(omega_family(star(5, 2, 1)) == 6);
  // Defined on non-intersecting input too.
  CHECK(omega_family(fam(4, 2, {{1, 2}, {3, 4}, {1, 3}})) == 2);
}

TEST_CASE("omega_cross") {
  CHECK(omega_cross(star(5, 2, 1), star(5, 2, 1)) == 20);
  CHECK(omega_cross(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})) == 0);
  CHECK(omega_cross(star(4, 2, 1), star(4, 2, 1)) == 12);
  CHECK_THROWS_AS(omega_cross(star(4, 2, 1), star(5, 2, 1)), Error);
}

TEST_CASE("omega_cross_strict") {
  CHECK(omega_cross_strict(star(5, 2, 1), star(5, 2, 1)) == 12);
  const auto single = fam(5, 3, {{1, 2, 3}});
  CHECK(omega_cross_strict(single, single) == 0);
  CHECK(omega_cross_strict(fam(6, 2, {{1, 2}, {2, 3}}), fam(6, 2, {{4, 5}, {5, 6}})) == 0);
}

TEST_CASE("intersection_profile") {
  CHECK(intersection_profile(star(5, 2, 1), star(5, 2, 1)).counts == std::vector<Exact>{0, 12, 4});
  CHECK(intersection_profile(fam(4, 2, {{1, 2}}), fam(4, 2, {{3, 4}})).counts == std::vector<Exact>{1, 0, 0});
  CHECK(intersection_profile(fam(4, 2, {}), fam(4, 2, {})).counts == std::vector<Exact>{0, 0, 0});
  // Length follows min(k, l).
  CHECK(intersection_profile(star(6, 3, 1), star(6, 2, 1)).counts.size() == 3);
}

TEST_CASE("omega_generic") {
  const auto s4 = star(4, 2, 1);
  CHECK(omega_generic(s4, s4, unit_weight(), false) == 9);
  CHECK(omega_generic(s4, s4, unit_weight(), true) == 6);
  CHECK(omega_generic(star(5, 2, 1), star(5, 2, 1), meet_weight(), true) == 12);
  const PairWeight squared = [](const KSet& a, const KSet& b) -> Exact {
    const Exact m = meet_size(a, b);
    return m * m;
  };
  // 4 diagonal pairs of weight 4 plus 12 off-diagonal of weight 1.
  CHECK(omega_generic(star(5, 2, 1), star(5, 2, 1), squared, false) == 28);
}

TEST_CASE("property: omega identities on random families") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 12;
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const int l = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto a = oracle::random_family(rng, n, k, 10);
    const auto b = oracle::random_family(rng, n, l, 10);
    const auto sa = oracle::to_sets(a), sb = oracle::to_sets(b);

    CHECK(omega_family(a) == oracle::omega(sa));
    CHECK(omega_cross(a, b) == oracle::omega_cross(sa, sb));
    CHECK(2 * omega_family(a) == omega_cross(a, a) - static_cast<Exact>(k) * static_cast<Exact>(a.size()));
    CHECK(omega_cross(a, b) == omega_cross(b, a));
    CHECK(omega_cross_strict(a, b) == omega_cross_strict(b, a));
    CHECK(omega_cross(a, b) == intersection_profile(a, b).weighted_sum());
    CHECK(intersection_profile(a, b).total() == static_cast<Exact>(a.size() * b.size()));
    CHECK(omega_cross(a, b) == degree_product_sum(a, b));
    CHECK(omega_generic(a, b, meet_weight(), false) == omega_cross(a, b));
    CHECK(omega_generic(a, b, meet_weight(), true) == omega_cross_strict(a, b));
    CHECK(omega_generic(a, b, unit_weight(), false) == static_cast<Exact>(a.size() * b.size()));
    if (k != l) CHECK(omega_cross_strict(a, b) == omega_cross(a, b));
    CHECK(2 * omega_family(a) == omega_cross_strict(a, a));

    const auto p = oracle::random_permutation(rng, n);
    const auto pa = apply_perm(a, p), pb = apply_perm(b, p);
    CHECK(omega_family(pa) == omega_family(a));
    CHECK(omega_cross(pa, pb) == omega_cross(a, b));
    CHECK(omega_cross_strict(pa, pb) == omega_cross_strict(a, b));
  }
}

TEST_CASE("property: adding a compatible set to a nonempty intersecting family increases omega") {
  std::mt19937_64 rng(99);
  int grown = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 6;
    const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    const auto x = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    auto base = star(n, k, x).masks();
    std::shuffle(base.begin(), base.end(), rng);
    base.resize(1 + rng() % base.size());
    for (Mask extra : all_k_subsets(n, k)) {
      if (std::find(base.begin(), base.end(), extra) != base.end()) continue;
      const bool meets_all = std::all_of(base.begin(), base.end(), [&](Mask m) { return (m & extra) != 0; });
      if (!meets_all) continue;
      auto bigger = base;
      bigger.push_back(extra);
      const auto before = Family::from_masks(n, k, base), after = Family::from_masks(n, k, bigger);
      CHECK(omega_family(after) >= omega_family(before) + static_cast<Exact>(base.size()));
      ++grown;
      break;
    }
  }
  CHECK(grown > 100);
}
