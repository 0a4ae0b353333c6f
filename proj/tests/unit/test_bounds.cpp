#include "doctest.h"
#include "intersum/bounds.hpp"
#include "intersum/weights.hpp"

using namespace intersum;

namespace {
Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an intersum::Error");
  return Errc::Parse;
}
}  // namespace

TEST_CASE("binom") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(10, 2) == 45);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(2, 3) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(to_decimal(binom(62, 31)) == "465428353255261088");
  CHECK(to_decimal(binom(120, 60)) == "96614908840363322603893139521372656");
}

TEST_CASE("binom matches Pascal's rule") {
  for (int a = 1; a <= 100; ++a)
    for (int b = 0; b <= a; ++b) CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
}

TEST_CASE("binom overflows loudly") { CHECK(error_of([] { binom(200, 100); }) == Errc::Overflow); }

TEST_CASE("ekr_bound") {
  CHECK(ekr_bound(4, 2).value == 3);
  CHECK(ekr_bound(6, 3).value == 10);
  CHECK(ekr_bound(5, 1).value == 1);
  CHECK(error_of([] { ekr_bound(3, 2); }) == Errc::Hypothesis);
  CHECK(error_of([] { ekr_bound(3, 0); }) == Errc::Hypothesis);
}

TEST_CASE("omega_intersecting_bound") {
  CHECK(omega_intersecting_bound(5, 2).value == 6);
  CHECK(omega_intersecting_bound(6, 3).value == 75);
  for (int n = 2; n <= 40; ++n) CHECK(omega_intersecting_bound(n, 1).value == 0);
  CHECK(omega_intersecting_bound(7, 2).value == 15);
  CHECK(omega_intersecting_bound(8, 3).value == 315);
  CHECK(error_of([] { omega_intersecting_bound(3, 2); }) == Errc::Hypothesis);
}

TEST_CASE("omega_cross_bound") {
  CHECK(omega_cross_bound(5, 2, 2).value == 20);
  CHECK(omega_cross_bound(4, 2, 2).value == 12);
  CHECK(omega_cross_bound(6, 3, 2).value == 70);
  CHECK(omega_cross_bound(3, 2, 1).value == 2);
  CHECK(error_of([] { omega_cross_bound(6, 2, 3); }) == Errc::Hypothesis);
  CHECK(error_of([] { omega_cross_bound(4, 3, 2); }) == Errc::Hypothesis);
}

TEST_CASE("omega_strict_bound") {
  CHECK(omega_strict_bound(5, 2).value == 12);
  CHECK(omega_strict_bound(6, 3).value == 150);
  for (int n = 2; n <= 20; ++n) CHECK(omega_strict_bound(n, 1).value == 0);
}

TEST_CASE("pm_star_count") {
  CHECK(pm_star_count(5, 2, 2, 1) == 12);
  CHECK(pm_star_count(5, 2, 2, 2) == 4);
  CHECK(pm_star_count(6, 3, 2, 2) == 20);
  CHECK(pm_star_count(6, 3, 2, 1) == 30);
  CHECK(error_of([] { pm_star_count(6, 3, 2, 3); }) == Errc::Hypothesis);
}

TEST_CASE("star_identity_check") {
  CHECK(star_identity_check(5, 2, 2));
  CHECK(star_identity_check(6, 3, 2));
  for (int n = 2; n <= 20; ++n)
    for (int k = 1; k < n; ++k)
      for (int l = 1; l <= k && k + l <= n; ++l) CHECK(star_identity_check(n, k, l));
}

TEST_CASE("bound relations") {
  for (int n = 2; n <= 40; ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      const Exact strict = omega_strict_bound(n, k).value;
      CHECK(2 * omega_intersecting_bound(n, k).value == strict);
      CHECK(omega_cross_bound(n, k, k).value - k * ekr_bound(n, k).value == strict);
    }
}

TEST_CASE("bounds are reproducible values") {
  CHECK(omega_cross_bound(9, 4, 3) == omega_cross_bound(9, 4, 3));
  CHECK(omega_cross_bound(9, 4, 3).l == 3);
}
