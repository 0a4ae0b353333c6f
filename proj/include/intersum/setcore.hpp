#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "intersum/error.hpp"

namespace intersum {

// Largest ground set a single 64-bit mask can hold (bit 0 is never used).
inline constexpr int kMaxGround = 63;

// Exact canonicalization enumerates all n! relabelings; above this it refuses.
inline constexpr int kCanonicalLimit = 10;

using Mask = std::uint64_t;

inline constexpr Mask element_bit(int x) { return Mask{1} << x; }

// All ground elements 1..n.
inline constexpr Mask ground_mask(int n) { return ((Mask{1} << n) - 1) << 1; }

/// A subset of [n] = {1..n} stored as a bitmask; element x lives at bit x.
class KSet {
 public:
  KSet() = default;

  // Throws BadElement for bits outside 1..n, TooLarge for n outside 1..63.
  KSet(int n, Mask bits);

  static KSet from_elements(int n, std::span<const int> elements);

  int n() const noexcept { return n_; }
  Mask bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool contains(int x) const noexcept { return x >= 1 && x <= n_ && (bits_ >> x) & 1; }

  // Ascending element list.
  std::vector<int> elements() const;

  friend bool operator==(const KSet&, const KSet&) = default;
  friend std::strong_ordering operator<=>(const KSet& a, const KSet& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.n_ <=> b.n_;
  }

 private:
  int n_ = 0;
  Mask bits_ = 0;
};

inline int meet_size(const KSet& a, const KSet& b) noexcept { return std::popcount(a.bits() & b.bits()); }

/// Duplicate-free family of k-subsets of [n], members in strictly increasing
/// bitmask order so equal families compare equal structurally.
class Family {
 public:
  Family() = default;

  // Members may arrive unsorted; duplicates raise DuplicateSet.
  Family(int n, int k, std::vector<KSet> members);

  static Family from_masks(int n, int k, std::span<const Mask> masks);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<KSet>& members() const noexcept { return members_; }
  std::vector<Mask> masks() const;
  bool contains(const KSet& s) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const Family&, const Family&) = default;

  // Lexicographic on the sorted member bitmasks; ties broken by (n, k).
  friend std::strong_ordering operator<=>(const Family& a, const Family& b);

 private:
  int n_ = 1;
  int k_ = 1;
  std::vector<KSet> members_;
};

/// A bijection of [n]; image(i) is where element i goes.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Maps cycle[0] -> cycle[1] -> ... -> cycle.back() -> cycle[0].
  static Permutation cycle(int n, std::span<const int> cycle);

  int n() const noexcept { return static_cast<int>(image_.size()); }
  int image(int x) const { return image_.at(static_cast<std::size_t>(x - 1)); }
  Mask apply(Mask bits) const noexcept;
  KSet apply(const KSet& s) const;

 private:
  std::vector<int> image_;
};

Family make_family(int n, int k, const std::vector<std::vector<int>>& sets);

bool is_intersecting(const Family& f);

// GroundMismatch when the ground sets differ.
bool is_cross_intersecting(const Family& a, const Family& b);

Family star(int n, int k, int x);

// Every k-subset of [n] in increasing bitmask order.
std::vector<Mask> all_k_subsets(int n, int k);

Family apply_perm(const Family& f, const Permutation& p);

// The centre x when f is exactly star(n, k, x).
std::optional<int> is_star(const Family& f);

// Lexicographically least relabeling of f; TooLarge above kCanonicalLimit.
Family canonical_form(const Family& f);

// Least simultaneous relabeling of a pair, compared as (image of a, image of b).
std::pair<Family, Family> canonical_pair(const Family& a, const Family& b);

/// Permutation-invariant summary for quick non-isomorphism filtering when
/// n is too large for canonical_form. Equal fingerprints prove nothing.
struct Fingerprint {
  std::vector<std::size_t> degrees;           // sorted element degrees
  std::vector<std::uint64_t> meet_histogram;  // ordered pairs of F x F by meet size

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Family& f);

void require_same_ground(const Family& a, const Family& b);

}  // namespace intersum
