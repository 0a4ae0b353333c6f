#include "intersum/setcore.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

namespace intersum {

namespace {

void require_ground(int n) {
  if (n < 1 || n > kMaxGround)
    throw Error(Errc::TooLarge, "ground set size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGround));
}

void require_member_size(int n, int k) {
  require_ground(n);
  if (k < 1 || k > n)
    throw Error(Errc::BadSize, "member size " + std::to_string(k) + " outside 1.." + std::to_string(n));
}

// Relabels masks over bits 1..10 with two table lookups per mask.
class MaskRelabeler {
 public:
  explicit MaskRelabeler(std::span<const int> image) {
    low_[0] = 0;
    for (unsigned m = 1; m < low_.size(); ++m) {
      const int bit = std::countr_zero(m);
      const auto x = static_cast<std::size_t>(bit);
      low_[m] = low_[m & (m - 1)] | (x >= 1 && x <= image.size() ? element_bit(image[x - 1]) : 0);
    }
    high_[0] = 0;
    for (unsigned m = 1; m < high_.size(); ++m) {
      const auto x = static_cast<std::size_t>(std::countr_zero(m) + 6);
      high_[m] = high_[m & (m - 1)] | (x <= image.size() ? element_bit(image[x - 1]) : 0);
    }
  }

  Mask operator()(Mask m) const noexcept { return low_[m & 63] | high_[(m >> 6) & 31]; }

 private:
  std::array<Mask, 64> low_{};
  std::array<Mask, 32> high_{};
};

}  // namespace

KSet::KSet(int n, Mask bits) : n_(n), bits_(bits) {
  require_ground(n);
  if ((bits & ~ground_mask(n)) != 0)
    throw Error(Errc::BadElement, "set has an element outside 1.." + std::to_string(n));
}

KSet KSet::from_elements(int n, std::span<const int> elements) {
  require_ground(n);
  Mask bits = 0;
  for (int x : elements) {
    if (x < 1 || x > n)
      throw Error(Errc::BadElement, "element " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (bits & element_bit(x)) throw Error(Errc::BadSize, "element " + std::to_string(x) + " repeated within a set");
    bits |= element_bit(x);
  }
  return KSet(n, bits);
}

std::vector<int> KSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Family::Family(int n, int k, std::vector<KSet> members) : n_(n), k_(k), members_(std::move(members)) {
  require_member_size(n, k);
  for (const auto& s : members_) {
    if (s.n() != n) throw Error(Errc::GroundMismatch, "member over a different ground set");
    if (s.size() != k)
      throw Error(Errc::BadSize, "member of size " + std::to_string(s.size()) + " in a family of " +
                                     std::to_string(k) + "-sets");
  }
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(Errc::DuplicateSet, "family lists the same set twice");
}

Family Family::from_masks(int n, int k, std::span<const Mask> masks) {
  require_ground(n);
  std::vector<KSet> members;
  members.reserve(masks.size());
  for (Mask m : masks) members.emplace_back(n, m);
  return Family(n, k, std::move(members));
}

std::vector<Mask> Family::masks() const {
  std::vector<Mask> out;
  out.reserve(members_.size());
  for (const auto& s : members_) out.push_back(s.bits());
  return out;
}

bool Family::contains(const KSet& s) const { return std::binary_search(members_.begin(), members_.end(), s); }

std::strong_ordering operator<=>(const Family& a, const Family& b) {
  const auto c = std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(), b.members_.begin(),
                                                        b.members_.end());
  if (c != 0) return c;
  if (auto n = a.n_ <=> b.n_; n != 0) return n;
  return a.k_ <=> b.k_;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  require_ground(n);
  Mask seen = 0;
  for (int y : image_) {
    if (y < 1 || y > n || (seen & element_bit(y))) throw Error(Errc::BadElement, "permutation image is not a bijection");
    seen |= element_bit(y);
  }
}

Permutation Permutation::identity(int n) {
  require_ground(n);
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto p = identity(n);
  if (a < 1 || a > n || b < 1 || b > n) throw Error(Errc::BadElement, "transposition outside the ground set");
  std::swap(p.image_[static_cast<std::size_t>(a - 1)], p.image_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::cycle(int n, std::span<const int> cycle) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int from = cycle[i];
    if (from < 1 || from > n) throw Error(Errc::BadElement, "cycle element outside the ground set");
    image[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(image));
}

Mask Permutation::apply(Mask bits) const noexcept {
  Mask out = 0;
  for (Mask m = bits; m != 0; m &= m - 1) out |= element_bit(image_[static_cast<std::size_t>(std::countr_zero(m) - 1)]);
  return out;
}

KSet Permutation::apply(const KSet& s) const {
  if (s.n() != n()) throw Error(Errc::GroundMismatch, "permutation and set use different ground sets");
  return KSet(s.n(), apply(s.bits()));
}

Family make_family(int n, int k, const std::vector<std::vector<int>>& sets) {
  require_member_size(n, k);
  std::vector<KSet> members;
  members.reserve(sets.size());
  for (const auto& elements : sets) {
    auto s = KSet::from_elements(n, elements);
    if (s.size() != k)
      throw Error(Errc::BadSize, "set of size " + std::to_string(elements.size()) + ", expected " + std::to_string(k));
    members.push_back(s);
  }
  return Family(n, k, std::move(members));
}

bool is_intersecting(const Family& f) {
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if ((m[i].bits() & m[j].bits()) == 0) return false;
  return true;
}

void require_same_ground(const Family& a, const Family& b) {
  if (a.n() != b.n())
    throw Error(Errc::GroundMismatch,
                "families over [" + std::to_string(a.n()) + "] and [" + std::to_string(b.n()) + "]");
}

bool is_cross_intersecting(const Family& a, const Family& b) {
  require_same_ground(a, b);
  for (const auto& x : a)
    for (const auto& y : b)
      if ((x.bits() & y.bits()) == 0) return false;
  return true;
}

std::vector<Mask> all_k_subsets(int n, int k) {
  require_member_size(n, k);
  std::vector<Mask> out;
  // Gosper's hack over bits 0..n-1, shifted up by one.
  Mask v = (Mask{1} << k) - 1;
  const Mask limit = Mask{1} << n;
  while (v < limit) {
    out.push_back(v << 1);
    const Mask t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

Family star(int n, int k, int x) {
  require_member_size(n, k);
  if (x < 1 || x > n) throw Error(Errc::BadElement, "star centre " + std::to_string(x) + " outside 1.." + std::to_string(n));
  std::vector<Mask> masks;
  for (Mask m : all_k_subsets(n, k))
    if (m & element_bit(x)) masks.push_back(m);
  return Family::from_masks(n, k, masks);
}

Family apply_perm(const Family& f, const Permutation& p) {
  if (f.n() != p.n()) throw Error(Errc::GroundMismatch, "permutation and family use different ground sets");
  std::vector<KSet> image;
  image.reserve(f.size());
  for (const auto& s : f) image.push_back(p.apply(s));
  return Family(f.n(), f.k(), std::move(image));
}

std::optional<int> is_star(const Family& f) {
  if (f.empty()) return std::nullopt;
  Mask common = ground_mask(f.n());
  for (const auto& s : f) common &= s.bits();
  for (Mask m = common; m != 0; m &= m - 1) {
    const int x = std::countr_zero(m);
    if (f == star(f.n(), f.k(), x)) return x;
  }
  return std::nullopt;
}

namespace {

void require_canonical_limit(int n) {
  if (n > kCanonicalLimit)
    throw Error(Errc::TooLarge, "exact canonical form needs n <= " + std::to_string(kCanonicalLimit) + ", got " +
                                    std::to_string(n));
}

// Calls visit(relabel) for every permutation of [n].
template <typename Visit>
void for_each_relabeling(int n, Visit&& visit) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  do {
    visit(MaskRelabeler(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

void relabel_sorted(const MaskRelabeler& relabel, std::span<const Mask> in, std::vector<Mask>& out) {
  out.clear();
  for (Mask m : in) out.push_back(relabel(m));
  std::sort(out.begin(), out.end());
}

}  // namespace

Family canonical_form(const Family& f) {
  require_canonical_limit(f.n());
  const auto masks = f.masks();
  std::vector<Mask> best = masks;
  std::vector<Mask> image;
  image.reserve(masks.size());
  for_each_relabeling(f.n(), [&](const MaskRelabeler& relabel) {
    relabel_sorted(relabel, masks, image);
    if (image < best) best.swap(image);
  });
  return Family::from_masks(f.n(), f.k(), best);
}

std::pair<Family, Family> canonical_pair(const Family& a, const Family& b) {
  require_same_ground(a, b);
  require_canonical_limit(a.n());
  const auto ma = a.masks();
  const auto mb = b.masks();
  std::vector<Mask> best_a = ma, best_b = mb, img_a, img_b;
  for_each_relabeling(a.n(), [&](const MaskRelabeler& relabel) {
    relabel_sorted(relabel, ma, img_a);
    if (img_a > best_a) return;
    relabel_sorted(relabel, mb, img_b);
    if (img_a < best_a || img_b < best_b) {
      best_a.swap(img_a);
      best_b.swap(img_b);
    }
  });
  return {Family::from_masks(a.n(), a.k(), best_a), Family::from_masks(b.n(), b.k(), best_b)};
}

Fingerprint fingerprint(const Family& f) {
  Fingerprint fp;
  fp.degrees.assign(static_cast<std::size_t>(f.n()), 0);
  for (const auto& s : f)
    for (int x : s.elements()) ++fp.degrees[static_cast<std::size_t>(x - 1)];
  std::sort(fp.degrees.begin(), fp.degrees.end());
  fp.meet_histogram.assign(static_cast<std::size_t>(f.k()) + 1, 0);
  for (const auto& a : f)
    for (const auto& b : f) ++fp.meet_histogram[static_cast<std::size_t>(meet_size(a, b))];
  return fp;
}

}  // namespace intersum
