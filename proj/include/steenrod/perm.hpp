#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steenrod/coeff.hpp"

namespace steenrod {

/// Permutation of {1..r} in one-line notation: image[i-1] = σ(i).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int r);

  int arity() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_.at(i - 1); }
  const std::vector<int>& image() const { return image_; }

  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  int sign() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

inline int degree(const Permutation&) { return 0; }
std::string to_string(const Permutation& p);

/// ρ^k for the rotation ρ(i) = i + 1 (mod r) on {1..r}.
Permutation rho(int r, long long k);
/// Exponent k in [0, r) with p = ρ^k, if p lies in the cyclic subgroup.
std::optional<int> rho_exponent(const Permutation& p);

using GroupRingElement = FreeModule<Permutation>;

GroupRingElement twist_element(int r, Ring ring = Ring::integers());
GroupRingElement norm_element(int r, Ring ring = Ring::integers());
GroupRingElement group_ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

/// Linear extension of a permutation action to the group ring.
template <class Key, class Act>
FreeModule<Key> act_by_group_ring(const GroupRingElement& g, const FreeModule<Key>& x, Act&& act) {
  FreeModule<Key> out(x.ring());
  for (const auto& [perm, c] : g) out.add_scaled(act(perm, x), c);
  return out;
}

}  // namespace steenrod
