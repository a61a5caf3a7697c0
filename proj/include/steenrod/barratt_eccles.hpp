#pragma once

// Normalized chains on E(S_r), i.e. tuples (σ_0, ..., σ_n) of permutations
// with no two equal neighbours, and the cyclic structure map W(r) → E(r).
// S_r acts diagonally.

#include <string>
#include <vector>

#include "steenrod/coeff.hpp"
#include "steenrod/perm.hpp"
#include "steenrod/resolution.hpp"

namespace steenrod {

struct BarrattEcclesCell {
  std::vector<Permutation> perms;

  int arity() const { return perms.empty() ? 0 : perms.front().arity(); }
  bool is_degenerate() const;

  friend auto operator<=>(const BarrattEcclesCell&, const BarrattEcclesCell&) = default;
  friend bool operator==(const BarrattEcclesCell&, const BarrattEcclesCell&) = default;
};

inline int degree(const BarrattEcclesCell& c) { return static_cast<int>(c.perms.size()) - 1; }

/// Exponent form `(0,1,0)` when every entry is a power of ρ, otherwise the
/// one-line tuples, e.g. `((1,2,3),(2,1,3))`.
std::string to_string(const BarrattEcclesCell& c);

using BarrattEcclesChain = FreeModule<BarrattEcclesCell>;

/// Tuple (ρ^{k_0}, ..., ρ^{k_n}); returns the zero chain if degenerate.
BarrattEcclesChain be_from_exponents(int r, const std::vector<int>& exponents,
                                     Ring ring = Ring::integers());

BarrattEcclesChain be_boundary(const BarrattEcclesChain& x);
BarrattEcclesChain be_act(const Permutation& g, const BarrattEcclesChain& x);
BarrattEcclesChain be_act(const GroupRingElement& g, const BarrattEcclesChain& x);

/// Image of the generator e_n under the structure map W(r) → E(r), over Z.
/// Memoized; safe to call concurrently.
const BarrattEcclesChain& psi_be(int r, int n);

/// C_r-linear extension of psi_be to all of W(r).
BarrattEcclesChain psi_be(const WElement& x);

}  // namespace steenrod
