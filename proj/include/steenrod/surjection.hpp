#pragma once

// The surjection complex X(r) in the McClure–Smith sign convention. The
// contraction (i, p, s, h) onto X(1) drives the recursive structure map
// W(r) → X(r).

#include <string>
#include <vector>

#include "steenrod/coeff.hpp"
#include "steenrod/perm.hpp"
#include "steenrod/resolution.hpp"

namespace steenrod {

/// A sequence (s(1), ..., s(n+r)) with values in {1..r}. Stored keys are
/// always nondegenerate: surjective with no equal neighbours.
struct Surjection {
  std::vector<int> values;

  int arity() const;
  friend auto operator<=>(const Surjection&, const Surjection&) = default;
  friend bool operator==(const Surjection&, const Surjection&) = default;
};

int degree(const Surjection& s);
std::string to_string(const Surjection& s);
bool is_degenerate(const std::vector<int>& values, int arity);

using SurjectionChain = FreeModule<Surjection>;

/// Basis element for `values`, or zero if the sequence is degenerate for the
/// given arity.
SurjectionChain surjection(std::vector<int> values, int arity, Ring ring = Ring::integers());

SurjectionChain sj_boundary(const SurjectionChain& x);
SurjectionChain sj_act(const Permutation& g, const SurjectionChain& x);
SurjectionChain sj_act(const GroupRingElement& g, const SurjectionChain& x);

SurjectionChain sj_contract_i(const SurjectionChain& x);
SurjectionChain sj_contract_p(const SurjectionChain& x);
SurjectionChain sj_contract_s(const SurjectionChain& x);
/// h = s + i s p + ... + i^{r-1} s p^{r-1} on arity-r elements.
SurjectionChain sj_homotopy_h(const SurjectionChain& x, int arity);

/// Image of e_n under W(r) → X(r), over Z. Memoized per (r, n).
const SurjectionChain& psi_sj(int r, int n);
SurjectionChain psi_sj(const WElement& x);

/// Serialized memo table support; see `psi_cache_save` / `psi_cache_load`.
struct PsiCacheEntry {
  int arity;
  int degree;
  SurjectionChain value;
};
std::vector<PsiCacheEntry> psi_sj_cached_entries();
void psi_sj_seed(int r, int n, SurjectionChain value);

}  // namespace steenrod
