#pragma once

// The minimal periodic resolution W(r) of the ground ring over R[C_r]:
//   W(r)_d = R[C_r]{e_d},  ∂e_d = T e_{d-1} (d odd),  N e_{d-1} (d even > 0).
// The resolution is infinite; elements only ever touch the degrees they name.

#include <string>

#include "steenrod/coeff.hpp"
#include "steenrod/perm.hpp"

namespace steenrod {

struct WGenerator {
  int arity = 1;
  int degree = 0;

  friend auto operator<=>(const WGenerator&, const WGenerator&) = default;
  friend bool operator==(const WGenerator&, const WGenerator&) = default;
};

/// g · e_d with g a power of ρ.
struct WKey {
  Permutation group;
  WGenerator gen;

  friend auto operator<=>(const WKey&, const WKey&) = default;
  friend bool operator==(const WKey&, const WKey&) = default;
};

inline int degree(const WKey& k) { return k.gen.degree; }
std::string to_string(const WGenerator& e);
std::string to_string(const WKey& k);

using WElement = FreeModule<WKey>;

WElement w_generator(int arity, int degree, Ring ring = Ring::integers());
WElement w_act(const Permutation& g, const WElement& x);
WElement w_act(const GroupRingElement& g, const WElement& x);
WElement w_boundary(const WElement& x);

/// dim H_d(W(p) ⊗_{F_p[C_p]} F_p), computed from ranks of the reduced
/// differentials. Throws std::invalid_argument for non-prime p.
int w_homology_mod_p(int p, int d);

}  // namespace steenrod
