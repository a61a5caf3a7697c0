#include "steenrod/resolution.hpp"

namespace steenrod {

std::string to_string(const WGenerator& e) {
  return "e_" + std::to_string(e.degree) + "@" + std::to_string(e.arity);
}

std::string to_string(const WKey& k) {
  if (k.group.is_identity()) return to_string(k.gen);
  auto exp = rho_exponent(k.group);
  const std::string g = exp ? "ρ^" + std::to_string(*exp) : to_string(k.group);
  return g + "·" + to_string(k.gen);
}

WElement w_generator(int arity, int degree, Ring ring) {
  if (arity < 1 || degree < 0) throw std::invalid_argument("w_generator: need arity >= 1, degree >= 0");
  return WElement::basis(WKey{Permutation::identity(arity), WGenerator{arity, degree}}, ring);
}

WElement w_act(const Permutation& g, const WElement& x) {
  WElement out(x.ring());
  for (const auto& [k, c] : x) {
    if (g.arity() != k.gen.arity) throw std::invalid_argument("w_act: arity mismatch");
    out.add_term(WKey{g.compose(k.group), k.gen}, c);
  }
  return out;
}

WElement w_act(const GroupRingElement& g, const WElement& x) {
  return act_by_group_ring(g, x, [](const Permutation& p, const WElement& y) { return w_act(p, y); });
}

WElement w_boundary(const WElement& x) {
  WElement out(x.ring());
  for (const auto& [k, c] : x) {
    const int d = k.gen.degree;
    if (d == 0) continue;
    const int r = k.gen.arity;
    const GroupRingElement factor = (d % 2) ? twist_element(r, x.ring()) : norm_element(r, x.ring());
    WElement lower = WElement::basis(WKey{k.group, WGenerator{r, d - 1}}, x.ring());
    // C_r is abelian, so g·(T e) = T·(g e).
    out.add_scaled(w_act(factor, lower), c);
  }
  return out;
}

namespace {

// The single entry of ∂_d : W_d → W_{d-1} after tensoring down to F_p,
// obtained by applying the augmentation ρ ↦ 1.
Coefficient reduced_differential(int p, int d) {
  const Ring fp = Ring::mod(p);
  const WElement image = w_boundary(w_generator(p, d, fp));
  Coefficient total = 0;
  for (const auto& [k, c] : image) total = fp.add(total, c);
  return total;
}

}  // namespace

int w_homology_mod_p(int p, int d) {
  if (!is_prime(p)) throw std::invalid_argument("w_homology_mod_p: " + std::to_string(p) + " is not prime");
  if (d < 0) throw std::invalid_argument("w_homology_mod_p: negative degree");
  // Each chain group is one-dimensional, so ranks are 0 or 1.
  const int rank_out = (d > 0 && reduced_differential(p, d) != 0) ? 1 : 0;
  const int rank_in = reduced_differential(p, d + 1) != 0 ? 1 : 0;
  return 1 - rank_out - rank_in;
}

}  // namespace steenrod
