#pragma once

// Cup-(r,i) products and the Steenrod operations built from them, on
// cochains of a standard simplex or cube.
//
// Grading is homological throughout: a cochain dual to k-cells has degree
// -k. The cohomological operations P^s and βP^s are P_{-s} and βP_{-s}.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "steenrod/cells.hpp"

namespace steenrod {

/// A Steenrod operation was applied to a cochain that is not closed.
class NotCocycleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OperationContext {
  Geometry geometry = Geometry::simplicial;
  int dimension = 0;  // ambient Δ^n or □^n
  Ring ring;          // Z, or F_p for the Steenrod operations

  /// prime = 0 selects Z. Throws if prime is neither 0 nor a prime.
  static OperationContext make(Geometry geometry, int dimension, std::int64_t prime);
  std::int64_t prime() const { return ring.modulus(); }
};

using SimplexCochain = FreeModule<Simplex>;
using CubeCochain = FreeModule<Cube>;

/// Every nondegenerate cell of the ambient cell in one degree.
template <class Cell>
std::vector<Cell> cells_in(int ambient, int deg);

/// Homological degree of a homogeneous cochain, or nullopt for zero.
/// Throws on inhomogeneous input.
template <class Cell>
std::optional<int> cochain_degree(const FreeModule<Cell>& a);

/// (δa)(c) = a(∂c) on cells of the ambient cell.
template <class Cell>
FreeModule<Cell> coboundary(const OperationContext& ctx, const FreeModule<Cell>& a);

/// (a_1 ⊗ ... ⊗ a_r)(eval(ψ_X(r)(e_i), chain)).
template <class Cell>
Coefficient cup_r_i(const OperationContext& ctx, int r, int i, std::span<const FreeModule<Cell>> cochains,
                    const FreeModule<Cell>& chain);

/// eval(ψ_X(p)(e_i), top cell of dimension n), keeping only terms whose
/// factors all have degree `factor_degree`. Memoized; over Z.
template <class Cell>
const CellTensor<Cell>& power_element(int p, int i, int n, int factor_degree);

/// D^p_i(a): zero for i < 0, else a cochain of degree p q + i.
template <class Cell>
FreeModule<Cell> big_d(const OperationContext& ctx, int i, const FreeModule<Cell>& a);

/// ν(q) = (-1)^{q(q-1)m/2} (m!)^q mod p with m = (p-1)/2, for odd p.
Coefficient nu(std::int64_t p, std::int64_t q);

/// Index i with P_s (or βP_s) represented by a multiple of D^p_i on a
/// cochain of homological degree q.
int steenrod_index(std::int64_t p, int s, int q, bool bockstein);

/// The scalar in front of D^p_i: 1 for p = 2, (-1)^s ν(q) otherwise.
Coefficient steenrod_scalar(std::int64_t p, int s, int q);

/// Homological P_s and βP_s on a cocycle. Throws if a is not a cocycle or
/// if βP is requested at p = 2.
template <class Cell>
FreeModule<Cell> steenrod_P(const OperationContext& ctx, int s, const FreeModule<Cell>& a);
template <class Cell>
FreeModule<Cell> steenrod_betaP(const OperationContext& ctx, int s, const FreeModule<Cell>& a);

/// Cohomological aliases.
template <class Cell>
FreeModule<Cell> steenrod_P_upper(const OperationContext& ctx, int s, const FreeModule<Cell>& a) {
  return steenrod_P(ctx, -s, a);
}
template <class Cell>
FreeModule<Cell> steenrod_betaP_upper(const OperationContext& ctx, int s, const FreeModule<Cell>& a) {
  return steenrod_betaP(ctx, -s, a);
}

}  // namespace steenrod
