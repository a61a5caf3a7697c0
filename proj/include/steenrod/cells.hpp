#pragma once

// Normalized chains on the standard simplex Δ^n and cube □^n with their
// bialgebra maps (counit ε, coproduct Δ, degree-one product ∗). A surjection
// s acts on a chain by
//
//   (∗-products along each wire) ∘ (Koszul regrouping by s) ∘ Δ^{(n+r-1)}.
//
// Within a wire the factors are multiplied right-associatively,
// f_1 ∗ (f_2 ∗ (... ∗ f_k)), in the order they occur in s. The wire products
// form ∗^{(k_1-1)} ⊗ ... ⊗ ∗^{(k_r-1)}, applied with the Koszul rule for
// graded maps.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "steenrod/coeff.hpp"
#include "steenrod/surjection.hpp"

namespace steenrod {

enum class Geometry { simplicial, cubical };

std::string to_string(Geometry g);
Geometry parse_geometry(const std::string& name);

/// Nondegenerate simplex [v_0 < ... < v_k].
struct Simplex {
  std::vector<int> vertices;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Cube word x_1 ... x_n with letters [0], [1], [01].
struct Cube {
  enum Letter : std::uint8_t { zero = 0, one = 1, interval = 2 };
  std::vector<std::uint8_t> letters;

  friend auto operator<=>(const Cube&, const Cube&) = default;
  friend bool operator==(const Cube&, const Cube&) = default;
};

inline int degree(const Simplex& s) { return static_cast<int>(s.vertices.size()) - 1; }
int degree(const Cube& c);
std::string to_string(const Simplex& s);
std::string to_string(const Cube& c);

/// Parses `[0,1,2]` or a cube word such as `[01][0][1]`.
Simplex parse_simplex(const std::string& text);
Cube parse_cube(const std::string& text);

/// Top cell of Δ^n or □^n.
Simplex top_simplex(int n);
Cube top_cube(int n);

using SimplexChain = FreeModule<Simplex>;
using CubeChain = FreeModule<Cube>;
template <class Cell>
using CellTensor = FreeModule<TensorKey<Cell>>;

/// Every nondegenerate cell of Δ^n (or □^n) of the given degree.
std::vector<Simplex> simplices_of(int n, int deg);
std::vector<Cube> cubes_of(int n, int deg);

SimplexChain cell_boundary(const SimplexChain& x);
CubeChain cell_boundary(const CubeChain& x);

Coefficient counit_simplicial(const SimplexChain& x);
CellTensor<Simplex> coproduct_simplicial(const SimplexChain& x);
SimplexChain join_simplicial(const CellTensor<Simplex>& x);

Coefficient counit_cubical(const CubeChain& x);
CellTensor<Cube> coproduct_cubical(const CubeChain& x);
CubeChain product_cubical(const CellTensor<Cube>& x);

/// Basis-level structure maps, dispatched by cell type.
struct SimplexOps {
  using Cell = Simplex;
  static constexpr Geometry geometry = Geometry::simplicial;
  static SimplexChain boundary(const Simplex& c);
  static Coefficient counit(const Simplex& c);
  static CellTensor<Simplex> coproduct(const Simplex& c);
  static SimplexChain product(const Simplex& a, const Simplex& b);
};

struct CubeOps {
  using Cell = Cube;
  static constexpr Geometry geometry = Geometry::cubical;
  static CubeChain boundary(const Cube& c);
  static Coefficient counit(const Cube& c);
  static CellTensor<Cube> coproduct(const Cube& c);
  static CubeChain product(const Cube& a, const Cube& b);
};

template <class Cell>
struct OpsFor;
template <>
struct OpsFor<Simplex> {
  using type = SimplexOps;
};
template <>
struct OpsFor<Cube> {
  using type = CubeOps;
};

/// Image of a surjection generator on a chain: an element of the r-fold
/// tensor power of degree |c| + deg(s). Throws std::invalid_argument on
/// inhomogeneous input.
CellTensor<Simplex> evaluate_surjection(const Surjection& s, const SimplexChain& c);
CellTensor<Cube> evaluate_surjection(const Surjection& s, const CubeChain& c);

/// Linear extension over a surjection chain.
CellTensor<Simplex> evaluate_surjection(const SurjectionChain& s, const SimplexChain& c);
CellTensor<Cube> evaluate_surjection(const SurjectionChain& s, const CubeChain& c);

/// Same evaluation restricted to output terms whose every factor has degree
/// `factor_degree`. The simplicial version enumerates coproduct cuts
/// directly and prunes colliding joins early.
CellTensor<Simplex> evaluate_surjection_uniform(const SurjectionChain& s, const Simplex& c, int factor_degree);
CellTensor<Cube> evaluate_surjection_uniform(const SurjectionChain& s, const Cube& c, int factor_degree);

/// Reference composite for the simplicial case (full Δ expansion, no
/// pruning). Kept for cross-checking the fast path.
CellTensor<Simplex> evaluate_surjection_reference(const Surjection& s, const Simplex& c);

}  // namespace steenrod
