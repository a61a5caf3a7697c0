#pragma once

// Finite simplicial and cubical sets given by per-degree cells and face
// words. Cohomology over F_p comes from elimination; Steenrod operations act
// on the resulting classes.
//
// A face is stored as (target, degeneracy word): the word [j_1, ..., j_k]
// stands for s_{j_1} ... s_{j_k} applied to the nondegenerate target, so the
// rightmost index acts first. Simplicial s_j repeats vertex j (0-based);
// cubical s_j inserts a constant coordinate at position j (1-based).
// Cubical faces are listed as d^0_1, d^1_1, d^0_2, d^1_2, ...

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "steenrod/cells.hpp"
#include "steenrod/linalg.hpp"

namespace steenrod {

/// Malformed space: identity failure, dangling face, bad degeneracy.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FaceRef {
  int target = 0;
  std::vector<int> degeneracies;
};

/// A possibly degenerate cell: a nondegenerate cell plus the map from the
/// standard cell onto it. Simplicial: monotone surjection f on vertices,
/// one entry per vertex. Cubical: one entry per coordinate, -1 for a
/// constant coordinate, else the coordinate of the cell it follows.
struct GeneralCell {
  int dim = 0;
  int cell = 0;
  std::vector<int> map;

  bool degenerate(Geometry g) const;
  friend bool operator==(const GeneralCell&, const GeneralCell&) = default;
};

class Space {
 public:
  explicit Space(Geometry geometry) : geometry_(geometry) {}

  Geometry geometry() const { return geometry_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t cell_count(int n) const;
  const std::string& cell_name(int n, int id) const;
  const std::vector<FaceRef>& faces(int n, int id) const;
  std::optional<int> find_cell(int n, const std::string& name) const;

  /// Appends a cell; returns its id. Call `validate` once all are added.
  int add_cell(int n, std::string name, std::vector<FaceRef> faces);

  /// Checks face arities, targets, degeneracy words and the simplicial or
  /// cubical identities. Throws ValidationError.
  void validate() const;

  /// Face k of a cell as a general cell. Simplicial k = i for d_i;
  /// cubical k = 2(i-1) + ε for d^ε_i.
  GeneralCell face(int n, int id, int k) const;
  GeneralCell face(const GeneralCell& x, int k) const;
  int face_count(int n) const { return geometry_ == Geometry::simplicial ? n + 1 : 2 * n; }

  /// Nondegenerate part of the boundary: (face id, sign) pairs in degree n-1.
  std::vector<std::pair<int, Coefficient>> boundary(int n, int id) const;

  /// The cell reached by restricting the characteristic map of (n, id)
  /// to a face of the standard cell; nullopt if that face is degenerate.
  std::optional<int> restrict_to(int n, int id, const Simplex& face) const;
  std::optional<int> restrict_to(int n, int id, const Cube& face) const;

 private:
  GeneralCell normalize(int n, const FaceRef& f) const;
  std::optional<int> restrict_mask(int n, int id, std::uint64_t mask) const;

  struct Cell {
    std::string name;
    std::vector<FaceRef> faces;
  };
  Geometry geometry_;
  std::vector<std::vector<Cell>> cells_;
};

/// Ordered simplicial complex from facets; cells are named `[v0,v1,...]`.
Space from_facets(const std::vector<std::vector<int>>& facets);
Space boundary_simplex(int n);
Space standard_simplex(int n);
Space rp2();
/// N-skeleton of the bar construction of C_p; cells are tuples of
/// exponents in {1..p-1}, named `(g1,...,gn)`.
Space classifying_space_skeleton(int p, int top);
Space torus2();
Space klein2();

/// Converts a monotone surjection of vertex indices into a canonical
/// degeneracy word (decreasing indices).
std::vector<int> degeneracy_word(const std::vector<int>& vertex_map);

// ---- cochains -------------------------------------------------------------

/// A cochain of cohomological degree m: one value per m-cell.
struct SpaceCochain {
  int degree = 0;
  Vector values;
};

/// δ: C^m → C^{m+1}, (δa)(c) = a(∂c). Works over Z as well.
Vector coboundary(const Space& x, int m, const Vector& a, Ring ring);
Matrix coboundary_matrix(const Space& x, int m, Ring ring);

/// Cup-(r,i) product of cochains of cohomological degrees `degrees`,
/// valued on cells of degree sum(degrees) - i.
Vector space_product(const Space& x, Ring ring, int r, int i, std::span<const Vector> cochains,
                     std::span<const int> degrees);

/// D^p_i of a cochain of cohomological degree m.
Vector space_power(const Space& x, std::int64_t p, int i, const Vector& a, int m);

/// Cohomological P^s (or βP^s) on a cocycle of degree m. Returns the
/// representing cochain and its degree. Throws if a is not a cocycle.
SpaceCochain space_steenrod(const Space& x, std::int64_t p, int s, bool bockstein, const Vector& a, int m);

/// Values of a cochain on `small`, pulled back along the inclusion that
/// matches cells by name.
Vector pullback_by_name(const Space& big, const Space& small, int m, const Vector& a);

// ---- cohomology -----------------------------------------------------------

class CohomologyBasis {
 public:
  CohomologyBasis(const Space& x, std::int64_t p, int m);

  std::int64_t prime() const { return ring_.modulus(); }
  int degree() const { return degree_; }
  std::size_t rank() const { return representatives_.size(); }
  const Vector& representative(std::size_t k) const { return representatives_.at(k); }

  bool is_cocycle(const Vector& a) const;
  /// Coordinates of the class of a cocycle. Throws if a is not a cocycle.
  Vector coordinates(const Vector& a) const;

 private:
  Ring ring_;
  int degree_;
  Matrix delta_;
  std::vector<Vector> representatives_;
  EchelonBasis reducer_;
};

struct CohomologyClass {
  std::int64_t prime = 2;
  int degree = 0;
  Vector coordinates;
  Vector representative;
};

CohomologyClass basis_class(const Space& x, std::int64_t p, int m, std::size_t index);
CohomologyClass class_of(const Space& x, std::int64_t p, int m, const Vector& cocycle);

/// P^s or βP^s (cohomological index s) applied to the stored
/// representative, re-expressed in the target basis. Output degrees above
/// the dimension give the zero class; negative ones throw.
CohomologyClass steenrod_on_class(const Space& x, std::int64_t p, int s, bool bockstein, const CohomologyClass& cls);

/// Cup product of two classes (r = 2, i = 0).
CohomologyClass cup_classes(const Space& x, const CohomologyClass& a, const CohomologyClass& b);

}  // namespace steenrod
