#pragma once

// Dense linear algebra over F_p with deterministic pivoting: the pivot of a
// row is its first nonzero entry in index order.

#include <cstddef>
#include <vector>

#include "steenrod/coeff.hpp"

namespace steenrod {

using Vector = std::vector<Coefficient>;

/// Row-major dense matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Coefficient> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  Coefficient& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  Coefficient at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Incrementally built echelon basis of a subspace of F_p^dim. Every stored
/// row carries a label in F_p^label_dim that is reduced along with it, so
/// `reduce` also reports how a vector decomposes over the labelled rows.
class EchelonBasis {
 public:
  EchelonBasis(Ring ring, std::size_t dim, std::size_t label_dim = 0);

  /// Stores v (with its label) if it is independent of the rows so far.
  bool insert(Vector v, Vector label = {});

  /// Residual of v modulo the span. If `label` is given it receives the
  /// label combination of the subtracted rows.
  Vector reduce(Vector v, Vector* label = nullptr) const;

  bool contains(const Vector& v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dimension() const { return dim_; }
  Ring ring() const { return ring_; }

 private:
  struct Row {
    std::size_t pivot;
    Vector values;
    Vector label;
  };
  Ring ring_;
  std::size_t dim_;
  std::size_t label_dim_;
  std::vector<Row> rows_;
};

std::size_t rank(const Matrix& m, Ring ring);

/// Basis of {x : m x = 0}, one vector per free column of the reduced row
/// echelon form, in increasing column order.
std::vector<Vector> nullspace(const Matrix& m, Ring ring);

Vector multiply(const Matrix& m, const Vector& x, Ring ring);
bool is_zero(const Vector& v);

}  // namespace steenrod
