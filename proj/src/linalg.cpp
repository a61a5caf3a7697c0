#include "steenrod/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace steenrod {

namespace {

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return i;
  return v.size();
}

// a -= c * b, entrywise.
void axpy(Vector& a, Coefficient c, const Vector& b, Ring ring) {
  if (!c) return;
  const Coefficient nc = ring.neg(c);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i]) a[i] = ring.add(a[i], ring.mul(nc, b[i]));
}

}  // namespace

EchelonBasis::EchelonBasis(Ring ring, std::size_t dim, std::size_t label_dim)
    : ring_(ring), dim_(dim), label_dim_(label_dim) {
  if (ring.is_integral()) throw std::invalid_argument("EchelonBasis: need a field F_p");
}

Vector EchelonBasis::reduce(Vector v, Vector* label) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  for (auto& x : v) x = ring_.normalize(x);
  if (label) label->assign(label_dim_, 0);
  // Rows are mutually reduced in insertion order, so one pass suffices.
  for (const Row& row : rows_) {
    const Coefficient c = v[row.pivot];
    if (!c) continue;
    axpy(v, c, row.values, ring_);
    if (label)
      for (std::size_t i = 0; i < label_dim_; ++i) (*label)[i] = ring_.add((*label)[i], ring_.mul(c, row.label[i]));
  }
  return v;
}

bool EchelonBasis::insert(Vector v, Vector label) {
  if (label.empty()) label.assign(label_dim_, 0);
  if (label.size() != label_dim_) throw std::invalid_argument("EchelonBasis: label dimension mismatch");
  for (auto& x : label) x = ring_.normalize(x);
  Vector subtracted;
  v = reduce(std::move(v), &subtracted);
  const std::size_t pivot = first_nonzero(v);
  if (pivot == v.size()) return false;
  for (std::size_t i = 0; i < label_dim_; ++i) label[i] = ring_.add(label[i], ring_.neg(subtracted[i]));
  const Coefficient inv = ring_.inverse(v[pivot]);
  for (auto& x : v) x = ring_.mul(x, inv);
  for (auto& x : label) x = ring_.mul(x, inv);
  rows_.push_back({pivot, std::move(v), std::move(label)});
  return true;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero(reduce(v)); }

std::size_t rank(const Matrix& m, Ring ring) {
  EchelonBasis basis(ring, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    basis.insert(Vector(m.data.begin() + i * m.cols, m.data.begin() + (i + 1) * m.cols));
  return basis.rank();
}

std::vector<Vector> nullspace(const Matrix& m, Ring ring) {
  if (ring.is_integral()) throw std::invalid_argument("nullspace: need a field F_p");
  Matrix a = m;
  for (auto& x : a.data) x = ring.normalize(x);
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t found = row;
    while (found < a.rows && !a.at(found, col)) ++found;
    if (found == a.rows) continue;
    for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(row, j), a.at(found, j));
    const Coefficient inv = ring.inverse(a.at(row, col));
    for (std::size_t j = 0; j < a.cols; ++j) a.at(row, j) = ring.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == row || !a.at(i, col)) continue;
      const Coefficient c = ring.neg(a.at(i, col));
      for (std::size_t j = 0; j < a.cols; ++j) a.at(i, j) = ring.add(a.at(i, j), ring.mul(c, a.at(row, j)));
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = ring.neg(a.at(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

Vector multiply(const Matrix& m, const Vector& x, Ring ring) {
  if (x.size() != m.cols) throw std::invalid_argument("multiply: dimension mismatch");
  Vector out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) && x[j]) out[i] = ring.add(out[i], ring.mul(m.at(i, j), x[j]));
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Coefficient c) { return c == 0; });
}

}  // namespace steenrod
