#include "steenrod/complexes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "steenrod/ops.hpp"
#include "steenrod/parallel.hpp"

namespace steenrod {

bool GeneralCell::degenerate(Geometry g) const {
  if (g == Geometry::simplicial) return static_cast<int>(map.size()) != dim + 1;
  return static_cast<int>(map.size()) != dim;
}

std::size_t Space::cell_count(int n) const {
  if (n < 0 || n > dimension()) return 0;
  return cells_[n].size();
}

const std::string& Space::cell_name(int n, int id) const { return cells_.at(n).at(id).name; }

const std::vector<FaceRef>& Space::faces(int n, int id) const { return cells_.at(n).at(id).faces; }

std::optional<int> Space::find_cell(int n, const std::string& name) const {
  if (n < 0 || n > dimension()) return std::nullopt;
  for (std::size_t i = 0; i < cells_[n].size(); ++i)
    if (cells_[n][i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int Space::add_cell(int n, std::string name, std::vector<FaceRef> faces) {
  if (n < 0) throw ValidationError("cell of negative degree");
  if (static_cast<int>(cells_.size()) <= n) cells_.resize(n + 1);
  cells_[n].push_back({std::move(name), std::move(faces)});
  return static_cast<int>(cells_[n].size()) - 1;
}

GeneralCell Space::normalize(int n, const FaceRef& f) const {
  const int k = n - 1 - static_cast<int>(f.degeneracies.size());
  if (k < 0) throw ValidationError("degeneracy word longer than the face dimension allows");
  if (f.target < 0 || static_cast<std::size_t>(f.target) >= cell_count(k))
    throw ValidationError("face target " + std::to_string(f.target) + " does not exist in degree " + std::to_string(k));
  GeneralCell out{k, f.target, {}};
  if (geometry_ == Geometry::simplicial) {
    out.map.resize(k + 1);
    std::iota(out.map.begin(), out.map.end(), 0);
    for (auto it = f.degeneracies.rbegin(); it != f.degeneracies.rend(); ++it) {
      const int j = *it;
      if (j < 0 || j >= static_cast<int>(out.map.size())) throw ValidationError("degeneracy index out of range");
      out.map.insert(out.map.begin() + j + 1, out.map[j]);
    }
  } else {
    out.map.resize(k);
    std::iota(out.map.begin(), out.map.end(), 0);
    for (auto it = f.degeneracies.rbegin(); it != f.degeneracies.rend(); ++it) {
      const int j = *it;
      if (j < 1 || j > static_cast<int>(out.map.size()) + 1) throw ValidationError("degeneracy index out of range");
      out.map.insert(out.map.begin() + (j - 1), -1);
    }
  }
  return out;
}

GeneralCell Space::face(int n, int id, int k) const {
  const auto& fs = faces(n, id);
  if (k < 0 || k >= static_cast<int>(fs.size())) throw std::out_of_range("face index out of range");
  return normalize(n, fs[k]);
}

GeneralCell Space::face(const GeneralCell& x, int k) const {
  if (geometry_ == Geometry::simplicial) {
    const int m = static_cast<int>(x.map.size()) - 1;
    if (m < 1 || k < 0 || k > m) throw std::out_of_range("face index out of range");
    std::vector<int> g = x.map;
    const int v = g[k];
    g.erase(g.begin() + k);
    if (std::count(x.map.begin(), x.map.end(), v) > 1) return {x.dim, x.cell, std::move(g)};
    const GeneralCell f = face(x.dim, x.cell, v);
    GeneralCell out{f.dim, f.cell, {}};
    for (int t : g) out.map.push_back(f.map[t > v ? t - 1 : t]);
    return out;
  }
  const int m = static_cast<int>(x.map.size());
  const int j = k / 2;
  const int eps = k % 2;
  if (k < 0 || j >= m) throw std::out_of_range("face index out of range");
  const int a = x.map[j];
  if (a < 0) {
    GeneralCell out = x;
    out.map.erase(out.map.begin() + j);
    return out;
  }
  const GeneralCell f = face(x.dim, x.cell, 2 * a + eps);
  GeneralCell out{f.dim, f.cell, {}};
  for (int t = 0; t < m; ++t) {
    if (t == j) continue;
    const int b = x.map[t];
    out.map.push_back(b < 0 ? -1 : f.map[b > a ? b - 1 : b]);
  }
  return out;
}

void Space::validate() const {
  for (int n = 0; n <= dimension(); ++n) {
    for (int id = 0; id < static_cast<int>(cells_[n].size()); ++id) {
      const auto& cell = cells_[n][id];
      const std::string where = "cell '" + cell.name + "' (degree " + std::to_string(n) + ")";
      const int expected = n == 0 ? 0 : face_count(n);
      if (static_cast<int>(cell.faces.size()) != expected)
        throw ValidationError(where + ": expected " + std::to_string(expected) + " faces, got " +
                              std::to_string(cell.faces.size()));
      for (const auto& f : cell.faces) {
        try {
          normalize(n, f);
        } catch (const ValidationError& e) {
          throw ValidationError(where + ": " + e.what());
        }
      }
      if (n < 2) continue;
      GeneralCell self{n, id, {}};
      self.map.resize(geometry_ == Geometry::simplicial ? n + 1 : n);
      std::iota(self.map.begin(), self.map.end(), 0);
      if (geometry_ == Geometry::simplicial) {
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (!(face(face(self, j), i) == face(face(self, i), j - 1)))
              throw ValidationError(where + ": d_" + std::to_string(i) + " d_" + std::to_string(j) + " != d_" +
                                    std::to_string(j - 1) + " d_" + std::to_string(i));
      } else {
        for (int j = 2; j <= n; ++j)
          for (int i = 1; i < j; ++i)
            for (int e = 0; e < 2; ++e)
              for (int d = 0; d < 2; ++d) {
                const auto lhs = face(face(self, 2 * (j - 1) + d), 2 * (i - 1) + e);
                const auto rhs = face(face(self, 2 * (i - 1) + e), 2 * (j - 2) + d);
                if (!(lhs == rhs))
                  throw ValidationError(where + ": cubical identity fails for d^" + std::to_string(e) + "_" +
                                        std::to_string(i) + " d^" + std::to_string(d) + "_" + std::to_string(j));
              }
      }
    }
  }
}

std::vector<std::pair<int, Coefficient>> Space::boundary(int n, int id) const {
  std::vector<std::pair<int, Coefficient>> out;
  if (n == 0) return out;
  if (geometry_ == Geometry::simplicial) {
    for (int i = 0; i <= n; ++i) {
      const GeneralCell f = face(n, id, i);
      if (!f.degenerate(geometry_)) out.emplace_back(f.cell, (i % 2) ? -1 : 1);
    }
  } else {
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e < 2; ++e) {
        const GeneralCell f = face(n, id, 2 * (i - 1) + e);
        // ∂ = Σ (-1)^{i-1} (d^1_i - d^0_i)
        const bool negative = ((i - 1) % 2 == 1) != (e == 0);
        if (!f.degenerate(geometry_)) out.emplace_back(f.cell, negative ? -1 : 1);
      }
  }
  return out;
}

std::optional<int> Space::restrict_mask(int n, int id, std::uint64_t mask) const {
  const std::uint64_t full = (n >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (n + 1)) - 1);
  if (mask == full) return id;
  const int i = std::countr_zero(~mask);
  const GeneralCell f = face(n, id, i);
  std::uint64_t next = 0;
  for (int t = 0; t < n; ++t) {
    const int src = t < i ? t : t + 1;
    if (!((mask >> src) & 1)) continue;
    const std::uint64_t bit = std::uint64_t{1} << f.map[t];
    if (next & bit) return std::nullopt;
    next |= bit;
  }
  return restrict_mask(f.dim, f.cell, next);
}

std::optional<int> Space::restrict_to(int n, int id, const Simplex& s) const {
  if (geometry_ != Geometry::simplicial) throw std::invalid_argument("restrict_to: geometry mismatch");
  if (n >= 63) throw std::invalid_argument("restrict_to: dimension too large");
  std::uint64_t mask = 0;
  for (int v : s.vertices) {
    if (v < 0 || v > n) throw std::invalid_argument("restrict_to: vertex outside the cell");
    mask |= std::uint64_t{1} << v;
  }
  return restrict_mask(n, id, mask);
}

std::optional<int> Space::restrict_to(int n, int id, const Cube& c) const {
  if (geometry_ != Geometry::cubical) throw std::invalid_argument("restrict_to: geometry mismatch");
  if (static_cast<int>(c.letters.size()) != n) throw std::invalid_argument("restrict_to: word length mismatch");
  int fixed = -1;
  for (int j = 0; j < n && fixed < 0; ++j)
    if (c.letters[j] != Cube::interval) fixed = j;
  if (fixed < 0) return id;
  const GeneralCell f = face(n, id, 2 * fixed + c.letters[fixed]);
  Cube next;
  next.letters.assign(f.dim, Cube::interval);
  for (int t = 0, pos = 0; t < n; ++t) {
    if (t == fixed) continue;
    const int b = f.map[pos++];
    if (b < 0) {
      if (c.letters[t] == Cube::interval) return std::nullopt;
      continue;
    }
    next.letters[b] = c.letters[t];
  }
  return restrict_to(f.dim, f.cell, next);
}

// ---- builders -------------------------------------------------------------

std::vector<int> degeneracy_word(const std::vector<int>& vertex_map) {
  std::vector<int> word;
  for (int t = static_cast<int>(vertex_map.size()) - 2; t >= 0; --t)
    if (vertex_map[t] == vertex_map[t + 1]) word.push_back(t);
  return word;
}

Space from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::set<std::vector<int>>> by_degree;
  for (const auto& facet : facets) {
    if (facet.empty()) throw ValidationError("empty facet");
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (facet[i] < 0) throw ValidationError("negative vertex label");
      if (i && facet[i] <= facet[i - 1]) throw ValidationError("facet vertices must be strictly increasing");
    }
    const std::size_t k = facet.size();
    if (k > 20) throw ValidationError("facet too large");
    if (by_degree.size() < k) by_degree.resize(k);
    for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
      std::vector<int> s;
      for (std::size_t i = 0; i < k; ++i)
        if ((sub >> i) & 1) s.push_back(facet[i]);
      by_degree[s.size() - 1].insert(std::move(s));
    }
  }
  Space out(Geometry::simplicial);
  std::vector<std::map<std::vector<int>, int>> ids(by_degree.size());
  for (std::size_t n = 0; n < by_degree.size(); ++n) {
    for (const auto& s : by_degree[n]) {
      std::vector<FaceRef> faces;
      if (n > 0)
        for (std::size_t i = 0; i <= n; ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + i);
          faces.push_back({ids[n - 1].at(f), {}});
        }
      ids[n][s] = out.add_cell(static_cast<int>(n), to_string(Simplex{s}), std::move(faces));
    }
  }
  out.validate();
  return out;
}

Space standard_simplex(int n) {
  if (n < 0) throw std::invalid_argument("standard_simplex: negative dimension");
  std::vector<int> all(n + 1);
  std::iota(all.begin(), all.end(), 0);
  return from_facets({all});
}

Space boundary_simplex(int n) {
  if (n < 1) throw std::invalid_argument("boundary_simplex: need n >= 1");
  std::vector<std::vector<int>> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return from_facets(facets);
}

Space rp2() {
  // Six-vertex triangulation of the real projective plane.
  return from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

namespace {

std::string tuple_name(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

int tuple_id(const std::vector<int>& t, int base) {
  int id = 0;
  for (int g : t) id = id * base + (g - 1);
  return id;
}

}  // namespace

Space classifying_space_skeleton(int p, int top) {
  if (!is_prime(p)) throw std::invalid_argument("classifying_space_skeleton: p must be prime");
  if (top < 1) throw std::invalid_argument("classifying_space_skeleton: need N >= 1");
  if (top > 12) throw std::invalid_argument("classifying_space_skeleton: N too large");
  Space out(Geometry::simplicial);
  const int base = p - 1;
  for (int n = 0; n <= top; ++n) {
    std::vector<int> t(n, 1);
    while (true) {
      std::vector<FaceRef> faces;
      for (int i = 0; n > 0 && i <= n; ++i) {
        std::vector<int> f;
        if (i == 0) f.assign(t.begin() + 1, t.end());
        else if (i == n) f.assign(t.begin(), t.end() - 1);
        else {
          f.assign(t.begin(), t.begin() + i - 1);
          f.push_back((t[i - 1] + t[i]) % p);
          f.insert(f.end(), t.begin() + i + 1, t.end());
        }
        // Identity entries collapse their edge: vertex v maps to v minus the
        // number of identity entries among the first v edges.
        std::vector<int> core, vertex_map{0};
        for (std::size_t e = 0; e < f.size(); ++e) {
          if (f[e]) core.push_back(f[e]);
          vertex_map.push_back(static_cast<int>(core.size()));
        }
        faces.push_back({tuple_id(core, base), degeneracy_word(vertex_map)});
      }
      out.add_cell(n, tuple_name(t), std::move(faces));
      int pos = n - 1;
      while (pos >= 0 && ++t[pos] == p) t[pos--] = 1;
      if (pos < 0) break;
    }
  }
  out.validate();
  return out;
}

Space torus2() {
  Space out(Geometry::cubical);
  out.add_cell(0, "v", {});
  out.add_cell(1, "a", {{0, {}}, {0, {}}});
  out.add_cell(1, "b", {{0, {}}, {0, {}}});
  // Opposite sides identified: d^ε_1 = b, d^ε_2 = a.
  out.add_cell(2, "S", {{1, {}}, {1, {}}, {0, {}}, {0, {}}});
  out.validate();
  return out;
}

Space klein2() {
  // Mapping torus of the reflection of a two-vertex circle.
  Space out(Geometry::cubical);
  out.add_cell(0, "u", {});
  out.add_cell(0, "w", {});
  out.add_cell(1, "c1", {{0, {}}, {1, {}}});
  out.add_cell(1, "c2", {{0, {}}, {1, {}}});
  out.add_cell(1, "tu", {{0, {}}, {0, {}}});
  out.add_cell(1, "tw", {{1, {}}, {1, {}}});
  out.add_cell(2, "S1", {{2, {}}, {3, {}}, {0, {}}, {1, {}}});
  out.add_cell(2, "S2", {{2, {}}, {3, {}}, {1, {}}, {0, {}}});
  out.validate();
  return out;
}

// ---- cochains -------------------------------------------------------------

Matrix coboundary_matrix(const Space& x, int m, Ring ring) {
  Matrix out(x.cell_count(m + 1), x.cell_count(m));
  if (m < 0) return out;
  for (std::size_t c = 0; c < out.rows; ++c)
    for (const auto& [f, sign] : x.boundary(m + 1, static_cast<int>(c)))
      out.at(c, f) = ring.add(out.at(c, f), ring.normalize(sign));
  return out;
}

Vector coboundary(const Space& x, int m, const Vector& a, Ring ring) {
  if (a.size() != x.cell_count(m)) throw std::invalid_argument("coboundary: cochain size mismatch");
  Vector out(x.cell_count(m + 1), 0);
  for (std::size_t c = 0; c < out.size(); ++c)
    for (const auto& [f, sign] : x.boundary(m + 1, static_cast<int>(c)))
      out[c] = ring.add(out[c], ring.mul(ring.normalize(sign), a[f]));
  return out;
}

namespace {

// Terms of eval(ψ_X(r)(e_i), top cell of dimension n) whose factor k has
// degree degrees[k], as (coefficient, factors).
template <class Cell>
CellTensor<Cell> product_element(int r, int i, int n, std::span<const int> degrees) {
  const bool uniform = std::all_of(degrees.begin(), degrees.end(), [&](int d) { return d == degrees[0]; });
  if (uniform) return power_element<Cell>(r, i, n, degrees[0]);
  Cell top;
  if constexpr (std::is_same_v<Cell, Simplex>) top = top_simplex(n);
  else top = top_cube(n);
  CellTensor<Cell> out;
  for (const auto& [t, c] : evaluate_surjection(psi_sj(r, i), FreeModule<Cell>::basis(top))) {
    bool keep = true;
    for (std::size_t k = 0; k < t.factors.size(); ++k) keep = keep && degree(t.factors[k]) == degrees[k];
    if (keep) out.add_term(t, c);
  }
  return out;
}

template <class Cell>
Vector product_on_cells(const Space& x, Ring ring, int r, int i, std::span<const Vector> cochains,
                        std::span<const int> degrees, int n) {
  const CellTensor<Cell> element = product_element<Cell>(r, i, n, degrees);
  // (f_1 ⊗ ... ⊗ f_r)(a_1 ⊗ ... ⊗ a_r) picks up (-1)^{|a_j||f_k|} for j < k.
  int parity = 0;
  for (std::size_t j = 0; j < degrees.size(); ++j)
    for (std::size_t k = j + 1; k < degrees.size(); ++k) parity ^= (degrees[j] * degrees[k]) & 1;
  Vector out(x.cell_count(n), 0);
  parallel_for(out.size(), [&](std::size_t c) {
    Coefficient total = 0;
    for (const auto& [t, coef] : element) {
      Coefficient v = ring.normalize(coef);
      for (std::size_t k = 0; k < t.factors.size() && v; ++k) {
        const auto target = x.restrict_to(n, static_cast<int>(c), t.factors[k]);
        v = target ? ring.mul(v, cochains[k][*target]) : 0;
      }
      total = ring.add(total, v);
    }
    out[c] = parity ? ring.neg(total) : total;
  });
  return out;
}

}  // namespace

Vector space_product(const Space& x, Ring ring, int r, int i, std::span<const Vector> cochains,
                     std::span<const int> degrees) {
  if (static_cast<int>(cochains.size()) != r || static_cast<int>(degrees.size()) != r)
    throw std::invalid_argument("space_product: need r cochains and r degrees");
  int total = 0;
  for (int k = 0; k < r; ++k) {
    if (cochains[k].size() != x.cell_count(degrees[k])) throw std::invalid_argument("space_product: cochain size mismatch");
    total += degrees[k];
  }
  const int n = total - i;
  if (i < 0 || n < 0 || n > x.dimension()) return Vector(x.cell_count(n), 0);
  std::vector<Vector> reduced(cochains.begin(), cochains.end());
  for (auto& v : reduced)
    for (auto& c : v) c = ring.normalize(c);
  if (x.geometry() == Geometry::simplicial) return product_on_cells<Simplex>(x, ring, r, i, reduced, degrees, n);
  return product_on_cells<Cube>(x, ring, r, i, reduced, degrees, n);
}

Vector space_power(const Space& x, std::int64_t p, int i, const Vector& a, int m) {
  const Ring ring = Ring::mod(p);
  const std::vector<Vector> copies(static_cast<std::size_t>(p), a);
  const std::vector<int> degrees(static_cast<std::size_t>(p), m);
  return space_product(x, ring, static_cast<int>(p), i, copies, degrees);
}

SpaceCochain space_steenrod(const Space& x, std::int64_t p, int s, bool bockstein, const Vector& a, int m) {
  const Ring ring = Ring::mod(p);
  if (bockstein && p == 2) throw std::invalid_argument("βP is only defined at odd primes");
  if (a.size() != x.cell_count(m)) throw std::invalid_argument("steenrod: cochain size mismatch");
  if (!is_zero(coboundary(x, m, a, ring))) throw NotCocycleError("steenrod: input is not a cocycle");
  // Homological grading: the cochain has degree q = -m and P^s = P_{-s}.
  const int q = -m;
  const int i = steenrod_index(p, -s, q, bockstein);
  const int out_degree = static_cast<int>(p) * m - i;
  Vector values = space_power(x, p, i, a, m);
  const Coefficient scalar = steenrod_scalar(p, -s, q);
  for (auto& v : values) v = ring.mul(v, scalar);
  return {out_degree, std::move(values)};
}

Vector pullback_by_name(const Space& big, const Space& small, int m, const Vector& a) {
  if (a.size() != big.cell_count(m)) throw std::invalid_argument("pullback: cochain size mismatch");
  Vector out(small.cell_count(m), 0);
  for (std::size_t c = 0; c < out.size(); ++c) {
    const auto id = big.find_cell(m, small.cell_name(m, static_cast<int>(c)));
    if (!id) throw std::invalid_argument("pullback: cell '" + small.cell_name(m, static_cast<int>(c)) + "' not found");
    out[c] = a[*id];
  }
  return out;
}

// ---- cohomology -----------------------------------------------------------

CohomologyBasis::CohomologyBasis(const Space& x, std::int64_t p, int m)
    : ring_(Ring::mod(p)),
      degree_(m),
      delta_(coboundary_matrix(x, m, ring_)),
      reducer_(ring_, x.cell_count(m), 0) {
  const std::vector<Vector> kernel = nullspace(delta_, ring_);
  reducer_ = EchelonBasis(ring_, x.cell_count(m), kernel.size());
  if (m >= 1) {
    const Matrix below = coboundary_matrix(x, m - 1, ring_);
    for (std::size_t j = 0; j < below.cols; ++j) {
      Vector column(below.rows);
      for (std::size_t i = 0; i < below.rows; ++i) column[i] = below.at(i, j);
      reducer_.insert(std::move(column));
    }
  }
  for (const Vector& z : kernel) {
    Vector label(kernel.size(), 0);
    label[representatives_.size()] = 1;
    if (reducer_.insert(z, std::move(label))) representatives_.push_back(z);
  }
}

bool CohomologyBasis::is_cocycle(const Vector& a) const {
  if (a.size() != delta_.cols) throw std::invalid_argument("cohomology: cochain size mismatch");
  return is_zero(multiply(delta_, a, ring_));
}

Vector CohomologyBasis::coordinates(const Vector& a) const {
  if (!is_cocycle(a)) throw NotCocycleError("cohomology: not a cocycle");
  Vector label;
  const Vector residual = reducer_.reduce(a, &label);
  if (!is_zero(residual)) throw std::logic_error("cohomology: cocycle outside the computed span");
  label.resize(rank());
  return label;
}

CohomologyClass basis_class(const Space& x, std::int64_t p, int m, std::size_t index) {
  CohomologyBasis basis(x, p, m);
  if (index >= basis.rank())
    throw std::out_of_range("H^" + std::to_string(m) + " has rank " + std::to_string(basis.rank()));
  CohomologyClass out{p, m, Vector(basis.rank(), 0), basis.representative(index)};
  out.coordinates[index] = 1;
  return out;
}

CohomologyClass class_of(const Space& x, std::int64_t p, int m, const Vector& cocycle) {
  CohomologyBasis basis(x, p, m);
  const Ring ring = Ring::mod(p);
  Vector rep = cocycle;
  for (auto& c : rep) c = ring.normalize(c);
  return {p, m, basis.coordinates(rep), std::move(rep)};
}

CohomologyClass steenrod_on_class(const Space& x, std::int64_t p, int s, bool bockstein, const CohomologyClass& cls) {
  if (cls.prime != p) throw std::invalid_argument("steenrod: class belongs to another prime");
  SpaceCochain out = space_steenrod(x, p, s, bockstein, cls.representative, cls.degree);
  if (out.degree < 0) throw std::out_of_range("steenrod: negative output degree");
  if (out.degree > x.dimension()) return {p, out.degree, {}, {}};
  return class_of(x, p, out.degree, out.values);
}

CohomologyClass cup_classes(const Space& x, const CohomologyClass& a, const CohomologyClass& b) {
  if (a.prime != b.prime) throw std::invalid_argument("cup: classes over different primes");
  const std::vector<Vector> reps{a.representative, b.representative};
  const std::vector<int> degrees{a.degree, b.degree};
  const int m = a.degree + b.degree;
  if (m > x.dimension()) return {a.prime, m, {}, {}};
  return class_of(x, a.prime, m, space_product(x, Ring::mod(a.prime), 2, 0, reps, degrees));
}

}  // namespace steenrod
