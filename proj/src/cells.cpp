#include "steenrod/cells.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace steenrod {

std::string to_string(Geometry g) { return g == Geometry::simplicial ? "simplicial" : "cubical"; }

Geometry parse_geometry(const std::string& name) {
  if (name == "simplicial") return Geometry::simplicial;
  if (name == "cubical") return Geometry::cubical;
  throw std::invalid_argument("unknown geometry '" + name + "'");
}

int degree(const Cube& c) {
  return static_cast<int>(std::count(c.letters.begin(), c.letters.end(), Cube::interval));
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.vertices.size(); ++i) out += (i ? "," : "") + std::to_string(s.vertices[i]);
  return out + "]";
}

std::string to_string(const Cube& c) {
  static constexpr const char* names[] = {"[0]", "[1]", "[01]"};
  std::string out;
  for (auto l : c.letters) out += names[l];
  return out;
}

Simplex parse_simplex(const std::string& text) {
  Simplex s;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') throw std::invalid_argument("simplex must start with '[': " + text);
  ++i;
  while (true) {
    skip();
    if (i < text.size() && text[i] == ']') break;
    std::size_t used = 0;
    s.vertices.push_back(std::stoi(text.substr(i), &used));
    i += used;
    skip();
    if (i < text.size() && text[i] == ',') ++i;
    else if (i >= text.size() || text[i] != ']') throw std::invalid_argument("malformed simplex: " + text);
  }
  for (std::size_t k = 1; k < s.vertices.size(); ++k)
    if (s.vertices[k] <= s.vertices[k - 1]) throw std::invalid_argument("simplex vertices must increase: " + text);
  if (s.vertices.empty() || s.vertices.front() < 0) throw std::invalid_argument("malformed simplex: " + text);
  return s;
}

Cube parse_cube(const std::string& text) {
  Cube c;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (text.compare(i, 4, "[01]") == 0 || text.compare(i, 5, "[0,1]") == 0) {
      c.letters.push_back(Cube::interval);
      i += text[i + 2] == ',' ? 5 : 4;
    } else if (text.compare(i, 3, "[0]") == 0 || text.compare(i, 3, "[1]") == 0) {
      c.letters.push_back(text[i + 1] == '0' ? Cube::zero : Cube::one);
      i += 3;
    } else if (ch == '0' || ch == '1') {
      c.letters.push_back(ch == '0' ? Cube::zero : Cube::one);
      ++i;
    } else {
      throw std::invalid_argument("malformed cube word: " + text);
    }
  }
  return c;
}

Simplex top_simplex(int n) {
  Simplex s;
  for (int v = 0; v <= n; ++v) s.vertices.push_back(v);
  return s;
}

Cube top_cube(int n) { return Cube{std::vector<std::uint8_t>(n, Cube::interval)}; }

std::vector<Simplex> simplices_of(int n, int deg) {
  std::vector<Simplex> out;
  if (deg < 0 || deg > n) return out;
  std::vector<int> v(deg + 1);
  for (int i = 0; i <= deg; ++i) v[i] = i;
  while (true) {
    out.push_back(Simplex{v});
    int i = deg;
    while (i >= 0 && v[i] == n - deg + i) --i;
    if (i < 0) break;
    ++v[i];
    for (int j = i + 1; j <= deg; ++j) v[j] = v[j - 1] + 1;
  }
  return out;
}

std::vector<Cube> cubes_of(int n, int deg) {
  std::vector<Cube> out;
  if (deg < 0 || deg > n) return out;
  std::vector<std::uint8_t> w(n, 0);
  while (true) {
    Cube c{w};
    if (degree(c) == deg) out.push_back(c);
    int i = n - 1;
    while (i >= 0 && w[i] == 2) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Simplicial structure maps

SimplexChain SimplexOps::boundary(const Simplex& c) {
  SimplexChain out;
  if (c.vertices.size() <= 1) return out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    Simplex face;
    for (std::size_t j = 0; j < c.vertices.size(); ++j)
      if (j != i) face.vertices.push_back(c.vertices[j]);
    out.add_term(face, (i % 2) ? -1 : 1);
  }
  return out;
}

Coefficient SimplexOps::counit(const Simplex& c) { return c.vertices.size() == 1 ? 1 : 0; }

CellTensor<Simplex> SimplexOps::coproduct(const Simplex& c) {
  CellTensor<Simplex> out;
  const auto& v = c.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Simplex front{std::vector<int>(v.begin(), v.begin() + i + 1)};
    Simplex back{std::vector<int>(v.begin() + i, v.end())};
    out.add_term(TensorKey<Simplex>{{std::move(front), std::move(back)}}, 1);
  }
  return out;
}

SimplexChain SimplexOps::product(const Simplex& a, const Simplex& b) {
  SimplexChain out;
  std::vector<int> joined = a.vertices;
  joined.insert(joined.end(), b.vertices.begin(), b.vertices.end());
  int inversions = 0;
  for (std::size_t i = 0; i < joined.size(); ++i)
    for (std::size_t j = i + 1; j < joined.size(); ++j) {
      if (joined[i] == joined[j]) return out;
      if (joined[i] > joined[j]) ++inversions;
    }
  std::sort(joined.begin(), joined.end());
  out.add_term(Simplex{std::move(joined)}, ((degree(a) + inversions) % 2) ? -1 : 1);
  return out;
}

// ---------------------------------------------------------------------------
// Cubical structure maps, built from the interval factor by factor.

CubeChain CubeOps::boundary(const Cube& c) {
  CubeChain out;
  int before = 0;
  for (std::size_t i = 0; i < c.letters.size(); ++i) {
    if (c.letters[i] != Cube::interval) continue;
    const Coefficient sign = (before % 2) ? -1 : 1;
    Cube hi = c, lo = c;
    hi.letters[i] = Cube::one;
    lo.letters[i] = Cube::zero;
    out.add_term(hi, sign);
    out.add_term(lo, -sign);
    ++before;
  }
  return out;
}

Coefficient CubeOps::counit(const Cube& c) { return degree(c) == 0 ? 1 : 0; }

CellTensor<Cube> CubeOps::coproduct(const Cube& c) {
  // Δ^{⊗n} followed by the shuffle that moves second components to the
  // right. Only [01] letters branch: into [0]⊗[01] or [01]⊗[1].
  CellTensor<Cube> out;
  const std::size_t n = c.letters.size();
  std::vector<std::size_t> branching;
  for (std::size_t i = 0; i < n; ++i)
    if (c.letters[i] == Cube::interval) branching.push_back(i);
  const std::size_t count = std::size_t{1} << branching.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    Cube left = c, right = c;
    for (std::size_t b = 0; b < branching.size(); ++b) {
      const std::size_t i = branching[b];
      if (mask >> b & 1) {
        left.letters[i] = Cube::interval;
        right.letters[i] = Cube::one;
      } else {
        left.letters[i] = Cube::zero;
        right.letters[i] = Cube::interval;
      }
    }
    // Second component of coordinate i passes first components of j > i.
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (right.letters[i] == Cube::interval)
        for (std::size_t j = i + 1; j < n; ++j)
          if (left.letters[j] == Cube::interval) parity ^= 1;
    out.add_term(TensorKey<Cube>{{std::move(left), std::move(right)}}, parity ? -1 : 1);
  }
  return out;
}

CubeChain CubeOps::product(const Cube& x, const Cube& y) {
  CubeChain out;
  const std::size_t n = x.letters.size();
  if (y.letters.size() != n) throw std::invalid_argument("cubical product: dimension mismatch");
  const Coefficient global = (degree(x) % 2) ? -1 : 1;
  auto is_vertex = [](std::uint8_t l) { return l != Cube::interval; };
  for (std::size_t i = 0; i < n; ++i) {
    // ε(y_{<i}) and ε(x_{>i}) are 1 exactly when those letters are vertices.
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j) ok = is_vertex(y.letters[j]);
    for (std::size_t j = i + 1; j < n && ok; ++j) ok = is_vertex(x.letters[j]);
    if (!ok) continue;
    Coefficient local;
    if (x.letters[i] == Cube::zero && y.letters[i] == Cube::one) local = 1;
    else if (x.letters[i] == Cube::one && y.letters[i] == Cube::zero) local = -1;
    else continue;
    Cube z;
    z.letters.reserve(n);
    for (std::size_t j = 0; j < i; ++j) z.letters.push_back(x.letters[j]);
    z.letters.push_back(Cube::interval);
    for (std::size_t j = i + 1; j < n; ++j) z.letters.push_back(y.letters[j]);
    out.add_term(z, global * local);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain-level wrappers

namespace {

template <class Ops>
FreeModule<typename Ops::Cell> chain_boundary(const FreeModule<typename Ops::Cell>& x) {
  FreeModule<typename Ops::Cell> out(x.ring());
  for (const auto& [c, k] : x) out.add_scaled(Ops::boundary(c).reduced(x.ring()), k);
  return out;
}

template <class Ops>
Coefficient chain_counit(const FreeModule<typename Ops::Cell>& x) {
  Coefficient total = 0;
  for (const auto& [c, k] : x) total = x.ring().add(total, x.ring().mul(k, Ops::counit(c)));
  return total;
}

template <class Ops>
CellTensor<typename Ops::Cell> chain_coproduct(const FreeModule<typename Ops::Cell>& x) {
  CellTensor<typename Ops::Cell> out(x.ring());
  for (const auto& [c, k] : x) out.add_scaled(Ops::coproduct(c).reduced(x.ring()), k);
  return out;
}

template <class Ops>
FreeModule<typename Ops::Cell> chain_product(const CellTensor<typename Ops::Cell>& x) {
  FreeModule<typename Ops::Cell> out(x.ring());
  for (const auto& [t, k] : x) {
    if (t.factors.size() != 2) throw std::invalid_argument("product expects a 2-fold tensor");
    out.add_scaled(Ops::product(t.factors[0], t.factors[1]).reduced(x.ring()), k);
  }
  return out;
}

template <class Cell>
int homogeneous_degree(const FreeModule<Cell>& c) {
  int d = -1;
  for (const auto& [cell, k] : c) {
    if (d >= 0 && degree(cell) != d) throw std::invalid_argument("evaluate_surjection: inhomogeneous chain");
    d = degree(cell);
  }
  return d;
}

// Left-associated iterated coproduct with `factors` tensor factors.
template <class Ops>
CellTensor<typename Ops::Cell> iterated_coproduct(const typename Ops::Cell& c, std::size_t factors) {
  using Cell = typename Ops::Cell;
  CellTensor<Cell> current = CellTensor<Cell>::basis(TensorKey<Cell>{{c}});
  for (std::size_t k = 1; k < factors; ++k) {
    CellTensor<Cell> next;
    for (const auto& [t, coef] : current) {
      for (const auto& [pair, pc] : Ops::coproduct(t.factors.front())) {
        TensorKey<Cell> split;
        split.factors.reserve(t.factors.size() + 1);
        split.factors.push_back(pair.factors[0]);
        split.factors.push_back(pair.factors[1]);
        split.factors.insert(split.factors.end(), t.factors.begin() + 1, t.factors.end());
        next.add_term(split, coef * pc);
      }
    }
    current = std::move(next);
  }
  return current;
}

// Applies the regrouping and wire products to one term of the iterated
// coproduct.
template <class Ops>
CellTensor<typename Ops::Cell> wire_products(const Surjection& s, const TensorKey<typename Ops::Cell>& term) {
  using Cell = typename Ops::Cell;
  const int r = s.arity();
  const std::size_t len = s.values.size();

  std::vector<int> arrangement;
  std::vector<int> degs(len);
  for (std::size_t j = 0; j < len; ++j) degs[j] = degree(term.factors[j]);
  std::vector<int> in_degree(r, 0), products(r, -1);
  for (int w = 1; w <= r; ++w)
    for (std::size_t j = 0; j < len; ++j)
      if (s.values[j] == w) {
        arrangement.push_back(static_cast<int>(j) + 1);
        in_degree[w - 1] += degs[j];
        ++products[w - 1];
      }
  int parity = koszul_sign(arrangement, degs) < 0 ? 1 : 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) parity ^= (products[j] & in_degree[i] & 1);

  CellTensor<Cell> result = CellTensor<Cell>::basis(TensorKey<Cell>{});
  for (int w = 1; w <= r; ++w) {
    // Right comb f_1 ∗ (f_2 ∗ (... ∗ f_k)); passing the degree-one inner
    // products over f_i costs (-1)^{|f_i| (k - 1 - i)}.
    std::vector<std::size_t> slots;
    for (std::size_t j = 0; j < len; ++j)
      if (s.values[j] == w) slots.push_back(j);
    const std::size_t k = slots.size();
    for (std::size_t i = 0; i + 2 < k; ++i) parity ^= (degs[slots[i]] * static_cast<int>(k - 2 - i)) & 1;
    FreeModule<Cell> wire = FreeModule<Cell>::basis(term.factors[slots[k - 1]]);
    for (std::size_t i = k - 1; i-- > 0;) {
      FreeModule<Cell> next;
      for (const auto& [cell, c] : wire) next.add_scaled(Ops::product(term.factors[slots[i]], cell), c);
      wire = std::move(next);
      if (wire.empty()) return CellTensor<Cell>{};
    }
    CellTensor<Cell> extended;
    for (const auto& [t, a] : result)
      for (const auto& [cell, b] : wire) {
        TensorKey<Cell> grown = t;
        grown.factors.push_back(cell);
        extended.add_term(grown, a * b);
      }
    result = std::move(extended);
  }
  return parity ? result.scaled(-1) : result;
}

template <class Ops>
CellTensor<typename Ops::Cell> evaluate_generic(const Surjection& s, const typename Ops::Cell& c) {
  CellTensor<typename Ops::Cell> out;
  for (const auto& [term, coef] : iterated_coproduct<Ops>(c, s.values.size()))
    out.add_scaled(wire_products<Ops>(s, term), coef);
  return out;
}

// Enumerates cut points 0 = k_0 <= ... <= k_L = d of the iterated coproduct
// of a simplex directly, discarding a branch as soon as a wire's join
// repeats a vertex.
class SimplexEvaluator {
 public:
  SimplexEvaluator(const Surjection& s, const Simplex& c, int factor_degree, CellTensor<Simplex>& out, Coefficient scale)
      : s_(s), c_(c), target_(factor_degree), out_(out), scale_(scale) {
    len_ = s.values.size();
    r_ = s.arity();
    d_ = degree(c);
    cuts_.assign(len_ + 1, 0);
    cuts_[len_] = d_;
    masks_.assign(r_, 0);
  }

  void run() {
    if (d_ >= 63) throw std::invalid_argument("simplex dimension too large for evaluation");
    descend(0);
  }

 private:
  static std::uint64_t interval_mask(int a, int b) {
    const std::uint64_t hi = (b >= 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (b + 1)) - 1);
    return hi & ~((std::uint64_t{1} << a) - 1);
  }

  void descend(std::size_t j) {
    const int wire = s_.values[j] - 1;
    const int lo = cuts_[j];
    const bool last = j + 1 == len_;
    for (int hi = last ? d_ : lo; hi <= d_; ++hi) {
      const std::uint64_t m = interval_mask(lo, hi);
      // Widening the interval keeps a collision, so stop here.
      if (masks_[wire] & m) break;
      const std::uint64_t merged = masks_[wire] | m;
      if (target_ >= 0 && std::popcount(merged) > target_ + 1) break;
      const std::uint64_t saved = masks_[wire];
      masks_[wire] = merged;
      cuts_[j + 1] = hi;
      if (last) emit();
      else descend(j + 1);
      masks_[wire] = saved;
    }
  }

  void emit() {
    if (target_ >= 0)
      for (int w = 0; w < r_; ++w)
        if (std::popcount(masks_[w]) != target_ + 1) return;
    std::vector<int> degs(len_);
    for (std::size_t j = 0; j < len_; ++j) degs[j] = cuts_[j + 1] - cuts_[j];

    std::vector<int> arrangement;
    arrangement.reserve(len_);
    std::vector<int> in_degree(r_, 0), products(r_, -1);
    int parity = 0;
    std::vector<std::size_t> slots;
    for (int w = 1; w <= r_; ++w) {
      slots.clear();
      for (std::size_t j = 0; j < len_; ++j)
        if (s_.values[j] == w) slots.push_back(j);
      const std::size_t k = slots.size();
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = slots[i];
        arrangement.push_back(static_cast<int>(j) + 1);
        in_degree[w - 1] += degs[j];
        ++products[w - 1];
        // Right comb: piece i is joined onto the product of the later pieces
        // with sign (-1)^{|piece|}, and the comb itself contributes the
        // Koszul sign (-1)^{|piece| (k - 2 - i)}.
        parity ^= (degs[j] * static_cast<int>(k - 1 - i)) & 1;
        const std::uint64_t piece = interval_mask(cuts_[j], cuts_[j + 1]);
        // Inversions of the concatenated vertex lists.
        for (std::uint64_t bits = piece; bits; bits &= bits - 1) {
          const int v = std::countr_zero(bits);
          parity ^= std::popcount(acc >> (v + 1)) & 1;
        }
        acc |= piece;
      }
    }
    if (koszul_sign(arrangement, degs) < 0) parity ^= 1;
    for (int i = 0; i < r_; ++i)
      for (int j = i + 1; j < r_; ++j) parity ^= (products[j] & in_degree[i] & 1);

    TensorKey<Simplex> key;
    key.factors.resize(r_);
    for (int w = 0; w < r_; ++w)
      for (std::uint64_t b = masks_[w]; b; b &= b - 1) key.factors[w].vertices.push_back(c_.vertices[std::countr_zero(b)]);
    out_.add_term(key, parity ? out_.ring().neg(scale_) : scale_);
  }

  const Surjection& s_;
  const Simplex& c_;
  int target_;
  CellTensor<Simplex>& out_;
  Coefficient scale_;
  std::size_t len_ = 0;
  int r_ = 0;
  int d_ = 0;
  std::vector<int> cuts_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace

SimplexChain cell_boundary(const SimplexChain& x) { return chain_boundary<SimplexOps>(x); }
CubeChain cell_boundary(const CubeChain& x) { return chain_boundary<CubeOps>(x); }

Coefficient counit_simplicial(const SimplexChain& x) { return chain_counit<SimplexOps>(x); }
CellTensor<Simplex> coproduct_simplicial(const SimplexChain& x) { return chain_coproduct<SimplexOps>(x); }
SimplexChain join_simplicial(const CellTensor<Simplex>& x) { return chain_product<SimplexOps>(x); }

Coefficient counit_cubical(const CubeChain& x) { return chain_counit<CubeOps>(x); }
CellTensor<Cube> coproduct_cubical(const CubeChain& x) { return chain_coproduct<CubeOps>(x); }
CubeChain product_cubical(const CellTensor<Cube>& x) { return chain_product<CubeOps>(x); }

CellTensor<Simplex> evaluate_surjection_reference(const Surjection& s, const Simplex& c) {
  return evaluate_generic<SimplexOps>(s, c);
}

CellTensor<Simplex> evaluate_surjection(const Surjection& s, const SimplexChain& c) {
  homogeneous_degree(c);
  CellTensor<Simplex> out(c.ring());
  for (const auto& [cell, k] : c) SimplexEvaluator(s, cell, -1, out, k).run();
  return out;
}

CellTensor<Cube> evaluate_surjection(const Surjection& s, const CubeChain& c) {
  homogeneous_degree(c);
  CellTensor<Cube> out(c.ring());
  for (const auto& [cell, k] : c) out.add_scaled(evaluate_generic<CubeOps>(s, cell).reduced(c.ring()), k);
  return out;
}

CellTensor<Simplex> evaluate_surjection(const SurjectionChain& s, const SimplexChain& c) {
  homogeneous_degree(c);
  CellTensor<Simplex> out(c.ring());
  for (const auto& [sj, a] : s)
    for (const auto& [cell, k] : c) SimplexEvaluator(sj, cell, -1, out, c.ring().mul(a, k)).run();
  return out;
}

CellTensor<Cube> evaluate_surjection(const SurjectionChain& s, const CubeChain& c) {
  CellTensor<Cube> out(c.ring());
  for (const auto& [sj, a] : s) out.add_scaled(evaluate_surjection(sj, c), a);
  return out;
}

CellTensor<Simplex> evaluate_surjection_uniform(const SurjectionChain& s, const Simplex& c, int factor_degree) {
  CellTensor<Simplex> out(s.ring());
  for (const auto& [sj, a] : s) SimplexEvaluator(sj, c, factor_degree, out, a).run();
  return out;
}

CellTensor<Cube> evaluate_surjection_uniform(const SurjectionChain& s, const Cube& c, int factor_degree) {
  CellTensor<Cube> out(s.ring());
  for (const auto& [sj, a] : s) {
    for (const auto& [t, k] : evaluate_generic<CubeOps>(sj, c)) {
      bool keep = true;
      for (const auto& f : t.factors) keep = keep && degree(f) == factor_degree;
      if (keep) out.add_term(t, s.ring().mul(a, k));
    }
  }
  return out;
}

}  // namespace steenrod
