#include "steenrod/ops.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace steenrod {

OperationContext OperationContext::make(Geometry geometry, int dimension, std::int64_t prime) {
  if (dimension < 0) throw std::invalid_argument("operation context: negative dimension");
  OperationContext ctx;
  ctx.geometry = geometry;
  ctx.dimension = dimension;
  ctx.ring = prime == 0 ? Ring::integers() : Ring::mod(prime);
  return ctx;
}

template <>
std::vector<Simplex> cells_in<Simplex>(int ambient, int deg) {
  return simplices_of(ambient, deg);
}
template <>
std::vector<Cube> cells_in<Cube>(int ambient, int deg) {
  return cubes_of(ambient, deg);
}

namespace {

template <class Cell>
void check_geometry(const OperationContext& ctx) {
  if (ctx.geometry != OpsFor<Cell>::type::geometry) throw std::invalid_argument("geometry mismatch");
}

template <class Cell>
int ambient_of(const Cell& c);
template <>
int ambient_of<Simplex>(const Simplex& c) {
  return c.vertices.empty() ? 0 : c.vertices.back();
}
template <>
int ambient_of<Cube>(const Cube& c) {
  return static_cast<int>(c.letters.size());
}

template <class Cell>
void check_cells(const OperationContext& ctx, const FreeModule<Cell>& x) {
  for (const auto& [c, k] : x) {
    if constexpr (std::is_same_v<Cell, Cube>) {
      if (ambient_of(c) != ctx.dimension) throw std::invalid_argument("cube word length differs from the ambient dimension");
    } else {
      if (ambient_of(c) > ctx.dimension) throw std::invalid_argument("simplex vertex outside the ambient simplex");
    }
  }
}

std::int64_t require_prime(const OperationContext& ctx) {
  if (ctx.ring.is_integral()) throw std::invalid_argument("operation needs a prime field");
  return ctx.prime();
}

}  // namespace

template <class Cell>
std::optional<int> cochain_degree(const FreeModule<Cell>& a) {
  std::optional<int> deg;
  for (const auto& [c, k] : a) {
    const int d = -degree(c);
    if (deg && *deg != d) throw std::invalid_argument("cochain is not homogeneous");
    deg = d;
  }
  return deg;
}

template <class Cell>
FreeModule<Cell> coboundary(const OperationContext& ctx, const FreeModule<Cell>& a) {
  check_geometry<Cell>(ctx);
  check_cells(ctx, a);
  FreeModule<Cell> out(ctx.ring);
  const auto deg = cochain_degree(a);
  if (!deg) return out;
  const FreeModule<Cell> values = a.ring() == ctx.ring ? a : a.reduced(ctx.ring);
  for (const Cell& c : cells_in<Cell>(ctx.dimension, -*deg + 1)) {
    Coefficient v = 0;
    for (const auto& [face, k] : OpsFor<Cell>::type::boundary(c)) v = ctx.ring.add(v, ctx.ring.mul(k, values.coefficient(face)));
    out.add_term(c, v);
  }
  return out;
}

template <class Cell>
Coefficient cup_r_i(const OperationContext& ctx, int r, int i, std::span<const FreeModule<Cell>> cochains,
                    const FreeModule<Cell>& chain) {
  check_geometry<Cell>(ctx);
  if (static_cast<int>(cochains.size()) != r) throw std::invalid_argument("cup_r_i: need exactly r cochains");
  if (i < 0) return 0;
  std::vector<FreeModule<Cell>> values;
  for (const auto& a : cochains) {
    check_cells(ctx, a);
    cochain_degree(a);
    values.push_back(a.ring() == ctx.ring ? a : a.reduced(ctx.ring));
  }
  check_cells(ctx, chain);
  const FreeModule<Cell> c = chain.ring() == ctx.ring ? chain : chain.reduced(ctx.ring);
  return dual_pairing<Cell>(values, evaluate_surjection(psi_sj(r, i), c));
}

namespace {

std::mutex g_power_mutex;
std::map<std::tuple<int, int, int, int, int>, std::shared_ptr<const void>> g_power_cache;

}  // namespace

template <class Cell>
const CellTensor<Cell>& power_element(int p, int i, int n, int factor_degree) {
  const int kind = std::is_same_v<Cell, Simplex> ? 0 : 1;
  const auto key = std::make_tuple(kind, p, i, n, factor_degree);
  {
    std::lock_guard lock(g_power_mutex);
    auto it = g_power_cache.find(key);
    if (it != g_power_cache.end()) return *static_cast<const CellTensor<Cell>*>(it->second.get());
  }
  Cell top;
  if constexpr (std::is_same_v<Cell, Simplex>) top = top_simplex(n);
  else top = top_cube(n);
  auto value = std::make_shared<const CellTensor<Cell>>(evaluate_surjection_uniform(psi_sj(p, i), top, factor_degree));
  std::lock_guard lock(g_power_mutex);
  auto [it, inserted] = g_power_cache.try_emplace(key, std::move(value));
  return *static_cast<const CellTensor<Cell>*>(it->second.get());
}

template <class Cell>
FreeModule<Cell> big_d(const OperationContext& ctx, int i, const FreeModule<Cell>& a) {
  check_geometry<Cell>(ctx);
  const std::int64_t p = require_prime(ctx);
  check_cells(ctx, a);
  FreeModule<Cell> out(ctx.ring);
  const auto q = cochain_degree(a);
  if (i < 0 || !q) return out;
  const int factor_dim = -*q;
  const int target_dim = static_cast<int>(p) * factor_dim - i;
  if (target_dim < 0 || target_dim > ctx.dimension) return out;
  const FreeModule<Cell> values = a.ring() == ctx.ring ? a : a.reduced(ctx.ring);
  const std::vector<FreeModule<Cell>> powers(static_cast<std::size_t>(p), values);
  for (const Cell& c : cells_in<Cell>(ctx.dimension, target_dim)) {
    CellTensor<Cell> image = evaluate_surjection_uniform(psi_sj(static_cast<int>(p), i), c, factor_dim);
    out.add_term(c, dual_pairing<Cell>(powers, image.reduced(ctx.ring)));
  }
  return out;
}

Coefficient nu(std::int64_t p, std::int64_t q) {
  if (p == 2) throw std::invalid_argument("nu: needs an odd prime");
  const Ring f = Ring::mod(p);
  const std::int64_t m = (p - 1) / 2;
  Coefficient factorial = 1;
  for (std::int64_t k = 2; k <= m; ++k) factorial = f.mul(factorial, k);
  // The parity of q(q-1)/2 only depends on q mod 4.
  const std::int64_t q4 = (q % 4 + 4) % 4;
  const bool odd = ((q4 * (q4 - 1) / 2) * m) % 2 != 0;
  const Coefficient value = f.pow(factorial, q);
  return odd ? f.neg(value) : value;
}

int steenrod_index(std::int64_t p, int s, int q, bool bockstein) {
  if (p == 2) {
    if (bockstein) throw std::invalid_argument("βP is only defined at odd primes");
    return s - q;
  }
  return (2 * s - q) * static_cast<int>(p - 1) - (bockstein ? 1 : 0);
}

Coefficient steenrod_scalar(std::int64_t p, int s, int q) {
  if (p == 2) return 1;
  const Ring f = Ring::mod(p);
  const Coefficient n = nu(p, q);
  return (s % 2) ? f.neg(n) : n;
}

namespace {

template <class Cell>
FreeModule<Cell> steenrod_impl(const OperationContext& ctx, int s, const FreeModule<Cell>& a, bool bockstein) {
  const std::int64_t p = require_prime(ctx);
  if (bockstein && p == 2) throw std::invalid_argument("βP is only defined at odd primes");
  const auto q = cochain_degree(a);
  if (!coboundary(ctx, a).empty()) throw NotCocycleError("input is not a cocycle");
  if (!q) return FreeModule<Cell>(ctx.ring);
  const int i = steenrod_index(p, s, *q, bockstein);
  return big_d(ctx, i, a).scaled(steenrod_scalar(p, s, *q));
}

}  // namespace

template <class Cell>
FreeModule<Cell> steenrod_P(const OperationContext& ctx, int s, const FreeModule<Cell>& a) {
  return steenrod_impl(ctx, s, a, false);
}

template <class Cell>
FreeModule<Cell> steenrod_betaP(const OperationContext& ctx, int s, const FreeModule<Cell>& a) {
  return steenrod_impl(ctx, s, a, true);
}

#define STEENROD_INSTANTIATE(Cell)                                                                            \
  template std::optional<int> cochain_degree<Cell>(const FreeModule<Cell>&);                                  \
  template FreeModule<Cell> coboundary<Cell>(const OperationContext&, const FreeModule<Cell>&);               \
  template Coefficient cup_r_i<Cell>(const OperationContext&, int, int, std::span<const FreeModule<Cell>>,     \
                                     const FreeModule<Cell>&);                                                \
  template const CellTensor<Cell>& power_element<Cell>(int, int, int, int);                                   \
  template FreeModule<Cell> big_d<Cell>(const OperationContext&, int, const FreeModule<Cell>&);               \
  template FreeModule<Cell> steenrod_P<Cell>(const OperationContext&, int, const FreeModule<Cell>&);          \
  template FreeModule<Cell> steenrod_betaP<Cell>(const OperationContext&, int, const FreeModule<Cell>&);

STEENROD_INSTANTIATE(Simplex)
STEENROD_INSTANTIATE(Cube)

}  // namespace steenrod
