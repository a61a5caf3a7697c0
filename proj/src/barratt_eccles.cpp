#include "steenrod/barratt_eccles.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace steenrod {

bool BarrattEcclesCell::is_degenerate() const {
  for (std::size_t i = 0; i + 1 < perms.size(); ++i)
    if (perms[i] == perms[i + 1]) return true;
  return false;
}

std::string to_string(const BarrattEcclesCell& c) {
  std::vector<int> exps;
  for (const auto& p : c.perms) {
    auto e = rho_exponent(p);
    if (!e) {
      exps.clear();
      break;
    }
    exps.push_back(*e);
  }
  std::string out = "(";
  if (exps.size() == c.perms.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) out += (i ? "," : "") + std::to_string(exps[i]);
  } else {
    for (std::size_t i = 0; i < c.perms.size(); ++i) out += (i ? "," : "") + to_string(c.perms[i]);
  }
  return out + ")";
}

BarrattEcclesChain be_from_exponents(int r, const std::vector<int>& exponents, Ring ring) {
  BarrattEcclesCell cell;
  for (int e : exponents) cell.perms.push_back(rho(r, e));
  BarrattEcclesChain out(ring);
  if (!cell.is_degenerate()) out.add_term(cell, 1);
  return out;
}

BarrattEcclesChain be_boundary(const BarrattEcclesChain& x) {
  BarrattEcclesChain out(x.ring());
  for (const auto& [cell, c] : x) {
    const std::size_t n = cell.perms.size();
    if (n <= 1) continue;
    for (std::size_t i = 0; i < n; ++i) {
      BarrattEcclesCell face;
      face.perms.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) face.perms.push_back(cell.perms[j]);
      if (face.is_degenerate()) continue;
      out.add_term(face, (i % 2) ? x.ring().neg(c) : c);
    }
  }
  return out;
}

BarrattEcclesChain be_act(const Permutation& g, const BarrattEcclesChain& x) {
  BarrattEcclesChain out(x.ring());
  for (const auto& [cell, c] : x) {
    if (cell.arity() != g.arity()) throw std::invalid_argument("be_act: arity mismatch");
    BarrattEcclesCell moved;
    for (const auto& p : cell.perms) moved.perms.push_back(g.compose(p));
    out.add_term(moved, c);
  }
  return out;
}

BarrattEcclesChain be_act(const GroupRingElement& g, const BarrattEcclesChain& x) {
  return act_by_group_ring(g, x, [](const Permutation& p, const BarrattEcclesChain& y) { return be_act(p, y); });
}

namespace {

BarrattEcclesChain compute_psi_be(int r, int n) {
  BarrattEcclesChain out;
  const int m = n / 2;
  std::vector<int> free(m, 0);
  // Odd degree starts (0, 1, ...); even degree starts (0, ...).
  while (true) {
    std::vector<int> exps{0};
    if (n % 2) exps.push_back(1);
    for (int v : free) {
      exps.push_back(v);
      exps.push_back(v + 1);
    }
    out += be_from_exponents(r, exps);
    int pos = m - 1;
    while (pos >= 0 && ++free[pos] == r) free[pos--] = 0;
    if (pos < 0) break;
  }
  return out;
}

std::mutex g_be_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const BarrattEcclesChain>> g_be_cache;

}  // namespace

const BarrattEcclesChain& psi_be(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("psi_be: need r >= 1 and n >= 0");
  {
    std::lock_guard lock(g_be_mutex);
    auto it = g_be_cache.find({r, n});
    if (it != g_be_cache.end()) return *it->second;
  }
  auto value = std::make_shared<const BarrattEcclesChain>(compute_psi_be(r, n));
  std::lock_guard lock(g_be_mutex);
  auto [it, inserted] = g_be_cache.try_emplace({r, n}, std::move(value));
  return *it->second;
}

BarrattEcclesChain psi_be(const WElement& x) {
  BarrattEcclesChain out(x.ring());
  for (const auto& [k, c] : x)
    out.add_scaled(be_act(k.group, psi_be(k.gen.arity, k.gen.degree).reduced(x.ring())), c);
  return out;
}

}  // namespace steenrod
