#include "steenrod/surjection.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace steenrod {

int Surjection::arity() const {
  return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

int degree(const Surjection& s) { return static_cast<int>(s.values.size()) - s.arity(); }

std::string to_string(const Surjection& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? "," : "") + std::to_string(s.values[i]);
  return out + ")";
}

bool is_degenerate(const std::vector<int>& values, int arity) {
  std::vector<bool> hit(arity + 1, false);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1 || values[i] > arity) return true;
    if (i && values[i] == values[i - 1]) return true;
    hit[values[i]] = true;
  }
  for (int v = 1; v <= arity; ++v)
    if (!hit[v]) return true;
  return false;
}

SurjectionChain surjection(std::vector<int> values, int arity, Ring ring) {
  SurjectionChain out(ring);
  if (!is_degenerate(values, arity)) out.add_term(Surjection{std::move(values)}, 1);
  return out;
}

SurjectionChain sj_boundary(const SurjectionChain& x) {
  SurjectionChain out(x.ring());
  for (const auto& [s, c] : x) {
    const int r = s.arity();
    const auto& v = s.values;
    // The sign alternates across every removal, including those whose
    // result is degenerate; value blocks are visited in order 1..r.
    int parity = 0;
    for (int value = 1; value <= r; ++value) {
      for (std::size_t pos = 0; pos < v.size(); ++pos) {
        if (v[pos] != value) continue;
        std::vector<int> face;
        face.reserve(v.size() - 1);
        for (std::size_t j = 0; j < v.size(); ++j)
          if (j != pos) face.push_back(v[j]);
        if (!is_degenerate(face, r)) out.add_term(Surjection{std::move(face)}, parity ? x.ring().neg(c) : c);
        parity ^= 1;
      }
      // The next block starts with the sign of the last removal.
      parity ^= 1;
    }
  }
  return out;
}

SurjectionChain sj_act(const Permutation& g, const SurjectionChain& x) {
  SurjectionChain out(x.ring());
  const Permutation ginv = g.inverse();
  for (const auto& [s, c] : x) {
    const int r = s.arity();
    if (r != g.arity()) throw std::invalid_argument("sj_act: arity mismatch");
    std::vector<int> block_dims(r, -1);
    for (int v : s.values) ++block_dims[v - 1];
    std::vector<int> arrangement(r);
    for (int k = 1; k <= r; ++k) arrangement[k - 1] = ginv(k);
    const int sign = koszul_sign(arrangement, block_dims);
    Surjection moved;
    moved.values.reserve(s.values.size());
    for (int v : s.values) moved.values.push_back(g(v));
    out.add_term(moved, sign < 0 ? x.ring().neg(c) : c);
  }
  return out;
}

SurjectionChain sj_act(const GroupRingElement& g, const SurjectionChain& x) {
  return act_by_group_ring(g, x, [](const Permutation& p, const SurjectionChain& y) { return sj_act(p, y); });
}

SurjectionChain sj_contract_i(const SurjectionChain& x) {
  SurjectionChain out(x.ring());
  for (const auto& [s, c] : x) {
    Surjection lifted;
    lifted.values.reserve(s.values.size() + 1);
    lifted.values.push_back(1);
    for (int v : s.values) lifted.values.push_back(v + 1);
    out.add_term(lifted, c);
  }
  return out;
}

SurjectionChain sj_contract_p(const SurjectionChain& x) {
  SurjectionChain out(x.ring());
  for (const auto& [s, c] : x) {
    if (std::count(s.values.begin(), s.values.end(), 1) != 1) continue;
    std::vector<int> lowered;
    for (int v : s.values)
      if (v != 1) lowered.push_back(v - 1);
    out += surjection(std::move(lowered), s.arity() - 1, x.ring()).scaled(c);
  }
  return out;
}

SurjectionChain sj_contract_s(const SurjectionChain& x) {
  SurjectionChain out(x.ring());
  for (const auto& [s, c] : x) {
    if (!s.values.empty() && s.values.front() == 1) continue;
    Surjection shifted;
    shifted.values.reserve(s.values.size() + 1);
    shifted.values.push_back(1);
    shifted.values.insert(shifted.values.end(), s.values.begin(), s.values.end());
    out.add_term(shifted, c);
  }
  return out;
}

SurjectionChain sj_homotopy_h(const SurjectionChain& x, int arity) {
  SurjectionChain out(x.ring());
  SurjectionChain projected = x;  // p^k x, of arity `arity - k`
  for (int k = 0; k < arity && !projected.empty(); ++k) {
    SurjectionChain term = sj_contract_s(projected);
    for (int j = 0; j < k; ++j) term = sj_contract_i(term);
    out += term;
    projected = sj_contract_p(projected);
  }
  return out;
}

namespace {

std::mutex g_sj_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const SurjectionChain>> g_sj_cache;

const SurjectionChain* lookup(int r, int n) {
  std::lock_guard lock(g_sj_mutex);
  auto it = g_sj_cache.find({r, n});
  return it == g_sj_cache.end() ? nullptr : it->second.get();
}

const SurjectionChain& store(int r, int n, SurjectionChain value) {
  std::lock_guard lock(g_sj_mutex);
  auto [it, inserted] = g_sj_cache.try_emplace({r, n}, std::make_shared<const SurjectionChain>(std::move(value)));
  return *it->second;
}

}  // namespace

const SurjectionChain& psi_sj(int r, int n) {
  if (r < 1 || n < 0) throw std::invalid_argument("psi_sj: need r >= 1 and n >= 0");
  if (const auto* hit = lookup(r, n)) return *hit;
  // Fill from the highest cached degree upwards; recursion depth stays flat.
  int start = n;
  while (start > 0 && !lookup(r, start - 1)) --start;
  for (int d = start; d <= n; ++d) {
    if (lookup(r, d)) continue;
    if (d == 0) {
      std::vector<int> id(r);
      for (int i = 0; i < r; ++i) id[i] = i + 1;
      store(r, 0, surjection(std::move(id), r));
      continue;
    }
    const GroupRingElement g = (d % 2) ? twist_element(r) : norm_element(r);
    store(r, d, sj_homotopy_h(sj_act(g, *lookup(r, d - 1)), r));
  }
  return *lookup(r, n);
}

SurjectionChain psi_sj(const WElement& x) {
  SurjectionChain out(x.ring());
  for (const auto& [k, c] : x)
    out.add_scaled(sj_act(k.group, psi_sj(k.gen.arity, k.gen.degree).reduced(x.ring())), c);
  return out;
}

std::vector<PsiCacheEntry> psi_sj_cached_entries() {
  std::lock_guard lock(g_sj_mutex);
  std::vector<PsiCacheEntry> out;
  for (const auto& [key, value] : g_sj_cache) out.push_back({key.first, key.second, *value});
  return out;
}

void psi_sj_seed(int r, int n, SurjectionChain value) { store(r, n, std::move(value)); }

}  // namespace steenrod
