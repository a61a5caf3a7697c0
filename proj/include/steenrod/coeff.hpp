#pragma once

// Exact coefficients and sparse free modules over ordered basis keys.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace steenrod {

using Coefficient = std::int64_t;

bool is_prime(std::int64_t n);

/// Ground ring: the integers (modulus 0) or F_p for a prime 2 <= p < 2^31.
/// Integer arithmetic is overflow-checked and throws std::overflow_error.
class Ring {
 public:
  constexpr Ring() = default;
  static constexpr Ring integers() { return Ring(); }
  static Ring mod(std::int64_t p);

  constexpr std::int64_t modulus() const { return modulus_; }
  constexpr bool is_integral() const { return modulus_ == 0; }

  Coefficient normalize(Coefficient c) const;
  Coefficient add(Coefficient a, Coefficient b) const;
  Coefficient mul(Coefficient a, Coefficient b) const;
  Coefficient neg(Coefficient a) const;
  Coefficient inverse(Coefficient a) const;
  Coefficient pow(Coefficient base, std::int64_t exponent) const;

  std::string name() const;

  friend constexpr bool operator==(Ring, Ring) = default;

 private:
  explicit constexpr Ring(std::int64_t m) : modulus_(m) {}
  std::int64_t modulus_ = 0;
};

/// Ordered tensor of basis keys. Total degree is the sum of factor degrees.
template <class Key>
struct TensorKey {
  std::vector<Key> factors;

  std::size_t arity() const { return factors.size(); }
  friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
  friend bool operator==(const TensorKey&, const TensorKey&) = default;
};

template <class Key>
int degree(const TensorKey<Key>& t) {
  int d = 0;
  for (const auto& f : t.factors) d += degree(f);
  return d;
}

template <class Key>
std::string to_string(const TensorKey<Key>& t) {
  std::string out;
  for (std::size_t i = 0; i < t.factors.size(); ++i) {
    if (i) out += "⊗";
    out += to_string(t.factors[i]);
  }
  return out;
}

/// Finite formal sum of basis keys with nonzero coefficients in one ring.
/// Terms iterate in the key order, so rendering is deterministic.
template <class Key>
class FreeModule {
 public:
  using key_type = Key;
  using Terms = std::map<Key, Coefficient>;
  using const_iterator = typename Terms::const_iterator;

  FreeModule() = default;
  explicit FreeModule(Ring ring) : ring_(ring) {}

  static FreeModule basis(Key key, Ring ring = Ring::integers()) {
    FreeModule out(ring);
    out.add_term(std::move(key), 1);
    return out;
  }

  Ring ring() const { return ring_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Terms& terms() const { return terms_; }

  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Key& key, Coefficient c) {
    c = ring_.normalize(c);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = ring_.add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  FreeModule& operator+=(const FreeModule& other) {
    check_ring(other);
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  FreeModule& operator-=(const FreeModule& other) {
    check_ring(other);
    for (const auto& [k, c] : other.terms_) add_term(k, ring_.neg(c));
    return *this;
  }
  FreeModule& add_scaled(const FreeModule& other, Coefficient factor) {
    check_ring(other);
    factor = ring_.normalize(factor);
    if (factor == 0) return *this;
    for (const auto& [k, c] : other.terms_) add_term(k, ring_.mul(c, factor));
    return *this;
  }

  friend FreeModule operator+(FreeModule a, const FreeModule& b) { return a += b; }
  friend FreeModule operator-(FreeModule a, const FreeModule& b) { return a -= b; }
  friend FreeModule operator-(const FreeModule& a) { return a.scaled(-1); }

  FreeModule scaled(Coefficient factor) const {
    FreeModule out(ring_);
    return out.add_scaled(*this, factor);
  }

  /// Reduces integral coefficients into `target` (identity when rings agree).
  FreeModule reduced(Ring target) const {
    if (target == ring_) return *this;
    if (!ring_.is_integral())
      throw std::invalid_argument("only integral elements can be reduced");
    FreeModule out(target);
    for (const auto& [k, c] : terms_) out.add_term(k, c);
    return out;
  }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const FreeModule& other) const {
    if (other.ring_ != ring_)
      throw std::invalid_argument("ring mismatch: " + ring_.name() + " vs " +
                                  other.ring_.name());
  }

  Ring ring_{};
  Terms terms_;
};

/// Linear extension of `f : Key -> FreeModule<Out>` applied to `x`.
template <class Out, class Key, class F>
FreeModule<Out> apply_linear(const FreeModule<Key>& x, F&& f) {
  FreeModule<Out> out(x.ring());
  for (const auto& [k, c] : x) out.add_scaled(f(k).reduced(x.ring()), c);
  return out;
}

/// Canonical rendering: `+1·(0,1,0) -1·(1,0)`; `0` for the zero element.
template <class Key>
std::string render(const FreeModule<Key>& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : x) {
    if (!out.empty()) out += ' ';
    out += (c > 0 ? "+" : "") + std::to_string(c) + "·" + to_string(k);
  }
  return out;
}

/// Table-style rendering: `(0,1,2) + (0,2,0)`, unit coefficients omitted.
template <class Key>
std::string render_compact(const FreeModule<Key>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : x) {
    Coefficient shown = c;
    if (!x.ring().is_integral() && x.ring().modulus() > 2 && c == x.ring().modulus() - 1)
      shown = -1;
    if (first) {
      if (shown < 0) out += "-";
    } else {
      out += shown < 0 ? " - " : " + ";
    }
    Coefficient mag = shown < 0 ? -shown : shown;
    if (mag != 1) out += std::to_string(mag) + "·";
    out += to_string(k);
    first = false;
  }
  return out;
}

/// Sign of rearranging k graded factors: position j receives factor
/// arrangement[j] (values 1..k). Each pair passing each other contributes
/// (-1)^{deg a * deg b}.
int koszul_sign(std::span<const int> arrangement, std::span<const int> degrees);

template <class Key>
using BoundaryFn = std::function<FreeModule<Key>(const Key&)>;

/// Leibniz boundary on a tensor power: factor i is differentiated with sign
/// (-1)^{sum of degrees of factors before i}. `boundaries` holds either one
/// callback shared by every factor or one callback per factor.
template <class Key>
FreeModule<TensorKey<Key>> tensor_boundary(const FreeModule<TensorKey<Key>>& x,
                                           std::span<const BoundaryFn<Key>> boundaries) {
  FreeModule<TensorKey<Key>> out(x.ring());
  for (const auto& [key, c] : x) {
    const std::size_t k = key.factors.size();
    if (boundaries.size() != 1 && boundaries.size() != k)
      throw std::invalid_argument("tensor_boundary: need one boundary callback per factor");
    int prefix = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& fn = boundaries.size() == 1 ? boundaries[0] : boundaries[i];
      if (!fn) throw std::invalid_argument("tensor_boundary: factor has no boundary callback");
      const Coefficient sign = (prefix % 2) ? -1 : 1;
      for (const auto& [face, fc] : fn(key.factors[i])) {
        TensorKey<Key> t = key;
        t.factors[i] = face;
        out.add_term(t, x.ring().mul(x.ring().mul(c, fc), sign));
      }
      prefix += degree(key.factors[i]);
    }
  }
  return out;
}

template <class Key>
FreeModule<TensorKey<Key>> tensor_boundary(const FreeModule<TensorKey<Key>>& x,
                                           const BoundaryFn<Key>& boundary) {
  return tensor_boundary(x, std::span<const BoundaryFn<Key>>(&boundary, 1));
}

/// Evaluates f_1 ⊗ ... ⊗ f_r on a chain tensor. A cochain is stored as its
/// values on basis chains. Sign: (f ⊗ g)(a ⊗ b) = (-1)^{|a||g|} f(a) g(b),
/// extended recursively. The result lives in the ring of the first cochain.
template <class Key>
Coefficient dual_pairing(std::span<const FreeModule<Key>> cochains,
                         const FreeModule<TensorKey<Key>>& chain) {
  if (cochains.empty()) throw std::invalid_argument("dual_pairing: no cochains");
  const Ring ring = cochains[0].ring();
  Coefficient total = 0;
  for (const auto& [key, c] : chain) {
    if (key.factors.size() != cochains.size())
      throw std::invalid_argument("dual_pairing: arity mismatch");
    Coefficient value = ring.normalize(c);
    int suffix_parity = 0;
    // (-1)^{|a_i| |f_j|} for i < j, with |f_j| = -|a_j| on the support.
    for (std::size_t i = key.factors.size(); i-- > 0 && value != 0;) {
      const int d = degree(key.factors[i]);
      value = ring.mul(value, cochains[i].coefficient(key.factors[i]));
      if ((d % 2) && suffix_parity) value = ring.neg(value);
      suffix_parity ^= (d & 1);
    }
    total = ring.add(total, value);
  }
  return total;
}

}  // namespace steenrod
