#include "steenrod/coeff.hpp"

#include <algorithm>

namespace steenrod {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::mod(std::int64_t p) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p))
    throw std::invalid_argument("modulus must be a prime below 2^31, got " + std::to_string(p));
  return Ring(p);
}

Coefficient Ring::normalize(Coefficient c) const {
  if (modulus_ == 0) return c;
  c %= modulus_;
  return c < 0 ? c + modulus_ : c;
}

Coefficient Ring::add(Coefficient a, Coefficient b) const {
  if (modulus_ != 0) return normalize(normalize(a) + normalize(b));
  Coefficient out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer coefficient overflow");
  return out;
}

Coefficient Ring::mul(Coefficient a, Coefficient b) const {
  if (modulus_ != 0) return normalize(normalize(a) * normalize(b));
  Coefficient out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer coefficient overflow");
  return out;
}

Coefficient Ring::neg(Coefficient a) const {
  if (modulus_ != 0) return normalize(-normalize(a));
  if (a == INT64_MIN) throw std::overflow_error("integer coefficient overflow");
  return -a;
}

Coefficient Ring::inverse(Coefficient a) const {
  if (modulus_ == 0) {
    if (a == 1 || a == -1) return a;
    throw std::domain_error("integer " + std::to_string(a) + " is not a unit");
  }
  a = normalize(a);
  if (a == 0) throw std::domain_error("zero has no inverse");
  // Extended Euclid.
  std::int64_t t = 0, new_t = 1, r = modulus_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return normalize(t);
}

Coefficient Ring::pow(Coefficient base, std::int64_t exponent) const {
  if (exponent < 0) {
    base = inverse(base);
    exponent = -exponent;
  }
  Coefficient result = normalize(1);
  base = normalize(base);
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

std::string Ring::name() const {
  return modulus_ == 0 ? "Z" : "F_" + std::to_string(modulus_);
}

int koszul_sign(std::span<const int> arrangement, std::span<const int> degrees) {
  const std::size_t k = arrangement.size();
  if (degrees.size() != k) throw std::invalid_argument("koszul_sign: length mismatch");
  std::vector<bool> seen(k, false);
  for (int a : arrangement) {
    if (a < 1 || static_cast<std::size_t>(a) > k || seen[a - 1])
      throw std::invalid_argument("koszul_sign: arrangement is not a bijection on 1..k");
    seen[a - 1] = true;
  }
  int parity = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (arrangement[i] > arrangement[j])
        parity ^= (degrees[arrangement[i] - 1] & degrees[arrangement[j] - 1] & 1);
  return parity ? -1 : 1;
}

}  // namespace steenrod
