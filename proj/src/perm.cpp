#include "steenrod/perm.hpp"

#include <numeric>

namespace steenrod {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || static_cast<std::size_t>(v) > image_.size() || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..r");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int r) {
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.arity() != arity()) throw std::invalid_argument("permutation arity mismatch");
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = image_[other.image_[i] - 1];
  Permutation out;
  out.image_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[image_[i] - 1] = static_cast<int>(i) + 1;
  Permutation out;
  out.image_ = std::move(img);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Permutation::sign() const {
  int parity = 0;
  for (std::size_t i = 0; i < image_.size(); ++i)
    for (std::size_t j = i + 1; j < image_.size(); ++j)
      if (image_[i] > image_[j]) parity ^= 1;
  return parity ? -1 : 1;
}

std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (int i = 1; i <= p.arity(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p(i));
  }
  return out + ")";
}

Permutation rho(int r, long long k) {
  if (r < 1) throw std::invalid_argument("rho: arity must be positive");
  const long long shift = ((k % r) + r) % r;
  std::vector<int> img(r);
  for (int i = 0; i < r; ++i) img[i] = static_cast<int>((i + shift) % r) + 1;
  return Permutation(std::move(img));
}

std::optional<int> rho_exponent(const Permutation& p) {
  const int r = p.arity();
  if (r == 0) return std::nullopt;
  const int k = (p(1) - 1) % r;
  if (p == rho(r, k)) return k;
  return std::nullopt;
}

GroupRingElement twist_element(int r, Ring ring) {
  GroupRingElement t(ring);
  t.add_term(rho(r, 1), 1);
  t.add_term(Permutation::identity(r), -1);
  return t;
}

GroupRingElement norm_element(int r, Ring ring) {
  GroupRingElement n(ring);
  for (int k = 0; k < r; ++k) n.add_term(rho(r, k), 1);
  return n;
}

GroupRingElement group_ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("group ring: ring mismatch");
  GroupRingElement out(a.ring());
  for (const auto& [g, cg] : a)
    for (const auto& [h, ch] : b) out.add_term(g.compose(h), a.ring().mul(cg, ch));
  return out;
}

}  // namespace steenrod
