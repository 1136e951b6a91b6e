#include "hilbtan/monomial.hpp"

#include <stdexcept>

namespace hilbtan {

std::string Bidegree::to_string() const {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw std::length_error("at most " + std::to_string(kMaxVariables) + " variables supported");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    if (exps[i] > 0xFFFF) throw std::overflow_error("exponent overflow");
    m.exp_[i] = static_cast<std::uint16_t>(exps[i]);
  }
  m.refresh();
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (i >= n_) throw std::out_of_range("variable index");
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
  exp_[i] = static_cast<std::uint16_t>(e);
  refresh();
}

std::vector<int> Monomial::exponents() const { return {exp_.begin(), exp_.begin() + n_}; }

void Monomial::refresh() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    degree_ += exp_[i];
    if (exp_[i]) mask_ |= 1u << i;
  }
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_ || (mask_ & ~other.mask_)) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (exp_[i] > other.exp_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint32_t e = std::uint32_t{exp_[i]} + other.exp_[i];
    if (e > 0xFFFF) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = exp_[i] - divisor.exp_[i];
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < n_; ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  r.refresh();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < n_; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace hilbtan
