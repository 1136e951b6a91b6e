#include "hilbtan/field.hpp"

#include <stdexcept>

namespace hilbtan {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!hilbtan::is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::rational, 0); }
FieldSpec FieldSpec::integers() { return FieldSpec(FieldKind::integer, 0); }

FieldSpec FieldSpec::from_characteristic(std::uint64_t c) {
  return c == 0 ? rationals() : prime_field(c);
}

Scalar FieldSpec::zero() const {
  return is_prime() ? Scalar(std::uint32_t{0}) : Scalar(mpq_class(0));
}

Scalar FieldSpec::one() const {
  return is_prime() ? Scalar(std::uint32_t{1}) : Scalar(mpq_class(1));
}

Scalar FieldSpec::from_int(long long v) const {
  if (is_prime()) {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return Scalar(static_cast<std::uint32_t>(r));
  }
  return Scalar(mpq_class(mpz_class(std::to_string(v))));
}

Scalar FieldSpec::from_mpz(const mpz_class& v) const {
  if (is_prime()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return Scalar(static_cast<std::uint32_t>(r.get_ui()));
  }
  return Scalar(mpq_class(v));
}

Scalar FieldSpec::from_mpq(const mpq_class& v) const {
  if (is_prime()) {
    if (v.get_den() == 1) return from_mpz(v.get_num());
    return div(from_mpz(v.get_num()), from_mpz(v.get_den()));
  }
  if (kind_ == FieldKind::integer && v.get_den() != 1)
    throw std::domain_error("non-integral value over ZZ");
  return Scalar(v);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::uint32_t s = a.residue() + b.residue();
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime()) {
    std::uint32_t s = a.residue() + (p_ - b.residue());
    if (s >= p_) s -= p_;
    return Scalar(s);
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_prime()) return Scalar(a.residue() == 0 ? 0u : p_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime())
    return Scalar(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.residue()) * b.residue()) % p_));
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw std::domain_error("division by zero");
  if (is_prime()) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.residue();
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return Scalar(static_cast<std::uint32_t>(t));
  }
  mpq_class q = 1 / a.rational();
  if (kind_ == FieldKind::integer && q.get_den() != 1)
    throw std::domain_error("non-unit integer has no inverse");
  return Scalar(q);
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar FieldSpec::exact_div(const Scalar& a, const mpz_class& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  if (is_prime()) return div(a, from_mpz(d));
  mpq_class q = a.rational() / mpq_class(d);
  if (kind_ == FieldKind::integer && q.get_den() != 1)
    throw std::domain_error("inexact integer division");
  return Scalar(q);
}

bool FieldSpec::is_zero(const Scalar& a) const {
  return is_prime() ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool FieldSpec::is_one(const Scalar& a) const {
  return is_prime() ? a.residue() == 1 : a.rational() == 1;
}

bool FieldSpec::is_negative(const Scalar& a) const {
  return !is_prime() && sgn(a.rational()) < 0;
}

std::string FieldSpec::to_string(const Scalar& a) const {
  if (is_prime()) return std::to_string(a.residue());
  return a.rational().get_str();
}

std::string FieldSpec::name() const {
  switch (kind_) {
    case FieldKind::prime:
      return "F_" + std::to_string(p_);
    case FieldKind::rational:
      return "QQ";
    case FieldKind::integer:
      return "ZZ";
  }
  return "?";
}

}  // namespace hilbtan
