#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace hilbtan {

enum class FieldKind { prime, rational, integer };

/// A coefficient. Residues modulo p are stored inline; rationals and
/// integers are stored as reduced GMP fractions (denominator 1 for integers).
/// A Scalar carries no field; arithmetic goes through FieldSpec.
class Scalar {
 public:
  Scalar() : v_(std::uint32_t{0}) {}
  explicit Scalar(std::uint32_t residue) : v_(residue) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  bool is_residue() const { return v_.index() == 0; }
  std::uint32_t residue() const { return std::get<0>(v_); }
  const mpq_class& rational() const { return std::get<1>(v_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.v_.index() != b.v_.index()) return false;
    if (a.is_residue()) return a.residue() == b.residue();
    return a.rational() == b.rational();
  }

 private:
  std::variant<std::uint32_t, mpq_class> v_;
};

class FieldSpec {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);
  static FieldSpec rationals();
  static FieldSpec integers();
  /// 0 means rationals.
  static FieldSpec from_characteristic(std::uint64_t c);

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != FieldKind::integer; }
  bool is_prime() const { return kind_ == FieldKind::prime; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// Fractions are accepted in any field; over the integers the quotient
  /// must be exact.
  Scalar from_mpq(const mpq_class& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  /// Throws std::domain_error on zero or on a non-unit integer.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  /// Exact division by an integer; throws std::domain_error when not exact.
  Scalar exact_div(const Scalar& a, const mpz_class& d) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  /// True when the canonical text form starts with '-'.
  bool is_negative(const Scalar& a) const;

  std::string to_string(const Scalar& a) const;
  /// "F_p", "QQ" or "ZZ".
  std::string name() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace hilbtan
