#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbtan/field.hpp"
#include "hilbtan/monomial.hpp"
#include "hilbtan/ring.hpp"

namespace hilbtan {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Polynomial in canonical form: terms sorted by the ring order (largest
/// first), nonzero coefficients, distinct monomials. Values are immutable
/// after construction except through assignment.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial from_int(RingPtr ring, long long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  /// Sorts, merges duplicate monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const FieldSpec& field() const { return ring_->field(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  /// True for the zero polynomial.
  bool is_bihomogeneous() const;
  /// True for the zero polynomial.
  bool is_homogeneous() const;
  /// Bidegree of a nonzero bihomogeneous polynomial.
  std::optional<Bidegree> bidegree() const;
  /// Largest total degree of a term; -1 for zero.
  int degree() const;
  Polynomial component(Bidegree d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t var) const;
  Polynomial monic() const;

  /// Rewrites into another ring; var_map[i] is the target index of variable i.
  /// Coefficients are converted through their integer/rational value.
  Polynomial map_to(RingPtr target, const std::vector<std::size_t>& var_map) const;
  /// Reduces integer or rational coefficients into the target field.
  Polynomial change_field(RingPtr target) const;

  /// Canonical text: descending monomial order, explicit '*' and '^'.
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void check_ring(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Returns q with f = q*g exactly, or nullopt if g does not divide f.
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);

}  // namespace hilbtan
