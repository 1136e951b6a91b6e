#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hilbtan/groebner.hpp"
#include "hilbtan/polynomial.hpp"

namespace hilbtan {

struct GradedGenerator {
  Polynomial poly;
  Bidegree degree;
};

/// Generators plus write-once caches for the reduced Groebner basis and the
/// minimal generators. Copies share the caches; both are computed at most
/// once and are safe to request from several threads.
class IdealHandle {
 public:
  IdealHandle(RingPtr ring, std::vector<Polynomial> generators = {});
  /// Trusts that `gb` is a reduced Groebner basis of the ideal it generates.
  static IdealHandle from_groebner_basis(RingPtr ring, std::vector<Polynomial> gb);

  const RingPtr& ring() const;
  const std::vector<Polynomial>& generators() const;
  const std::vector<Polynomial>& groebner_basis() const;
  std::shared_ptr<const std::vector<Polynomial>> groebner_basis_ptr() const;
  /// Needs bihomogeneous generators; throws std::invalid_argument otherwise.
  const std::vector<GradedGenerator>& minimal_generators() const;

  bool is_bihomogeneous() const;
  bool is_homogeneous() const;
  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const;

 private:
  struct State;
  std::shared_ptr<State> s_;
};

Polynomial normal_form(const Polynomial& f, const IdealHandle& I);
bool contains(const IdealHandle& I, const Polynomial& f);
/// I is contained in J.
bool is_subset(const IdealHandle& I, const IdealHandle& J);
bool equal(const IdealHandle& I, const IdealHandle& J);

IdealHandle sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle sum(const IdealHandle& I, const std::vector<Polynomial>& more);
/// Ideal generated by all monomials of degree d in the given variables.
IdealHandle power_of_variables(const RingPtr& ring, const std::vector<std::size_t>& vars, int d);
IdealHandle maximal_ideal(const RingPtr& ring);

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);
/// I : f. Throws std::invalid_argument when f = 0.
IdealHandle ideal_quotient(const IdealHandle& I, const Polynomial& f);
/// I : J, the intersection of I : g over the generators g of J.
IdealHandle ideal_quotient(const IdealHandle& I, const IdealHandle& J);
/// I : J^infinity by iterated quotients until the chain stabilizes.
IdealHandle saturate(const IdealHandle& I, const IdealHandle& J);

/// Monomials of bidegree d outside the leading ideal, descending.
std::vector<Monomial> standard_monomials(const IdealHandle& I, Bidegree d);
/// Standard monomials of total degree d, descending.
std::vector<Monomial> standard_monomials_of_degree(const IdealHandle& I, int d);
/// Every standard monomial, or nullopt when the quotient is infinite.
std::optional<std::vector<Monomial>> all_standard_monomials(const IdealHandle& I);
/// dim_k R/I, or nullopt for infinite colength.
std::optional<std::uint64_t> colength(const IdealHandle& I);
bool has_finite_colength(const IdealHandle& I);

}  // namespace hilbtan
