#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hilbtan/field.hpp"
#include "hilbtan/monomial.hpp"

namespace hilbtan {

/// Polynomial ring k[x_1..x_n, y_1..y_m] graded by (deg x, deg y).
///
/// The monomial order is degree-reverse-lexicographic on the concatenated
/// variable list. When `elimination_block` is k > 0 the order first compares
/// the total degree in the first k variables, which makes it an elimination
/// order for them; that variant is only used internally.
class PolyRing {
 public:
  PolyRing(FieldSpec field, std::vector<std::string> xvars, std::vector<std::string> yvars = {},
           std::size_t elimination_block = 0);

  static std::shared_ptr<const PolyRing> make(FieldSpec field, std::vector<std::string> xvars,
                                              std::vector<std::string> yvars = {});

  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& xvars() const { return xvars_; }
  const std::vector<std::string>& yvars() const { return yvars_; }
  std::size_t nx() const { return xvars_.size(); }
  std::size_t ny() const { return yvars_.size(); }
  std::size_t nvars() const { return xvars_.size() + yvars_.size(); }
  bool bigraded() const { return !yvars_.empty(); }
  std::size_t elimination_block() const { return elim_; }
  bool degree_compatible() const { return elim_ == 0; }

  const std::string& variable_name(std::size_t i) const;
  std::optional<std::size_t> index_of(const std::string& name) const;

  Bidegree bidegree(const Monomial& m) const;
  /// Positive when a > b in the monomial order.
  int compare(const Monomial& a, const Monomial& b) const;

  bool same_as(const PolyRing& other) const;
  /// "ring char=<p|0> x=[...] y=[...]"
  std::string describe() const;

 private:
  FieldSpec field_;
  std::vector<std::string> xvars_;
  std::vector<std::string> yvars_;
  std::size_t elim_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// All monomials of bidegree d, in descending monomial order. A singly graded
/// ring only has bidegrees (d, 0).
std::vector<Monomial> monomials_of_bidegree(const PolyRing& ring, Bidegree d);
/// All monomials of total degree d in the given variables, descending.
std::vector<Monomial> monomials_of_degree(const PolyRing& ring, const std::vector<std::size_t>& vars, int d);

}  // namespace hilbtan
