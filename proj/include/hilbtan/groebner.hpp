#pragma once

#include <climits>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hilbtan/polynomial.hpp"
#include "hilbtan/ring.hpp"

namespace hilbtan {

/// One term of a vector in a free module: coeff * mono * e_comp.
struct VTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Scalar coeff;
};

/// Vector in a free module, terms sorted descending in the module order.
using Vec = std::vector<VTerm>;

/// Free module F = R^rank. Component c has degree shift shifts[c], so a term
/// m*e_c has degree deg(m) + shifts[c]. Components >= split (when split > 0)
/// form a block ranked below every other component; this is what the
/// syzygy and intersection constructions eliminate with.
struct ModuleLayout {
  std::size_t rank = 1;
  std::vector<int> shifts;
  std::size_t split = 0;

  static ModuleLayout ideal() { return {}; }
  int shift(std::uint32_t c) const { return shifts.empty() ? 0 : shifts[c]; }
  int block(std::uint32_t c) const { return split != 0 && c >= split ? 1 : 0; }
};

/// Module order: block, then shifted degree (degree-compatible rings only),
/// then the ring order on monomials, then the smaller component is larger.
class ModuleOrder {
 public:
  ModuleOrder(RingPtr ring, ModuleLayout layout);

  const RingPtr& ring() const { return ring_; }
  const ModuleLayout& layout() const { return layout_; }
  int degree(const VTerm& t) const { return t.mono.degree() + layout_.shift(t.comp); }
  int degree(const Monomial& m, std::uint32_t c) const { return m.degree() + layout_.shift(c); }
  /// Positive when a > b.
  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;
  int compare(const VTerm& a, const VTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

  /// Sorts, merges and drops zero terms.
  Vec canonical(Vec v) const;
  /// a + c * m * b.
  Vec axpy(const Vec& a, const Scalar& c, const Monomial& m, const Vec& b) const;
  Vec mul_term(const Vec& v, const Scalar& c, const Monomial& m) const;
  /// Largest term degree; INT_MIN for zero.
  int sugar(const Vec& v) const;
  void make_monic(Vec& v) const;

 private:
  RingPtr ring_;
  ModuleLayout layout_;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair update and the normal
/// selection strategy under sugar. Generators enter as pseudo-pairs with
/// their sugar, so a run bounded by degree D yields a Groebner basis up to
/// degree D for homogeneous input, and the run can be resumed with a larger
/// bound or after adding generators.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, ModuleLayout layout = ModuleLayout::ideal());
  ~GroebnerEngine();
  GroebnerEngine(GroebnerEngine&&) noexcept;

  const ModuleOrder& order() const;

  void add_generator(Vec v);
  /// Processes every pending pair and generator with sugar <= degree_bound.
  void run(int degree_bound = INT_MAX);
  /// True when nothing is pending below or at `degree_bound`.
  bool done(int degree_bound = INT_MAX) const;
  /// Smallest sugar among pending work, INT_MAX when none.
  int next_degree() const;

  /// Fully reduces v by the current basis. Over a field the result is monic
  /// only if `monic` is set.
  Vec reduce(const Vec& v, bool monic = false) const;
  /// Minimal, tail-reduced, monic basis sorted ascending by leading term.
  std::vector<Vec> reduced_basis() const;
  std::size_t size() const;

  struct Stats {
    std::size_t pairs_considered = 0;
    std::size_t reductions_to_zero = 0;
    std::size_t basis_elements = 0;
  };
  Stats stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Vec to_vec(const Polynomial& f, std::uint32_t comp = 0);
/// Collects the terms of component `comp` into a polynomial.
Polynomial from_vec(const RingPtr& ring, const Vec& v, std::uint32_t comp = 0);

/// Reduced Groebner basis of the ideal generated by `gens`, ascending by
/// leading monomial.
std::vector<Polynomial> groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Remainder of f modulo a Groebner basis (unique when the basis is reduced).
Polynomial reduce_polynomial(const Polynomial& f, const std::vector<Polynomial>& gb);

/// Checks Buchberger's criterion: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& gb);

/// Minimal generating set of the submodule spanned by homogeneous vectors
/// (homogeneous for the shifted total degree). Returns indices into `gens`
/// of the chosen elements, ascending by degree and then by input position.
/// Throws std::invalid_argument on non-homogeneous input.
std::vector<std::size_t> minimal_generating_subset(const RingPtr& ring, const ModuleLayout& layout,
                                                   const std::vector<Vec>& gens);

/// Normal forms of monomials modulo a fixed reduced Groebner basis, memoized.
/// Only worth it when the quotient is finite dimensional or the queried
/// monomials are few. Not thread-safe; give each thread its own instance.
class MonomialReducer {
 public:
  MonomialReducer(RingPtr ring, std::shared_ptr<const std::vector<Polynomial>> gb);
  /// Normal form of m as a term list sorted descending.
  const std::vector<Term>& normal_form(const Monomial& m);
  bool is_standard(const Monomial& m) const;
  /// Normal form of c*m*f; f need not be reduced.
  std::vector<Term> normal_form(const Polynomial& f, const Monomial& m = Monomial());

 private:
  RingPtr ring_;
  std::shared_ptr<const std::vector<Polynomial>> gb_;
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> cache_;
};

}  // namespace hilbtan
