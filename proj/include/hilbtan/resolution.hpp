#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbtan/groebner.hpp"
#include "hilbtan/ideal.hpp"

namespace hilbtan {

/// Element of a free module with per-coordinate bidegree twists.
struct FreeModuleElement {
  std::vector<Polynomial> coords;
  std::vector<Bidegree> shifts;

  /// Bidegree of coords[i] plus shifts[i], shared by all nonzero coordinates.
  std::optional<Bidegree> degree() const;
  bool is_homogeneous() const { return is_zero() || degree().has_value(); }
  bool is_zero() const;
  std::string to_string() const;
};

/// Generators of the syzygy module of `gens` in the free module with basis
/// e_i of degree deg(gens[i]). Computed from a Groebner basis of the
/// graph module {(v, e_i)} under an order that ranks the first block above
/// the syzygy block; the result is a Groebner basis of the syzygies.
std::vector<FreeModuleElement> syzygy_module(const std::vector<Polynomial>& gens);
/// Syzygies of vectors of `layout`; result lives in the module whose
/// component i has shift deg(gens[i]).
std::vector<Vec> module_syzygies(const RingPtr& ring, const ModuleLayout& layout, const std::vector<Vec>& gens);
/// Same, reduced to a minimal generating set (homogeneous input only).
std::vector<Vec> minimal_module_syzygies(const RingPtr& ring, const ModuleLayout& layout,
                                         const std::vector<Vec>& gens);

std::vector<GradedGenerator> minimal_generators(const IdealHandle& I);

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graded Betti numbers of I (not of R/I): b_{0,j} counts minimal generators
/// of degree j.
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;
  bool complete = true;

  std::size_t at(int i, int j) const;
  /// max (j - i); throws BudgetExhausted when the table is partial.
  int regularity() const;
  /// Lines "i, j, b" sorted lexicographically.
  std::string serialize() const;
};

struct Resolution {
  /// maps[i] holds the generators of the i-th module; maps[0] generates I.
  std::vector<std::vector<Vec>> maps;
  /// layouts[i] is the free module maps[i] lives in.
  std::vector<ModuleLayout> layouts;
  BettiTable betti;
};

/// Singly graded rings only. max_steps < 0 means number of variables + 1.
Resolution minimal_free_resolution(const IdealHandle& I, int max_steps = -1);
int regularity(const IdealHandle& I, int max_steps = -1);

/// dim (R/I)_d for every bidegree d in the rectangle [lo, hi].
std::map<Bidegree, std::size_t> hilbert_function(const IdealHandle& I, Bidegree lo, Bidegree hi);

}  // namespace hilbtan
