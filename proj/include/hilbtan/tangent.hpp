#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"
#include "hilbtan/linalg.hpp"

namespace hilbtan {

/// A homomorphism J -> T/J given by the images of the minimal generators:
/// images[i] holds coordinates in the standard monomials of bidegree
/// deg(g_i) + d (see HomPiece::targets).
using GeneratorImages = std::vector<std::vector<Scalar>>;

struct HomPiece {
  Bidegree degree;
  std::size_t dimension = 0;
  /// targets[i]: standard monomials of bidegree deg(g_i) + degree, descending.
  std::vector<std::vector<Monomial>> targets;
  std::vector<GeneratorImages> basis;
};

/// Everything the Hom computations share for one ideal: minimal generators,
/// minimal first syzygies, the reduced Groebner basis and the support of
/// T/J. Immutable after construction and safe to share between threads.
class TangentContext {
 public:
  /// Throws std::invalid_argument unless J is bihomogeneous with finite colength.
  explicit TangentContext(IdealHandle J);

  const IdealHandle& ideal() const { return J_; }
  const RingPtr& ring() const { return J_.ring(); }
  const std::vector<GradedGenerator>& generators() const { return gens_; }
  /// Minimal first syzygies; component i refers to generators()[i].
  const std::vector<Vec>& syzygies() const { return syz_; }
  /// Largest x- and y-degree of a standard monomial.
  Bidegree support_max() const { return top_; }
  /// Rectangle outside of which every piece vanishes.
  std::pair<Bidegree, Bidegree> window() const;
  const std::vector<Monomial>& standard(Bidegree d) const;

  HomPiece piece(Bidegree d, bool with_basis = false) const;
  /// Whether the images satisfy every syzygy equation at degree d.
  bool is_homomorphism(Bidegree d, const GeneratorImages& images) const;
  /// Images of the generators under a derivation sending x_j to images[j].
  /// Only the generators' classes matter, so this is NF(D(g_i)) in the
  /// standard basis of bidegree deg(g_i) + d.
  GeneratorImages derivation_images(Bidegree d, const std::vector<Polynomial>& var_images) const;

 private:
  IdealHandle J_;
  std::vector<GradedGenerator> gens_;
  std::vector<Vec> syz_;
  Bidegree top_;
  std::map<Bidegree, std::vector<Monomial>> standard_;
  std::vector<Monomial> empty_;
};

HomPiece hom_piece(const IdealHandle& J, Bidegree d, bool with_basis = false);

enum class ProfileScope { full, nonpositive };

struct HomProfile {
  Bidegree lo, hi;
  std::map<Bidegree, std::size_t> pieces;
  std::size_t negative_total = 0;
  std::size_t gmap_total = 0;
  ProfileScope scope = ProfileScope::full;

  /// "(a, b): dim" lines in bidegree order, then the totals.
  std::string serialize() const;
};

/// threads == 0: default from HILBTAN_THREADS, else hardware concurrency.
HomProfile hom_profile(const TangentContext& ctx, ProfileScope scope = ProfileScope::full, unsigned threads = 0);
HomProfile hom_profile(const IdealHandle& J, ProfileScope scope = ProfileScope::full, unsigned threads = 0);
unsigned default_thread_count();

struct TntReport {
  bool tnt = false;
  std::size_t negative_total = 0;
  std::size_t nvars = 0;
  HomProfile profile;
};

TntReport tnt_check(const TangentContext& ctx, unsigned threads = 0);
TntReport tnt_check(const IdealHandle& J, unsigned threads = 0);

struct LieTangentReport {
  std::size_t ambient_dim = 0;
  /// Derivations preserving J that also preserve every space of linear
  /// forms {l : l^(p^e) in J}. In characteristic p the plain derivation
  /// kernel can be larger than the stabilizer group because derivations kill
  /// p-th powers; group elements must respect these subspaces, so this is an
  /// upper bound for the stabilizer dimension.
  std::size_t kernel_dim = 0;
  /// Derivations x_j -> sum A_jk x_k mapping every generator into J.
  std::size_t derivation_kernel_dim = 0;
  std::size_t orbit_dim = 0;
  /// dim Hom(J, T/J) in total degree 0.
  std::size_t hom0_dim = 0;
};

/// Stabilizer of J in gl_N acting by x_j -> sum_k A_jk x_k on all N variables.
LieTangentReport degree_zero_orbit(const TangentContext& ctx, unsigned threads = 0);
LieTangentReport degree_zero_orbit(const IdealHandle& J, unsigned threads = 0);

/// dim {A in gl_n : sum A_ij x_i x_j = 0}. Refuses characteristic 2.
std::size_t gprime_q_stabilizer(std::size_t n, const FieldSpec& field);

struct GMapReport {
  /// Sum of dim Hom_(a,-a) over a >= 1.
  std::size_t gmap_total = 0;
  /// Rank of the n^2 derivations y_i -> sum_j A_ij x_j inside Hom_(1,-1).
  std::size_t derivation_rank = 0;
  std::size_t expected = 0;
  bool injective() const { return derivation_rank == expected; }
  bool bijective() const { return injective() && gmap_total == expected; }
};

/// Needs n_x = n_y.
GMapReport gmap_check(const TangentContext& ctx, const HomProfile& profile);

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Independent dimension count: graded linear maps J -> T/J of degree d
/// commuting with every variable, built from spans of monomial multiples
/// of the generators. Uses no Groebner basis and no syzygies.
std::size_t hom_brute_force_oracle(const IdealHandle& J, Bidegree d, std::size_t max_columns = 20000);

}  // namespace hilbtan
