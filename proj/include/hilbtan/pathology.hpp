#pragma once

#include <optional>
#include <string>

#include "hilbtan/frames.hpp"
#include "hilbtan/ideal.hpp"
#include "hilbtan/tangent.hpp"

namespace hilbtan {

/// ((M_1 + ... + M_k)^p - M_1^p - ... - M_k^p) / p reduced mod p, where
/// M_i = x_(2i-1) x_(2i). The result lives in F_p[x_1..x_2k].
Polynomial w2_obstruction_witness(unsigned p, unsigned pairs);

struct W2Report {
  unsigned p;
  Polynomial witness;
  Polynomial normal_form;
  /// NF != 0. False means inconclusive, not liftable.
  bool obstructed = false;
};

/// Needs J over F_p with at least 2*pairs variables, Q = sum M_i in J and
/// x_(2i)^p in J; throws std::invalid_argument naming the failed containment.
W2Report w2_check(const IdealHandle& J, unsigned p, unsigned pairs = 3);

/// I' = (x1x2 + x3x4 + x5x6, x2^q, x4^q, x6^q), I = sat(I', m),
/// J = I + (x1, x3, x5)^(q+1) over F_p. q in {3, 4, 5} with p its prime.
IdealHandle build_q_example(unsigned q, unsigned p);
/// (x_1^p, ..., x_2k^p, Q) over F_p.
IdealHandle build_berthelot_ogus(unsigned p, unsigned pairs = 3);

struct MdpExample {
  IdealHandle K;
  /// K intersected with (x1..x4)^4 inside k[x1..x7].
  IdealHandle I;
  int reg_K = 0;
  int reg_I = 0;
  /// a = reg(I) + 1.
  FrameSpec spec;
  IdealHandle J;
};

MdpExample build_mdp_example();

struct ComponentCertificate {
  unsigned p = 0;
  unsigned q = 0;
  std::string fingerprint;
  std::size_t orbit_dim = 0;
  std::size_t hom0_dim = 0;
  bool step1_equal = false;
  bool w2_obstructed = false;
  /// Normal form of the witness; empty when the W2 step was refused.
  std::optional<std::string> w2_nf;
  bool tnt = false;
  std::size_t neg_dim = 0;
  bool verdict = false;
  /// Why the W2 step was refused, if it was. Not serialized.
  std::string w2_refusal;

  /// Keys in fixed order, two-space indent, trailing newline.
  std::string to_json() const;
  /// Rejects unknown or missing keys.
  static ComponentCertificate from_json(const std::string& text);
  friend bool operator==(const ComponentCertificate& a, const ComponentCertificate& b);
};

/// SHA-256 of the ring description followed by the reduced Groebner basis,
/// one polynomial per line.
std::string ideal_fingerprint(const IdealHandle& J);

/// The W2 step only runs for q = p; any other q is refused and the verdict
/// is false.
ComponentCertificate five_step_certificate(const IdealHandle& J, unsigned p, unsigned q = 0, unsigned threads = 0);

}  // namespace hilbtan
