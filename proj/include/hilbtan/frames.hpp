#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"
#include "hilbtan/tangent.hpp"

namespace hilbtan {

/// Input of a frame construction. b is 1 for the standard frame and n for
/// the characteristic 2 tweaked frame.
struct FrameSpec {
  IdealHandle base;
  int a = 2;
  int b = 1;
  bool tweaked = false;

  /// Checks a >= 2, a homogeneous base ideal without y-variables, and the
  /// characteristic matching `tweaked`.
  void validate() const;
};

FrameSpec standard_frame_spec(const IdealHandle& I, int a);
FrameSpec tweaked_frame_spec(const IdealHandle& I, int a);

/// S = k[x_1..x_n] extended by y_1..y_n. A variable "x<k>" gets partner
/// "y<k>", anything else gets the suffix "_y"; clashes get more suffixes.
RingPtr frame_ring(const RingPtr& S);

/// I*T + m_x^(a+1) + m_y^2 + (x_1 y_1 + ... + x_n y_n). Refuses char 2.
IdealHandle build_frame(const IdealHandle& I, int a);
/// I*T + m_x^(a+1) + p + (Q) with p = (y_1^2, ..., y_n^2) + y_1*m_y. Char 2 only.
IdealHandle build_tweaked_frame(const IdealHandle& I, int a);
IdealHandle build_frame(const FrameSpec& spec);

/// The y-part of a frame: m_y^2, or the tweaked p.
IdealHandle frame_y_ideal(const RingPtr& T, bool tweaked);

/// (generators of I multiplied up to degree M) + m^(M+pad), minimalized.
IdealHandle truncate_ideal(const IdealHandle& I, int M, int pad);

struct DepthReport {
  bool regular = false;
  std::size_t length = 0;
  /// 1-based index of the first element that is a zero divisor.
  std::optional<std::size_t> failed_at;
  /// Set when the sequence came from a random search.
  bool probabilistic = false;
  std::vector<Polynomial> sequence;
};

/// Checks (I + (f_1..f_{i-1})) : f_i = I + (f_1..f_{i-1}) for every i.
DepthReport check_regular_sequence(const IdealHandle& I, const std::vector<Polynomial>& seq);
/// Tries `tries` random sequences of linear forms of the given length.
/// A failure proves nothing.
DepthReport search_regular_sequence(const IdealHandle& I, std::size_t length, std::uint64_t seed = 1,
                                    int tries = 20);

struct FrameLikeReport {
  /// Empty when the hypotheses of the frame-likeness lemmas hold.
  std::vector<std::string> unmet;
  bool hypotheses_met() const { return unmet.empty(); }
  bool checked = false;
  DepthReport depth;

  TntReport cond_a;
  GMapReport gmap;
  bool cond_b = false;
  int b = 1;
  /// Every monomial of bidegree (2, b+1) lies in p*T.
  bool cond_c_containment = false;
  bool cond_c_base_vanishes = false;
  bool cond_c = false;
  bool verdict = false;
  std::vector<std::string> notes;
};

/// Gate: standard frames need n >= 3 and I_2 = 0, tweaked frames n >= 4 and
/// I_n = 0; both need depth >= 3 (random search). With an unmet hypothesis
/// the checks are skipped unless `force` is set.
FrameLikeReport frame_like_check(const IdealHandle& J, const FrameSpec& spec, unsigned threads = 0,
                                 bool force = false);

}  // namespace hilbtan
