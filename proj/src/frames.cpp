#include "hilbtan/frames.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <stdexcept>

namespace hilbtan {

namespace {

bool is_char2(const FieldSpec& F) { return F.is_prime() && F.characteristic() == 2; }

void check_base(const IdealHandle& I) {
  if (I.ring()->bigraded()) throw std::invalid_argument("the base ideal must live in a ring without y-variables");
  if (!I.is_homogeneous()) throw std::invalid_argument("the base ideal must be homogeneous");
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

void append(std::vector<Polynomial>& out, const IdealHandle& I) {
  const auto& g = I.generators();
  out.insert(out.end(), g.begin(), g.end());
}

// I*T + m_x^(a+1) + (Q), the part shared by both frames.
std::vector<Polynomial> frame_common(const IdealHandle& I, const RingPtr& T, int a) {
  const std::size_t n = T->nx();
  std::vector<Polynomial> gens;
  auto var_map = range(0, n);
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.map_to(T, var_map));
  append(gens, power_of_variables(T, range(0, n), a + 1));
  Polynomial Q(T);
  for (std::size_t i = 0; i < n; ++i) Q = Q + Polynomial::variable(T, i) * Polynomial::variable(T, n + i);
  gens.push_back(Q);
  return gens;
}

bool piece_vanishes(const IdealHandle& I, int d) {
  if (d < 0) return true;
  return standard_monomials(I, {d, 0}).size() == monomials_of_bidegree(*I.ring(), {d, 0}).size();
}

}  // namespace

void FrameSpec::validate() const {
  if (a < 2) throw std::invalid_argument("frame size a must be at least 2");
  check_base(base);
  const auto& F = base.ring()->field();
  if (tweaked && !is_char2(F)) throw std::invalid_argument("tweaked frames need characteristic 2");
  if (!tweaked && is_char2(F)) throw std::invalid_argument("characteristic 2: use the tweaked frame");
  if (b < 1) throw std::invalid_argument("b must be positive");
}

FrameSpec standard_frame_spec(const IdealHandle& I, int a) {
  FrameSpec s{I, a, 1, false};
  s.validate();
  return s;
}

FrameSpec tweaked_frame_spec(const IdealHandle& I, int a) {
  FrameSpec s{I, a, static_cast<int>(I.ring()->nx()), true};
  s.validate();
  return s;
}

RingPtr frame_ring(const RingPtr& S) {
  if (S->bigraded()) throw std::invalid_argument("ring already has y-variables");
  std::set<std::string> used(S->xvars().begin(), S->xvars().end());
  std::vector<std::string> ys;
  for (const auto& x : S->xvars()) {
    std::string y;
    if (x.size() > 1 && x[0] == 'x' && std::all_of(x.begin() + 1, x.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      y = "y" + x.substr(1);
    else
      y = x + "_y";
    while (used.count(y)) y += "_y";
    used.insert(y);
    ys.push_back(y);
  }
  return PolyRing::make(S->field(), S->xvars(), ys);
}

IdealHandle frame_y_ideal(const RingPtr& T, bool tweaked) {
  const std::size_t n = T->nx(), m = T->ny();
  if (!tweaked) return power_of_variables(T, range(n, n + m), 2);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < m; ++i) gens.push_back(Polynomial::variable(T, n + i).pow(2));
  for (std::size_t i = 1; i < m; ++i) gens.push_back(Polynomial::variable(T, n) * Polynomial::variable(T, n + i));
  return IdealHandle(T, std::move(gens));
}

IdealHandle build_frame(const IdealHandle& I, int a) {
  check_base(I);
  if (is_char2(I.ring()->field())) throw std::invalid_argument("characteristic 2: use the tweaked frame");
  if (a < 2) throw std::invalid_argument("frame size a must be at least 2");
  auto T = frame_ring(I.ring());
  auto gens = frame_common(I, T, a);
  append(gens, frame_y_ideal(T, false));
  return IdealHandle(T, std::move(gens));
}

IdealHandle build_tweaked_frame(const IdealHandle& I, int a) {
  check_base(I);
  if (!is_char2(I.ring()->field())) throw std::invalid_argument("tweaked frames need characteristic 2");
  if (a < 2) throw std::invalid_argument("frame size a must be at least 2");
  auto T = frame_ring(I.ring());
  auto gens = frame_common(I, T, a);
  append(gens, frame_y_ideal(T, true));
  return IdealHandle(T, std::move(gens));
}

IdealHandle build_frame(const FrameSpec& spec) {
  spec.validate();
  return spec.tweaked ? build_tweaked_frame(spec.base, spec.a) : build_frame(spec.base, spec.a);
}

IdealHandle truncate_ideal(const IdealHandle& I, int M, int pad) {
  if (!I.is_homogeneous()) throw std::invalid_argument("non-homogeneous input");
  if (M < 0 || pad < 0) throw std::invalid_argument("M and pad must be non-negative");
  const auto& R = I.ring();
  auto all = range(0, R->nvars());
  std::vector<Polynomial> gens;
  for (const auto& g : I.minimal_generators()) {
    int d = g.degree.total();
    if (d >= M) {
      gens.push_back(g.poly);
      continue;
    }
    for (const auto& m : monomials_of_degree(*R, all, M - d)) gens.push_back(g.poly.mul_term(m, R->field().one()));
  }
  append(gens, power_of_variables(R, all, M + pad));
  std::vector<Polynomial> mins;
  IdealHandle full(R, std::move(gens));
  for (const auto& g : full.minimal_generators()) mins.push_back(g.poly);
  return IdealHandle(R, std::move(mins));
}

DepthReport check_regular_sequence(const IdealHandle& I, const std::vector<Polynomial>& seq) {
  DepthReport rep;
  rep.sequence = seq;
  IdealHandle cur = I;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq[i].is_homogeneous()) throw std::invalid_argument("regular sequence elements must be homogeneous");
    if (cur.is_unit() || !is_subset(ideal_quotient(cur, seq[i]), cur)) {
      rep.failed_at = i + 1;
      return rep;
    }
    cur = sum(cur, {seq[i]});
    ++rep.length;
  }
  rep.regular = !cur.is_unit() || seq.empty();
  if (!rep.regular) rep.failed_at = seq.size();
  return rep;
}

DepthReport search_regular_sequence(const IdealHandle& I, std::size_t length, std::uint64_t seed, int tries) {
  const auto& R = I.ring();
  const auto& F = R->field();
  std::mt19937_64 rng(seed);
  const long long span = F.is_prime() ? static_cast<long long>(F.characteristic()) : 19;
  std::uniform_int_distribution<long long> coef(F.is_prime() ? 0 : -9, F.is_prime() ? span - 1 : 9);
  DepthReport best;
  for (int t = 0; t < tries; ++t) {
    std::vector<Polynomial> seq;
    for (std::size_t k = 0; k < length; ++k) {
      Polynomial f(R);
      while (f.is_zero())
        for (std::size_t v = 0; v < R->nvars(); ++v)
          f = f + Polynomial::variable(R, v).scale(F.from_int(coef(rng)));
      seq.push_back(f);
    }
    auto rep = check_regular_sequence(I, seq);
    rep.probabilistic = true;
    if (rep.regular) return rep;
    if (t == 0 || rep.length > best.length) best = rep;
  }
  return best;
}

FrameLikeReport frame_like_check(const IdealHandle& J, const FrameSpec& spec, unsigned threads, bool force) {
  spec.validate();
  FrameLikeReport rep;
  rep.b = spec.b;
  const auto& T = J.ring();
  const auto& I = spec.base;
  const int n = static_cast<int>(I.ring()->nx());
  if (static_cast<int>(T->nx()) != n || static_cast<int>(T->ny()) != n)
    throw std::invalid_argument("frame ring must have n x- and n y-variables");

  if (!spec.tweaked) {
    if (n < 3) rep.unmet.push_back("n >= 3 required for standard frames");
    if (!piece_vanishes(I, 2)) rep.unmet.push_back("I_2 != 0: the degree-2 part of the base ideal must vanish");
  } else {
    if (n < 4) rep.unmet.push_back("n >= 4 required for tweaked frames");
    if (!piece_vanishes(I, n)) rep.unmet.push_back("I_n != 0: the degree-n part of the base ideal must vanish");
  }
  rep.depth = search_regular_sequence(I, 3);
  if (!rep.depth.regular) rep.unmet.push_back("depth >= 3 not certified: no regular sequence of length 3 found");
  if (!rep.hypotheses_met() && !force) return rep;

  rep.checked = true;
  TangentContext ctx(J);
  rep.cond_a = tnt_check(ctx, threads);
  rep.gmap = gmap_check(ctx, rep.cond_a.profile);
  rep.cond_b = rep.gmap.bijective();

  auto p = frame_y_ideal(T, spec.tweaked);
  rep.cond_c_containment = true;
  for (const auto& m : monomials_of_bidegree(*T, {2, spec.b + 1}))
    if (!contains(p, Polynomial::monomial(T, m, T->field().one()))) {
      rep.cond_c_containment = false;
      break;
    }
  rep.cond_c_base_vanishes = piece_vanishes(I, spec.b);
  rep.cond_c = rep.cond_c_containment && rep.cond_c_base_vanishes;
  rep.notes.push_back("condition (c) read as: every monomial of bidegree (2, b+1) lies in the ideal generated by p");
  rep.verdict = rep.cond_a.tnt && rep.cond_b && rep.cond_c;
  return rep;
}

}  // namespace hilbtan
