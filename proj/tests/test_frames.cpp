#include <gtest/gtest.h>

#include "hilbtan/cli.hpp"
#include "hilbtan/frames.hpp"
#include "hilbtan/parse.hpp"
#include "support.hpp"

using namespace hilbtan;
using namespace hilbtan::testing;

TEST(Frame, ZeroBaseIdeal) {
  auto S = ring(5, 3);
  IdealHandle I(S);
  auto J = build_frame(I, 2);
  EXPECT_EQ(J.ring()->yvars(), (std::vector<std::string>{"y1", "y2", "y3"}));
  const auto& gens = J.minimal_generators();
  EXPECT_EQ(gens.size(), 17u);
  for (const auto& g : gens) {
    bool ok = g.degree.y == 0 || g.degree == Bidegree{0, 2} || g.degree == Bidegree{1, 1};
    EXPECT_TRUE(ok) << g.degree.to_string();
  }
  EXPECT_EQ(colength(J), 36u);
}

TEST(Frame, RingNaming) {
  auto S = PolyRing::make(FieldSpec::rationals(), {"a", "y1", "x1"});
  auto T = frame_ring(S);
  EXPECT_EQ(T->yvars(), (std::vector<std::string>{"a_y", "y1_y", "y1_y_y"}));
  EXPECT_THROW(frame_ring(ring(0, 1, 1)), std::invalid_argument);
}

TEST(Frame, TweakedYIdeal) {
  auto S = ring(2, 4);
  auto T = frame_ring(S);
  auto p = frame_y_ideal(T, true);
  EXPECT_EQ(p.minimal_generators().size(), 7u);
  // Every y-monomial of degree n+1 lies in (y_i^2).
  IdealHandle squares(T, {Polynomial::variable(T, 4).pow(2), Polynomial::variable(T, 5).pow(2),
                          Polynomial::variable(T, 6).pow(2), Polynomial::variable(T, 7).pow(2)});
  for (const auto& m : monomials_of_bidegree(*T, {0, 5}))
    EXPECT_TRUE(contains(squares, Polynomial::monomial(T, m, T->field().one())));
  EXPECT_TRUE(is_subset(power_of_variables(T, {4, 5, 6, 7}, 5), p));
  EXPECT_FALSE(is_subset(power_of_variables(T, {4, 5, 6, 7}, 3), p));
}

TEST(Frame, CharacteristicGates) {
  EXPECT_THROW(build_frame(IdealHandle(ring(2, 3)), 2), std::invalid_argument);
  EXPECT_THROW(build_tweaked_frame(IdealHandle(ring(3, 4)), 2), std::invalid_argument);
  EXPECT_THROW(build_frame(IdealHandle(ring(5, 3)), 1), std::invalid_argument);
  EXPECT_THROW(standard_frame_spec(IdealHandle(ring(5, 2, 1)), 2), std::invalid_argument);
}

TEST(Frame, Truncation) {
  auto R = PolyRing::make(FieldSpec::rationals(), {"x", "y"});
  auto T = truncate_ideal(IdealHandle(R, {parse_polynomial("x", R)}), 2, 2);
  IdealHandle expect(R, {parse_polynomial("x^2", R), parse_polynomial("x*y", R), parse_polynomial("y^4", R)});
  EXPECT_TRUE(equal(T, expect));
  EXPECT_EQ(T.minimal_generators().size(), 3u);
}

TEST(Frame, RegularSequences) {
  auto R = ring(0, 3);
  IdealHandle zero(R);
  auto vars = std::vector<Polynomial>{Polynomial::variable(R, 0), Polynomial::variable(R, 1), Polynomial::variable(R, 2)};
  auto r = check_regular_sequence(zero, vars);
  EXPECT_TRUE(r.regular);
  EXPECT_EQ(r.length, 3u);

  IdealHandle xy(R, {Polynomial::variable(R, 0) * Polynomial::variable(R, 1)});
  auto bad = check_regular_sequence(xy, {Polynomial::variable(R, 0) + Polynomial::variable(R, 1), Polynomial::variable(R, 0)});
  EXPECT_FALSE(bad.regular);
  EXPECT_EQ(bad.failed_at, 2u);

  auto found = search_regular_sequence(zero, 3);
  EXPECT_TRUE(found.regular);
  EXPECT_TRUE(found.probabilistic);
  auto none = search_regular_sequence(maximal_ideal(R), 1);
  EXPECT_FALSE(none.regular);
}

TEST(FrameLike, GateOnDegreeTwoPart) {
  auto S = ring(5, 3);
  IdealHandle I(S, {Polynomial::variable(S, 0).pow(2)});
  auto spec = standard_frame_spec(I, 2);
  auto J = build_frame(spec);
  auto rep = frame_like_check(J, spec, 1);
  EXPECT_FALSE(rep.hypotheses_met());
  EXPECT_FALSE(rep.checked);
  bool named = false;
  for (const auto& u : rep.unmet) named |= u.find("I_2") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(FrameLike, StandardFrameOfZero) {
  auto S = ring(5, 3);
  auto spec = standard_frame_spec(IdealHandle(S), 2);
  auto J = build_frame(spec);
  auto rep = frame_like_check(J, spec, 1);
  ASSERT_TRUE(rep.hypotheses_met());
  ASSERT_TRUE(rep.checked);
  EXPECT_TRUE(rep.cond_a.tnt);
  EXPECT_EQ(rep.cond_a.negative_total, 6u);
  EXPECT_EQ(rep.gmap.gmap_total, 9u);
  EXPECT_EQ(rep.gmap.derivation_rank, 9u);
  EXPECT_TRUE(rep.cond_c);
  EXPECT_TRUE(rep.verdict);
}

TEST(FrameSpecFile, RoundTrip) {
  auto S = ring(5, 3);
  auto I = IdealHandle(S, {parse_polynomial("x1^3 - x2*x3^2", S)});
  auto spec = standard_frame_spec(I, 4);
  auto text = format_frame_spec(spec);
  auto back = parse_frame_spec(text);
  EXPECT_EQ(back.a, 4);
  EXPECT_EQ(back.b, 1);
  EXPECT_FALSE(back.tweaked);
  EXPECT_TRUE(equal(back.base, I));
  EXPECT_EQ(format_frame_spec(back), text);

  auto tw = tweaked_frame_spec(IdealHandle(ring(2, 4)), 3);
  auto tb = parse_frame_spec(format_frame_spec(tw));
  EXPECT_TRUE(tb.tweaked);
  EXPECT_EQ(tb.b, 4);
}
