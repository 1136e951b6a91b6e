#include <gtest/gtest.h>

#include "hilbtan/parse.hpp"
#include "hilbtan/pathology.hpp"
#include "support.hpp"

using namespace hilbtan;
using namespace hilbtan::testing;

TEST(Witness, SmallCases) {
  EXPECT_EQ(w2_obstruction_witness(2, 1).to_string(), "0");
  EXPECT_EQ(w2_obstruction_witness(3, 1).to_string(), "0");
  EXPECT_EQ(w2_obstruction_witness(2, 2).to_string(), "x1*x2*x3*x4");
  EXPECT_EQ(w2_obstruction_witness(2, 3).to_string(), "x1*x2*x3*x4 + x1*x2*x5*x6 + x3*x4*x5*x6");
}

TEST(Witness, IntegralForSmallPrimes) {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned k = 1; k <= 4; ++k) {
      auto w = w2_obstruction_witness(p, k);
      EXPECT_EQ(w.is_zero(), k == 1) << p << " " << k;
      if (!w.is_zero()) {
        EXPECT_EQ(w.degree(), static_cast<int>(2 * p));
        EXPECT_EQ(w.field().characteristic(), p);
      }
    }
  EXPECT_THROW(w2_obstruction_witness(4, 2), std::invalid_argument);
  EXPECT_THROW(w2_obstruction_witness(3, 0), std::invalid_argument);
}

TEST(W2, BerthelotOgusObstructed) {
  for (unsigned p : {2u, 3u}) {
    auto J = build_berthelot_ogus(p);
    auto r = w2_check(J, p);
    EXPECT_TRUE(r.obstructed) << p;
    EXPECT_EQ(r.normal_form, normal_form(r.witness, J));
  }
}

TEST(W2, PreconditionRefused) {
  auto R = ring(3, 6);
  auto J = power_of_variables(R, {0, 1, 2, 3, 4, 5}, 5);
  try {
    w2_check(J, 3);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("precondition failed"), std::string::npos);
  }
  EXPECT_THROW(w2_check(J, 5), std::invalid_argument);
}

TEST(W2, UnitIdealIsInconclusive) {
  auto R = ring(3, 6);
  IdealHandle U(R, {Polynomial::from_int(R, 1)});
  auto r = w2_check(U, 3);
  EXPECT_FALSE(r.obstructed);
  EXPECT_TRUE(r.normal_form.is_zero());
}

TEST(QExample, SaturationIsFixpoint) {
  auto J = build_q_example(3, 3);
  const auto& R = J.ring();
  IdealHandle Ip(R, {parse_polynomial("x1*x2 + x3*x4 + x5*x6", R), parse_polynomial("x2^3", R),
                     parse_polynomial("x4^3", R), parse_polynomial("x6^3", R)});
  auto I = saturate(Ip, maximal_ideal(R));
  EXPECT_TRUE(equal(saturate(I, maximal_ideal(R)), I));
  EXPECT_TRUE(has_finite_colength(J));
  EXPECT_TRUE(J.is_homogeneous());
  EXPECT_THROW(build_q_example(4, 3), std::invalid_argument);
  EXPECT_THROW(build_q_example(7, 7), std::invalid_argument);
}

TEST(Certificate, JsonRoundTrip) {
  ComponentCertificate c;
  c.p = 3;
  c.q = 3;
  c.fingerprint = "abc";
  c.orbit_dim = 26;
  c.hom0_dim = 26;
  c.step1_equal = true;
  c.w2_obstructed = true;
  c.w2_nf = "x1";
  c.tnt = true;
  c.neg_dim = 6;
  c.verdict = true;
  auto text = c.to_json();
  EXPECT_EQ(text.back(), '\n');
  EXPECT_EQ(ComponentCertificate::from_json(text), c);
  EXPECT_EQ(ComponentCertificate::from_json(text).to_json(), text);

  c.w2_nf.reset();
  EXPECT_NE(c.to_json().find("\"w2_nf\": null"), std::string::npos);
  EXPECT_EQ(ComponentCertificate::from_json(c.to_json()), c);
}

TEST(Certificate, RejectsUnknownAndMissingKeys) {
  ComponentCertificate c;
  auto text = c.to_json();
  auto extra = text;
  extra.insert(1, "\"bogus\": 1,");
  EXPECT_THROW(ComponentCertificate::from_json(extra), std::invalid_argument);
  auto pos = text.find("\"tnt\"");
  auto missing = text.substr(0, pos) + text.substr(text.find('\n', pos) + 1);
  EXPECT_THROW(ComponentCertificate::from_json(missing), std::invalid_argument);
  EXPECT_THROW(ComponentCertificate::from_json("[1]"), std::invalid_argument);
  EXPECT_THROW(ComponentCertificate::from_json("{"), std::invalid_argument);
}

TEST(Certificate, DeterministicFingerprint) {
  auto a = build_berthelot_ogus(3, 2);
  auto b = build_berthelot_ogus(3, 2);
  EXPECT_EQ(ideal_fingerprint(a), ideal_fingerprint(b));
  EXPECT_EQ(ideal_fingerprint(a).size(), 64u);
  EXPECT_NE(ideal_fingerprint(a), ideal_fingerprint(build_berthelot_ogus(3, 3)));
}

TEST(Certificate, Q3) {
  auto J = build_q_example(3, 3);
  auto c1 = five_step_certificate(J, 3, 3, 1);
  auto c2 = five_step_certificate(J, 3, 3, 2);
  EXPECT_EQ(c1.to_json(), c2.to_json());
  EXPECT_EQ(c1.orbit_dim, 26u);
  EXPECT_EQ(c1.hom0_dim, 26u);
  EXPECT_TRUE(c1.w2_obstructed);
  EXPECT_TRUE(c1.tnt);
  EXPECT_EQ(c1.neg_dim, 6u);
  EXPECT_TRUE(c1.verdict);
}

TEST(Certificate, Q4RefusesW2) {
  auto J = build_q_example(4, 2);
  auto c = five_step_certificate(J, 2, 4, 1);
  EXPECT_FALSE(c.w2_nf);
  EXPECT_FALSE(c.w2_refusal.empty());
  EXPECT_FALSE(c.verdict);
  EXPECT_EQ(c.orbit_dim, c.hom0_dim);
}
