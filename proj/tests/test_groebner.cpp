#include <gtest/gtest.h>

#include "hilbtan/groebner.hpp"
#include "hilbtan/parse.hpp"
#include "support.hpp"

using namespace hilbtan;
using namespace hilbtan::testing;

namespace {

std::vector<Polynomial> polys(const RingPtr& R, std::initializer_list<const char*> src) {
  std::vector<Polynomial> v;
  for (auto s : src) v.push_back(parse_polynomial(s, R));
  return v;
}

}  // namespace

TEST(Groebner, Twisted) {
  auto R = PolyRing::make(FieldSpec::rationals(), {"x", "y", "z", "w"});
  auto gb = groebner_basis(R, polys(R, {"x*z - y^2", "y*w - z^2", "x*w - y*z"}));
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
  EXPECT_EQ(gb.size(), 3u);
}

TEST(Groebner, Cyclic3) {
  auto R = PolyRing::make(FieldSpec::prime_field(32003), {"a", "b", "c"});
  auto gb = groebner_basis(R, polys(R, {"a+b+c", "a*b+b*c+c*a", "a*b*c-1"}));
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
  EXPECT_TRUE(reduce_polynomial(parse_polynomial("c^3 - 1", R), gb).is_zero());
}

TEST(Groebner, UnitAndZero) {
  auto R = ring(5, 2);
  auto gb = groebner_basis(R, polys(R, {"x1", "x1 + 1"}));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0].to_string(), "1");
  EXPECT_TRUE(groebner_basis(R, {Polynomial(R)}).empty());
}

class RandomGb : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomGb, CriterionNormalForms) {
  Rng rng(GetParam());
  for (int rep = 0; rep < 25; ++rep) {
    auto R = ring(GetParam() % 2 ? 0 : 7, 3);
    std::vector<Polynomial> gens;
    std::size_t k = 2 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_poly(R, rng, 3, 3));
    auto gb = groebner_basis(R, gens);
    ASSERT_TRUE(satisfies_buchberger_criterion(gb));
    for (const auto& g : gens) ASSERT_TRUE(reduce_polynomial(g, gb).is_zero());
    auto f = random_poly(R, rng, 5, 4), h = random_poly(R, rng, 5, 4);
    auto nf = reduce_polynomial(f, gb);
    ASSERT_EQ(reduce_polynomial(nf, gb), nf);
    ASSERT_EQ(reduce_polynomial(f + h, gb), nf + reduce_polynomial(h, gb));
    ASSERT_TRUE(reduce_polynomial(f * gens[0], gb).is_zero());
    // Reduced: no term of one element is divisible by another leading term.
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = 0; j < gb.size(); ++j)
        if (i != j)
          for (const auto& t : gb[j].terms()) ASSERT_FALSE(gb[i].leading().mono.divides(t.mono));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGb, ::testing::Values(1, 2, 3, 4));

TEST(Groebner, DegreeBoundedRunIsResumable) {
  auto R = ring(0, 3);
  GroebnerEngine e(R);
  for (const auto& g : polys(R, {"x1^2 - x2*x3", "x2^2 - x1*x3", "x3^3 - x1*x2*x3"})) e.add_generator(to_vec(g));
  e.run(3);
  EXPECT_GE(e.next_degree(), 4);
  e.run();
  EXPECT_TRUE(e.done());
  std::vector<Polynomial> gb;
  for (const auto& v : e.reduced_basis()) gb.push_back(from_vec(R, v));
  EXPECT_TRUE(satisfies_buchberger_criterion(gb));
}

TEST(MonomialReducer, MatchesReduce) {
  Rng rng(5);
  auto R = ring(3, 2, 2);
  auto I = random_artinian(R, rng, 60);
  MonomialReducer red(R, I.groebner_basis_ptr());
  for (const auto& m : monomials_of_bidegree(*R, {2, 2})) {
    auto nf = Polynomial::from_terms(R, red.normal_form(m));
    EXPECT_EQ(nf, reduce_polynomial(Polynomial::monomial(R, m, R->field().one()), I.groebner_basis()));
    EXPECT_EQ(red.is_standard(m), nf == Polynomial::monomial(R, m, R->field().one()));
  }
}

TEST(MinimalGeneratingSubset, DropsRedundant) {
  auto R = ring(0, 2);
  std::vector<Vec> gens{to_vec(parse_polynomial("x1", R)), to_vec(parse_polynomial("x1*x2", R)),
                        to_vec(parse_polynomial("x2^2", R)), to_vec(parse_polynomial("x1*x2 + x2^2", R))};
  auto keep = minimal_generating_subset(R, ModuleLayout::ideal(), gens);
  EXPECT_EQ(keep, (std::vector<std::size_t>{0, 2}));
}
