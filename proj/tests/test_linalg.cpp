#include <gtest/gtest.h>

#include "hilbtan/kernels.hpp"
#include "hilbtan/linalg.hpp"
#include "support.hpp"

using namespace hilbtan;
using namespace hilbtan::testing;

namespace {

std::vector<std::vector<Scalar>> random_matrix(const FieldSpec& F, Rng& rng, std::size_t r, std::size_t c, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::vector<Scalar>> m(r, std::vector<Scalar>(c, F.zero()));
  for (auto& row : m)
    for (auto& x : row)
      if (u(rng) < density) x = random_scalar(F, rng, true);
  return m;
}

// Force a rank deficit by appending combinations of existing rows.
void add_dependent_rows(const FieldSpec& F, Rng& rng, std::vector<std::vector<Scalar>>& m, std::size_t k) {
  std::size_t base = m.size();
  for (std::size_t t = 0; t < k && base >= 2; ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, base - 1);
    auto a = m[pick(rng)], b = m[pick(rng)];
    auto c = random_scalar(F, rng);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] = F.add(a[j], F.mul(c, b[j]));
    m.push_back(a);
  }
}

bool in_kernel(const FieldSpec& F, const std::vector<std::vector<Scalar>>& m, const std::vector<Scalar>& v) {
  for (const auto& row : m) {
    Scalar s = F.zero();
    for (std::size_t j = 0; j < v.size(); ++j) s = F.add(s, F.mul(row[j], v[j]));
    if (!F.is_zero(s)) return false;
  }
  return true;
}

}  // namespace

TEST(RowEchelon, SmallExample) {
  auto F = FieldSpec::prime_field(5);
  RowEchelon E(F, 3);
  EXPECT_TRUE(E.insert({F.from_int(1), F.from_int(2), F.from_int(3)}));
  EXPECT_TRUE(E.insert({F.from_int(0), F.from_int(1), F.from_int(1)}));
  EXPECT_FALSE(E.insert({F.from_int(3), F.from_int(1), F.from_int(4)}));
  EXPECT_EQ(E.rank(), 2u);
  auto ns = E.nullspace();
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (std::vector<Scalar>{F.from_int(4), F.from_int(4), F.from_int(1)}));
  EXPECT_TRUE(E.contains({F.from_int(1), F.from_int(0), F.from_int(1)}));
  EXPECT_FALSE(E.contains({F.from_int(0), F.from_int(0), F.from_int(1)}));
}

class SolverAgreement : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(SolverAgreement, RankAndKernel) {
  Rng rng(GetParam() * 7919);
  for (int rep = 0; rep < 40; ++rep) {
    auto F = FieldSpec::from_characteristic(GetParam());
    std::size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
    auto m = random_matrix(F, rng, r, c, rep % 2 ? 0.15 : 0.6);
    add_dependent_rows(F, rng, m, rng() % 5);
    RowEchelon E(F, c);
    for (const auto& row : m) E.insert(row);
    SparseLinearSystem S(F, c);
    for (const auto& row : m) {
      std::vector<SparseLinearSystem::Entry> sr;
      for (std::size_t j = 0; j < c; ++j)
        if (!F.is_zero(row[j])) sr.emplace_back(j, row[j]);
      S.add_row(std::move(sr));
    }
    auto sol = S.solve(true, rep % 3 == 0 ? 0 : 48);
    ASSERT_EQ(sol.rank, E.rank());
    ASSERT_EQ(sol.rank, matrix_rank(F, m, c));
    ASSERT_EQ(sol.kernel_dimension, c - sol.rank);
    ASSERT_EQ(sol.kernel.size(), sol.kernel_dimension);
    RowEchelon K(F, c);
    for (const auto& v : sol.kernel) {
      ASSERT_TRUE(in_kernel(F, m, v));
      K.insert(v);
    }
    ASSERT_EQ(K.rank(), sol.kernel_dimension);
    // The sparse kernel comes back in reduced echelon form, and spans the
    // same space as the dense one.
    EXPECT_TRUE(K.rows() == sol.kernel);
    for (const auto& v : E.nullspace()) EXPECT_FALSE(K.insert(v));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, SolverAgreement, ::testing::Values(0, 2, 3, 7, 32003));

TEST(RowEchelon, ScalarAndAvx2Agree) {
  if (kernels::detected_isa() != kernels::Isa::avx2) GTEST_SKIP() << "no AVX2";
  Rng rng(99);
  auto F = FieldSpec::prime_field(65521);
  auto m = random_matrix(F, rng, 60, 80, 0.5);
  add_dependent_rows(F, rng, m, 30);
  std::vector<std::vector<std::vector<Scalar>>> out;
  for (auto isa : {kernels::Isa::scalar, kernels::Isa::avx2}) {
    kernels::force_isa(isa);
    RowEchelon E(F, 80);
    for (const auto& row : m) E.insert(row);
    out.push_back(E.rows());
  }
  kernels::force_isa(std::nullopt);
  EXPECT_EQ(out[0], out[1]);
}
