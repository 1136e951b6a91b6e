#include "support.hpp"

#include <algorithm>

namespace hilbtan::testing {

std::vector<std::string> names(const std::string& stem, std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

RingPtr ring(std::uint64_t p, std::size_t nx, std::size_t ny) {
  return PolyRing::make(FieldSpec::from_characteristic(p), names("x", nx), names("y", ny));
}

Scalar random_scalar(const FieldSpec& F, Rng& rng, bool nonzero) {
  for (;;) {
    long long v;
    if (F.is_prime())
      v = std::uniform_int_distribution<long long>(0, F.characteristic() - 1)(rng);
    else
      v = std::uniform_int_distribution<long long>(-7, 7)(rng);
    Scalar s = F.from_int(v);
    if (!nonzero || !F.is_zero(s)) return s;
  }
}

Polynomial random_poly(const RingPtr& R, Rng& rng, std::size_t terms, int maxdeg) {
  std::vector<Term> ts;
  std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  for (std::size_t k = 0; k < terms; ++k) {
    Monomial m(R->nvars());
    int d = deg(rng);
    for (int i = 0; i < d; ++i) m = m * Monomial::variable(R->nvars(), var(rng));
    ts.push_back({m, random_scalar(R->field(), rng, true)});
  }
  return Polynomial::from_terms(R, std::move(ts));
}

Polynomial random_bihomogeneous(const RingPtr& R, Rng& rng, Bidegree d, std::size_t terms) {
  auto mons = monomials_of_bidegree(*R, d);
  std::vector<Term> ts;
  if (mons.empty()) return Polynomial(R);
  std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
  for (std::size_t k = 0; k < terms; ++k) ts.push_back({mons[pick(rng)], random_scalar(R->field(), rng, true)});
  return Polynomial::from_terms(R, std::move(ts));
}

IdealHandle random_artinian(const RingPtr& R, Rng& rng, std::uint64_t max_colength) {
  for (;;) {
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> pw(1, 4);
    for (std::size_t v = 0; v < R->nvars(); ++v) gens.push_back(Polynomial::variable(R, v).pow(pw(rng)));
    int extra = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int k = 0; k < extra; ++k) {
      Bidegree d{std::uniform_int_distribution<int>(0, 3)(rng), R->bigraded() ? std::uniform_int_distribution<int>(0, 2)(rng) : 0};
      if (d.total() == 0) d.x = 1;
      auto f = random_bihomogeneous(R, rng, d, std::uniform_int_distribution<std::size_t>(1, 3)(rng));
      if (!f.is_zero()) gens.push_back(f);
    }
    IdealHandle I(R, std::move(gens));
    auto c = colength(I);
    if (c && *c >= 2 && *c <= max_colength) return I;
  }
}

}  // namespace hilbtan::testing
