#pragma once

#include <random>
#include <string>
#include <vector>

#include "hilbtan/ideal.hpp"

namespace hilbtan::testing {

using Rng = std::mt19937_64;

std::vector<std::string> names(const std::string& stem, std::size_t n);
RingPtr ring(std::uint64_t p, std::size_t nx, std::size_t ny = 0);

Scalar random_scalar(const FieldSpec& F, Rng& rng, bool nonzero = false);
/// Up to `terms` random terms of total degree <= maxdeg.
Polynomial random_poly(const RingPtr& R, Rng& rng, std::size_t terms, int maxdeg);
/// Random combination of monomials of bidegree d (total degree d.x in a
/// singly graded ring).
Polynomial random_bihomogeneous(const RingPtr& R, Rng& rng, Bidegree d, std::size_t terms);

/// Bihomogeneous ideal of finite colength <= max_colength: pure powers of
/// every variable plus a few random bihomogeneous forms.
IdealHandle random_artinian(const RingPtr& R, Rng& rng, std::uint64_t max_colength);

}  // namespace hilbtan::testing
