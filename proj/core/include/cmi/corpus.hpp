#pragma once

// Random complete m-primary ideals for property tests, the acceptance suite
// and `cmi verify --random`.

#include <random>

#include "cmi/factorization.hpp"
#include "cmi/monomial_ideal.hpp"

namespace cmi {

/// Closure of (x^a, y^b) plus up to `extra` random interior generators, with
/// a in [1, max_a] and b in [1, max_b]. The result has a_I = a, b_I = b.
MonomialIdeal random_complete_ideal(std::mt19937_64& rng, Int max_a, Int max_b, int extra = 4);

/// Random complete-intersection factorization whose exponents sum to at
/// most max_a horizontally and max_b vertically.
CIFactorization random_ci_factorization(std::mt19937_64& rng, Int max_a, Int max_b, int max_factors = 4);

}  // namespace cmi
