#pragma once

#include <random>

#include "russell/poly.hpp"

namespace russell {

struct RandomPolyOptions {
  int max_total_degree = 6;
  int max_terms = 6;
  /// Bound on |numerator| and denominator of every coefficient.
  long coefficient_bound = 10;
  /// Largest negative exponent drawn for Laurent variables.
  int max_laurent_depth = 0;
};

/// Seeded random polynomial: up to max_terms terms of total degree at most
/// max_total_degree; may be zero only if every drawn term cancels.
Polynomial random_polynomial(const ContextPtr& ctx, std::mt19937_64& rng,
                             const RandomPolyOptions& opts = {});

Rational random_coefficient(std::mt19937_64& rng, long bound);

}  // namespace russell
