#include "russell/random.hpp"

namespace russell {

Rational random_coefficient(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  long n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

Polynomial random_polynomial(const ContextPtr& ctx, std::mt19937_64& rng,
                             const RandomPolyOptions& opts) {
  std::uniform_int_distribution<int> nterms(1, opts.max_terms);
  std::uniform_int_distribution<int> degree(0, opts.max_total_degree);
  std::uniform_int_distribution<std::size_t> slot(0, ctx->size() - 1);
  std::uniform_int_distribution<int> depth(0, opts.max_laurent_depth);
  Polynomial f(ctx);
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m(ctx->size());
    if (ctx->size() > 0) {
      int d = degree(rng);
      for (int i = 0; i < d; ++i) m[slot(rng)] += 1;
      for (std::size_t i = 0; i < ctx->size(); ++i)
        if ((*ctx)[i].laurent) m[i] -= depth(rng);
    }
    f.add_term(m, random_coefficient(rng, opts.coefficient_bound));
  }
  return f;
}

}  // namespace russell
