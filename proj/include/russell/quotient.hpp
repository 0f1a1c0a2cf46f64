#pragma once

// Quotients of polynomial rings by a single relation. A single polynomial is
// a Groebner basis of the principal ideal it generates, so rewriting with
// LM(R) -> LM(R) - R/lc(R) until no monomial is divisible by LM(R) yields a
// canonical representative, independently of the order in which reducible
// terms are picked.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "russell/poly.hpp"

namespace russell {

enum class MonomialOrder {
  /// Total degree over the ordered variables, ties broken lexicographically.
  grlex,
  lex,
};

enum class ReductionStrategy {
  /// Always rewrite the largest reducible term under the ring order.
  order_maximal_first,
  /// Rewrite the first reducible term in storage (lex) order.
  leftmost_first,
};

class QuotientRing;
using RingPtr = std::shared_ptr<const QuotientRing>;

class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  /// `ordered_vars` leading variables of the context take part in the
  /// monomial order; the remaining ones (formal parameters) only break ties.
  /// The relation must not involve parameters.
  QuotientRing(std::string name, ContextPtr ctx, Polynomial relation, MonomialOrder order,
               std::size_t ordered_vars);

  static RingPtr make(std::string name, ContextPtr ctx, Polynomial relation,
                      MonomialOrder order);

  const std::string& name() const { return name_; }
  const ContextPtr& context() const { return ctx_; }
  const Polynomial& relation() const { return relation_; }
  MonomialOrder order() const { return order_; }
  std::size_t base_size() const { return ordered_vars_; }
  const Monomial& leading_monomial() const { return lead_; }
  /// LM(R) - R/lc(R), the replacement for one occurrence of LM(R).
  const Polynomial& rewrite_tail() const { return tail_; }

  /// Names of the ring generators (excluding formal parameters).
  std::vector<std::string> generators() const;
  std::vector<Variable> parameters() const;

  bool greater(const Monomial& a, const Monomial& b) const;
  bool is_normal(const Monomial& m) const { return !m.divisible_by(lead_); }

  /// This ring with extra formal parameters appended to its context.
  RingPtr with_parameters(const std::vector<Variable>& params) const;
  /// The ring underlying this one (parameters dropped).
  RingPtr base() const;
  bool same_base(const QuotientRing& other) const;

  Polynomial reduce(Polynomial f,
                    ReductionStrategy strategy = ReductionStrategy::order_maximal_first) const;

  friend bool operator==(const QuotientRing& a, const QuotientRing& b);

 private:
  std::string name_;
  ContextPtr ctx_;
  Polynomial relation_;
  MonomialOrder order_;
  std::size_t ordered_vars_;
  Monomial lead_;
  Polynomial tail_;
  std::string base_name_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

/// Element of a quotient ring, stored as its normal form.
class RingElement {
 public:
  RingElement(RingPtr ring, const Polynomial& f);

  const RingPtr& ring() const { return ring_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  RingElement operator-() const;
  friend bool operator==(const RingElement& a, const RingElement& b);

 private:
  RingPtr ring_;
  Polynomial poly_;
};

std::string to_string(const RingElement& a);

/// Normal form. A polynomial over a different context is first embedded by
/// variable name.
RingElement nf(const RingPtr& ring, const Polynomial& f);
RingElement nf(const RingPtr& ring, std::string_view expr);

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
bool equal(const RingElement& a, const RingElement& b);

RingElement generator(const RingPtr& ring, std::string_view name);
RingElement ring_constant(const RingPtr& ring, const Rational& c);

// Built-in rings.
ContextPtr xyzt_context();
RingPtr ring_a();     // Q[x,y,z,t]/(x + x^2 y + z^3 + t^2), grlex x>y>z>t
RingPtr ring_b();     // Q[x,y,z,t]/(x^2 y + z^3 + t^2), grlex x>y>z>t
RingPtr ring_neil();  // Q[z,t]/(z^3 + t^2), grlex z>t
RingPtr ring_v();     // Q[x,z,t]/(x^2 + z^3 + t^2), lex x>z>t
/// Q[vars]/(z^3 + t^2) for a variable list containing z and t.
RingPtr neil_over(const std::vector<std::string>& vars);
/// "A", "B", "Neil", "V"; throws std::invalid_argument otherwise.
RingPtr ring_by_name(std::string_view name);

enum class Surface { X, W };

/// Point on X (x + x^2 y + z^3 + t^2 = 0) or W (x^2 y + z^3 + t^2 = 0) with
/// the given x != 0, z, t; y is solved for.
template <class F>
Point<F> point_from_draw(Surface s, const F& x, const F& z, const F& t) {
  F zt = z * z * z + t * t;
  F num = s == Surface::X ? x + zt : zt;
  F y = -num / (x * x);
  return Point<F>{{"x", x}, {"y", y}, {"z", z}, {"t", t}};
}

/// Seeded exact rational point (numerators and denominators bounded by 100).
Point<Rational> random_point(Surface s, std::uint64_t seed);
Point<Rational> random_point(Surface s, std::mt19937_64& rng);
Point<ModP> random_point_mod_p(Surface s, std::mt19937_64& rng);

enum class OracleField { rational, mod_p };

/// Evaluates a - b at `samples` random points of X (ring A) or W (ring B).
/// False at the first nonzero value.
bool oracle_equal(const RingElement& a, const RingElement& b, int samples, std::uint64_t seed,
                  OracleField field = OracleField::rational);

}  // namespace russell
