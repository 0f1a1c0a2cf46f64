#pragma once

// Sparse multivariate polynomials with exact rational coefficients over an
// explicit, ordered variable context. Variables flagged Laurent may carry
// negative exponents.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "russell/coefficient.hpp"

namespace russell {

/// Algebraic precondition failures: context mismatch, negative exponent on a
/// polynomial variable, inversion of a non-unit.
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Variable {
  std::string name;
  bool laurent = false;

  friend bool operator==(const Variable&, const Variable&) = default;
};

class VarContext;
using ContextPtr = std::shared_ptr<const VarContext>;

/// Ordered list of variables. Two contexts are interchangeable iff they
/// compare equal (same names, same order, same Laurent flags).
class VarContext {
 public:
  explicit VarContext(std::vector<Variable> vars);

  static ContextPtr make(std::vector<Variable> vars);

  std::size_t size() const { return vars_.size(); }
  const Variable& operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& variables() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  /// This context followed by every variable of `extra` not already present.
  ContextPtr extended(const std::vector<Variable>& extra) const;

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.vars_ == b.vars_;
  }

 private:
  std::vector<Variable> vars_;
};

bool same_context(const ContextPtr& a, const ContextPtr& b);

/// Exponent vector, one slot per context variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  int& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total_degree() const;
  bool is_one() const;
  /// Componentwise `this >= other`, i.e. `other` divides `this` in the
  /// polynomial sense.
  bool divisible_by(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<int> exps_;
};

/// Canonical storage and printing order: lexicographic, largest first, with
/// variable precedence given by the context order.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, LexGreater>;

  explicit Polynomial(ContextPtr ctx);
  Polynomial(ContextPtr ctx, TermMap terms);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::string_view name);
  static Polynomial term(ContextPtr ctx, Monomial m, const Rational& c);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  /// True iff the polynomial is a single term in Laurent variables only, so
  /// it has a multiplicative inverse.
  bool is_unit_monomial() const;
  Polynomial inverse_unit() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(Polynomial f, const Rational& c) { return f *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial f) { return f *= c; }

  /// Integer power; negative powers require a unit monomial.
  Polynomial pow(int e) const;

  /// Adds c*m in place; zero results are dropped.
  void add_term(const Monomial& m, const Rational& c);

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void check_exponents(const Monomial& m) const;

  ContextPtr ctx_;
  TermMap terms_;
};

/// Variable name -> image polynomial. All images must share one context.
using Bindings = std::map<std::string, Polynomial, std::less<>>;

/// Simultaneous substitution into `target`. A variable of f that is not bound
/// maps to the same-named variable of `target`; if there is none, the call
/// fails. Variables occurring with negative exponent must map to unit
/// monomials.
Polynomial substitute(const Polynomial& f, const Bindings& bindings,
                      const ContextPtr& target);

/// Substitution where the target context is that of the bound images.
Polynomial substitute(const Polynomial& f, const Bindings& bindings);

/// Re-expresses f over another context containing all of its variables.
Polynomial embed(const Polynomial& f, const ContextPtr& target);

Polynomial partial(const Polynomial& f, std::string_view var);

template <class F>
using Point = std::map<std::string, F, std::less<>>;

/// Exact evaluation; throws DivisionByZero when a variable raised to a
/// negative power is bound to zero.
template <class F>
F eval(const Polynomial& f, const Point<F>& point) {
  const auto& ctx = *f.context();
  std::vector<const F*> values(ctx.size(), nullptr);
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    auto it = point.find(ctx[i].name);
    values[i] = it == point.end() ? nullptr : &it->second;
  }
  F acc = FieldTraits<F>::from_rational(Rational(0));
  for (const auto& [m, c] : f.terms()) {
    F term = FieldTraits<F>::from_rational(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      int e = m[i];
      if (e == 0) continue;
      if (values[i] == nullptr)
        throw AlgebraError("eval: variable '" + ctx[i].name + "' is unbound");
      F base = *values[i];
      if (e < 0) {
        if (FieldTraits<F>::is_zero(base))
          throw DivisionByZero("eval: '" + ctx[i].name + "' bound to zero");
        base = FieldTraits<F>::inverse(base);
        e = -e;
      }
      for (int k = 0; k < e; ++k) term = term * base;
    }
    acc = acc + term;
  }
  return acc;
}

/// Canonical text: terms in storage order joined by " + ", each written as
/// coefficient followed by "*var^e" factors, e.g. "-1*x + -1*z^3 + -1*t^2".
std::string to_string(const Polynomial& f);

}  // namespace russell
