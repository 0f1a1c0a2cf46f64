#pragma once

// The weight filtration on A = O(X) and its associated graded algebra B.
//
// Weights are w(x) = -1, w(y) = 2, w(z) = w(t) = 0 (formal parameters weigh
// 0). The normal monomials of A are x^a y^b z^c t^d with a <= 1 or b = 0;
// they form a weight-graded basis, so the filtration degree of an element is
// the largest weight in the support of its normal form. The same monomials
// are the normal monomials of B, and rewriting x^2 y in A differs from
// rewriting it in B only by terms of strictly lower weight; that is what
// makes gr: A -> B multiplicative.

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "russell/quotient.hpp"

namespace russell {

/// Filtration degree: an integer, or -infinity for the zero element.
class Degree {
 public:
  constexpr Degree(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !value_.has_value(); }
  /// Precondition: !is_neg_inf().
  int value() const { return value_.value(); }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf())
      return static_cast<int>(!a.is_neg_inf()) <=> static_cast<int>(!b.is_neg_inf());
    return *a.value_ <=> *b.value_;
  }
  friend Degree operator+(const Degree& a, const Degree& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    return Degree(*a.value_ + *b.value_);
  }

 private:
  constexpr Degree() = default;
  std::optional<int> value_;
};

std::string to_string(const Degree& d);

int variable_weight(const std::string& name);
/// Weight of a monomial over `ctx`.
int weight(const Monomial& m, const VarContext& ctx);

/// Largest monomial weight of the normal form; -inf for zero. Works for any
/// ring over the x, y, z, t variables (A, B, and parameter extensions).
Degree deg(const RingElement& a);

/// Divisorial degree: eliminate y via y = -x^-1 - x^-2 (z^3 + t^2) with x
/// Laurent and return minus the lowest x-exponent. Element of A only.
Degree deg_laurent_oracle(const RingElement& a);

/// Top-weight part of a nonzero element of A, as an element of B.
RingElement gr(const RingElement& a);

struct Component {
  int weight;
  RingElement part;
};

/// Partition of the normal form by weight, ascending; empty for zero.
std::vector<Component> homogeneous_components(const RingElement& b);
/// Weight-n part (zero if absent).
RingElement component(const RingElement& b, int n);

bool is_homogeneous(const RingElement& b, int n);
/// Common weight of all support monomials; nullopt for zero or mixed weight.
std::optional<int> homogeneous_degree(const RingElement& b);

}  // namespace russell
