#pragma once

// Coefficient fields: exact rationals (GMP) and residues modulo a fixed prime.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace russell {

using Rational = mpq_class;

/// Raised on division by zero in either coefficient field.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Rational make_rational(long num, long den = 1);

std::string to_string(const Rational& q);

/// Residue class modulo the Mersenne prime 2^31 - 1.
///
/// Only used to speed up randomized identity testing; every exact result in
/// the library is computed over the rationals.
class ModP {
 public:
  static constexpr std::uint64_t kModulus = 2147483647ULL;

  constexpr ModP() = default;
  constexpr explicit ModP(std::uint64_t v) : value_(v % kModulus) {}
  static ModP from_signed(std::int64_t v);
  /// Reduces num/den; throws DivisionByZero when p divides the denominator.
  static ModP from_rational(const Rational& q);

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_zero() const { return value_ == 0; }

  ModP inverse() const;
  ModP pow(long e) const;

  friend constexpr ModP operator+(ModP a, ModP b) {
    return ModP((a.value_ + b.value_) % kModulus);
  }
  friend constexpr ModP operator-(ModP a, ModP b) {
    return ModP((a.value_ + kModulus - b.value_) % kModulus);
  }
  friend constexpr ModP operator-(ModP a) { return ModP(0) - a; }
  friend constexpr ModP operator*(ModP a, ModP b) {
    return ModP((a.value_ * b.value_) % kModulus);
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  ModP& operator+=(ModP b) { return *this = *this + b; }
  ModP& operator*=(ModP b) { return *this = *this * b; }
  friend constexpr bool operator==(ModP a, ModP b) = default;

 private:
  std::uint64_t value_ = 0;
};

std::string to_string(ModP a);

/// Field adaptors used by generic evaluation.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static Rational one() { return Rational(1); }
  static Rational inverse(const Rational& a) {
    if (sgn(a) == 0) throw DivisionByZero("inverse of zero rational");
    return Rational(1) / a;
  }
};

template <>
struct FieldTraits<ModP> {
  static ModP from_rational(const Rational& q) { return ModP::from_rational(q); }
  static bool is_zero(ModP a) { return a.is_zero(); }
  static ModP one() { return ModP(1); }
  static ModP inverse(ModP a) { return a.inverse(); }
};

}  // namespace russell
