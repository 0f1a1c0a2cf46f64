#include "russell/coefficient.hpp"

namespace russell {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

ModP ModP::from_signed(std::int64_t v) {
  auto r = v % static_cast<std::int64_t>(kModulus);
  if (r < 0) r += static_cast<std::int64_t>(kModulus);
  return ModP(static_cast<std::uint64_t>(r));
}

ModP ModP::from_rational(const Rational& q) {
  mpz_class p(static_cast<unsigned long>(kModulus));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw DivisionByZero("denominator divisible by p");
  return ModP(num.get_ui()) / ModP(den.get_ui());
}

ModP ModP::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero residue");
  return pow(static_cast<long>(kModulus - 2));
}

ModP ModP::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  ModP base = *this;
  ModP acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string to_string(ModP a) { return std::to_string(a.value()); }

}  // namespace russell
