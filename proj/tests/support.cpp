#include "support.hpp"

#include <stdexcept>

namespace russell::testing {

Rational evaluate(const Polynomial& f, const std::map<std::string, Rational, std::less<>>& at) {
  const auto& ctx = *f.context();
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = at.find(ctx[i].name);
      if (it == at.end()) throw std::out_of_range("unbound variable " + ctx[i].name);
      int e = m[i] < 0 ? -m[i] : m[i];
      Rational p = 1;
      for (int k = 0; k < e; ++k) p *= it->second;
      term *= m[i] < 0 ? Rational(1 / p) : p;
    }
    sum += term;
  }
  return sum;
}

namespace {

// Coefficients in Q[z,t], keyed by x-exponent.
using ZT = std::map<std::pair<int, int>, Rational>;
using Series = std::map<int, ZT>;

void add_into(ZT& acc, const ZT& f, const Rational& scale, int dz, int dt) {
  for (const auto& [m, c] : f) {
    auto& slot = acc[{m.first + dz, m.second + dt}];
    slot += scale * c;
    if (slot == 0) acc.erase({m.first + dz, m.second + dt});
  }
}

ZT neil_power(int k) {
  // (z^3 + t^2)^k
  ZT out{{{0, 0}, 1}};
  for (int i = 0; i < k; ++i) {
    ZT next;
    add_into(next, out, 1, 3, 0);
    add_into(next, out, 1, 0, 2);
    out = std::move(next);
  }
  return out;
}

Rational binomial(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::optional<int> pole_order(const Polynomial& f) {
  const auto& ctx = *f.context();
  std::size_t ix = ctx.require("x"), iy = ctx.require("y"), iz = ctx.require("z"),
              it = ctx.require("t");
  Series s;
  for (const auto& [m, c] : f.terms()) {
    int a = m[ix], b = m[iy];
    // x^a y^b = (-1)^b x^(a-2b) (x + N)^b = (-1)^b sum_k C(b,k) x^(a-2b+k) N^(b-k)
    Rational sign = (b % 2 == 0) ? 1 : -1;
    for (int k = 0; k <= b; ++k) {
      ZT single;
      add_into(single, neil_power(b - k), 1, m[iz], m[it]);
      auto& slot = s[a - 2 * b + k];
      add_into(slot, single, sign * c * binomial(b, k), 0, 0);
    }
  }
  for (const auto& [e, coeff] : s)
    if (!coeff.empty()) return -e;
  return std::nullopt;
}

std::map<std::string, Rational, std::less<>> point_on(bool graded, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-30, 30), den(1, 30);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  Rational x = 0;
  while (x == 0) x = draw();
  x.canonicalize();
  Rational z = draw(), t = draw();
  z.canonicalize();
  t.canonicalize();
  Rational n = z * z * z + t * t + (graded ? Rational(0) : x);
  return {{"x", x}, {"y", -n / (x * x)}, {"z", z}, {"t", t}};
}

int order_by_iteration(const Derivation& d, const std::string& gen, int cap) {
  RingElement cur = generator(d.ring(), gen);
  for (int k = 1; k <= cap; ++k) {
    cur = apply(d, cur);
    if (cur.is_zero()) return k;
  }
  return -1;
}

}  // namespace russell::testing
