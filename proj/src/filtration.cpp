#include "russell/filtration.hpp"

#include <algorithm>
#include <map>

#include "russell/parser.hpp"

namespace russell {

std::string to_string(const Degree& d) {
  return d.is_neg_inf() ? "-inf" : std::to_string(d.value());
}

int variable_weight(const std::string& name) {
  if (name == "x") return -1;
  if (name == "y") return 2;
  return 0;
}

int weight(const Monomial& m, const VarContext& ctx) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += m[i] * variable_weight(ctx[i].name);
  return w;
}

Degree deg(const RingElement& a) {
  if (a.is_zero()) return Degree::neg_inf();
  const auto& ctx = *a.poly().context();
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : a.poly().terms()) {
    int w = weight(m, ctx);
    if (first || w > best) best = w;
    first = false;
  }
  return best;
}

Degree deg_laurent_oracle(const RingElement& a) {
  if (!same_ring(a.ring(), ring_a()))
    throw AlgebraError("deg_laurent_oracle: element of ring A expected");
  if (a.is_zero()) return Degree::neg_inf();
  static const ContextPtr laurent = VarContext::make({{"x", true}, {"z"}, {"t"}});
  static const Polynomial y_image = parse("-x^-1 - x^-2*z^3 - x^-2*t^2", laurent);
  Polynomial eliminated = substitute(a.poly(), Bindings{{"y", y_image}}, laurent);
  if (eliminated.is_zero()) return Degree::neg_inf();
  int lowest = 0;
  bool first = true;
  for (const auto& [m, c] : eliminated.terms()) {
    if (first || m[0] < lowest) lowest = m[0];
    first = false;
  }
  return -lowest;
}

RingElement component(const RingElement& b, int n) {
  const auto& ctx = b.poly().context();
  Polynomial part(ctx);
  for (const auto& [m, c] : b.poly().terms())
    if (weight(m, *ctx) == n) part.add_term(m, c);
  return RingElement(b.ring(), part);
}

RingElement gr(const RingElement& a) {
  if (!a.ring()->same_base(*ring_a())) throw AlgebraError("gr: element of ring A expected");
  if (a.is_zero()) throw AlgebraError("gr: zero has no leading form");
  Degree d = deg(a);
  const auto& ctx = a.poly().context();
  Polynomial top(ctx);
  for (const auto& [m, c] : a.poly().terms())
    if (weight(m, *ctx) == d.value()) top.add_term(m, c);
  return RingElement(ring_b()->with_parameters(a.ring()->parameters()), top);
}

std::vector<Component> homogeneous_components(const RingElement& b) {
  const auto& ctx = b.poly().context();
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : b.poly().terms()) {
    int w = weight(m, *ctx);
    parts.try_emplace(w, ctx).first->second.add_term(m, c);
  }
  std::vector<Component> out;
  for (auto& [w, p] : parts) out.push_back({w, RingElement(b.ring(), p)});
  return out;
}

bool is_homogeneous(const RingElement& b, int n) {
  const auto& ctx = *b.poly().context();
  return std::all_of(b.poly().terms().begin(), b.poly().terms().end(),
                     [&](const auto& term) { return weight(term.first, ctx) == n; });
}

std::optional<int> homogeneous_degree(const RingElement& b) {
  if (b.is_zero()) return std::nullopt;
  int w = weight(b.poly().terms().begin()->first, *b.poly().context());
  if (!is_homogeneous(b, w)) return std::nullopt;
  return w;
}

}  // namespace russell
