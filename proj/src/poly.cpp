#include "russell/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace russell {

VarContext::VarContext(std::vector<Variable> vars) : vars_(std::move(vars)) {
  std::unordered_set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw AlgebraError("empty variable name");
    if (!seen.insert(v.name).second)
      throw AlgebraError("duplicate variable '" + v.name + "'");
  }
}

ContextPtr VarContext::make(std::vector<Variable> vars) {
  return std::make_shared<const VarContext>(std::move(vars));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t VarContext::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw AlgebraError("unknown variable '" + std::string(name) + "'");
}

ContextPtr VarContext::extended(const std::vector<Variable>& extra) const {
  std::vector<Variable> vars = vars_;
  for (const auto& v : extra) {
    if (auto i = index_of(v.name)) {
      if (vars_[*i].laurent != v.laurent)
        throw AlgebraError("variable '" + v.name + "' redeclared with different Laurent flag");
      continue;
    }
    vars.push_back(v);
  }
  return make(std::move(vars));
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

int Monomial::total_degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] < other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw AlgebraError("null variable context");
}

Polynomial::Polynomial(ContextPtr ctx, TermMap terms) : Polynomial(std::move(ctx)) {
  for (auto& [m, c] : terms) add_term(m, c);
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  Polynomial p(std::move(ctx));
  p.add_term(Monomial(p.ctx_->size()), c);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  Polynomial p(std::move(ctx));
  Monomial m(p.ctx_->size());
  m[p.ctx_->require(name)] = 1;
  p.add_term(m, Rational(1));
  return p;
}

Polynomial Polynomial::term(ContextPtr ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_exponents(const Monomial& m) const {
  if (m.size() != ctx_->size()) throw AlgebraError("monomial arity does not match context");
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] < 0 && !(*ctx_)[i].laurent)
      throw AlgebraError("negative exponent on non-Laurent variable '" + (*ctx_)[i].name + "'");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  check_exponents(m);
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool Polynomial::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const auto& m = terms_.begin()->first;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0 && !(*ctx_)[i].laurent) return false;
  return true;
}

Polynomial Polynomial::inverse_unit() const {
  if (!is_unit_monomial())
    throw AlgebraError("cannot invert non-unit '" + to_string(*this) + "'");
  const auto& [m, c] = *terms_.begin();
  return term(ctx_, Monomial(m.size()) / m, Rational(1) / c);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  if (!same_context(ctx_, g.ctx_)) throw AlgebraError("add: mismatched variable contexts");
  for (const auto& [m, c] : g.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  if (!same_context(ctx_, g.ctx_)) throw AlgebraError("sub: mismatched variable contexts");
  for (const auto& [m, c] : g.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  if (!same_context(f.ctx_, g.ctx_)) throw AlgebraError("mul: mismatched variable contexts");
  Polynomial r(f.ctx_);
  for (const auto& [mf, cf] : f.terms_)
    for (const auto& [mg, cg] : g.terms_) r.add_term(mf * mg, cf * cg);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) return inverse_unit().pow(-e);
  Polynomial acc = constant(ctx_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return same_context(f.ctx_, g.ctx_) && f.terms_ == g.terms_;
}

namespace {

class PowerCache {
 public:
  explicit PowerCache(Polynomial base) : base_(std::move(base)) {}

  const Polynomial& get(int e) {
    if (e < 0) {
      if (!inverse_) inverse_ = base_.inverse_unit();
      return power(neg_, *inverse_, -e);
    }
    return power(pos_, base_, e);
  }

 private:
  static const Polynomial& power(std::vector<Polynomial>& table, const Polynomial& base, int e) {
    if (table.empty()) table.push_back(Polynomial::constant(base.context(), Rational(1)));
    while (static_cast<int>(table.size()) <= e) table.push_back(table.back() * base);
    return table[static_cast<std::size_t>(e)];
  }

  Polynomial base_;
  std::optional<Polynomial> inverse_;
  std::vector<Polynomial> pos_;
  std::vector<Polynomial> neg_;
};

}  // namespace

Polynomial substitute(const Polynomial& f, const Bindings& bindings, const ContextPtr& target) {
  const auto& src = *f.context();
  std::vector<PowerCache> images;
  images.reserve(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& name = src[i].name;
    if (auto it = bindings.find(name); it != bindings.end()) {
      if (!same_context(it->second.context(), target))
        throw AlgebraError("substitute: image of '" + name + "' lives in a different context");
      images.emplace_back(it->second);
    } else if (target->index_of(name)) {
      images.emplace_back(Polynomial::variable(target, name));
    } else {
      // Only a problem if the variable actually occurs; use a placeholder.
      images.emplace_back(Polynomial(target));
    }
  }
  std::vector<bool> occurs(src.size(), false);
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) occurs[i] = true;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (occurs[i] && !bindings.contains(src[i].name) && !target->index_of(src[i].name))
      throw AlgebraError("substitute: no binding for variable '" + src[i].name + "'");

  Polynomial result(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      term = term * images[i].get(m[i]);
    }
    result += term;
  }
  return result;
}

Polynomial substitute(const Polynomial& f, const Bindings& bindings) {
  if (bindings.empty()) return f;
  return substitute(f, bindings, bindings.begin()->second.context());
}

Polynomial embed(const Polynomial& f, const ContextPtr& target) {
  if (same_context(f.context(), target)) return f;
  const auto& src = *f.context();
  std::vector<std::optional<std::size_t>> slot(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) slot[i] = target->index_of(src[i].name);
  // Negative exponents landing on a non-Laurent slot are rejected by add_term.
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial out(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!slot[i]) throw AlgebraError("embed: variable '" + src[i].name + "' missing from target");
      out[*slot[i]] = m[i];
    }
    r.add_term(out, c);
  }
  return r;
}

Polynomial partial(const Polynomial& f, std::string_view var) {
  std::size_t i = f.context()->require(var);
  Polynomial r(f.context());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const auto& ctx = *f.context();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out << '*' << ctx[i].name;
      if (m[i] != 1) out << '^' << m[i];
    }
  }
  return out.str();
}

}  // namespace russell
