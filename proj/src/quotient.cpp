#include "russell/quotient.hpp"

#include <stdexcept>

#include "russell/parser.hpp"

namespace russell {

namespace {

Monomial leading_of(const Polynomial& f, const QuotientRing& ring) {
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (best == nullptr || ring.greater(m, *best)) best = &m;
  return *best;
}

}  // namespace

QuotientRing::QuotientRing(std::string name, ContextPtr ctx, Polynomial relation,
                           MonomialOrder order, std::size_t ordered_vars)
    : name_(std::move(name)),
      ctx_(std::move(ctx)),
      relation_(embed(relation, ctx_)),
      order_(order),
      ordered_vars_(ordered_vars),
      tail_(ctx_),
      base_name_(name_) {
  if (relation_.is_zero()) throw AlgebraError("quotient by the zero polynomial");
  if (ordered_vars_ > ctx_->size()) throw AlgebraError("ordered variable count exceeds context");
  for (const auto& [m, c] : relation_.terms())
    for (std::size_t i = ordered_vars_; i < m.size(); ++i)
      if (m[i] != 0) throw AlgebraError("relation must not involve formal parameters");
  for (const auto& [m, c] : relation_.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < 0) throw AlgebraError("relation must be a polynomial");
  lead_ = leading_of(relation_, *this);
  if (lead_.is_one()) throw AlgebraError("relation is a unit; quotient ring is zero");
  Rational lc = relation_.coefficient(lead_);
  tail_ = Polynomial::term(ctx_, lead_, Rational(1)) - relation_ * (Rational(1) / lc);
}

RingPtr QuotientRing::make(std::string name, ContextPtr ctx, Polynomial relation,
                           MonomialOrder order) {
  std::size_t n = ctx->size();
  return std::make_shared<const QuotientRing>(std::move(name), std::move(ctx),
                                              std::move(relation), order, n);
}

std::vector<std::string> QuotientRing::generators() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ordered_vars_; ++i) out.push_back((*ctx_)[i].name);
  return out;
}

std::vector<Variable> QuotientRing::parameters() const {
  return {ctx_->variables().begin() + static_cast<std::ptrdiff_t>(ordered_vars_),
          ctx_->variables().end()};
}

bool QuotientRing::greater(const Monomial& a, const Monomial& b) const {
  if (order_ == MonomialOrder::grlex) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < ordered_vars_; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

RingPtr QuotientRing::with_parameters(const std::vector<Variable>& params) const {
  ContextPtr ctx = ctx_->extended(params);
  if (ctx->size() == ctx_->size()) return shared_from_this();
  std::string name = base_name_ + "[";
  for (std::size_t i = ordered_vars_; i < ctx->size(); ++i) {
    if (i > ordered_vars_) name += ",";
    name += (*ctx)[i].name;
  }
  name += "]";
  auto ring = std::make_shared<QuotientRing>(name, ctx, relation_, order_, ordered_vars_);
  ring->base_name_ = base_name_;
  return ring;
}

RingPtr QuotientRing::base() const {
  if (ordered_vars_ == ctx_->size()) return shared_from_this();
  std::vector<Variable> vars(ctx_->variables().begin(),
                             ctx_->variables().begin() + static_cast<std::ptrdiff_t>(ordered_vars_));
  auto base_ctx = VarContext::make(vars);
  return std::make_shared<const QuotientRing>(base_name_, base_ctx, embed(relation_, base_ctx),
                                              order_, ordered_vars_);
}

bool QuotientRing::same_base(const QuotientRing& other) const {
  return *base() == *other.base();
}

bool operator==(const QuotientRing& a, const QuotientRing& b) {
  return a.ordered_vars_ == b.ordered_vars_ && a.order_ == b.order_ && *a.ctx_ == *b.ctx_ &&
         a.relation_ == b.relation_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

Polynomial QuotientRing::reduce(Polynomial f, ReductionStrategy strategy) const {
  if (!same_context(f.context(), ctx_)) f = embed(f, ctx_);
  for (;;) {
    const Monomial* pick = nullptr;
    for (const auto& [m, c] : f.terms()) {
      if (!m.divisible_by(lead_)) continue;
      if (strategy == ReductionStrategy::leftmost_first) {
        pick = &m;
        break;
      }
      if (pick == nullptr || greater(m, *pick)) pick = &m;
    }
    if (pick == nullptr) return f;
    Monomial m = *pick;
    Rational c = f.coefficient(m);
    Monomial quotient = m / lead_;
    f.add_term(m, -c);
    for (const auto& [tm, tc] : tail_.terms()) f.add_term(quotient * tm, c * tc);
  }
}

RingElement::RingElement(RingPtr ring, const Polynomial& f)
    : ring_(std::move(ring)), poly_(ring_->reduce(f)) {}

namespace {

void require_same_ring(const RingElement& a, const RingElement& b, const char* op) {
  if (!same_ring(a.ring(), b.ring()))
    throw AlgebraError(std::string(op) + ": ring mismatch (" + a.ring()->name() + " vs " +
                       b.ring()->name() + ")");
}

}  // namespace

RingElement operator+(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "ring_add");
  return RingElement(a.ring_, a.poly_ + b.poly_);
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "ring_sub");
  return RingElement(a.ring_, a.poly_ - b.poly_);
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "ring_mul");
  return RingElement(a.ring_, a.poly_ * b.poly_);
}

RingElement RingElement::operator-() const { return RingElement(ring_, -poly_); }

bool operator==(const RingElement& a, const RingElement& b) {
  require_same_ring(a, b, "equal");
  return a.poly_ == b.poly_;
}

std::string to_string(const RingElement& a) { return to_string(a.poly()); }

RingElement nf(const RingPtr& ring, const Polynomial& f) { return RingElement(ring, f); }

RingElement nf(const RingPtr& ring, std::string_view expr) {
  return RingElement(ring, parse(expr, ring->context()));
}

RingElement ring_add(const RingElement& a, const RingElement& b) { return a + b; }
RingElement ring_mul(const RingElement& a, const RingElement& b) { return a * b; }
bool equal(const RingElement& a, const RingElement& b) { return a == b; }

RingElement generator(const RingPtr& ring, std::string_view name) {
  return RingElement(ring, Polynomial::variable(ring->context(), name));
}

RingElement ring_constant(const RingPtr& ring, const Rational& c) {
  return RingElement(ring, Polynomial::constant(ring->context(), c));
}

ContextPtr xyzt_context() {
  static const ContextPtr ctx = VarContext::make({{"x"}, {"y"}, {"z"}, {"t"}});
  return ctx;
}

RingPtr ring_a() {
  static const RingPtr ring = QuotientRing::make(
      "A", xyzt_context(), parse("x + x^2*y + z^3 + t^2", xyzt_context()), MonomialOrder::grlex);
  return ring;
}

RingPtr ring_b() {
  static const RingPtr ring = QuotientRing::make(
      "B", xyzt_context(), parse("x^2*y + z^3 + t^2", xyzt_context()), MonomialOrder::grlex);
  return ring;
}

RingPtr ring_neil() {
  static const RingPtr ring = neil_over({"z", "t"});
  return ring;
}

RingPtr ring_v() {
  static const RingPtr ring = [] {
    auto ctx = VarContext::make({{"x"}, {"z"}, {"t"}});
    return QuotientRing::make("V", ctx, parse("x^2 + z^3 + t^2", ctx), MonomialOrder::lex);
  }();
  return ring;
}

RingPtr neil_over(const std::vector<std::string>& vars) {
  std::vector<Variable> vs;
  for (const auto& v : vars) vs.push_back({v});
  auto ctx = VarContext::make(vs);
  std::string name = vars == std::vector<std::string>{"z", "t"} ? "Neil" : "Neil(";
  if (name != "Neil") {
    for (std::size_t i = 0; i < vars.size(); ++i) name += (i ? "," : "") + vars[i];
    name += ")";
  }
  return QuotientRing::make(name, ctx, parse("z^3 + t^2", ctx), MonomialOrder::grlex);
}

RingPtr ring_by_name(std::string_view name) {
  if (name == "A") return ring_a();
  if (name == "B") return ring_b();
  if (name == "Neil") return ring_neil();
  if (name == "V") return ring_v();
  throw std::invalid_argument("unknown ring '" + std::string(name) + "' (expected A, B, Neil, V)");
}

namespace {

Rational draw_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  return make_rational(num(rng), den(rng));
}

}  // namespace

Point<Rational> random_point(Surface s, std::mt19937_64& rng) {
  Rational x;
  do {
    x = draw_rational(rng);
  } while (sgn(x) == 0);
  Rational z = draw_rational(rng);
  Rational t = draw_rational(rng);
  return point_from_draw(s, x, z, t);
}

Point<Rational> random_point(Surface s, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_point(s, rng);
}

Point<ModP> random_point_mod_p(Surface s, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> draw(0, ModP::kModulus - 1);
  ModP x;
  do {
    x = ModP(draw(rng));
  } while (x.is_zero());
  return point_from_draw(s, x, ModP(draw(rng)), ModP(draw(rng)));
}

bool oracle_equal(const RingElement& a, const RingElement& b, int samples, std::uint64_t seed,
                  OracleField field) {
  if (!same_ring(a.ring(), b.ring())) throw AlgebraError("oracle_equal: ring mismatch");
  Surface surface;
  if (same_ring(a.ring(), ring_a())) {
    surface = Surface::X;
  } else if (same_ring(a.ring(), ring_b())) {
    surface = Surface::W;
  } else {
    throw AlgebraError("oracle_equal: only rings A and B have a point sampler");
  }
  Polynomial diff = a.poly() - b.poly();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < samples; ++i) {
    if (field == OracleField::rational) {
      if (sgn(eval(diff, random_point(surface, rng))) != 0) return false;
    } else {
      if (!eval(diff, random_point_mod_p(surface, rng)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace russell
