#include "russell/lnd.hpp"

#include <algorithm>
#include <stdexcept>

#include "russell/parser.hpp"

namespace russell {

namespace {

std::size_t generator_index(const std::vector<std::string>& gens, std::string_view name) {
  auto it = std::find(gens.begin(), gens.end(), name);
  if (it == gens.end()) throw AlgebraError("unknown generator '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - gens.begin());
}

RingElement in_ring(const RingPtr& ring, const RingElement& a) {
  if (same_ring(a.ring(), ring)) return a;
  return RingElement(ring, embed(a.poly(), ring->context()));
}

}  // namespace

const RingElement& Derivation::image(std::string_view generator) const {
  return images_[generator_index(generators_, generator)];
}

bool Derivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const auto& e) { return e.is_zero(); });
}

RingElement compatibility_residue(const RingPtr& ring, const std::vector<RingElement>& images) {
  auto gens = ring->generators();
  if (images.size() != gens.size())
    throw AlgebraError("expected " + std::to_string(gens.size()) + " generator images, got " +
                       std::to_string(images.size()));
  Polynomial sum(ring->context());
  for (std::size_t i = 0; i < gens.size(); ++i)
    sum += in_ring(ring, images[i]).poly() * partial(ring->relation(), gens[i]);
  return RingElement(ring, sum);
}

Derivation make_derivation(const RingPtr& ring, std::vector<RingElement> images) {
  for (auto& img : images) img = in_ring(ring, img);
  RingElement residue = compatibility_residue(ring, images);
  if (!residue.is_zero())
    throw IncompatibleImages("images do not define a derivation of " + ring->name(), residue);
  return Derivation(ring, ring->generators(), std::move(images));
}

Derivation make_derivation(const RingPtr& ring, const std::vector<std::string>& image_exprs) {
  std::vector<RingElement> images;
  for (const auto& e : image_exprs) images.push_back(nf(ring, e));
  return make_derivation(ring, std::move(images));
}

Derivation zero_derivation(const RingPtr& ring) {
  std::vector<RingElement> images(ring->generators().size(), ring_constant(ring, Rational(0)));
  return make_derivation(ring, std::move(images));
}

RingElement apply(const Derivation& d, const RingElement& a) {
  if (!same_ring(a.ring(), d.ring()))
    throw AlgebraError("apply: element of " + a.ring()->name() + " given to a derivation of " +
                       d.ring()->name());
  const auto& ctx = d.ring()->context();
  std::size_t ngens = d.generators().size();
  Polynomial out(ctx);
  for (const auto& [m, c] : a.poly().terms()) {
    for (std::size_t i = 0; i < ngens; ++i) {
      if (m[i] == 0 || d.images()[i].is_zero()) continue;
      Monomial rest = m;
      rest[i] -= 1;
      out += Polynomial::term(ctx, rest, c * m[i]) * d.images()[i].poly();
    }
  }
  return RingElement(d.ring(), out);
}

RingElement apply_power(const Derivation& d, const RingElement& a, int k) {
  RingElement cur = a;
  for (int i = 0; i < k && !cur.is_zero(); ++i) cur = apply(d, cur);
  return cur;
}

NilpotencyReport lnd_bounded(const Derivation& d, int bound) {
  if (bound < 1) throw std::invalid_argument("nilpotency bound must be at least 1");
  NilpotencyReport report;
  report.bound = bound;
  report.generators = d.generators();
  bool all = true;
  for (const auto& g : d.generators()) {
    RingElement cur = generator(d.ring(), g);
    std::optional<int> order;
    for (int k = 1; k <= bound; ++k) {
      cur = apply(d, cur);
      if (cur.is_zero()) {
        order = k;
        break;
      }
    }
    all = all && order.has_value();
    report.orders.push_back(order);
  }
  report.verdict = all ? NilpotencyVerdict::locally_nilpotent : NilpotencyVerdict::unknown;
  return report;
}

int degree_ell(const Derivation& d) {
  std::optional<int> ell;
  for (std::size_t i = 0; i < d.generators().size(); ++i) {
    const auto& img = d.images()[i];
    if (img.is_zero()) continue;
    int shift = deg(img).value() - variable_weight(d.generators()[i]);
    ell = ell ? std::max(*ell, shift) : shift;
  }
  if (!ell) throw AlgebraError("degree_ell: the zero derivation has no degree");
  return *ell;
}

Homogeneity is_homogeneous_derivation(const Derivation& d) {
  std::optional<int> ell;
  for (std::size_t i = 0; i < d.generators().size(); ++i) {
    const auto& img = d.images()[i];
    if (img.is_zero()) continue;
    auto w = homogeneous_degree(img);
    if (!w) return {};
    int shift = *w - variable_weight(d.generators()[i]);
    if (ell && *ell != shift) return {};
    ell = shift;
  }
  if (!ell) return {HomogeneityKind::any, 0};
  return {HomogeneityKind::degree, *ell};
}

Derivation induced_graded(const Derivation& d, int bound) {
  if (!same_ring(d.ring(), ring_a())) throw AlgebraError("induced_graded: derivation on A expected");
  if (d.is_zero()) throw AlgebraError("induced_graded: zero derivation");
  if (lnd_bounded(d, bound).verdict != NilpotencyVerdict::locally_nilpotent)
    throw AlgebraError("induced_graded: local nilpotency not certified at bound " +
                       std::to_string(bound));
  int ell = degree_ell(d);
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < d.generators().size(); ++i) {
    int target = variable_weight(d.generators()[i]) + ell;
    images.push_back(RingElement(ring_b(), component(d.images()[i], target).poly()));
  }
  Derivation delta = make_derivation(ring_b(), std::move(images));
  Homogeneity h = is_homogeneous_derivation(delta);
  if (h.kind != HomogeneityKind::degree || h.ell != ell)
    throw std::logic_error("induced_graded: result is not homogeneous of degree " +
                           std::to_string(ell));
  return delta;
}

const RingElement& RingEndomorphism::image(std::string_view generator) const {
  return images_[generator_index(source_->generators(), generator)];
}

namespace {

// Substitutes generator images into a raw polynomial over `from`.
RingElement push_forward(const RingPtr& source, const std::vector<RingElement>& images,
                         const RingPtr& target, const Polynomial& f, const RingPtr& from) {
  RingPtr joint = target->with_parameters(from->parameters());
  const auto& ctx = joint->context();
  Bindings bindings;
  auto gens = source->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    bindings.emplace(gens[i], embed(images[i].poly(), ctx));
  return RingElement(joint, substitute(f, bindings, ctx));
}

}  // namespace

RingElement RingEndomorphism::operator()(const RingElement& a) const {
  if (!a.ring()->same_base(*source_))
    throw AlgebraError("endomorphism of " + source_->name() + " applied to element of " +
                       a.ring()->name());
  return push_forward(source_, images_, target_, a.poly(), a.ring());
}

RingEndomorphism make_endomorphism(const RingPtr& source, const RingPtr& target,
                                   std::vector<RingElement> images) {
  if (!source->same_base(*target)) throw AlgebraError("endomorphism: source and target differ");
  auto gens = source->generators();
  if (images.size() != gens.size()) throw AlgebraError("endomorphism: wrong number of images");
  for (auto& img : images) img = in_ring(target, img);
  RingElement residue = push_forward(source, images, target, source->relation(), source);
  if (!residue.is_zero())
    throw IncompatibleImages("relation does not map into the ideal", residue);
  return RingEndomorphism(source, target, std::move(images));
}

RingEndomorphism identity_endomorphism(const RingPtr& ring) {
  std::vector<RingElement> images;
  for (const auto& g : ring->generators()) images.push_back(generator(ring, g));
  return make_endomorphism(ring, ring, std::move(images));
}

RingEndomorphism flow(const Derivation& d, std::string_view parameter, int bound) {
  NilpotencyReport report = lnd_bounded(d, bound);
  if (report.verdict != NilpotencyVerdict::locally_nilpotent)
    throw AlgebraError("flow: local nilpotency not certified at bound " + std::to_string(bound));
  RingPtr target = d.ring()->with_parameters({Variable{std::string(parameter), false}});
  const auto& ctx = target->context();
  Polynomial tau = Polynomial::variable(ctx, parameter);
  std::vector<RingElement> images;
  for (std::size_t i = 0; i < d.generators().size(); ++i) {
    Polynomial sum(ctx);
    RingElement cur = generator(d.ring(), d.generators()[i]);
    Rational factorial(1);
    for (int k = 0; k < *report.orders[i]; ++k) {
      if (k > 0) {
        cur = apply(d, cur);
        factorial *= k;
      }
      sum += tau.pow(k) * embed(cur.poly(), ctx) * (Rational(1) / factorial);
    }
    images.emplace_back(target, sum);
  }
  return make_endomorphism(d.ring(), target, std::move(images));
}

RingEndomorphism scaling(const RingPtr& ring, std::string_view parameter) {
  RingPtr target = ring->with_parameters({Variable{std::string(parameter), true}});
  const auto& ctx = target->context();
  Polynomial lambda = Polynomial::variable(ctx, parameter);
  std::vector<RingElement> images;
  for (const auto& g : ring->generators())
    images.emplace_back(target, lambda.pow(variable_weight(g)) * Polynomial::variable(ctx, g));
  return make_endomorphism(ring, target, std::move(images));
}

RingEndomorphism compose(const RingEndomorphism& e1, const RingEndomorphism& e2) {
  if (!e1.source()->same_base(*e2.source())) throw AlgebraError("compose: incompatible rings");
  RingPtr source = e2.source()->with_parameters(e1.source()->parameters());
  RingPtr target = e1.target()->with_parameters(e2.target()->parameters());
  std::vector<RingElement> images;
  for (const auto& img : e2.images()) images.push_back(e1(img));
  return make_endomorphism(source, target, std::move(images));
}

RingEndomorphism specialize(const RingEndomorphism& e, const Bindings& bindings) {
  auto source_params = e.source()->parameters();
  auto gens = e.source()->generators();
  std::vector<Variable> params;
  for (const auto& p : e.target()->parameters()) {
    bool bound = bindings.contains(p.name);
    if (bound && std::any_of(source_params.begin(), source_params.end(),
                             [&](const Variable& v) { return v.name == p.name; }))
      throw AlgebraError("specialize: cannot bind source parameter '" + p.name + "'");
    if (!bound) params.push_back(p);
  }
  for (const auto& [name, poly] : bindings) {
    if (!e.target()->context()->index_of(name))
      throw AlgebraError("specialize: '" + name + "' is not a parameter of the map");
    for (const auto& v : poly.context()->variables()) {
      if (std::find(gens.begin(), gens.end(), v.name) != gens.end())
        throw AlgebraError("specialize: bindings may only involve parameters");
      params.push_back(v);
    }
  }
  RingPtr target = e.source()->base()->with_parameters(params);
  const auto& ctx = target->context();
  Bindings local;
  for (const auto& [name, poly] : bindings) local.emplace(name, embed(poly, ctx));
  std::vector<RingElement> images;
  for (const auto& img : e.images())
    images.emplace_back(target, substitute(img.poly(), local, ctx));
  RingPtr source = e.source()->base()->with_parameters(source_params);
  return make_endomorphism(source, target, std::move(images));
}

std::vector<RingElement> difference(const RingEndomorphism& e1, const RingEndomorphism& e2) {
  if (!e1.source()->same_base(*e2.source())) throw AlgebraError("difference: incompatible rings");
  RingPtr joint = e1.target()->with_parameters(e2.target()->parameters());
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < e1.images().size(); ++i)
    out.emplace_back(joint, embed(e1.images()[i].poly(), joint->context()) -
                                embed(e2.images()[i].poly(), joint->context()));
  return out;
}

bool equal(const RingEndomorphism& e1, const RingEndomorphism& e2) {
  auto diff = difference(e1, e2);
  return std::all_of(diff.begin(), diff.end(), [](const auto& r) { return r.is_zero(); });
}

RingEndomorphism deck_sigma() {
  RingPtr v = ring_v();
  return make_endomorphism(v, v, {nf(v, "-x"), nf(v, "z"), nf(v, "t")});
}

Derivation conjugate(const Derivation& d, const RingEndomorphism& phi,
                     const RingEndomorphism& phi_inv) {
  std::vector<RingElement> images;
  for (const auto& g : d.generators()) {
    RingElement moved = in_ring(d.ring(), phi(generator(d.ring(), g)));
    images.push_back(phi_inv(apply(d, moved)));
  }
  return make_derivation(d.ring(), std::move(images));
}

std::string to_string(Locus locus) {
  switch (locus) {
    case Locus::F_plus: return "F_plus";
    case Locus::F_minus: return "F_minus";
    case Locus::V_slice: return "V_slice";
  }
  return "?";
}

std::optional<Locus> locus_by_name(std::string_view name) {
  if (name == "F_plus") return Locus::F_plus;
  if (name == "F_minus") return Locus::F_minus;
  if (name == "V_slice") return Locus::V_slice;
  return std::nullopt;
}

InvarianceResult invariance_check(const Derivation& d, Locus locus) {
  if (!same_ring(d.ring(), ring_b())) throw AlgebraError("invariance_check: derivation on B expected");
  RingPtr quotient;
  std::string var;
  Rational value;
  switch (locus) {
    case Locus::F_plus:
      quotient = neil_over({"y", "z", "t"});
      var = "x";
      value = 0;
      break;
    case Locus::F_minus:
      quotient = neil_over({"x", "z", "t"});
      var = "y";
      value = 0;
      break;
    case Locus::V_slice:
      quotient = ring_v();
      var = "y";
      value = 1;
      break;
  }
  const auto& ctx = quotient->context();
  Bindings restrict{{var, Polynomial::constant(ctx, value)}};
  RingElement residue(quotient, substitute(d.image(var).poly(), restrict, ctx));
  return {residue.is_zero(), residue};
}

KernelChain kernel_chain(const Derivation& d, const RingElement& f, int bound) {
  if (f.is_zero()) throw AlgebraError("kernel_chain: f must be nonzero");
  auto k = homogeneous_degree(f);
  if (!k) throw AlgebraError("kernel_chain: f must be homogeneous");
  Homogeneity h = is_homogeneous_derivation(d);
  if (h.kind == HomogeneityKind::not_homogeneous)
    throw AlgebraError("kernel_chain: derivation must be homogeneous");
  RingElement cur = f;
  for (int nu = 0; nu <= bound; ++nu) {
    RingElement next = apply(d, cur);
    if (next.is_zero()) {
      int degree = *k + nu * h.ell;
      if (!is_homogeneous(cur, degree))
        throw std::logic_error("kernel_chain: chain element is not homogeneous");
      return {nu, cur, degree};
    }
    cur = next;
  }
  throw AlgebraError("kernel_chain: bound " + std::to_string(bound) + " exhausted");
}

}  // namespace russell
