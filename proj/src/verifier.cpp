#include "russell/verifier.hpp"
#include "russell/random.hpp"

#include <algorithm>
#include <random>

#include "russell/parser.hpp"

namespace russell {

namespace {

struct Residue {
  std::string label;
  Polynomial value;
};

CheckResult from_residues(std::string id, std::string description, std::string ref,
                          const std::vector<Residue>& residues) {
  CheckResult r{std::move(id), std::move(description), std::move(ref), Status::pass, "0"};
  std::string witness;
  for (const auto& [label, value] : residues) {
    if (value.is_zero()) continue;
    if (!witness.empty()) witness += "; ";
    witness += label + ": " + to_string(value);
  }
  if (!witness.empty()) {
    r.status = Status::fail;
    r.witness = witness;
  }
  return r;
}

CheckResult failure(std::string id, std::string description, std::string ref,
                    std::string witness) {
  return {std::move(id), std::move(description), std::move(ref), Status::fail,
          std::move(witness)};
}

// Nonzero witness for a failed structural (non-polynomial) property.
Polynomial flag() {
  static const ContextPtr ctx = VarContext::make({});
  return Polynomial::constant(ctx, Rational(1));
}

Residue residue_of(const std::string& label, const RingElement& e) { return {label, e.poly()}; }

ContextPtr ctx_of(std::vector<Variable> vars) { return VarContext::make(std::move(vars)); }

}  // namespace

std::vector<NamedDerivation> bundled_derivations() {
  return {
      {"d1", make_derivation(ring_a(), std::vector<std::string>{"0", "-2*t", "0", "x^2"})},
      {"d2", make_derivation(ring_a(), std::vector<std::string>{"0", "-3*z^2", "x^2", "0"})},
  };
}

std::vector<NamedDerivation> example_derivations_with_conjugates() {
  auto base = bundled_derivations();
  std::vector<NamedDerivation> out = base;
  static const ContextPtr empty = ctx_of({});
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto& other = base[1 - i];
    RingEndomorphism e = flow(other.derivation, "s");
    for (long s : {1L, -2L}) {
      auto phi = specialize(e, {{"s", Polynomial::constant(empty, Rational(s))}});
      auto phi_inv = specialize(e, {{"s", Polynomial::constant(empty, Rational(-s))}});
      out.push_back({base[i].name + "^" + other.name + "(" + std::to_string(s) + ")",
                     conjugate(base[i].derivation, phi, phi_inv)});
    }
  }
  return out;
}

CheckResult check_embedding(EmbeddingVariant variant) {
  auto blowup = ctx_of({{"x"}, {"z"}, {"t"}, {"u"}, {"v"}});
  Polynomial g = parse("x^2", blowup);
  Polynomial h = parse("x + z^3 + t^2", blowup);
  if (variant == EmbeddingVariant::swapped) std::swap(g, h);
  Polynomial equation = h * parse("u", blowup) + g * parse("v", blowup);
  auto xyzt = xyzt_context();
  Bindings chart{{"u", parse("1", xyzt)},
                 {"v", parse(variant == EmbeddingVariant::v_to_zero ? "0" : "y", xyzt)}};
  Polynomial residue =
      substitute(equation, chart, xyzt) - parse("x + x^2*y + z^3 + t^2", xyzt);
  std::string id = "embedding";
  if (variant == EmbeddingVariant::v_to_zero) id += "/negative:v_to_zero";
  if (variant == EmbeddingVariant::swapped) id += "/negative:swapped";
  return from_residues(id,
                       "u=1, v=y in h*u + g*v reproduces the Russell relation",
                       "embedding of X into the blowup chart u != 0", {{"residue", residue}});
}

CheckResult check_fiber_over_zero(std::uint64_t seed) {
  std::vector<Residue> residues;
  auto chart = ctx_of({{"x"}, {"z"}, {"t"}, {"v"}});
  Polynomial e_plus = parse("x + z^3 + t^2 + x^2*v", chart);
  Polynomial neil = parse("z^3 + t^2", chart);
  residues.push_back(
      {"chart equation at x=0", substitute(e_plus, {{"x", Polynomial(chart)}}, chart) - neil});
  auto xyzt = xyzt_context();
  Polynomial russell = parse("x + x^2*y + z^3 + t^2", xyzt);
  residues.push_back({"Russell relation at x=0",
                      substitute(russell, {{"x", Polynomial(xyzt)}}, xyzt) -
                          parse("z^3 + t^2", xyzt)});
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    auto p = random_point(Surface::X, rng);
    Rational value = eval(russell, p);
    if (sgn(value) != 0)
      residues.push_back({"sample " + std::to_string(i), Polynomial::constant(xyzt, value)});
    if (sgn(p.at("x")) == 0)
      residues.push_back({"sample " + std::to_string(i) + " has x=0", flag()});
  }
  return from_residues("fiber_over_zero",
                       "over x=0 the chart is cut out by z^3+t^2; sampled points of X lie over x!=0",
                       "image of U under the blowup", residues);
}

CheckResult check_singular_locus(CertificateVariant variant) {
  std::vector<Residue> residues;
  // (a) chart v=1: the family x=0, u=0 over the Neil parabola is singular.
  auto minus = ctx_of({{"x"}, {"z"}, {"t"}, {"u"}});
  Polynomial e_minus = parse("(x + z^3 + t^2)*u + x^2", minus);
  auto neil = ring_neil();
  Bindings onto{{"x", Polynomial(neil->context())}, {"u", Polynomial(neil->context())}};
  residues.push_back({"e- on S", nf(neil, substitute(e_minus, onto, neil->context())).poly()});
  for (const char* var : {"x", "z", "t", "u"}) {
    Polynomial d = partial(e_minus, var);
    residues.push_back({std::string("de-/d") + var + " on S",
                        nf(neil, substitute(d, onto, neil->context())).poly()});
  }
  // (b) chart u=1 is smooth: 1 = (1 - 2vx) de+/dx + 4v^2 de+/dv.
  auto plus = ctx_of({{"x"}, {"z"}, {"t"}, {"v"}});
  Polynomial e_plus = parse("x + z^3 + t^2 + x^2*v", plus);
  const char* coeff = variant == CertificateVariant::standard ? "4*v^2" : "3*v^2";
  Polynomial certificate = parse("1 - 2*v*x", plus) * partial(e_plus, "x") +
                           parse(coeff, plus) * partial(e_plus, "v");
  residues.push_back({"smoothness certificate - 1", certificate - parse("1", plus)});
  return from_residues(variant == CertificateVariant::standard
                           ? "singular_locus"
                           : "singular_locus/negative:perturbed_certificate",
                       "x=u=0 over the Neil parabola is singular in the v=1 chart; the u=1 chart "
                       "has an explicit smoothness certificate",
                       "singular locus of the blowup", residues);
}

CheckResult check_gm_action() {
  std::vector<Residue> residues;
  auto b = ring_b();
  auto s_lambda = scaling(b, "lam");
  const auto& ctx = s_lambda.target()->context();
  Bindings images;
  for (const auto& g : b->generators()) images.emplace(g, s_lambda.image(g).poly());
  Polynomial relation = embed(b->relation(), ctx);
  residues.push_back({"S_lam(relation) - relation", substitute(b->relation(), images, ctx) -
                                                        relation});
  auto s_mu = scaling(b, "mu");
  auto product = specialize(s_lambda, {{"lam", parse("lam*mu", ctx_of({{"lam", true},
                                                                        {"mu", true}}))}});
  auto diff = difference(compose(s_lambda, s_mu), product);
  auto gens = b->generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    residues.push_back(residue_of("S_lam o S_mu - S_lam*mu at " + gens[i], diff[i]));
  for (const char* g : {"z", "t"})
    residues.push_back({std::string("S_lam(") + g + ") - " + g,
                        s_lambda.image(g).poly() - Polynomial::variable(ctx, g)});
  return from_residues("gm_action",
                       "S_lam fixes the relation of W, is a group action, and fixes z, t",
                       "multiplicative group action on W and its quotient (z, t)", residues);
}

CheckResult check_trivialization() {
  std::vector<Residue> residues;
  auto torus = ctx_of({{"z"}, {"t"}, {"lam", true}});
  auto laurent = ctx_of({{"x", true}, {"z"}, {"t"}});
  auto xyzt = xyzt_context();
  Bindings forward{{"x", parse("lam^-1", torus)},
                   {"y", parse("-(z^3 + t^2)*lam^2", torus)},
                   {"z", parse("z", torus)},
                   {"t", parse("t", torus)}};
  Bindings inverse{{"z", parse("z", laurent)}, {"t", parse("t", laurent)},
                   {"lam", parse("x^-1", laurent)}};
  Polynomial relation = parse("x^2*y + z^3 + t^2", xyzt);
  residues.push_back({"(a) forward map lands on W", substitute(relation, forward, torus)});

  for (const char* c : {"z", "t", "lam"}) {
    Polynomial back = substitute(inverse.at(c), forward, torus);
    residues.push_back({std::string("(b) inverse o forward at ") + c,
                        back - Polynomial::variable(torus, c)});
  }

  Bindings inverse_on_model = inverse;
  Polynomial y_model = parse("-x^-2*(z^3 + t^2)", laurent);
  Bindings model_coords{{"x", parse("x", laurent)}, {"y", y_model},
                        {"z", parse("z", laurent)}, {"t", parse("t", laurent)}};
  for (const char* c : {"x", "y", "z", "t"}) {
    Polynomial there = substitute(forward.at(c), inverse_on_model, laurent);
    residues.push_back({std::string("(c) forward o inverse at ") + c,
                        there - model_coords.at(c)});
  }

  auto two = ctx_of({{"z"}, {"t"}, {"lam", true}, {"mu", true}});
  Bindings at_mu, at_product;
  for (const auto& [name, image] : forward) {
    at_mu.emplace(name, substitute(image, {{"lam", parse("mu", two)}}, two));
    at_product.emplace(name, substitute(image, {{"lam", parse("lam*mu", two)}}, two));
  }
  auto s_lambda = scaling(ring_b(), "lam");
  for (const char* g : {"x", "y", "z", "t"}) {
    Polynomial acted = substitute(s_lambda.image(g).poly(), at_mu, two);
    residues.push_back({std::string("(d) equivariance at ") + g, at_product.at(g) - acted});
  }
  return from_residues("trivialization",
                       "(z,t,lam) -> (lam^-1, -(z^3+t^2) lam^2, z, t) is an equivariant "
                       "isomorphism onto W minus the Neil fiber",
                       "trivialization of the quotient map away from the Neil parabola",
                       residues);
}

CheckResult check_limit_signs(std::uint64_t seed) {
  std::vector<Residue> residues;
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  struct Case {
    std::vector<std::string> vars;
    int sign;  // +1: weights must be >= 0, -1: <= 0
    const char* label;
  };
  for (const Case& c : {Case{{"x", "z", "t"}, -1, "F_minus"}, Case{{"y", "z", "t"}, +1, "F_plus"}}) {
    auto ring = neil_over(c.vars);
    auto lam_ring = ring->with_parameters({{"lam", true}});
    const auto& ctx = lam_ring->context();
    Polynomial lam = Polynomial::variable(ctx, "lam");
    Bindings act;
    for (const auto& v : c.vars)
      act.emplace(v, lam.pow(variable_weight(v)) * Polynomial::variable(ctx, v));
    std::size_t lam_slot = ctx->require("lam");
    for (int i = 0; i < 40; ++i) {
      RingElement f = nf(ring, random_polynomial(ring->context(), rng));
      RingElement moved(lam_ring, substitute(f.poly(), act, ctx));
      for (const auto& [m, coeff] : moved.poly().terms()) {
        if (m[lam_slot] * c.sign < 0) {
          residues.push_back({std::string(c.label) + " term with wrong lam sign",
                              Polynomial::term(ctx, m, coeff)});
        }
      }
    }
  }
  return from_residues("limit_signs",
                       "on F_minus only non-positive powers of lam occur (limit at infinity "
                       "exists); on F_plus only non-negative ones (limit at 0 exists)",
                       "limits of the multiplicative action on F_plus and F_minus", residues);
}

CheckResult check_isotropy() {
  std::vector<Residue> residues;
  auto s = scaling(ring_b(), "lam");
  const auto& target = s.target();
  RingElement y = generator(target, "y");
  RingElement factor = nf(target, "lam^2 - 1");
  residues.push_back(residue_of("S_lam(y) - y - (lam^2 - 1)*y", s.image("y") - y - factor * y));
  auto lam_only = ctx_of({{"lam", true}});
  Polynomial f = parse("lam^2 - 1", lam_only);
  for (long v : {1L, -1L}) {
    Rational value = eval(f, Point<Rational>{{"lam", Rational(v)}});
    if (sgn(value) != 0)
      residues.push_back({"lam^2-1 at " + std::to_string(v), Polynomial::constant(lam_only, value)});
  }
  if (sgn(eval(f, Point<Rational>{{"lam", Rational(2)}})) == 0)
    residues.push_back({"lam^2-1 vanishes at 2", flag()});
  return from_residues("isotropy",
                       "S_lam fixes the slice y=1 pointwise exactly when lam^2 = 1",
                       "order-two isotropy along F_plus", residues);
}

CheckResult check_deck_sigma() {
  std::vector<Residue> residues;
  auto sigma = deck_sigma();
  auto v = ring_v();
  const auto& ctx = v->context();
  Bindings images;
  for (const auto& g : v->generators()) images.emplace(g, sigma.image(g).poly());
  residues.push_back({"sigma(relation) - relation",
                      substitute(v->relation(), images, ctx) - v->relation()});
  auto diff = difference(compose(sigma, sigma), identity_endomorphism(v));
  for (std::size_t i = 0; i < diff.size(); ++i)
    residues.push_back(residue_of("sigma o sigma - id at " + v->generators()[i], diff[i]));
  auto minus_one = specialize(scaling(ring_b(), "lam"),
                              {{"lam", Polynomial::constant(ctx_of({}), Rational(-1))}});
  for (const auto& g : v->generators()) {
    Polynomial restricted =
        substitute(minus_one.image(g).poly(), {{"y", Polynomial::constant(ctx, Rational(1))}}, ctx);
    residues.push_back(residue_of("S_-1 on y=1 vs sigma at " + g,
                                  RingElement(v, restricted) - sigma.image(g)));
  }
  return from_residues("deck_sigma",
                       "sigma: x -> -x preserves V, is an involution, and is S_-1 on y=1",
                       "deck transformation of the double cover V -> C^2", residues);
}

CheckResult check_normalization(const Derivation& d) {
  const std::string id = "normalization";
  const std::string ref = "normalization of the additive action by the torus";
  if (!same_ring(d.ring(), ring_b()))
    return failure(id, "derivation of B expected", ref, "precondition: wrong ring");
  Homogeneity h = is_homogeneous_derivation(d);
  if (h.kind != HomogeneityKind::degree)
    return failure(id, "derivation is not homogeneous of a single degree", ref,
                   "precondition: not homogeneous");
  auto e_tau = flow(d, "tau");
  auto s_lambda = scaling(d.ring(), "lam");
  auto shifted_param = ctx_of({{"lam", true}, {"tau"}});
  Polynomial shifted = Polynomial::variable(shifted_param, "lam").pow(-h.ell) *
                       Polynomial::variable(shifted_param, "tau");
  auto e_shifted = specialize(e_tau, {{"tau", shifted}});
  auto diff = difference(compose(e_tau, s_lambda), compose(s_lambda, e_shifted));
  std::vector<Residue> residues;
  for (std::size_t i = 0; i < diff.size(); ++i)
    residues.push_back(residue_of("at " + d.generators()[i], diff[i]));
  return from_residues(id, "E_tau o S_lam = S_lam o E_(lam^-l tau) on all generators", ref,
                       residues);
}

CheckResult check_locus_dichotomy(const Derivation& d) {
  const std::string id = "locus_dichotomy";
  const std::string ref = "invariance of F_plus / F_minus according to the sign of l";
  if (!same_ring(d.ring(), ring_b()))
    return failure(id, "derivation of B expected", ref, "precondition: wrong ring");
  Homogeneity h = is_homogeneous_derivation(d);
  if (h.kind != HomogeneityKind::degree)
    return failure(id, "derivation is not homogeneous and nonzero", ref,
                   "precondition: not homogeneous");
  if (lnd_bounded(d).verdict != NilpotencyVerdict::locally_nilpotent)
    return failure(id, "local nilpotency not certified", ref, "precondition: not certified");
  if (h.ell == 0) return failure(id, "observed l = 0", ref, "l = 0");
  auto plus = invariance_check(d, Locus::F_plus);
  auto minus = invariance_check(d, Locus::F_minus);
  std::string note = "l = " + std::to_string(h.ell) + "; F_plus " +
                     (plus.invariant ? "invariant" : "not invariant") + "; F_minus " +
                     (minus.invariant ? "invariant" : "not invariant");
  if (h.ell < 0 && !minus.invariant) note += " (residue " + to_string(minus.residue) + ")";
  if (h.ell < 0 && minus.invariant) note += " (kernel-rich example)";
  if (h.ell > 0 && plus.invariant) note += " (kernel-rich example)";
  const auto& required = h.ell < 0 ? plus : minus;
  return from_residues(id, note, ref, {residue_of("required invariance", required.residue)});
}

CheckResult check_kernel_chains() {
  std::vector<Residue> residues;
  auto b = ring_b();
  auto xyzt = xyzt_context();
  struct Golden {
    std::string name;
    int nu;
    const char* element;
    int degree;
  };
  auto derivations = bundled_derivations();
  std::vector<Golden> goldens{{"d1", 2, "-2*x^2", -2}, {"d2", 3, "-6*x^4", -4}};
  for (std::size_t i = 0; i < goldens.size(); ++i) {
    Derivation delta = induced_graded(derivations[i].derivation);
    KernelChain chain = kernel_chain(delta, generator(b, "y"));
    const auto& g = goldens[i];
    residues.push_back(residue_of(g.name + " chain element", chain.element - nf(b, g.element)));
    residues.push_back(residue_of(g.name + " chain element killed", apply(delta, chain.element)));
    if (chain.nu != g.nu || chain.degree != g.degree)
      residues.push_back({g.name + " nu/degree (" + std::to_string(chain.nu) + ", " +
                              std::to_string(chain.degree) + ")",
                          flag()});
    if (!is_homogeneous(chain.element, 2 + chain.nu * degree_ell(delta)))
      residues.push_back({g.name + " chain element not of degree k + nu*l", flag()});
  }
  return from_residues("kernel_chain",
                       "delta^nu(y) is a nonzero homogeneous kernel element of degree 2 + nu*l",
                       "homogeneous kernel elements delta^nu f", residues);
}

CheckResult check_derivations_kill_x() {
  std::vector<Residue> residues;
  for (const auto& [name, d] : example_derivations_with_conjugates()) {
    auto report = lnd_bounded(d);
    if (report.verdict != NilpotencyVerdict::locally_nilpotent) {
      residues.push_back({name + " not certified locally nilpotent", flag()});
      continue;
    }
    residues.push_back(residue_of(name + ": d(x)", apply(d, generator(d.ring(), "x"))));
    auto e = flow(d, "tau");
    residues.push_back(residue_of(name + ": E_tau(x) - x",
                                  e.image("x") - generator(e.target(), "x")));
    if (degree_ell(d) >= 0)
      residues.push_back({name + ": l = " + std::to_string(degree_ell(d)), flag()});
  }
  return from_residues("derivations_kill_x",
                       "every bundled locally nilpotent derivation of A kills x, its flow fixes "
                       "x, and its degree l is negative",
                       "invariance of the first coordinate under additive actions", residues);
}

CheckResult check_flow_identities(const Derivation& d) {
  std::vector<Residue> residues;
  auto e_tau = flow(d, "tau");
  auto e_sigma = flow(d, "sig");
  const auto& ring = d.ring();
  const auto& ctx = e_tau.target()->context();
  Bindings images;
  for (const auto& g : ring->generators()) images.emplace(g, e_tau.image(g).poly());
  residues.push_back(residue_of("relation image",
                                RingElement(e_tau.target(), substitute(ring->relation(), images, ctx))));
  auto at_zero = specialize(e_tau, {{"tau", Polynomial(ctx_of({}))}});
  auto zero_diff = difference(at_zero, identity_endomorphism(ring));
  auto sum_ctx = ctx_of({{"tau"}, {"sig"}});
  auto at_sum = specialize(e_tau, {{"tau", parse("tau + sig", sum_ctx)}});
  auto law_diff = difference(compose(e_tau, e_sigma), at_sum);
  for (std::size_t i = 0; i < ring->generators().size(); ++i) {
    residues.push_back(residue_of("E_0 - id at " + ring->generators()[i], zero_diff[i]));
    residues.push_back(residue_of("E_tau o E_sig - E_(tau+sig) at " + ring->generators()[i],
                                  law_diff[i]));
  }
  return from_residues("flow_identities",
                       "exp(tau d) preserves the relation, E_0 = id, E_tau o E_sig = E_(tau+sig)",
                       "flow of the additive group action", residues);
}

CheckResult check_negative_controls() {
  std::vector<CheckResult> controls{check_embedding(EmbeddingVariant::v_to_zero),
                                    check_embedding(EmbeddingVariant::swapped),
                                    check_singular_locus(CertificateVariant::perturbed)};
  std::string witness;
  for (const auto& c : controls) {
    if (c.passed() || c.witness == "0") {
      if (!witness.empty()) witness += "; ";
      witness += c.id + " did not fail";
    }
  }
  CheckResult r{"negative_controls",
                "perturbed identities (v -> 0, swapped g/h, 3v^2 certificate) must fail",
                "guards against vacuous checks", Status::pass, "0"};
  if (!witness.empty()) {
    r.status = Status::fail;
    r.witness = witness;
  }
  return r;
}

}  // namespace russell
