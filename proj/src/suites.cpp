// Seeded randomized property suites and report assembly.

#include <algorithm>
#include <random>

#include "json.hpp"

#include "russell/parser.hpp"
#include "russell/random.hpp"
#include "russell/verifier.hpp"

namespace russell {

namespace {

// Collects the first few counterexamples of a randomized suite.
class Failures {
 public:
  void add(const std::string& label, const std::string& residue) {
    ++count_;
    if (count_ <= 3) {
      if (!witness_.empty()) witness_ += "; ";
      witness_ += label + ": " + residue;
    }
  }
  void add(const std::string& label, const Polynomial& residue) {
    add(label, residue.is_zero() ? std::string("mismatch") : to_string(residue));
  }

  CheckResult result(std::string id, std::string description, std::string ref) const {
    if (count_ == 0)
      return {std::move(id), std::move(description), std::move(ref), Status::pass, "0"};
    std::string witness = witness_;
    if (count_ > 3) witness += " (" + std::to_string(count_) + " failures)";
    return {std::move(id), std::move(description), std::move(ref), Status::fail, witness};
  }

 private:
  int count_ = 0;
  std::string witness_;
};

std::mt19937_64 suite_rng(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{seed, salt};
  return std::mt19937_64(seq);
}

RingElement random_element(const RingPtr& ring, std::mt19937_64& rng) {
  return nf(ring, random_polynomial(ring->context(), rng));
}

RingElement random_nonzero(const RingPtr& ring, std::mt19937_64& rng) {
  for (;;) {
    RingElement e = random_element(ring, rng);
    if (!e.is_zero()) return e;
  }
}

std::string label(const std::string& ring, int i) { return ring + " #" + std::to_string(i); }

}  // namespace

SuiteSizes acceptance_sizes() {
  SuiteSizes s;
  s.nf_pairs = 500;
  s.confluence = 200;
  s.basis = 500;
  s.degree_oracle = 200;
  s.degree_pairs = 100;
  s.oracle_pairs = 200;
  s.oracle_samples = 50;
  s.leibniz = 100;
  s.roundtrip = 500;
  return s;
}

CheckResult suite_nf_soundness(std::uint64_t seed, int pairs) {
  Failures failures;
  for (const auto& ring : {ring_a(), ring_b()}) {
    auto rng = suite_rng(seed, 1);
    for (int i = 0; i < pairs; ++i) {
      Polynomial f = random_polynomial(ring->context(), rng);
      Polynomial g = random_polynomial(ring->context(), rng);
      RingElement nf_f = nf(ring, f), nf_g = nf(ring, g);
      RingElement prod = nf(ring, f * g);
      if (!(prod == nf_f * nf_g))
        failures.add(label(ring->name(), i) + " nf(fg) - nf(f)nf(g)",
                     (prod - nf_f * nf_g).poly());
      RingElement sum = nf(ring, f + g);
      if (!(sum == nf_f + nf_g))
        failures.add(label(ring->name(), i) + " nf(f+g) - nf(f)-nf(g)", (sum - nf_f - nf_g).poly());
      if (!(nf(ring, nf_f.poly()) == nf_f))
        failures.add(label(ring->name(), i) + " nf(nf(f)) != nf(f)", nf_f.poly());
    }
  }
  return failures.result("random/nf_soundness",
                         "nf is idempotent and a ring homomorphism on random pairs in A and B",
                         "canonical normal forms of the coordinate rings");
}

CheckResult suite_nf_confluence(std::uint64_t seed, int count) {
  Failures failures;
  for (const auto& ring : {ring_a(), ring_b(), ring_neil(), ring_v()}) {
    auto rng = suite_rng(seed, 2);
    for (int i = 0; i < count; ++i) {
      Polynomial f = random_polynomial(ring->context(), rng);
      Polynomial a = ring->reduce(f, ReductionStrategy::order_maximal_first);
      Polynomial b = ring->reduce(f, ReductionStrategy::leftmost_first);
      if (!(a == b)) failures.add(label(ring->name(), i), a - b);
    }
  }
  return failures.result("random/nf_confluence",
                         "order-maximal-first and leftmost-first reduction agree",
                         "canonical normal forms of the coordinate rings");
}

CheckResult suite_basis_shape(std::uint64_t seed, int count) {
  Failures failures;
  auto a = ring_a();
  auto rng = suite_rng(seed, 3);
  for (int i = 0; i < count; ++i) {
    RingElement e = random_element(a, rng);
    for (const auto& [m, c] : e.poly().terms())
      if (!(m[0] <= 1 || m[1] == 0))
        failures.add(label("A", i), Polynomial::term(a->context(), m, c));
  }
  return failures.result("random/basis_shape",
                         "normal forms in A use only x^a y^b z^c t^d with a <= 1 or b = 0",
                         "decomposition of A into rank-one C[z,t]-modules");
}

CheckResult suite_degree_oracle(std::uint64_t seed, int count) {
  Failures failures;
  auto a = ring_a();
  struct Pinned {
    const char* expr;
    int degree;
  };
  for (const Pinned& p : {Pinned{"x", -1}, Pinned{"y", 2}, Pinned{"z", 0}, Pinned{"t", 0},
                          Pinned{"x^2*y", 0}}) {
    RingElement e = nf(a, p.expr);
    if (deg(e) != Degree(p.degree) || deg_laurent_oracle(e) != Degree(p.degree))
      failures.add(std::string("pinned ") + p.expr,
                   "deg " + to_string(deg(e)) + ", oracle " + to_string(deg_laurent_oracle(e)));
  }
  auto rng = suite_rng(seed, 4);
  for (int i = 0; i < count; ++i) {
    RingElement e = random_nonzero(a, rng);
    Degree w = deg(e), o = deg_laurent_oracle(e);
    if (w != o) failures.add(label("A", i) + " (deg " + to_string(w) + " vs " + to_string(o) + ")",
                             e.poly());
  }
  return failures.result("random/degree_oracle",
                         "weight degree equals minus the x-order after eliminating y",
                         "multiplicities along the boundary divisor");
}

CheckResult suite_degree_additivity(std::uint64_t seed, int pairs) {
  Failures failures;
  auto a = ring_a();
  auto rng = suite_rng(seed, 5);
  for (int i = 0; i < pairs; ++i) {
    RingElement f = random_nonzero(a, rng), g = random_nonzero(a, rng);
    RingElement fg = f * g;
    if (deg(fg) != deg(f) + deg(g))
      failures.add(label("A", i), "deg(fg) = " + to_string(deg(fg)) + ", deg f + deg g = " +
                                      to_string(deg(f) + deg(g)));
  }
  return failures.result("random/degree_additivity", "deg(fg) = deg(f) + deg(g) on A",
                         "the associated graded algebra is a domain");
}

CheckResult suite_gr_multiplicativity(std::uint64_t seed, int pairs) {
  Failures failures;
  auto a = ring_a();
  auto rng = suite_rng(seed, 6);
  for (int i = 0; i < pairs; ++i) {
    RingElement f = random_nonzero(a, rng), g = random_nonzero(a, rng);
    RingElement lhs = gr(f * g);
    RingElement rhs = gr(f) * gr(g);
    if (!(lhs == rhs)) failures.add(label("A", i), (lhs - rhs).poly());
  }
  return failures.result("random/gr_multiplicativity", "gr(fg) = gr(f) gr(g) in B",
                         "associated graded algebra");
}

CheckResult suite_filtration(std::uint64_t seed, int pairs) {
  Failures failures;
  auto a = ring_a();
  auto rng = suite_rng(seed, 7);
  for (int i = 0; i < pairs; ++i) {
    RingElement f = random_nonzero(a, rng), g = random_nonzero(a, rng);
    Degree df = deg(f), dg = deg(g), ds = deg(f + g);
    if (ds > std::max(df, dg) || (df != dg && ds != std::max(df, dg)))
      failures.add(label("A", i), "deg(f+g) = " + to_string(ds) + " with deg f = " +
                                      to_string(df) + ", deg g = " + to_string(dg));
  }
  return failures.result("random/filtration",
                         "deg(f+g) <= max(deg f, deg g), with equality when they differ",
                         "filtration of A by pole order");
}

CheckResult suite_oracle_concordance(std::uint64_t seed, int pairs, int samples) {
  Failures failures;
  for (const auto& ring : {ring_a(), ring_b()}) {
    auto rng = suite_rng(seed, 8);
    for (int i = 0; i < pairs; ++i) {
      RingElement f = random_element(ring, rng);
      // Alternate unrelated pairs with pairs equal modulo the relation.
      RingElement g = i % 2 == 0
                          ? random_element(ring, rng)
                          : nf(ring, f.poly() + ring->relation() *
                                                    random_polynomial(ring->context(), rng));
      bool symbolic = f == g;
      for (OracleField field : {OracleField::rational, OracleField::mod_p}) {
        bool sampled = oracle_equal(f, g, samples, seed * 1000003ULL + static_cast<unsigned>(i),
                                    field);
        if (sampled != symbolic)
          failures.add(label(ring->name(), i) +
                           (field == OracleField::rational ? " over Q" : " mod p"),
                       (f - g).poly());
      }
    }
  }
  return failures.result("random/oracle_concordance",
                         "normal-form equality agrees with exact evaluation at points of X and W",
                         "points of X via the embedding into the blowup");
}

CheckResult suite_leibniz(std::uint64_t seed, int count) {
  Failures failures;
  std::vector<NamedDerivation> all = bundled_derivations();
  for (const auto& [name, d] : bundled_derivations())
    all.push_back({"gr " + name, induced_graded(d)});
  auto rng = suite_rng(seed, 9);
  for (const auto& [name, d] : all) {
    for (int i = 0; i < count; ++i) {
      RingElement f = random_element(d.ring(), rng), g = random_element(d.ring(), rng);
      RingElement lhs = apply(d, f * g);
      RingElement rhs = apply(d, f) * g + f * apply(d, g);
      if (!(lhs == rhs)) failures.add(name + " #" + std::to_string(i), (lhs - rhs).poly());
    }
  }
  return failures.result("random/leibniz", "d(fg) = d(f) g + f d(g) for the bundled derivations",
                         "derivations of A and B");
}

CheckResult suite_degree_shift(std::uint64_t seed, int count) {
  Failures failures;
  auto rng = suite_rng(seed, 10);
  for (const auto& [name, d] : bundled_derivations()) {
    int ell = degree_ell(d);
    for (int i = 0; i < count; ++i) {
      RingElement f = random_nonzero(d.ring(), rng);
      Degree image = deg(apply(d, f));
      if (image > deg(f) + Degree(ell))
        failures.add(name + " #" + std::to_string(i), f.poly());
    }
  }
  return failures.result("random/degree_shift", "deg(d f) <= deg(f) + l(d)",
                         "degree l of a derivation");
}

CheckResult suite_parse_roundtrip(std::uint64_t seed, int count) {
  Failures failures;
  auto ctx = VarContext::make({{"x"}, {"y"}, {"z"}, {"t"}, {"lam", true}});
  RandomPolyOptions opts;
  opts.max_laurent_depth = 3;
  auto rng = suite_rng(seed, 11);
  for (int i = 0; i < count; ++i) {
    Polynomial f = random_polynomial(ctx, rng, opts);
    std::string text = print(f);
    try {
      Polynomial g = parse(text, ctx);
      if (!(g == f)) failures.add("#" + std::to_string(i), g - f);
    } catch (const ParseError& e) {
      failures.add("#" + std::to_string(i), text + " (" + e.what() + ")");
    }
  }
  return failures.result("random/parse_roundtrip", "parse(print(f)) = f",
                         "canonical text form of polynomials");
}

std::vector<CheckResult> run_all(std::uint64_t seed, const SuiteSizes& sizes) {
  std::vector<CheckResult> results;
  auto guarded = [&](const std::string& id, auto&& check) {
    try {
      results.push_back(check());
    } catch (const std::exception& e) {
      results.push_back({id, "check raised an exception", "", Status::fail, e.what()});
    }
  };
  guarded("embedding", [] { return check_embedding(); });
  guarded("fiber_over_zero", [&] { return check_fiber_over_zero(seed); });
  guarded("singular_locus", [] { return check_singular_locus(); });
  guarded("gm_action", [] { return check_gm_action(); });
  guarded("trivialization", [] { return check_trivialization(); });
  guarded("limit_signs", [&] { return check_limit_signs(seed); });
  guarded("isotropy", [] { return check_isotropy(); });
  guarded("deck_sigma", [] { return check_deck_sigma(); });
  guarded("kernel_chain", [] { return check_kernel_chains(); });
  guarded("derivations_kill_x", [] { return check_derivations_kill_x(); });
  guarded("negative_controls", [] { return check_negative_controls(); });
  for (const auto& [name, d] : bundled_derivations()) {
    guarded("flow_identities/" + name, [&] {
      auto r = check_flow_identities(d);
      r.id += "/" + name;
      return r;
    });
    guarded("normalization/" + name, [&] {
      auto r = check_normalization(induced_graded(d));
      r.id += "/" + name;
      return r;
    });
    guarded("locus_dichotomy/" + name, [&] {
      auto r = check_locus_dichotomy(induced_graded(d));
      r.id += "/" + name;
      return r;
    });
  }
  guarded("random/nf_soundness", [&] { return suite_nf_soundness(seed, sizes.nf_pairs); });
  guarded("random/nf_confluence", [&] { return suite_nf_confluence(seed, sizes.confluence); });
  guarded("random/basis_shape", [&] { return suite_basis_shape(seed, sizes.basis); });
  guarded("random/degree_oracle", [&] { return suite_degree_oracle(seed, sizes.degree_oracle); });
  guarded("random/degree_additivity",
          [&] { return suite_degree_additivity(seed, sizes.degree_pairs); });
  guarded("random/gr_multiplicativity",
          [&] { return suite_gr_multiplicativity(seed, sizes.degree_pairs); });
  guarded("random/filtration", [&] { return suite_filtration(seed, sizes.degree_pairs); });
  guarded("random/oracle_concordance", [&] {
    return suite_oracle_concordance(seed, sizes.oracle_pairs, sizes.oracle_samples);
  });
  guarded("random/leibniz", [&] { return suite_leibniz(seed, sizes.leibniz); });
  guarded("random/degree_shift", [&] { return suite_degree_shift(seed, sizes.leibniz); });
  guarded("random/parse_roundtrip", [&] { return suite_parse_roundtrip(seed, sizes.roundtrip); });
  std::sort(results.begin(), results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return results;
}

std::string report_json(const std::vector<CheckResult>& results, int indent) {
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    report.push_back({{"id", r.id},
                      {"paper_ref", r.paper_ref},
                      {"status", r.passed() ? "pass" : "fail"},
                      {"witness", r.witness}});
  }
  return report.dump(indent);
}

}  // namespace russell
