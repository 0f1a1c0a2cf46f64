#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "russell/filtration.hpp"
#include "russell/lnd.hpp"
#include "russell/parser.hpp"
#include "russell/quotient.hpp"
#include "russell/verifier.hpp"

namespace russell::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string ring = "A";
  std::optional<std::string> expr;
  std::string file;
  int bound = kDefaultNilpotencyBound;
  std::uint64_t seed = 0;
  bool json = false;
  int samples = 50;
  std::string param = "tau";
  std::string locus;
  std::string surface;
};

std::string read_expr(const Options& opts, std::istream& in) {
  if (opts.expr) return *opts.expr;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw UsageError("no expression given (use --expr or standard input)");
  return text;
}

RingElement read_element(const Options& opts, const RingPtr& ring, std::istream& in) {
  return nf(ring, parse(read_expr(opts, in), ring->context()));
}

Derivation read_derivation(const Options& opts) {
  if (opts.file.empty()) throw UsageError("--file <derivation.json> is required");
  std::ifstream f(opts.file);
  if (!f) throw UsageError("cannot open derivation file '" + opts.file + "'");
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed derivation file: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("derivation file must hold a JSON object");
  auto field = [&](const char* key) -> std::string {
    if (!doc.contains(key) || !doc[key].is_string())
      throw UsageError(std::string("derivation file: missing string field '") + key + "'");
    return doc[key].get<std::string>();
  };
  std::string ring_name = field("ring");
  if (ring_name != "A" && ring_name != "B")
    throw UsageError("derivation ring must be \"A\" or \"B\"");
  RingPtr ring = ring_by_name(ring_name);
  std::vector<RingElement> images;
  for (const char* key : {"dx", "dy", "dz", "dt"}) {
    std::string src = field(key);
    try {
      images.push_back(nf(ring, parse(src, ring->context())));
    } catch (const ParseError& e) {
      throw ParseError(e.position(), std::string(key) + ": " + e.detail());
    }
  }
  return make_derivation(ring, std::move(images));
}

/// Derivations on A are replaced by their induced homogeneous derivation.
Derivation graded_derivation(const Options& opts) {
  Derivation d = read_derivation(opts);
  if (same_ring(d.ring(), ring_a())) return induced_graded(d, opts.bound);
  return d;
}

Json degree_json(const Degree& d) {
  if (d.is_neg_inf()) return "-inf";
  return d.value();
}

void print_images(std::ostream& out, const std::vector<std::string>& gens,
                  const std::vector<RingElement>& images, const char* prefix, const char* sep) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    out << prefix << gens[i] << sep << to_string(images[i]) << '\n';
}

Json images_json(const std::vector<std::string>& gens, const std::vector<RingElement>& images,
                 const char* prefix) {
  Json j = Json::object();
  for (std::size_t i = 0; i < gens.size(); ++i) j[prefix + gens[i]] = to_string(images[i]);
  return j;
}

int cmd_nf(const Options& opts, std::istream& in, std::ostream& out) {
  RingPtr ring = ring_by_name(opts.ring);
  RingElement e = read_element(opts, ring, in);
  if (opts.json)
    out << Json{{"ring", ring->name()}, {"nf", to_string(e)}}.dump() << '\n';
  else
    out << to_string(e) << '\n';
  return kExitOk;
}

int cmd_deg(const Options& opts, std::istream& in, std::ostream& out) {
  RingPtr ring = ring_by_name(opts.ring);
  if (!same_ring(ring, ring_a()) && !same_ring(ring, ring_b()))
    throw UsageError("deg is defined on rings A and B");
  RingElement e = read_element(opts, ring, in);
  Degree d = deg(e);
  if (opts.json) {
    Json j{{"ring", ring->name()}, {"nf", to_string(e)}, {"deg", degree_json(d)}};
    if (same_ring(ring, ring_a())) j["laurent_oracle"] = degree_json(deg_laurent_oracle(e));
    out << j.dump() << '\n';
  } else {
    out << to_string(d) << '\n';
  }
  return kExitOk;
}

int cmd_gr(const Options& opts, std::istream& in, std::ostream& out) {
  RingElement e = read_element(opts, ring_a(), in);
  if (e.is_zero()) throw UsageError("gr: zero has no leading form");
  RingElement g = gr(e);
  int n = deg(e).value();
  if (opts.json)
    out << Json{{"gr", to_string(g)}, {"degree", n}}.dump() << '\n';
  else
    out << to_string(g) << '\n';
  return kExitOk;
}

int cmd_parse_check(const Options& opts, std::istream& in, std::ostream& out) {
  RingPtr ring = ring_by_name(opts.ring);
  Polynomial p = parse(read_expr(opts, in), ring->context());
  if (opts.json)
    out << Json{{"ok", true}, {"canonical", print(p)}}.dump() << '\n';
  else
    out << print(p) << '\n';
  return kExitOk;
}

int cmd_check_derivation(const Options& opts, std::ostream& out) {
  try {
    Derivation d = read_derivation(opts);
    if (opts.json)
      out << Json{{"valid", true}, {"ring", d.ring()->name()}, {"residue", "0"}}.dump() << '\n';
    else
      out << "valid\n";
    return kExitOk;
  } catch (const IncompatibleImages& e) {
    if (opts.json)
      out << Json{{"valid", false}, {"residue", to_string(e.residue())}}.dump() << '\n';
    else
      out << "invalid: residue " << to_string(e.residue()) << '\n';
    return kExitCheckFailed;
  }
}

int cmd_lnd(const Options& opts, std::ostream& out) {
  Derivation d = read_derivation(opts);
  NilpotencyReport r = lnd_bounded(d, opts.bound);
  bool ok = r.verdict == NilpotencyVerdict::locally_nilpotent;
  const char* verdict = ok ? "locally_nilpotent" : "unknown";
  if (opts.json) {
    Json orders = Json::object();
    for (std::size_t i = 0; i < r.generators.size(); ++i)
      orders[r.generators[i]] = r.orders[i] ? Json(*r.orders[i]) : Json(nullptr);
    out << Json{{"bound", r.bound}, {"orders", orders}, {"verdict", verdict}}.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < r.generators.size(); ++i)
      out << r.generators[i] << ": "
          << (r.orders[i] ? std::to_string(*r.orders[i]) : "unknown at bound " + std::to_string(r.bound))
          << '\n';
    out << "verdict: " << verdict << '\n';
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_ell(const Options& opts, std::ostream& out) {
  Derivation d = read_derivation(opts);
  int ell = degree_ell(d);
  if (opts.json)
    out << Json{{"ell", ell}}.dump() << '\n';
  else
    out << ell << '\n';
  return kExitOk;
}

int cmd_induce(const Options& opts, std::ostream& out) {
  Derivation d = read_derivation(opts);
  if (!same_ring(d.ring(), ring_a())) throw UsageError("induce expects a derivation on ring A");
  Derivation delta = induced_graded(d, opts.bound);
  int ell = degree_ell(delta);
  if (opts.json) {
    Json j = images_json(delta.generators(), delta.images(), "d");
    j["ring"] = "B";
    j["degree"] = ell;
    out << j.dump() << '\n';
  } else {
    print_images(out, delta.generators(), delta.images(), "d", ": ");
    out << "degree: " << ell << '\n';
  }
  return kExitOk;
}

int cmd_flow(const Options& opts, std::ostream& out) {
  Derivation d = read_derivation(opts);
  RingEndomorphism e = flow(d, opts.param, opts.bound);
  auto gens = e.source()->generators();
  if (opts.json)
    out << images_json(gens, e.images(), "").dump() << '\n';
  else
    print_images(out, gens, e.images(), "", " -> ");
  return kExitOk;
}

int cmd_invariance(const Options& opts, std::ostream& out) {
  Derivation d = graded_derivation(opts);
  std::vector<Locus> loci;
  if (opts.locus.empty()) {
    loci = {Locus::F_plus, Locus::F_minus, Locus::V_slice};
  } else if (auto l = locus_by_name(opts.locus)) {
    loci = {*l};
  } else {
    throw UsageError("unknown locus '" + opts.locus + "' (expected F_plus, F_minus, V_slice)");
  }
  Json j = Json::object();
  for (Locus l : loci) {
    InvarianceResult r = invariance_check(d, l);
    if (opts.json) {
      j[to_string(l)] = {{"invariant", r.invariant}, {"residue", to_string(r.residue)}};
    } else {
      out << to_string(l) << ": " << (r.invariant ? "invariant" : "not invariant");
      if (!r.invariant) out << " (residue " << to_string(r.residue) << ")";
      out << '\n';
    }
  }
  if (opts.json) out << j.dump() << '\n';
  return kExitOk;
}

int cmd_kernel_chain(const Options& opts, std::istream& in, std::ostream& out) {
  Derivation d = graded_derivation(opts);
  RingElement f = read_element(opts, d.ring(), in);
  KernelChain chain = kernel_chain(d, f, opts.bound);
  if (opts.json)
    out << Json{{"nu", chain.nu}, {"element", to_string(chain.element)}, {"degree", chain.degree}}
               .dump()
        << '\n';
  else
    out << "nu: " << chain.nu << "\nelement: " << to_string(chain.element)
        << "\ndegree: " << chain.degree << '\n';
  return kExitOk;
}

int cmd_random_point(const Options& opts, std::ostream& out) {
  Surface surface;
  std::string which = opts.surface;
  if (which.empty()) {
    if (opts.ring == "A") which = "X";
    else if (opts.ring == "B") which = "W";
    else throw UsageError("random-point needs --ring A|B or --surface X|W");
  }
  if (which == "X") surface = Surface::X;
  else if (which == "W") surface = Surface::W;
  else throw UsageError("unknown surface '" + which + "' (expected X or W)");
  auto p = random_point(surface, opts.seed);
  if (opts.json) {
    Json j = Json::object();
    for (const char* v : {"x", "y", "z", "t"}) j[v] = to_string(p.at(v));
    out << j.dump() << '\n';
  } else {
    for (const char* v : {"x", "y", "z", "t"}) out << v << " = " << to_string(p.at(v)) << '\n';
  }
  return kExitOk;
}

int cmd_verify_paper(const Options& opts, std::ostream& out) {
  SuiteSizes sizes = acceptance_sizes();
  sizes.oracle_samples = opts.samples;
  auto results = run_all(opts.seed, sizes);
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  if (opts.json) {
    out << report_json(results) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.id << "  " << r.description;
      if (!r.passed()) out << "\n     witness: " << r.witness;
      out << '\n';
    }
    std::size_t passed = std::count_if(results.begin(), results.end(),
                                       [](const auto& r) { return r.passed(); });
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact computations on Russell's hypersurface x + x^2 y + z^3 + t^2 = 0",
               "russell"};
  app.require_subcommand(1);
  Options opts;

  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", opts.ring, "Ring: A, B, Neil or V")->capture_default_str();
  };
  auto add_expr = [&](CLI::App* sub) {
    sub->add_option("--expr", opts.expr, "Polynomial expression (default: standard input)");
  };
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("--file", opts.file, "Derivation JSON file")->required();
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", opts.bound, "Nilpotency iteration bound")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opts.json, "Machine-readable output"); };

  auto* nf_cmd = app.add_subcommand("nf", "Normal form of an expression");
  add_ring(nf_cmd); add_expr(nf_cmd); add_json(nf_cmd);
  auto* deg_cmd = app.add_subcommand("deg", "Filtration degree of an element of A");
  add_ring(deg_cmd); add_expr(deg_cmd); add_json(deg_cmd);
  auto* gr_cmd = app.add_subcommand("gr", "Leading form in B of a nonzero element of A");
  add_expr(gr_cmd); add_json(gr_cmd);
  auto* parse_cmd = app.add_subcommand("parse-check", "Parse and print canonically");
  add_ring(parse_cmd); add_expr(parse_cmd); add_json(parse_cmd);
  auto* check_cmd = app.add_subcommand("check-derivation", "Validate a derivation file");
  add_file(check_cmd); add_json(check_cmd);
  auto* lnd_cmd = app.add_subcommand("lnd", "Bounded local nilpotency certificate");
  add_file(lnd_cmd); add_bound(lnd_cmd); add_json(lnd_cmd);
  auto* ell_cmd = app.add_subcommand("ell", "Degree l of a derivation");
  add_file(ell_cmd); add_json(ell_cmd);
  auto* induce_cmd = app.add_subcommand("induce", "Induced homogeneous derivation on B");
  add_file(induce_cmd); add_bound(induce_cmd); add_json(induce_cmd);
  auto* flow_cmd = app.add_subcommand("flow", "Flow exp(tau d) of a locally nilpotent derivation");
  add_file(flow_cmd); add_bound(flow_cmd); add_json(flow_cmd);
  flow_cmd->add_option("--param", opts.param, "Flow parameter name")->capture_default_str();
  auto* inv_cmd = app.add_subcommand("invariance", "Invariance of F_plus, F_minus, V_slice");
  add_file(inv_cmd); add_bound(inv_cmd); add_json(inv_cmd);
  inv_cmd->add_option("--locus", opts.locus, "F_plus, F_minus or V_slice (default: all)");
  auto* kc_cmd = app.add_subcommand("kernel-chain", "Last nonzero iterate d^nu(f)");
  add_file(kc_cmd); add_expr(kc_cmd); add_bound(kc_cmd); add_json(kc_cmd);
  auto* rp_cmd = app.add_subcommand("random-point", "Seeded rational point of X or W");
  add_ring(rp_cmd); add_json(rp_cmd);
  rp_cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  rp_cmd->add_option("--surface", opts.surface, "X or W (default: from --ring)");
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run the full verification suite");
  add_json(verify_cmd);
  verify_cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  verify_cmd->add_option("--samples", opts.samples, "Evaluation samples for the point oracle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (nf_cmd->parsed()) return cmd_nf(opts, in, out);
    if (deg_cmd->parsed()) return cmd_deg(opts, in, out);
    if (gr_cmd->parsed()) return cmd_gr(opts, in, out);
    if (parse_cmd->parsed()) return cmd_parse_check(opts, in, out);
    if (check_cmd->parsed()) return cmd_check_derivation(opts, out);
    if (lnd_cmd->parsed()) return cmd_lnd(opts, out);
    if (ell_cmd->parsed()) return cmd_ell(opts, out);
    if (induce_cmd->parsed()) return cmd_induce(opts, out);
    if (flow_cmd->parsed()) return cmd_flow(opts, out);
    if (inv_cmd->parsed()) return cmd_invariance(opts, out);
    if (kc_cmd->parsed()) return cmd_kernel_chain(opts, in, out);
    if (rp_cmd->parsed()) return cmd_random_point(opts, out);
    if (verify_cmd->parsed()) return cmd_verify_paper(opts, out);
  } catch (const IncompatibleImages& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace russell::cli
