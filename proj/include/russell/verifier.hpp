#pragma once

// Named exact checks of the constructions around Russell's hypersurface, plus
// seeded randomized suites over the ring engine. Each check reports a
// witness: "0" on success, otherwise the nonzero residue in canonical form.

#include <cstdint>
#include <string>
#include <vector>

#include "russell/lnd.hpp"

namespace russell {

enum class Status { pass, fail };

struct CheckResult {
  std::string id;
  std::string description;
  std::string paper_ref;
  Status status = Status::fail;
  std::string witness;

  bool passed() const { return status == Status::pass; }
};

struct NamedDerivation {
  std::string name;
  Derivation derivation;
};

/// The bundled locally nilpotent derivations of A:
///   d1 = (0, -2t, 0, x^2), d2 = (0, -3z^2, x^2, 0).
std::vector<NamedDerivation> bundled_derivations();
/// d1, d2 together with the conjugates of each by the flow of the other at
/// s = 1 and s = -2.
std::vector<NamedDerivation> example_derivations_with_conjugates();

enum class EmbeddingVariant { standard, v_to_zero, swapped };
enum class CertificateVariant { standard, perturbed };

CheckResult check_embedding(EmbeddingVariant variant = EmbeddingVariant::standard);
CheckResult check_fiber_over_zero(std::uint64_t seed = 0);
CheckResult check_singular_locus(CertificateVariant variant = CertificateVariant::standard);
CheckResult check_gm_action();
CheckResult check_trivialization();
CheckResult check_limit_signs(std::uint64_t seed = 0);
CheckResult check_isotropy();
CheckResult check_deck_sigma();
CheckResult check_normalization(const Derivation& d);
CheckResult check_locus_dichotomy(const Derivation& d);
CheckResult check_kernel_chains();
CheckResult check_derivations_kill_x();
CheckResult check_flow_identities(const Derivation& d);
/// Passes iff every perturbed variant above fails with a nonzero residue.
CheckResult check_negative_controls();

struct SuiteSizes {
  int nf_pairs = 150;
  int confluence = 100;
  int basis = 150;
  int degree_oracle = 100;
  int degree_pairs = 60;
  int oracle_pairs = 60;
  int oracle_samples = 50;
  int leibniz = 40;
  int roundtrip = 150;
};

/// The sizes fixed by the acceptance criteria.
SuiteSizes acceptance_sizes();

CheckResult suite_nf_soundness(std::uint64_t seed, int pairs);
CheckResult suite_nf_confluence(std::uint64_t seed, int count);
CheckResult suite_basis_shape(std::uint64_t seed, int count);
CheckResult suite_degree_oracle(std::uint64_t seed, int count);
CheckResult suite_degree_additivity(std::uint64_t seed, int pairs);
CheckResult suite_gr_multiplicativity(std::uint64_t seed, int pairs);
CheckResult suite_filtration(std::uint64_t seed, int pairs);
CheckResult suite_oracle_concordance(std::uint64_t seed, int pairs, int samples);
CheckResult suite_leibniz(std::uint64_t seed, int count);
CheckResult suite_degree_shift(std::uint64_t seed, int count);
CheckResult suite_parse_roundtrip(std::uint64_t seed, int count);

/// Every named check and randomized suite, sorted by id.
std::vector<CheckResult> run_all(std::uint64_t seed, const SuiteSizes& sizes = {});

/// [{"id", "paper_ref", "status", "witness"}, ...]
std::string report_json(const std::vector<CheckResult>& results, int indent = 2);

}  // namespace russell
