#include <gtest/gtest.h>

#include <set>

#include "json.hpp"
#include "support.hpp"
#include "russell/verifier.hpp"

using namespace russell;

namespace {

void expect_pass(const CheckResult& r) {
  EXPECT_TRUE(r.passed()) << r.id << ": " << r.witness;
  EXPECT_EQ(r.witness, "0") << r.id;
}

void expect_fail(const CheckResult& r) {
  EXPECT_FALSE(r.passed()) << r.id;
  EXPECT_FALSE(r.witness.empty());
  EXPECT_NE(r.witness, "0");
}

}  // namespace

TEST(Geometry, NamedChecksPass) {
  expect_pass(check_embedding());
  expect_pass(check_fiber_over_zero(0));
  expect_pass(check_singular_locus());
  expect_pass(check_gm_action());
  expect_pass(check_trivialization());
  expect_pass(check_limit_signs(0));
  expect_pass(check_isotropy());
  expect_pass(check_deck_sigma());
}

TEST(Geometry, NegativeControlsFailWithResidue) {
  CheckResult v0 = check_embedding(EmbeddingVariant::v_to_zero);
  expect_fail(v0);
  EXPECT_NE(v0.witness.find("-1*x^2*y"), std::string::npos) << v0.witness;
  expect_fail(check_embedding(EmbeddingVariant::swapped));
  CheckResult cert = check_singular_locus(CertificateVariant::perturbed);
  expect_fail(cert);
  EXPECT_NE(cert.witness.find("x^2"), std::string::npos) << cert.witness;
  expect_pass(check_negative_controls());
}

TEST(Derivations, NamedChecksPass) {
  for (const auto& [name, d] : bundled_derivations()) {
    expect_pass(check_flow_identities(d));
    expect_pass(check_normalization(induced_graded(d)));
    expect_pass(check_locus_dichotomy(induced_graded(d)));
    expect_fail(check_normalization(d));
  }
  expect_pass(check_kernel_chains());
  expect_pass(check_derivations_kill_x());
  EXPECT_EQ(example_derivations_with_conjugates().size(), 6u);
}

TEST(Suites, SmallRunsPass) {
  expect_pass(suite_nf_soundness(1, 20));
  expect_pass(suite_nf_confluence(1, 20));
  expect_pass(suite_basis_shape(1, 20));
  expect_pass(suite_degree_oracle(1, 20));
  expect_pass(suite_degree_additivity(1, 10));
  expect_pass(suite_gr_multiplicativity(1, 10));
  expect_pass(suite_filtration(1, 10));
  expect_pass(suite_oracle_concordance(1, 10, 10));
  expect_pass(suite_leibniz(1, 10));
  expect_pass(suite_degree_shift(1, 10));
  expect_pass(suite_parse_roundtrip(1, 20));
}

TEST(RunAll, PassesAndIsDeterministic) {
  SuiteSizes small{20, 20, 20, 20, 10, 10, 10, 10, 20};
  auto first = run_all(0, small);
  EXPECT_GE(first.size(), 8u);
  std::set<std::string> ids;
  for (const auto& r : first) {
    expect_pass(r);
    EXPECT_FALSE(r.paper_ref.empty()) << r.id;
    ids.insert(r.id);
  }
  EXPECT_EQ(ids.size(), first.size());
  EXPECT_TRUE(std::is_sorted(first.begin(), first.end(),
                             [](const auto& a, const auto& b) { return a.id < b.id; }));
  EXPECT_EQ(report_json(first), report_json(run_all(0, small)));
  for (std::uint64_t seed = 1; seed < 10; ++seed) {
    auto other = run_all(seed, small);
    ASSERT_EQ(other.size(), first.size());
    for (std::size_t i = 0; i < other.size(); ++i) {
      EXPECT_EQ(other[i].id, first[i].id);
      EXPECT_EQ(other[i].status, first[i].status) << other[i].id << " seed " << seed;
    }
  }
}

TEST(Report, JsonSchema) {
  std::vector<CheckResult> rs{check_embedding(), check_embedding(EmbeddingVariant::swapped)};
  auto doc = nlohmann::json::parse(report_json(rs));
  ASSERT_TRUE(doc.is_array());
  ASSERT_EQ(doc.size(), 2u);
  for (const auto& item : doc) {
    ASSERT_EQ(item.size(), 4u);
    for (const char* k : {"id", "paper_ref", "status", "witness"}) {
      ASSERT_TRUE(item.contains(k)) << k;
      EXPECT_TRUE(item[k].is_string());
    }
  }
  EXPECT_EQ(doc[0]["status"], "pass");
  EXPECT_EQ(doc[0]["witness"], "0");
  EXPECT_EQ(doc[1]["status"], "fail");
}
