#include <doctest.h>

#include "sgtop/claims.hpp"

using namespace sgtop;

namespace {

ClaimConfig small_config() {
  ClaimConfig cfg;
  cfg.max_n = 3;
  return cfg;
}

}  // namespace

TEST_CASE("registry is total and described") {
  CHECK(claim_registry().size() == 24);
  for (const auto& id : claim_registry()) {
    CHECK(is_known_claim(id));
    CHECK_FALSE(claim_description(id).empty());
  }
  CHECK_FALSE(is_known_claim("NOT_A_CLAIM"));
  CHECK_THROWS_AS(verify_claim("NOT_A_CLAIM"), UnknownClaim);
}

TEST_CASE("representative claims pass at n <= 3") {
  for (const char* id : {"P1_hsg_char", "SG_char_closed", "X2_subsets_sg_open",
                         "R3_i_union_closed", "DP1_regular_open_iff", "SEMITD_coincide",
                         "E1_ii_product_nd", "THM1_sym"}) {
    PropertyReport r = verify_claim(id, small_config());
    CHECK(r.result == ClaimResult::Pass);
    CHECK(r.instances > 0);
    CHECK(r.witness.is_null());
  }
}

TEST_CASE("the indiscrete three-way equivalence is refuted as stated") {
  // The registry checks it verbatim, so the claim reports the refutation:
  // the two-point discrete space has every subset hsg-closed (x1 is empty)
  // without being indiscrete. The legs that do hold are covered by
  // dedicated predicate tests.
  PropertyReport r = verify_claim("INDISCRETE_iff_hsg", small_config());
  REQUIRE(r.result == ClaimResult::Fail);
  REQUIRE_FALSE(r.witness.is_null());
  CHECK(r.witness["topology"]["n"] == 2);
  CHECK(r.witness["indiscrete"] == false);
  CHECK(r.witness["all_subsets_hsg_closed"] == true);
  CHECK(r.witness["x1_empty"] == true);
  CHECK(replay_witness("INDISCRETE_iff_hsg", r.witness));

  auto rec = search_counterexample("all-hsg-implies-indiscrete", 3);
  REQUIRE(rec.has_value());
  CHECK(rec->carrier_size == 2);
  CHECK(rec->space == catalog("discrete:2"));
  CHECK(replay_counterexample(rec->to_json()));
}

TEST_CASE("config guards") {
  ClaimConfig cfg;
  cfg.max_n = 7;
  CHECK_THROWS_AS(verify_claim("P1_hsg_char", cfg), CarrierTooLarge);
  cfg.max_n = 3;
  cfg.mutation = "not-a-mutation";
  CHECK_THROWS_AS(verify_claim("P1_hsg_char", cfg), BadParameter);
}

TEST_CASE("symbolic claims skip when symbolic is disabled") {
  ClaimConfig cfg = small_config();
  cfg.symbolic = false;
  PropertyReport r = verify_claim("THM1_sym", cfg);
  CHECK(r.result == ClaimResult::Skipped);
}

TEST_CASE("fault injection is caught and the witness replays") {
  ClaimConfig cfg = small_config();
  cfg.mutation = "sg-closed-char-drop-x1";
  PropertyReport r = verify_claim("SG_char_closed", cfg);
  REQUIRE(r.result == ClaimResult::Fail);
  REQUIRE_FALSE(r.witness.is_null());
  CHECK(replay_witness("SG_char_closed", r.witness));

  // The same witness does not reproduce once the fault is removed.
  nlohmann::json clean = r.witness;
  clean["mutation"] = "";
  CHECK_FALSE(replay_witness("SG_char_closed", clean));

  cfg.mutation = "hsg-char-use-x2";
  PropertyReport h = verify_claim("P1_hsg_char", cfg);
  REQUIRE(h.result == ClaimResult::Fail);
  CHECK(replay_witness("P1_hsg_char", h.witness));
}

TEST_CASE("suite run aggregates and reports deterministically") {
  SuiteConfig cfg;
  cfg.max_n = 2;
  cfg.claims = {"P1_hsg_char", "SG_char_open", "THM1_sym", "R3_iii_counterexample"};
  SuiteResult first = run_suite(cfg);
  CHECK(first.exit_code == 0);
  CHECK(first.all_pass);
  SuiteResult second = run_suite(cfg);
  CHECK(suite_report_json(cfg, first.reports, false).dump() ==
        suite_report_json(cfg, second.reports, false).dump());

  // Parallel execution returns the same report.
  SuiteConfig par = cfg;
  par.workers = 4;
  SuiteResult third = run_suite(par);
  nlohmann::ordered_json a = suite_report_json(cfg, first.reports, false);
  nlohmann::ordered_json b = suite_report_json(cfg, third.reports, false);
  a.erase("config");
  b.erase("config");
  CHECK(a.dump() == b.dump());

  nlohmann::ordered_json report = suite_report_json(cfg, first.reports);
  CHECK(report["schema_version"] == 1);
  CHECK(report["claims"].size() == 4);

  SuiteConfig bad = cfg;
  bad.claims = {"NOT_A_CLAIM"};
  CHECK_THROWS_AS(run_suite(bad), UnknownClaim);
}

TEST_CASE("suite exit code reflects injected failures") {
  SuiteConfig cfg;
  cfg.max_n = 2;
  cfg.claims = {"SG_char_closed"};
  cfg.mutation = "sg-closed-char-drop-x1";
  SuiteResult result = run_suite(cfg);
  CHECK(result.exit_code == 1);
  CHECK_FALSE(result.all_pass);
}

TEST_CASE("counterexample search finds the known minimal records") {
  auto hsg = search_counterexample("hsg-implies-nowhere-dense", 4);
  REQUIRE(hsg.has_value());
  CHECK(hsg->carrier_size == 1);
  CHECK(replay_counterexample(hsg->to_json()));

  auto semi = search_counterexample("sg-open-implies-semi-open", 4);
  REQUIRE(semi.has_value());
  CHECK(semi->carrier_size == 2);
  CHECK(replay_counterexample(semi->to_json()));

  // The smallest violation of pairwise-union closure needs three points:
  // two open singletons next to a point whose only neighbourhood is the
  // whole space. Their union is open with dense closure, so Int(cl) grows
  // to the full carrier and meets x1.
  auto uni = search_counterexample("union-of-two-sg-closed-sg-closed", 4);
  REQUIRE(uni.has_value());
  CHECK(uni->carrier_size == 3);
  CHECK(replay_counterexample(uni->to_json()));
  CHECK_FALSE(search_counterexample("union-of-two-sg-closed-sg-closed", 2).has_value());

  auto mixed = search_counterexample("sg-closed-union-semi-closed-sg-closed", 4);
  REQUIRE(mixed.has_value());
  CHECK(mixed->carrier_size == 3);
  CHECK(replay_counterexample(mixed->to_json()));

  CHECK_THROWS_AS(search_counterexample("perpetuum-mobile", 3), UnknownTarget);
}
