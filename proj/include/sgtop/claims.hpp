#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgtop/enumerate.hpp"
#include "sgtop/predicates.hpp"
#include "sgtop/spaces.hpp"
#include "sgtop/symbolic.hpp"

namespace sgtop {

struct ClaimConfig {
  int max_n = 4;
  bool symbolic = true;
  std::uint64_t seed = 20260809;
  /// Fault-injection hook: name of a deliberate predicate corruption (see
  /// mutation_registry()). Used to confirm the harness catches bugs.
  std::string mutation;
};

enum class ClaimResult { Pass, Fail, Skipped };

/// Outcome of verifying one claim: the quantification universe, how many
/// instances were checked, pass/fail, and on failure a witness that can be
/// replayed through fresh module instances.
struct PropertyReport {
  std::string id;
  std::string description;
  std::string universe;
  std::uint64_t instances = 0;
  ClaimResult result = ClaimResult::Pass;
  nlohmann::ordered_json witness;  // null unless fail
  nlohmann::ordered_json details;  // optional extra payload on pass
  double wall_ms = 0.0;

  nlohmann::ordered_json to_json(bool include_wall = true) const;
};

/// The closed registry of verifiable claims.
const std::vector<std::string>& claim_registry();
bool is_known_claim(const std::string& id);
const std::string& claim_description(const std::string& id);

/// Known fault injections accepted by ClaimConfig::mutation.
const std::vector<std::string>& mutation_registry();

PropertyReport verify_claim(const std::string& id, const ClaimConfig& config = {});

/// Re-evaluates a failure witness through freshly built spaces and
/// predicates; returns true when the violation reproduces.
bool replay_witness(const std::string& id, const nlohmann::json& witness);

/// Record of a minimal violation of a known-false universal statement.
struct CounterexampleRecord {
  std::string target;
  int carrier_size = 0;
  FinTopology space;
  std::vector<PtSet> sets;
  std::vector<std::string> transcript;

  nlohmann::ordered_json to_json() const;
};

/// Registry of known-false universals the miner can search for.
const std::vector<std::string>& counterexample_targets();

/// Scans the enumeration in deterministic order (ascending carrier, then
/// topology order, then subset encodings) and returns the first violation.
std::optional<CounterexampleRecord> search_counterexample(const std::string& target, int max_n);

bool replay_counterexample(const nlohmann::json& record);

struct SuiteConfig : ClaimConfig {
  std::vector<std::string> claims;  // empty = whole registry
  int workers = 1;
};

struct SuiteResult {
  std::vector<PropertyReport> reports;
  bool all_pass = false;
  int exit_code = 0;  // 0 pass, 1 violation found
};

SuiteResult run_suite(const SuiteConfig& config);

/// Versioned report document ("schema_version": 1). Identical config and
/// seed produce byte-identical output except for the wall-time fields
/// (which include_wall = false drops).
nlohmann::ordered_json suite_report_json(const SuiteConfig& config,
                                         const std::vector<PropertyReport>& reports,
                                         bool include_wall = true);

}  // namespace sgtop
