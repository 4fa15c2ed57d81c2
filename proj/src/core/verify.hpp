#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "block.hpp"

namespace w2b {

/// A sweep runs a set of named invariant checks over every weight-2 block
/// with e in e_range and |core| <= max_core_size.  Cores are iterated by
/// ascending size, then descending lexicographic order.
struct SweepConfig {
  std::vector<int> e_range = {2, 3, 4, 5};
  int max_core_size = 10;
  std::vector<long long> p_values = {0, 3, 5};  // 0 or odd primes
  std::vector<std::string> checks;              // empty = all
  int threads = 0;                              // 0 = W2BLOCKS_THREADS or hardware
};

/// Canonical check order; unknown names are rejected up front.
const std::vector<std::string>& all_check_names();

void validate_config(const SweepConfig& cfg);

/// The blocks a config sweeps, in iteration order.
std::vector<BlockId> sweep_blocks(const SweepConfig& cfg);

/// Outcome of one check on one block.
struct CheckResult {
  std::string check;
  BlockId block;
  bool passed = true;
  long long assertions = 0;
  double wall_ms = 0.0;
  nlohmann::ordered_json witness;  // null unless failed; first failure only
};

struct CheckSummary {
  std::string check;
  long long blocks_passed = 0;
  long long blocks_failed = 0;
  long long assertions = 0;
  double wall_ms = 0.0;
  nlohmann::ordered_json witness;  // first failure in sweep order
};

struct VerificationReport {
  SweepConfig config;
  std::vector<BlockId> blocks;
  std::vector<CheckResult> results;  // check-major, then sweep order
  std::vector<CheckSummary> summary;
  bool all_passed = true;
  double wall_ms = 0.0;
};

/// Run the battery.  Blocks are evaluated concurrently; everything except
/// the timing fields is deterministic for a given config.
VerificationReport run_verification(const SweepConfig& cfg);

nlohmann::ordered_json json_config(const SweepConfig& cfg);
SweepConfig config_from_json(const nlohmann::ordered_json& j);
nlohmann::ordered_json json_report(const VerificationReport& rep);
std::string text_report(const VerificationReport& rep);

}  // namespace w2b
