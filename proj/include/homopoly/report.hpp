#pragma once

// Verification report types shared by the suite runner and the CLI.

#include <cstdint>
#include <string>
#include <vector>

#include "homopoly/reduction.hpp"

namespace homopoly {

struct CheckRecord {
  std::string name;    // stable identifier, e.g. "chain_g_from_fmap"
  std::string claim;   // one-sentence statement of what the check asserts
  std::vector<int> sizes;
  bool pass = false;
  std::string witness;  // non-empty whenever pass is false
  std::string detail;   // conventions, counts, factors, auxiliary verdicts
  OracleTranscript transcript;  // aggregate oracle activity, when applicable
  double wall_ms = 0.0;
};

struct CalibrationSummary {
  bool ran = false;
  bool unique_full_pass = false;
  int full_pass_combinations = 0;
  int best_pass_count = 0;
  std::string chosen;  // rendered convention set actually used by the suite
  std::vector<std::string> notes;
  bool from_cache = false;  // run metadata; not serialized
};

struct VerificationReport {
  std::string suite;
  std::string version;
  std::uint64_t seed = 0;
  int max_n = 0;
  CalibrationSummary calibration;
  std::vector<CheckRecord> checks;

  int passed() const {
    int k = 0;
    for (const auto& c : checks) k += c.pass ? 1 : 0;
    return k;
  }
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

}  // namespace homopoly
