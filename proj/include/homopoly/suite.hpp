#pragma once

// The verification suite: named exact checks grouped into scopes, a
// calibration pass for the boundary conventions of the reduction chain, and
// JSON/text rendering of the resulting report.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "homopoly/chain.hpp"
#include "homopoly/report.hpp"

namespace homopoly {

enum class SuiteScope { EasyCases, CompoHomo, Hereditary, Chain, All };

SuiteScope parse_scope(const std::string& name);  // throws on unknown names
std::string to_string(SuiteScope scope);

struct SuiteOptions {
  SuiteScope scope = SuiteScope::All;
  int max_n = 3;
  std::uint64_t seed = 42;
  // When non-empty, the calibration outcome is cached here in a
  // version-stamped sidecar file and reused while the version matches.
  std::string cache_dir;
};

// Deterministic given (scope, max_n, seed); failures become report entries,
// never exceptions.  Scope All runs calibration first and verifies the chain
// under the chosen conventions; other scopes accept the defaults.
VerificationReport run_suite(const SuiteOptions& opts);

// JSON round-trip: report_from_json(report_to_json(r)) reproduces r exactly
// (wall-clock fields included; they are data once recorded).
nlohmann::json report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

// The same JSON with every timing field zeroed, for byte-stable comparisons.
nlohmann::json report_to_json_stable(const VerificationReport& report);

std::string render_report_text(const VerificationReport& report);

}  // namespace homopoly
