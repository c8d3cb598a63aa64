#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <string>

#include "homopoly/suite.hpp"
#include "homopoly/version.hpp"

using namespace homopoly;

namespace {

const CheckRecord* find(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

SuiteOptions opts_for(SuiteScope scope, int max_n) {
  SuiteOptions o;
  o.scope = scope;
  o.max_n = max_n;
  return o;
}

}  // namespace

TEST_CASE("scope names parse and render") {
  CHECK(parse_scope("easy_cases") == SuiteScope::EasyCases);
  CHECK(parse_scope("chain") == SuiteScope::Chain);
  CHECK(to_string(SuiteScope::All) == "all");
  CHECK(to_string(parse_scope("compo_homo")) == "compo_homo");
  CHECK_THROWS_AS(parse_scope("everything"), std::invalid_argument);
}

TEST_CASE("easy cases pass at the acceptance sizes") {
  const VerificationReport rep = run_suite(opts_for(SuiteScope::EasyCases, 4));
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 4);
  CHECK(rep.suite == "easy_cases");
  CHECK(rep.version == kVersion);
  REQUIRE(find(rep, "loop_case_gate_count") != nullptr);
  CHECK(find(rep, "loop_case_gate_count")->sizes == std::vector<int>{2, 3, 4});
  CHECK(find(rep, "edgeless_target_equals_one") != nullptr);
  CHECK(!rep.calibration.ran);
}

TEST_CASE("component extraction checks pass and are seed-deterministic") {
  const VerificationReport a = run_suite(opts_for(SuiteScope::CompoHomo, 3));
  CHECK(a.all_pass());
  CHECK(a.checks.size() == 4);
  const CheckRecord* match = find(a, "component_extraction_matches_symbolic");
  REQUIRE(match != nullptr);
  CHECK(match->transcript.call_count > 0);
  CHECK(find(a, "extraction_call_count") != nullptr);

  const VerificationReport b = run_suite(opts_for(SuiteScope::CompoHomo, 3));
  CHECK(report_to_json_stable(a).dump(2) == report_to_json_stable(b).dump(2));
}

TEST_CASE("hereditary scope passes through size four") {
  const VerificationReport rep = run_suite(opts_for(SuiteScope::Hereditary, 4));
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 4);
  const CheckRecord* impure = find(rep, "subset_family_is_impure");
  REQUIRE(impure != nullptr);
  CHECK(impure->detail.find("divides") != std::string::npos);
}

TEST_CASE("chain scope records exactly one failing identity") {
  const VerificationReport rep = run_suite(opts_for(SuiteScope::Chain, 2));
  CHECK(rep.failed() == 1);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass == (c.name != "chain_cut2_from_G"));
    if (!c.pass) CHECK(!c.witness.empty());
  }
  const CheckRecord* g = find(rep, "chain_g_from_fmap");
  REQUIRE(g != nullptr);
  CHECK(g->sizes == std::vector<int>{2});
  CHECK(find(rep, "neighbor_identity_k3") != nullptr);
  const CheckRecord* repro = find(rep, "chain_transcripts_reproducible");
  REQUIRE(repro != nullptr);
  CHECK(repro->pass);

  CHECK_THROWS_AS(run_suite(opts_for(SuiteScope::Chain, 1)), std::invalid_argument);
}

TEST_CASE("full suite calibrates, reports honestly, and caches") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "homopoly-suite-cache-test";
  fs::remove_all(dir);

  SuiteOptions opts = opts_for(SuiteScope::All, 3);
  opts.cache_dir = dir.string();
  const VerificationReport rep = run_suite(opts);

  CHECK(rep.calibration.ran);
  CHECK(!rep.calibration.from_cache);
  CHECK(!rep.calibration.unique_full_pass);
  CHECK(rep.calibration.full_pass_combinations == 0);
  CHECK(rep.calibration.best_pass_count == 3);
  CHECK(!rep.calibration.chosen.empty());
  const bool notes_mention_cut2 =
      std::any_of(rep.calibration.notes.begin(), rep.calibration.notes.end(),
                  [](const std::string& s) {
                    return s.find("cut2_from_G") != std::string::npos;
                  });
  CHECK(notes_mention_cut2);

  REQUIRE(!rep.checks.empty());
  CHECK(rep.checks.front().name == "chain_calibration_unique");
  CHECK(rep.failed() == 2);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CHECK(c.pass == (c.name != "chain_calibration_unique" &&
                     c.name != "chain_cut2_from_G"));
  }

  const fs::path cache_file =
      dir / (std::string("calibration-v") + kVersion + ".json");
  CHECK(fs::exists(cache_file));

  // Second run reuses the sidecar; the reports agree byte for byte once
  // timing fields are zeroed.
  const VerificationReport again = run_suite(opts);
  CHECK(again.calibration.from_cache);
  CHECK(report_to_json_stable(rep).dump(2) ==
        report_to_json_stable(again).dump(2));

  // Round trip, wall times included.
  const VerificationReport back = report_from_json(report_to_json(rep));
  CHECK(report_to_json(back) == report_to_json(rep));

  const std::string text = render_report_text(rep);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") != std::string::npos);
  CHECK(text.find("chain_cut2_from_G") != std::string::npos);

  fs::remove_all(dir);
}
