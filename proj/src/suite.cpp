#include "homopoly/suite.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "homopoly/circuit.hpp"
#include "homopoly/families.hpp"
#include "homopoly/rng.hpp"
#include "homopoly/serialize.hpp"
#include "homopoly/version.hpp"

namespace homopoly {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

void push_check(VerificationReport& rep, CheckRecord rec, const Timer& timer) {
  rec.wall_ms = timer.ms();
  if (!rec.pass && rec.witness.empty()) rec.witness = "see detail";
  rep.checks.push_back(std::move(rec));
}

std::string coeff_witness(const SparsePolynomial& constructed,
                          const SparsePolynomial& target, const Monomial& m) {
  std::ostringstream os;
  os << "monomial " << monomial_str(m) << ": constructed coefficient "
     << to_string(constructed.coefficient(m)) << ", target coefficient "
     << to_string(target.coefficient(m));
  return os.str();
}

std::string render_conventions(const ChainConventions& conv) {
  std::ostringstream os;
  os << "g summand range " << to_string(conv.g_range) << "; clique sum "
     << to_string(conv.clique_range) << ", constant "
     << (conv.clique_constant ? "included" : "omitted") << "; F target "
     << to_string(conv.f_target) << ", trivial subsets "
     << (conv.cut_trivial ? "included" : "omitted") << "; cut2 extraction "
     << to_string(conv.cut2_range);
  return os.str();
}

void merge_transcript(OracleTranscript& into, const OracleTranscript& from) {
  into.call_count += from.call_count;
  into.substitution_count += from.substitution_count;
  into.arithmetic_ops += from.arithmetic_ops;
  into.scales.insert(into.scales.end(), from.scales.begin(), from.scales.end());
}

// ---------------------------------------------------------------- easy cases

void run_easy_cases(VerificationReport& rep, int max_n) {
  const int hi = std::min(4, max_n);
  const Graph looped = make_family(FamilyKind::SingleLoopedVertex, 1);

  {
    Timer t;
    CheckRecord rec;
    rec.name = "loop_case_circuit_matches_brute_force";
    rec.claim =
        "expanding the looped-target circuit reproduces the brute-force "
        "enumerator exactly";
    rec.pass = true;
    for (int n = 2; n <= hi; ++n) {
      rec.sizes.push_back(n);
      const ArithmeticCircuit c = build_loop_case_circuit(n);
      c.validate();
      const SparsePolynomial expanded = c.expand();
      const SparsePolynomial brute = hom_poly(looped, n);
      if (expanded != brute) {
        rec.pass = false;
        rec.witness = "n=" + std::to_string(n) + ": expansion differs from enumeration";
        break;
      }
    }
    push_check(rep, std::move(rec), t);
  }
  {
    Timer t;
    CheckRecord rec;
    rec.name = "loop_case_gate_count";
    rec.claim = "the looped-target circuit has n(n-1)/2 + 1 operation gates";
    rec.pass = true;
    std::ostringstream detail;
    for (int n = 2; n <= hi; ++n) {
      rec.sizes.push_back(n);
      const ArithmeticCircuit c = build_loop_case_circuit(n);
      const int expected = n * (n - 1) / 2 + 1;
      detail << "n=" << n << ": " << c.size() << " gates; ";
      if (c.size() != expected) {
        rec.pass = false;
        rec.witness = "n=" + std::to_string(n) + ": " + std::to_string(c.size()) +
                      " gates, expected " + std::to_string(expected);
      }
    }
    rec.detail = detail.str();
    push_check(rep, std::move(rec), t);
  }
  {
    Timer t;
    CheckRecord rec;
    rec.name = "loop_case_constant_depth";
    rec.claim = "the looped-target circuit depth does not grow with n";
    rec.pass = true;
    int first_depth = -1;
    std::ostringstream detail;
    for (int n = 2; n <= hi; ++n) {
      rec.sizes.push_back(n);
      const int d = build_loop_case_circuit(n).depth();
      detail << "n=" << n << ": depth " << d << "; ";
      if (first_depth < 0) first_depth = d;
      if (d != first_depth) {
        rec.pass = false;
        rec.witness = "depth changed from " + std::to_string(first_depth) + " to " +
                      std::to_string(d) + " at n=" + std::to_string(n);
      }
    }
    rec.detail = detail.str();
    push_check(rep, std::move(rec), t);
  }
  {
    Timer t;
    CheckRecord rec;
    rec.name = "edgeless_target_equals_one";
    rec.claim = "with an edgeless target only the empty edge set qualifies";
    rec.pass = true;
    const SparsePolynomial one = SparsePolynomial::constant(Rational(1));
    for (int hn : {1, 3}) {
      const Graph h = make_family(FamilyKind::Edgeless, hn);
      for (int n = 2; n <= hi; ++n) {
        if (rec.sizes.empty() || rec.sizes.back() != n) rec.sizes.push_back(n);
        if (hom_poly(h, n) != one) {
          rec.pass = false;
          rec.witness = "target on " + std::to_string(hn) + " vertices, n=" +
                        std::to_string(n) + ": result is not the constant 1";
        }
      }
    }
    push_check(rep, std::move(rec), t);
  }
}

// ------------------------------------------------------- component extraction

SparsePolynomial random_polynomial(Rng& rng, const std::vector<VarId>& pool,
                                   unsigned max_degree) {
  SparsePolynomial p;
  const int terms = static_cast<int>(rng.range(1, 8));
  for (int t = 0; t < terms; ++t) {
    std::map<VarId, unsigned> exps;
    unsigned budget = max_degree;
    for (const VarId& v : pool) {
      if (budget == 0) break;
      const unsigned e = static_cast<unsigned>(
          rng.below(std::min<std::uint64_t>(3, budget) + 1));
      if (e > 0) {
        exps[v] = e;
        budget -= e;
      }
    }
    const std::int64_t mag = rng.range(1, 9);
    const Rational coeff = rng.coin() ? Rational(mag) : Rational(-mag);
    p.add_term(Monomial(exps.begin(), exps.end()), coeff);
  }
  return p;
}

void run_compo_homo(VerificationReport& rep, std::uint64_t seed) {
  const std::vector<VarId> pool = {VarId::undirected(1, 2), VarId::undirected(1, 3),
                                   VarId::undirected(2, 3), VarId::aux("y")};
  constexpr int kInstances = 100;

  Timer t_match;
  CheckRecord match, above, counts, bases;
  match.name = "component_extraction_matches_symbolic";
  match.claim =
      "scaled evaluation with an exact interpolation solve recovers each "
      "homogeneous component's value";
  above.name = "component_above_degree_is_zero";
  above.claim = "asking for a component above the stated degree bound returns zero "
                "without consulting the oracle";
  counts.name = "extraction_call_count";
  counts.claim = "each extraction makes exactly degree bound + 1 oracle calls";
  bases.name = "scale_base_invariance";
  bases.claim = "the extracted value does not depend on the scaling base";
  match.pass = above.pass = counts.pass = bases.pass = true;
  match.detail = std::to_string(kInstances) + " seeded random polynomials, "
                 "up to 4 variables, degree at most 6";

  for (int i = 0; i < kInstances; ++i) {
    Rng rng = Rng::stream(seed, "compo_homo/" + std::to_string(i));
    const SparsePolynomial p = random_polynomial(rng, pool, 6);
    Oracle oracle(p);
    const int bound = oracle.degree_bound();
    Point point;
    for (const VarId& v : oracle.universe())
      point[v] = Rational(rng.range(1, 7));
    const int k = bound > 0 ? static_cast<int>(rng.range(0, bound)) : 0;

    const auto before = oracle.transcript()->call_count;
    const ExtractResult got = extract_homogeneous(oracle, k, {}, point);
    const Rational want = p.homogeneous_component(static_cast<unsigned>(k)).evaluate(point);
    if (match.pass && got.value != want) {
      match.pass = false;
      match.witness = "instance " + std::to_string(i) + ", degree " + std::to_string(k) +
                      ": extracted " + to_string(got.value) + ", symbolic " +
                      to_string(want);
    }
    if (counts.pass && (got.transcript.call_count != static_cast<std::size_t>(bound) + 1 ||
                        oracle.transcript()->call_count - before !=
                            static_cast<std::size_t>(bound) + 1)) {
      counts.pass = false;
      counts.witness = "instance " + std::to_string(i) + ": " +
                       std::to_string(got.transcript.call_count) + " calls for bound " +
                       std::to_string(bound);
    }

    const auto zero_before = oracle.transcript()->call_count;
    const int above_k = bound + 1 + static_cast<int>(rng.below(3));
    const ExtractResult nil = extract_homogeneous(oracle, above_k, {}, point);
    if (above.pass &&
        (nil.value != 0 || oracle.transcript()->call_count != zero_before)) {
      above.pass = false;
      above.witness = "instance " + std::to_string(i) + ", degree " +
                      std::to_string(above_k) + ": value " + to_string(nil.value) +
                      ", extra calls " +
                      std::to_string(oracle.transcript()->call_count - zero_before);
    }

    if (i % 10 == 0) {
      ExtractOptions opts;
      opts.scale_base = 3;
      const ExtractResult alt = extract_homogeneous(oracle, k, {}, point, opts);
      if (bases.pass && alt.value != got.value) {
        bases.pass = false;
        bases.witness = "instance " + std::to_string(i) + ": base 2 gives " +
                        to_string(got.value) + ", base 3 gives " + to_string(alt.value);
      }
    }
    merge_transcript(match.transcript, *oracle.transcript());
  }
  push_check(rep, std::move(match), t_match);
  push_check(rep, std::move(above), t_match);
  push_check(rep, std::move(counts), t_match);
  push_check(rep, std::move(bases), t_match);
}

// ------------------------------------------------------------------ hereditary

void run_hereditary(VerificationReport& rep, int max_n) {
  const int hi = std::min(4, max_n);
  const Graph edge = make_family(FamilyKind::Edge, 2);

  {
    Timer t;
    CheckRecord rec;
    rec.name = "closures_coincide_with_bipartite_monomials";
    rec.claim =
        "the hereditary closures of the two complete-bipartite families both "
        "equal the bipartite enumerator's monomial set";
    rec.pass = true;
    for (int n = 2; n <= hi; ++n) {
      rec.sizes.push_back(n);
      const MonomialSet mf = MonomialSet::from_polynomial(F_poly(n, true));
      const MonomialSet mg = MonomialSet::from_polynomial(G_poly(n));
      const MonomialSet mh = MonomialSet::from_polynomial(hom_poly(edge, n));
      if (!mh.is_hereditary()) {
        rec.pass = false;
        rec.witness = "n=" + std::to_string(n) + ": the enumerator set is not hereditary";
        break;
      }
      if (mf.hereditary_closure() != mh || mg.hereditary_closure() != mh) {
        rec.pass = false;
        rec.witness = "n=" + std::to_string(n) + ": a closure differs from the enumerator";
        break;
      }
    }
    push_check(rep, std::move(rec), t);
  }
  if (hi >= 3) {
    Timer t;
    CheckRecord rec;
    rec.name = "spanning_family_is_pure";
    rec.claim = "no two monomials of the spanning family are comparable";
    rec.pass = true;
    for (int n = 3; n <= hi; ++n) {
      rec.sizes.push_back(n);
      if (!MonomialSet::from_polynomial(G_poly(n)).is_pure()) {
        rec.pass = false;
        rec.witness = "n=" + std::to_string(n) + ": found comparable monomials";
      }
    }
    push_check(rep, std::move(rec), t);
  }
  if (hi >= 3) {
    Timer t;
    CheckRecord rec;
    rec.name = "subset_family_is_impure";
    rec.claim = "the subset family contains a comparable monomial pair";
    rec.pass = true;
    std::ostringstream detail;
    for (int n = 3; n <= hi; ++n) {
      rec.sizes.push_back(n);
      const MonomialSet mf = MonomialSet::from_polynomial(F_poly(n, true));
      const auto pair = mf.comparable_pair();
      if (mf.is_pure() || !pair) {
        rec.pass = false;
        rec.witness = "n=" + std::to_string(n) + ": no comparable pair found";
      } else {
        detail << "n=" << n << ": " << monomial_str(pair->first) << " divides "
               << monomial_str(pair->second) << "; ";
      }
    }
    rec.detail = detail.str();
    push_check(rep, std::move(rec), t);
  }
  if (hi >= 3) {
    Timer t;
    CheckRecord rec;
    rec.name = "purity_constant_term_conventions";
    rec.claim =
        "purity verdicts are reported under both constant-term conventions";
    rec.pass = true;
    std::ostringstream detail;
    for (int n = 3; n <= hi; ++n) {
      rec.sizes.push_back(n);
      const MonomialSet mf = MonomialSet::from_polynomial(F_poly(n, true));
      const MonomialSet mg = MonomialSet::from_polynomial(G_poly(n));
      detail << "n=" << n << ": spanning family pure=" << mg.is_pure(true)
             << " (constant excluded) / " << mg.is_pure(false)
             << " (included); subset family pure=" << mf.is_pure(true) << " / "
             << mf.is_pure(false) << "; ";
    }
    rec.detail = detail.str();
    push_check(rep, std::move(rec), t);
  }
}

// ----------------------------------------------------------------- chain scope

std::vector<std::pair<std::string, Graph>> neighbor_zoo() {
  return {
      {"k2", make_family(FamilyKind::Complete, 2)},
      {"p3", make_family(FamilyKind::Path, 3)},
      {"k3", make_family(FamilyKind::Complete, 3)},
      {"c4", make_family(FamilyKind::Cycle, 4)},
      {"c5", make_family(FamilyKind::Cycle, 5)},
      {"k4", make_family(FamilyKind::Complete, 4)},
      {"k23", make_family(FamilyKind::CompleteBipartite, 2, 3)},
  };
}

void record_identity(VerificationReport& rep, const std::string& name,
                     const std::string& claim, const std::vector<int>& sizes,
                     const std::function<ChainStep(int)>& run) {
  Timer t;
  CheckRecord rec;
  rec.name = name;
  rec.claim = claim;
  rec.pass = true;
  std::ostringstream detail;
  for (int n : sizes) {
    rec.sizes.push_back(n);
    const ChainStep step = run(n);
    merge_transcript(rec.transcript, step.transcript);
    detail << "n=" << n << ": " << (step.pass ? "exact" : "differs") << ", "
           << step.transcript.call_count << " oracle calls (expected "
           << step.expected_calls << ")";
    if (step.factor) detail << ", factor " << to_string(*step.factor);
    if (step.diagnostic_pass)
      detail << ", diagnostic " << (*step.diagnostic_pass ? "holds" : "fails");
    detail << "; ";
    if (!step.pass && rec.witness.empty() && step.witness)
      rec.witness = coeff_witness(step.constructed, step.target, *step.witness);
    if (!step.pass) rec.pass = false;
    if (!step.spot_check_ok) {
      rec.pass = false;
      if (rec.witness.empty())
        rec.witness = "n=" + std::to_string(n) + ": oracle-path spot check failed";
    }
    if (step.transcript.call_count != step.expected_calls) {
      rec.pass = false;
      if (rec.witness.empty())
        rec.witness = "n=" + std::to_string(n) + ": observed " +
                      std::to_string(step.transcript.call_count) +
                      " oracle calls, expected " + std::to_string(step.expected_calls);
    }
    if (!step.detail.empty() && n == sizes.front()) detail << "[" << step.detail << "] ";
  }
  rec.detail = detail.str();
  push_check(rep, std::move(rec), t);
}

void run_chain_scope(VerificationReport& rep, int max_n, std::uint64_t /*seed*/,
                     const ChainConventions& conv) {
  if (max_n < 2)
    throw std::invalid_argument("the chain scope needs max_n >= 2");
  std::vector<int> sizes;
  for (int n = 2; n <= std::min(3, max_n); ++n) sizes.push_back(n);

  for (const auto& [tag, g] : neighbor_zoo()) {
    Timer t;
    CheckRecord rec;
    rec.name = "neighbor_identity_" + tag;
    rec.claim =
        "merging the last vertex's edges and taking the top component in the "
        "merged variable reproduces the neighborhood-union enumerator";
    rec.pass = true;
    std::vector<int> my_sizes = sizes;
    if (tag == "k3" && max_n >= 4) my_sizes.push_back(4);
    for (int n : my_sizes) {
      rec.sizes.push_back(n);
      const ChainStep step = neighbor_step(g, n);
      merge_transcript(rec.transcript, step.transcript);
      if (!step.pass || !step.spot_check_ok ||
          step.transcript.call_count != step.expected_calls) {
        rec.pass = false;
        if (step.witness)
          rec.witness = coeff_witness(step.constructed, step.target, *step.witness);
        else if (rec.witness.empty())
          rec.witness = "n=" + std::to_string(n) + ": spot check or call count failed";
      }
      if (n == my_sizes.front()) rec.detail = step.detail;
    }
    push_check(rep, std::move(rec), t);
  }

  {
    Timer t;
    CheckRecord rec;
    rec.name = "neighbor_iteration_degree_decreases";
    rec.claim =
        "iterating the neighborhood union strictly lowers the maximum degree "
        "until the process terminates";
    rec.pass = true;
    std::ostringstream detail;
    for (const auto& [tag, g] : neighbor_zoo()) {
      const NeighborTrace trace = iterate_neighbor(g);
      detail << tag << ": ";
      for (std::size_t i = 0; i < trace.max_degrees.size(); ++i)
        detail << trace.max_degrees[i] << (i + 1 < trace.max_degrees.size() ? ">" : "");
      detail << " (" << trace.outcome << "); ";
      for (std::size_t i = 0; i + 1 < trace.max_degrees.size(); ++i) {
        if (trace.max_degrees[i + 1] >= trace.max_degrees[i]) {
          rec.pass = false;
          rec.witness = tag + ": degree did not decrease at round " + std::to_string(i);
        }
      }
    }
    rec.detail = detail.str();
    push_check(rep, std::move(rec), t);
  }

  record_identity(rep, "chain_g_from_fmap",
                  "the inner summands extracted from the bipartite enumerator match "
                  "the spanning family up to one recorded rational factor",
                  sizes, [&](int n) { return g_from_fmap(n, conv); });
  record_identity(rep, "chain_clique_from_F",
                  "the staged projection of the doubled subset family sums to the "
                  "clique generating function",
                  sizes, [&](int n) { return clique_from_F(n, conv); });
  record_identity(rep, "chain_F_from_cut2",
                  "one substitution into the two-cut enumerator yields the subset "
                  "family in its recorded target form",
                  sizes, [&](int n) { return F_from_cut2(n, conv); });
  record_identity(rep, "chain_cut2_from_G",
                  "apex-extended spanning enumerator components sum to twice the "
                  "two-cut enumerator",
                  sizes, [&](int n) { return cut2_from_G(n, conv); });

  {
    Timer t;
    CheckRecord rec;
    rec.name = "chain_transcripts_reproducible";
    rec.claim = "repeating a step reproduces its oracle transcript exactly";
    const ChainStep a = g_from_fmap(2, conv);
    const ChainStep b = g_from_fmap(2, conv);
    rec.sizes = {2};
    rec.pass = a.transcript.call_count == b.transcript.call_count &&
               a.transcript.substitution_count == b.transcript.substitution_count &&
               a.transcript.arithmetic_ops == b.transcript.arithmetic_ops &&
               a.transcript.scales == b.transcript.scales;
    if (!rec.pass) rec.witness = "two identical runs disagreed on transcript contents";
    rec.detail = std::to_string(a.transcript.call_count) + " calls, " +
                 std::to_string(a.transcript.arithmetic_ops) + " arithmetic ops";
    push_check(rep, std::move(rec), t);
  }
}

// ------------------------------------------------------------ calibration cache

nlohmann::json calibration_to_json(const CalibrationOutcome& outcome) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["chosen"] = {
      {"g_range", static_cast<int>(outcome.chosen.g_range)},
      {"clique_range", static_cast<int>(outcome.chosen.clique_range)},
      {"clique_constant", outcome.chosen.clique_constant},
      {"f_target", static_cast<int>(outcome.chosen.f_target)},
      {"cut_trivial", outcome.chosen.cut_trivial},
      {"cut2_range", static_cast<int>(outcome.chosen.cut2_range)},
  };
  j["unique_full_pass"] = outcome.unique_full_pass;
  j["full_pass_combinations"] = outcome.full_pass_combinations;
  j["best_pass_count"] = outcome.best_pass_count;
  j["passing_options"] = outcome.passing_options;
  j["notes"] = outcome.notes;
  return j;
}

CalibrationOutcome calibration_from_json(const nlohmann::json& j) {
  CalibrationOutcome outcome;
  const auto& c = j.at("chosen");
  outcome.chosen.g_range = static_cast<GRange>(c.at("g_range").get<int>());
  outcome.chosen.clique_range =
      static_cast<CliqueRange>(c.at("clique_range").get<int>());
  outcome.chosen.clique_constant = c.at("clique_constant").get<bool>();
  outcome.chosen.f_target = static_cast<FTargetForm>(c.at("f_target").get<int>());
  outcome.chosen.cut_trivial = c.at("cut_trivial").get<bool>();
  outcome.chosen.cut2_range = static_cast<Cut2Range>(c.at("cut2_range").get<int>());
  outcome.unique_full_pass = j.at("unique_full_pass").get<bool>();
  outcome.full_pass_combinations = j.at("full_pass_combinations").get<int>();
  outcome.best_pass_count = j.at("best_pass_count").get<int>();
  outcome.passing_options =
      j.at("passing_options").get<std::map<std::string, std::vector<std::string>>>();
  outcome.notes = j.at("notes").get<std::vector<std::string>>();
  return outcome;
}

std::pair<CalibrationOutcome, bool> calibrate_with_cache(const std::string& cache_dir) {
  namespace fs = std::filesystem;
  std::string path;
  if (!cache_dir.empty()) {
    path = (fs::path(cache_dir) / (std::string("calibration-v") + kVersion + ".json"))
               .string();
    if (fs::exists(path)) {
      try {
        const nlohmann::json j = nlohmann::json::parse(read_file(path));
        if (j.at("version").get<std::string>() == kVersion)
          return {calibration_from_json(j), true};
      } catch (const std::exception&) {
        // A malformed cache is recomputed, never trusted.
      }
    }
  }
  CalibrationOutcome outcome = calibrate_chain(2, 3);
  if (!path.empty()) write_file_atomic(path, calibration_to_json(outcome).dump(2));
  return {outcome, false};
}

}  // namespace

SuiteScope parse_scope(const std::string& name) {
  if (name == "easy_cases") return SuiteScope::EasyCases;
  if (name == "compo_homo") return SuiteScope::CompoHomo;
  if (name == "hereditary") return SuiteScope::Hereditary;
  if (name == "chain") return SuiteScope::Chain;
  if (name == "all") return SuiteScope::All;
  throw std::invalid_argument("unknown suite scope \"" + name + "\"");
}

std::string to_string(SuiteScope scope) {
  switch (scope) {
    case SuiteScope::EasyCases: return "easy_cases";
    case SuiteScope::CompoHomo: return "compo_homo";
    case SuiteScope::Hereditary: return "hereditary";
    case SuiteScope::Chain: return "chain";
    case SuiteScope::All: return "all";
  }
  return "?";
}

VerificationReport run_suite(const SuiteOptions& opts) {
  VerificationReport rep;
  rep.suite = to_string(opts.scope);
  rep.version = kVersion;
  rep.seed = opts.seed;
  rep.max_n = opts.max_n;

  ChainConventions conv{};  // defaults; scope All replaces them with the calibrated set
  if (opts.scope == SuiteScope::All) {
    Timer t;
    auto [outcome, cached] = calibrate_with_cache(opts.cache_dir);
    rep.calibration.ran = true;
    rep.calibration.from_cache = cached;
    rep.calibration.unique_full_pass = outcome.unique_full_pass;
    rep.calibration.full_pass_combinations = outcome.full_pass_combinations;
    rep.calibration.best_pass_count = outcome.best_pass_count;
    rep.calibration.chosen = render_conventions(outcome.chosen);
    rep.calibration.notes = outcome.notes;
    for (const auto& [step, options] : outcome.passing_options) {
      std::string line = step + " passing options:";
      for (const auto& o : options) line += " {" + o + "}";
      rep.calibration.notes.push_back(std::move(line));
    }
    conv = outcome.chosen;

    CheckRecord rec;
    rec.name = "chain_calibration_unique";
    rec.claim =
        "exactly one boundary-convention combination satisfies all four chain "
        "identities at sizes 2 and 3";
    rec.sizes = {2, 3};
    rec.pass = outcome.unique_full_pass;
    if (!rec.pass) {
      std::ostringstream w;
      w << outcome.full_pass_combinations
        << " combinations satisfy all four; the best satisfies "
        << outcome.best_pass_count << " of 4";
      rec.witness = w.str();
    }
    rec.detail = render_conventions(outcome.chosen);
    push_check(rep, std::move(rec), t);
  }

  switch (opts.scope) {
    case SuiteScope::EasyCases:
      run_easy_cases(rep, opts.max_n);
      break;
    case SuiteScope::CompoHomo:
      run_compo_homo(rep, opts.seed);
      break;
    case SuiteScope::Hereditary:
      run_hereditary(rep, opts.max_n);
      break;
    case SuiteScope::Chain:
      run_chain_scope(rep, opts.max_n, opts.seed, conv);
      break;
    case SuiteScope::All:
      run_easy_cases(rep, opts.max_n);
      run_compo_homo(rep, opts.seed);
      run_hereditary(rep, opts.max_n);
      run_chain_scope(rep, opts.max_n, opts.seed, conv);
      break;
  }
  return rep;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["version"] = report.version;
  j["seed"] = report.seed;
  j["max_n"] = report.max_n;
  j["calibration"] = {
      {"ran", report.calibration.ran},
      {"unique_full_pass", report.calibration.unique_full_pass},
      {"full_pass_combinations", report.calibration.full_pass_combinations},
      {"best_pass_count", report.calibration.best_pass_count},
      {"chosen", report.calibration.chosen},
      {"notes", report.calibration.notes},
  };
  j["checks"] = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    j["checks"].push_back({
        {"name", c.name},
        {"claim", c.claim},
        {"sizes", c.sizes},
        {"pass", c.pass},
        {"witness", c.witness},
        {"detail", c.detail},
        {"transcript",
         {{"calls", c.transcript.call_count},
          {"substitutions", c.transcript.substitution_count},
          {"arithmetic_ops", c.transcript.arithmetic_ops},
          {"scales", c.transcript.scales}}},
        {"wall_ms", c.wall_ms},
    });
  }
  j["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport rep;
  rep.suite = j.at("suite").get<std::string>();
  rep.version = j.at("version").get<std::string>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.max_n = j.at("max_n").get<int>();
  const auto& cal = j.at("calibration");
  rep.calibration.ran = cal.at("ran").get<bool>();
  rep.calibration.unique_full_pass = cal.at("unique_full_pass").get<bool>();
  rep.calibration.full_pass_combinations = cal.at("full_pass_combinations").get<int>();
  rep.calibration.best_pass_count = cal.at("best_pass_count").get<int>();
  rep.calibration.chosen = cal.at("chosen").get<std::string>();
  rep.calibration.notes = cal.at("notes").get<std::vector<std::string>>();
  for (const auto& jc : j.at("checks")) {
    CheckRecord c;
    c.name = jc.at("name").get<std::string>();
    c.claim = jc.at("claim").get<std::string>();
    c.sizes = jc.at("sizes").get<std::vector<int>>();
    c.pass = jc.at("pass").get<bool>();
    c.witness = jc.at("witness").get<std::string>();
    c.detail = jc.at("detail").get<std::string>();
    const auto& tr = jc.at("transcript");
    c.transcript.call_count = tr.at("calls").get<std::size_t>();
    c.transcript.substitution_count = tr.at("substitutions").get<std::size_t>();
    c.transcript.arithmetic_ops = tr.at("arithmetic_ops").get<std::size_t>();
    c.transcript.scales = tr.at("scales").get<std::vector<std::string>>();
    c.wall_ms = jc.at("wall_ms").get<double>();
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

nlohmann::json report_to_json_stable(const VerificationReport& report) {
  nlohmann::json j = report_to_json(report);
  for (auto& c : j["checks"]) c["wall_ms"] = 0.0;
  return j;
}

std::string render_report_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << " (version " << report.version << ", seed "
     << report.seed << ", max_n " << report.max_n << ")\n";
  if (report.calibration.ran) {
    os << "calibration: " << report.calibration.full_pass_combinations
       << " full-pass combination(s), best " << report.calibration.best_pass_count
       << " of 4" << (report.calibration.from_cache ? " (cached)" : "") << "\n";
    os << "  conventions: " << report.calibration.chosen << "\n";
    for (const auto& note : report.calibration.notes) os << "  note: " << note << "\n";
  }
  for (const CheckRecord& c : report.checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.sizes.empty()) {
      os << " (n=";
      for (std::size_t i = 0; i < c.sizes.size(); ++i)
        os << (i ? "," : "") << c.sizes[i];
      os << ")";
    }
    os << "\n";
    os << "       claim: " << c.claim << "\n";
    if (!c.detail.empty()) os << "       detail: " << c.detail << "\n";
    if (!c.pass) os << "       witness: " << c.witness << "\n";
    if (c.transcript.call_count > 0)
      os << "       oracle calls: " << c.transcript.call_count << "\n";
  }
  os << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
  return os.str();
}

}  // namespace homopoly
