// Command-line front end: family constructors, homomorphism queries,
// loop-case circuits, single reduction steps, the verification suite, and
// the boundary-convention calibration pass.
//
// Exit codes: 0 when everything asked for passed, 1 when any check failed,
// 2 on usage or input errors.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "homopoly/chain.hpp"
#include "homopoly/circuit.hpp"
#include "homopoly/families.hpp"
#include "homopoly/graph.hpp"
#include "homopoly/serialize.hpp"
#include "homopoly/suite.hpp"
#include "homopoly/version.hpp"

namespace {

using namespace homopoly;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  else
    write_file_atomic(out_path, text.back() == '\n' ? text : text + "\n");
}

std::string render_polynomial(const SparsePolynomial& p, const std::string& format) {
  return format == "json" ? polynomial_to_json(p).dump(2) : p.str();
}

nlohmann::json step_to_json(const ChainStep& step) {
  nlohmann::json j;
  j["step"] = to_string(step.name);
  j["n"] = step.n;
  j["source"] = step.source_family;
  j["target"] = step.target_family;
  j["pass"] = step.pass;
  j["detail"] = step.detail;
  if (step.factor) j["factor"] = to_string(*step.factor);
  if (step.witness) j["witness"] = monomial_str(*step.witness);
  if (step.diagnostic_pass) {
    j["diagnostic_pass"] = *step.diagnostic_pass;
    j["diagnostic_claim"] = step.diagnostic_claim;
  }
  j["oracle_calls"] = step.transcript.call_count;
  j["expected_calls"] = step.expected_calls;
  j["substitutions"] = step.transcript.substitution_count;
  j["spot_check_ok"] = step.spot_check_ok;
  return j;
}

std::string render_step_text(const ChainStep& step) {
  std::ostringstream os;
  os << (step.pass ? "[PASS] " : "[FAIL] ") << to_string(step.name) << " at n="
     << step.n << "\n";
  os << "  source: " << step.source_family << "\n";
  os << "  target: " << step.target_family << "\n";
  if (!step.detail.empty()) os << "  detail: " << step.detail << "\n";
  if (step.factor) os << "  factor: " << to_string(*step.factor) << "\n";
  if (step.witness) os << "  witness monomial: " << monomial_str(*step.witness) << "\n";
  if (step.diagnostic_pass)
    os << "  diagnostic: " << (*step.diagnostic_pass ? "holds" : "fails") << " ("
       << step.diagnostic_claim << ")\n";
  os << "  oracle calls: " << step.transcript.call_count << " (expected "
     << step.expected_calls << "), spot check "
     << (step.spot_check_ok ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and verified reductions for graph-family polynomials"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string format = "text";
  std::string out_path;
  std::uint64_t seed = 42;
  int max_n = 3;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write output to this file (atomically)");
  app.add_option("--seed", seed, "root seed for all randomized checks");
  app.add_option("--max-n", max_n, "largest size the suites exercise")
      ->check(CLI::Range(1, 8));

  if (const char* cap = std::getenv("HOMOPOLY_MAX_N")) {
    try {
      set_enumeration_cap(std::stoi(cap));
    } catch (const std::exception&) {
      std::cerr << "error: HOMOPOLY_MAX_N must be an integer\n";
      return 2;
    }
  }

  // family ------------------------------------------------------------------
  auto* family = app.add_subcommand("family", "emit one polynomial family instance");
  family->fallthrough();
  std::string kind;
  int fam_n = 3;
  int cut_q = 2;
  bool include_empty = true;
  bool include_trivial = false;
  family->add_option("--kind", kind, "family name")
      ->required()
      ->check(CLI::IsMember({"fmap", "F", "F_scan", "F_half", "G", "cut", "cut_sym",
                             "clique", "clique_scan"}));
  family->add_option("--n", fam_n, "number of vertices")->required();
  family->add_option("--q", cut_q, "cut exponent parameter (kind cut)");
  family->add_flag("--include-empty,!--no-include-empty", include_empty,
                   "include the empty-graph constant term (kinds F, F_scan, clique, "
                   "clique_scan)");
  family->add_flag("--trivial", include_trivial,
                   "include the two trivial subsets (kinds cut, cut_sym)");

  // hom ---------------------------------------------------------------------
  auto* hom = app.add_subcommand("hom", "search for a homomorphism between two graphs");
  hom->fallthrough();
  std::string g_path, h_path;
  // --h names the target graph, so this subcommand keeps only the long help flag.
  hom->set_help_flag("--help", "print help and exit");
  hom->add_option("--g", g_path, "source graph JSON file")->required();
  hom->add_option("--h", h_path, "target graph JSON file")->required();

  // circuit -----------------------------------------------------------------
  auto* circuit = app.add_subcommand("circuit", "build, evaluate, or expand loop-case circuits");
  circuit->fallthrough();
  int circ_n = 3;
  std::string circ_in;
  bool do_expand = false;
  bool eval_ones = false;
  circuit->add_option("--n", circ_n, "build the loop-case circuit for this size");
  circuit->add_option("--in", circ_in, "load a circuit JSON file instead of building");
  circuit->add_flag("--expand", do_expand, "expand to an explicit polynomial");
  circuit->add_flag("--eval-ones", eval_ones, "evaluate with every variable set to 1");

  // reduce ------------------------------------------------------------------
  auto* reduce = app.add_subcommand("reduce", "run one reduction step (or the full chain)");
  reduce->fallthrough();
  reduce->set_help_flag("--help", "print help and exit");
  std::string step_name;
  int red_n = 3;
  std::string red_h_path;
  reduce->add_option("--step", step_name, "which step to run")
      ->required()
      ->check(CLI::IsMember({"neighbor", "iterate", "g", "clique", "F", "cut2", "full"}));
  reduce->add_option("--n", red_n, "instance size");
  reduce->add_option("--h", red_h_path,
                     "graph JSON file (steps neighbor, iterate, full)");

  // verify ------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  std::string scope_name = "all";
  bool scope_all = false;
  std::string cache_dir;
  verify->add_option("--scope", scope_name, "suite scope")
      ->check(CLI::IsMember({"easy_cases", "compo_homo", "hereditary", "chain", "all"}));
  verify->add_flag("--all", scope_all, "same as --scope all");
  verify->add_option("--cache-dir", cache_dir,
                     "cache the calibration outcome in this directory");

  // calibrate ---------------------------------------------------------------
  auto* calibrate = app.add_subcommand("calibrate",
                                       "search the boundary-convention space of the chain");
  calibrate->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (family->parsed()) {
      SparsePolynomial p;
      if (kind == "fmap")
        p = hom_poly(make_family(FamilyKind::Edge, 2), fam_n);
      else if (kind == "F")
        p = F_poly(fam_n, include_empty);
      else if (kind == "F_scan")
        p = F_poly_scan(fam_n, include_empty);
      else if (kind == "F_half")
        p = F_poly_half_form(fam_n);
      else if (kind == "G")
        p = G_poly(fam_n);
      else if (kind == "cut")
        p = cut_poly(fam_n, cut_q, include_trivial);
      else if (kind == "cut_sym")
        p = cut_poly_symmetrized(fam_n, include_trivial);
      else if (kind == "clique")
        p = clique_gf(fam_n, include_empty);
      else
        p = clique_gf_scan(fam_n, include_empty);
      emit(render_polynomial(p, format), out_path);
      return 0;
    }

    if (hom->parsed()) {
      const Graph g = graph_from_json(nlohmann::json::parse(read_file(g_path)));
      const Graph h = graph_from_json(nlohmann::json::parse(read_file(h_path)));
      const auto found = find_homomorphism(g, h);
      if (format == "json") {
        nlohmann::json j;
        j["found"] = found.has_value();
        if (found) j["mapping"] = found->mapping;
        emit(j.dump(2), out_path);
      } else if (found) {
        std::ostringstream os;
        os << "homomorphism:";
        for (int v = 1; v <= g.n; ++v)
          os << " " << v << "->" << found->mapping[static_cast<std::size_t>(v - 1)];
        emit(os.str(), out_path);
      } else {
        emit("no homomorphism", out_path);
      }
      return 0;
    }

    if (circuit->parsed()) {
      const ArithmeticCircuit c = circ_in.empty()
          ? build_loop_case_circuit(circ_n)
          : circuit_from_json(nlohmann::json::parse(read_file(circ_in)));
      c.validate();
      if (do_expand) {
        emit(render_polynomial(c.expand(), format), out_path);
      } else if (eval_ones) {
        Point ones;
        for (const Gate& g : c.gates())
          if (g.kind == GateKind::Var) ones[g.var] = Rational(1);
        emit(to_string(c.evaluate(ones)), out_path);
      } else {
        if (format == "json")
          emit(circuit_to_json(c).dump(2), out_path);
        else {
          std::ostringstream os;
          os << "circuit: " << c.size() << " operation gates, depth " << c.depth()
             << ", " << c.gates().size() << " gates total";
          emit(os.str(), out_path);
        }
      }
      return 0;
    }

    if (reduce->parsed()) {
      std::vector<ChainStep> steps;
      const ChainConventions conv{};
      if (step_name == "neighbor" || step_name == "iterate" || step_name == "full") {
        if (red_h_path.empty())
          throw std::invalid_argument("--h <graph.json> is required for this step");
        const Graph h = graph_from_json(nlohmann::json::parse(read_file(red_h_path)));
        if (step_name == "neighbor") {
          steps.push_back(neighbor_step(h, red_n));
        } else if (step_name == "iterate") {
          const NeighborTrace trace = iterate_neighbor(h);
          if (format == "json") {
            nlohmann::json j;
            j["rounds"] = trace.graphs.size() - 1;
            j["max_degrees"] = trace.max_degrees;
            j["outcome"] = trace.outcome;
            j["graphs"] = nlohmann::json::array();
            for (const Graph& g : trace.graphs) j["graphs"].push_back(graph_to_json(g));
            emit(j.dump(2), out_path);
          } else {
            std::ostringstream os;
            os << "iteration: " << trace.graphs.size() - 1 << " round(s), outcome "
               << trace.outcome << ", max degrees";
            for (int d : trace.max_degrees) os << " " << d;
            emit(os.str(), out_path);
          }
          return 0;
        } else {
          steps = run_full_chain(h, red_n, conv);
        }
      } else if (step_name == "g") {
        steps.push_back(g_from_fmap(red_n, conv));
      } else if (step_name == "clique") {
        steps.push_back(clique_from_F(red_n, conv));
      } else if (step_name == "F") {
        steps.push_back(F_from_cut2(red_n, conv));
      } else {
        steps.push_back(cut2_from_G(red_n, conv));
      }

      bool all_pass = true;
      if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const ChainStep& s : steps) {
          j.push_back(step_to_json(s));
          all_pass = all_pass && s.pass;
        }
        emit(j.dump(2), out_path);
      } else {
        std::ostringstream os;
        for (const ChainStep& s : steps) {
          os << render_step_text(s);
          all_pass = all_pass && s.pass;
        }
        emit(os.str(), out_path);
      }
      return all_pass ? 0 : 1;
    }

    if (verify->parsed()) {
      SuiteOptions opts;
      opts.scope = scope_all ? SuiteScope::All : parse_scope(scope_name);
      opts.max_n = max_n;
      opts.seed = seed;
      opts.cache_dir = cache_dir;
      const VerificationReport report = run_suite(opts);
      if (format == "json")
        emit(report_to_json(report).dump(2), out_path);
      else
        emit(render_report_text(report), out_path);
      return report.all_pass() ? 0 : 1;
    }

    if (calibrate->parsed()) {
      const CalibrationOutcome outcome = calibrate_chain(2, 3);
      if (format == "json") {
        nlohmann::json j;
        j["full_pass_combinations"] = outcome.full_pass_combinations;
        j["unique_full_pass"] = outcome.unique_full_pass;
        j["best_pass_count"] = outcome.best_pass_count;
        j["chosen"] = {
            {"g_range", to_string(outcome.chosen.g_range)},
            {"clique_range", to_string(outcome.chosen.clique_range)},
            {"clique_constant", outcome.chosen.clique_constant},
            {"f_target", to_string(outcome.chosen.f_target)},
            {"cut_trivial", outcome.chosen.cut_trivial},
            {"cut2_range", to_string(outcome.chosen.cut2_range)},
        };
        j["passing_options"] = outcome.passing_options;
        j["notes"] = outcome.notes;
        emit(j.dump(2), out_path);
      } else {
        std::ostringstream os;
        os << "full-pass combinations: " << outcome.full_pass_combinations
           << " (best " << outcome.best_pass_count << " of 4)\n";
        os << "chosen: g " << to_string(outcome.chosen.g_range) << "; clique "
           << to_string(outcome.chosen.clique_range) << ", constant "
           << (outcome.chosen.clique_constant ? "included" : "omitted") << "; F "
           << to_string(outcome.chosen.f_target) << ", trivial subsets "
           << (outcome.chosen.cut_trivial ? "included" : "omitted") << "; cut2 "
           << to_string(outcome.chosen.cut2_range) << "\n";
        for (const auto& [step, options] : outcome.passing_options) {
          os << "passing for " << step << ":";
          for (const auto& o : options) os << " {" << o << "}";
          os << "\n";
        }
        for (const auto& note : outcome.notes) os << "note: " << note << "\n";
        emit(os.str(), out_path);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
