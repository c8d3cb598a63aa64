#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Acceptance gate: seven criteria, one printed verdict line each.  Every
// assertion is a CHECK, never a REQUIRE, so all seven lines always print.
// Two criteria are expected to fail and are left failing on purpose: the
// final chain identity does not hold (the construction produces per-subset
// products where the target needs sums), which also denies the calibration
// a unique all-pass convention set and leaves the full verification run
// with a nonzero exit status.  The failure analysis lives in the README.

#include <chrono>
#include <iostream>
#include <string>

#include "homopoly/chain.hpp"
#include "homopoly/circuit.hpp"
#include "homopoly/families.hpp"
#include "homopoly/graph.hpp"
#include "homopoly/suite.hpp"

using namespace homopoly;

namespace {

class Criterion {
 public:
  Criterion(int index, std::string label)
      : index_(index), label_(std::move(label)),
        start_(std::chrono::steady_clock::now()) {}

  bool note(bool cond) {
    ok_ = ok_ && cond;
    return cond;
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  void print(const std::string& extra = "") const {
    std::cout << "criterion " << index_ << " [" << label_
              << "]: " << (ok_ ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << " (" << extra << ")";
    std::cout << std::endl;
  }

 private:
  int index_;
  std::string label_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

TEST_CASE("criterion 1: loop-case circuits") {
  Criterion c(1, "loop-case circuits");
  const Graph looped = make_family(FamilyKind::SingleLoopedVertex, 1);
  int first_depth = -1;
  for (int n = 2; n <= 4; ++n) {
    const ArithmeticCircuit circ = build_loop_case_circuit(n);
    CHECK(c.note(circ.expand() == hom_poly(looped, n)));
    CHECK(c.note(circ.size() == n * (n - 1) / 2 + 1));
    if (first_depth < 0) first_depth = circ.depth();
    CHECK(c.note(circ.depth() == first_depth));
  }
  for (int n = 1; n <= 4; ++n) {
    SparsePolynomial one;
    one.add_term({}, Rational(1));
    CHECK(c.note(hom_poly(make_family(FamilyKind::Edgeless, 2), n) == one));
    CHECK(c.note(hom_poly(make_family(FamilyKind::Edgeless, 3), n) == one));
  }
  CHECK(c.note(c.seconds() < 5.0));
  c.print();
}

TEST_CASE("criterion 2: homogeneous component extraction") {
  Criterion c(2, "homogeneous component extraction");
  SuiteOptions opts;
  opts.scope = SuiteScope::CompoHomo;
  opts.seed = 42;
  const VerificationReport rep = run_suite(opts);
  for (const auto& check : rep.checks) CHECK(c.note(check.pass));
  CHECK(c.note(rep.checks.size() == 4));
  CHECK(c.note(c.seconds() < 10.0));
  c.print();
}

TEST_CASE("criterion 3: neighborhood reduction") {
  Criterion c(3, "neighborhood reduction");
  const std::vector<Graph> zoo = {
      make_family(FamilyKind::Complete, 2),
      make_family(FamilyKind::Path, 3),
      make_family(FamilyKind::Complete, 3),
      make_family(FamilyKind::Cycle, 4),
      make_family(FamilyKind::Cycle, 5),
      make_family(FamilyKind::Complete, 4),
      make_family(FamilyKind::CompleteBipartite, 2, 3),
  };
  for (const Graph& h : zoo)
    for (int n = 2; n <= 3; ++n) CHECK(c.note(neighbor_step(h, n).pass));
  CHECK(c.note(neighbor_step(make_family(FamilyKind::Complete, 3), 4).pass));
  for (const Graph& h : zoo) {
    const NeighborTrace trace = iterate_neighbor(h);
    for (std::size_t i = 1; i < trace.max_degrees.size(); ++i)
      CHECK(c.note(trace.max_degrees[i] < trace.max_degrees[i - 1]));
    CHECK(c.note(!trace.outcome.empty()));
  }
  CHECK(c.note(c.seconds() < 60.0));
  c.print();
}

TEST_CASE("criterion 4: hereditary structure") {
  Criterion c(4, "hereditary structure");
  for (int n = 2; n <= 4; ++n) {
    const MonomialSet fmap = MonomialSet::from_polynomial(
        hom_poly(make_family(FamilyKind::Edge, 2), n));
    const MonomialSet cf =
        MonomialSet::from_polynomial(F_poly(n, true)).hereditary_closure();
    const MonomialSet cg =
        MonomialSet::from_polynomial(G_poly(n)).hereditary_closure();
    CHECK(c.note(cf == fmap));
    CHECK(c.note(cg == fmap));
  }
  for (int n = 3; n <= 4; ++n) {
    const MonomialSet mg = MonomialSet::from_polynomial(G_poly(n));
    const MonomialSet mf = MonomialSet::from_polynomial(F_poly(n, true));
    CHECK(c.note(mg.is_pure()));
    CHECK(c.note(!mf.is_pure()));
    const auto pair = mf.comparable_pair();
    CHECK(c.note(pair.has_value()));
    if (pair)
      CHECK(c.note(divides(pair->first, pair->second) &&
                   pair->first != pair->second));
  }
  c.print();
}

TEST_CASE("criterion 5: calibrated chain identities") {
  Criterion c(5, "calibrated chain identities");
  const CalibrationOutcome outcome = calibrate_chain(2, 3);
  CHECK(c.note(outcome.unique_full_pass));
  bool identities = true;
  for (int n = 2; n <= 3; ++n) {
    identities = identities && g_from_fmap(n, outcome.chosen).pass &&
                 clique_from_F(n, outcome.chosen).pass &&
                 F_from_cut2(n, outcome.chosen).pass &&
                 cut2_from_G(n, outcome.chosen).pass;
  }
  CHECK(c.note(identities));
  CHECK(c.note(c.seconds() < 120.0));
  c.print("known failure: the last identity fails under every convention; " +
          std::to_string(outcome.full_pass_combinations) +
          " of 288 combinations satisfy all four, best satisfies " +
          std::to_string(outcome.best_pass_count) + " of 4");
}

TEST_CASE("criterion 6: bipartite counts along two routes") {
  Criterion c(6, "bipartite counts along two routes");
  const Graph edge = make_family(FamilyKind::Edge, 2);
  const std::vector<std::int64_t> expected = {2, 7, 41};
  for (int n = 2; n <= 4; ++n) {
    const SparsePolynomial fmap = hom_poly(edge, n);
    Point ones;
    for (const VarId& v : fmap.variables()) ones[v] = Rational(1);
    const Rational via_evaluation = fmap.evaluate(ones);

    std::int64_t via_enumeration = 0;
    for (const Graph& g : enumerate_graphs(n))
      if (is_bipartite(g)) ++via_enumeration;

    CHECK(c.note(via_evaluation == expected[static_cast<std::size_t>(n - 2)]));
    CHECK(c.note(via_evaluation == via_enumeration));
  }
  c.print();
}

TEST_CASE("criterion 7: reproducible full verification") {
  Criterion c(7, "reproducible full verification");
  SuiteOptions opts;
  opts.scope = SuiteScope::All;
  opts.max_n = 3;
  opts.seed = 42;
  const VerificationReport first = run_suite(opts);
  const VerificationReport second = run_suite(opts);
  CHECK(c.note(report_to_json_stable(first).dump(2) ==
               report_to_json_stable(second).dump(2)));
  CHECK(c.note(first.all_pass()));
  c.print("known failure: reports are byte-identical once timings are "
          "zeroed, but the run carries " +
          std::to_string(first.failed()) +
          " honest failures, so its exit status is nonzero");
}
