#pragma once

// Oracle-style evaluation access to polynomials, plus the homogeneous
// component extraction that powers the reduction checks.
//
// An extraction for degree bound d evaluates the oracle at d+1 points,
// scaling the chosen variables by base^0 .. base^d, and solves the
// resulting Vandermonde system exactly over the rationals.  A square
// system with distinct nodes is always solvable, so a violated degree
// bound is silent by default; verify_bound spends one extra evaluation
// to detect it.

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homopoly/polynomial.hpp"

namespace homopoly {

// Counters accumulated across an oracle lineage: the root evaluator and
// every oracle derived from it by projection or extraction share one
// transcript.  call_count counts root evaluations only.
struct OracleTranscript {
  std::size_t call_count = 0;
  std::size_t substitution_count = 0;  // projection layers crossed
  std::size_t arithmetic_ops = 0;      // rational ops in Vandermonde solves
  std::vector<std::string> scales;     // one entry per extraction performed
};

class Oracle {
 public:
  using Eval = std::function<Rational(const Point&)>;

  // Root oracle over a concrete polynomial.  degree_bound < 0 means use
  // the polynomial's true degree.
  explicit Oracle(SparsePolynomial p, int degree_bound = -1);

  // Root oracle over an opaque evaluator.
  Oracle(Eval fn, std::vector<VarId> universe, int degree_bound);

  Rational operator()(const Point& x) const;

  const std::vector<VarId>& universe() const { return universe_; }
  int degree_bound() const { return degree_bound_; }
  std::shared_ptr<OracleTranscript> transcript() const { return transcript_; }

  // Derived oracle sharing this oracle's transcript; used internally by
  // project and component_oracle.
  Oracle derived(Eval fn, std::vector<VarId> universe, int degree_bound) const;

 private:
  Oracle() = default;
  Eval fn_;
  std::vector<VarId> universe_;
  int degree_bound_ = 0;
  std::shared_ptr<OracleTranscript> transcript_;
  bool is_root_ = false;
};

struct ExtractOptions {
  int scale_base = 2;        // any integer >= 2 works; the nodes base^i are distinct
  bool verify_bound = false; // one extra point; throws if the bound was violated
};

// Exact solve of sum_k c_k * nodes[i]^k = values[i]; nodes must be distinct.
// ops, when given, accumulates the number of rational operations performed.
std::vector<Rational> solve_vandermonde(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& values,
                                        std::size_t* ops = nullptr);

struct ExtractResult {
  Rational value;
  OracleTranscript transcript;  // the delta attributable to this extraction
};

// Value at `point` of the component of the oracle's polynomial whose degree
// in `vars` (all variables when empty) is exactly k.  Costs d+1 oracle calls
// for k <= d, none for k > d (that component is identically zero).
ExtractResult extract_homogeneous(const Oracle& oracle, int k,
                                  const std::set<VarId>& vars,
                                  const Point& point,
                                  const ExtractOptions& opts = {});

// Reference implementation for cross-validation.
SparsePolynomial extract_homogeneous_symbolic(const SparsePolynomial& p, int k,
                                              const std::set<VarId>& vars);

// Oracle computing f after the substitution: each call forwards exactly one
// call to the source.  Targets may be constants or variables.
Oracle project(const Oracle& oracle, const Substitution& sigma);

// Oracle computing the degree-k component of f in `vars` (all when empty).
// Each call costs degree_bound+1 source calls; the bound applies to the
// degree in `vars` and must be supplied by the caller.
Oracle component_oracle(const Oracle& oracle, int k,
                        const std::set<VarId>& vars, int degree_bound,
                        const ExtractOptions& opts = {});

}  // namespace homopoly
