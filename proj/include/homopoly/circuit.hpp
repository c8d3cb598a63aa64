#pragma once

// Arithmetic circuits: a DAG of constant/variable inputs and unbounded
// fan-in sum/product gates with a single designated sink.  Depth counts gate
// layers including the input layer, so a lone input has depth 1 and the
// sum-of-products built by build_loop_case_circuit has depth 3 at every n.

#include <cstdint>
#include <string>
#include <vector>

#include "homopoly/polynomial.hpp"

namespace homopoly {

enum class GateKind : std::uint8_t { Const, Var, Add, Mul };

struct Gate {
  GateKind kind = GateKind::Const;
  Rational value;               // Const
  VarId var;                    // Var
  std::vector<int> children;    // Add / Mul, indices of earlier gates
};

class ArithmeticCircuit {
 public:
  ArithmeticCircuit() = default;

  // Gates must be appended in topological order (children refer backwards).
  int add_const(const Rational& c);
  int add_var(const VarId& v);
  // Operation gates accept fan-in >= 1; a one-child gate passes its child
  // through, which keeps uniform constructions (like the n = 2 loop-case
  // circuit) well formed.  bounded-fan-in validation restricts fan-in to 2.
  int add_op(GateKind kind, std::vector<int> children);
  void set_sink(int gate);

  const std::vector<Gate>& gates() const { return gates_; }
  int sink() const { return sink_; }

  // Full structural validation: child indices in range and strictly smaller
  // than the gate's own index, a valid sink, no gate unreachable from the
  // sink (so the sink is the unique output).  With bounded_fan_in, every
  // operation gate must have exactly two children.
  void validate(bool bounded_fan_in = false) const;

  Rational evaluate(const Point& point) const;

  // Expands the sink gate to an explicit polynomial.  Every intermediate
  // result is capped at max_terms terms; exceeding the cap throws.
  SparsePolynomial expand(std::size_t max_terms = 1000000) const;

  int size() const;   // number of operation gates
  int depth() const;  // gate layers from inputs to sink, inputs included

 private:
  std::vector<Gate> gates_;
  int sink_ = -1;
};

// The easy case with a looped target: every edge subset qualifies, so the
// polynomial is the product over all edges of (1 + x_e).  One sum gate per
// edge of K_n, one product gate over them: n(n-1)/2 + 1 operation gates,
// depth 3 independent of n.
ArithmeticCircuit build_loop_case_circuit(int n);

}  // namespace homopoly
