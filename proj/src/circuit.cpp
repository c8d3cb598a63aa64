#include "homopoly/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace homopoly {

int ArithmeticCircuit::add_const(const Rational& c) {
  Gate g;
  g.kind = GateKind::Const;
  g.value = c;
  gates_.push_back(std::move(g));
  return static_cast<int>(gates_.size()) - 1;
}

int ArithmeticCircuit::add_var(const VarId& v) {
  Gate g;
  g.kind = GateKind::Var;
  g.var = v;
  gates_.push_back(std::move(g));
  return static_cast<int>(gates_.size()) - 1;
}

int ArithmeticCircuit::add_op(GateKind kind, std::vector<int> children) {
  if (kind != GateKind::Add && kind != GateKind::Mul)
    throw std::invalid_argument("add_op accepts Add or Mul");
  if (children.empty()) throw std::invalid_argument("operation gate needs at least one child");
  int self = static_cast<int>(gates_.size());
  for (int c : children)
    if (c < 0 || c >= self) throw std::invalid_argument("operation gate child out of range");
  Gate g;
  g.kind = kind;
  g.children = std::move(children);
  gates_.push_back(std::move(g));
  return self;
}

void ArithmeticCircuit::set_sink(int gate) {
  if (gate < 0 || gate >= static_cast<int>(gates_.size()))
    throw std::invalid_argument("sink index out of range");
  sink_ = gate;
}

void ArithmeticCircuit::validate(bool bounded_fan_in) const {
  if (gates_.empty()) throw std::invalid_argument("circuit has no gates");
  if (sink_ < 0 || sink_ >= static_cast<int>(gates_.size()))
    throw std::invalid_argument("circuit has no valid sink");
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const Gate& g = gates_[k];
    if (g.kind == GateKind::Add || g.kind == GateKind::Mul) {
      if (g.children.empty()) throw std::invalid_argument("operation gate with no children");
      if (bounded_fan_in && g.children.size() != 2)
        throw std::invalid_argument("bounded fan-in validation: gate " + std::to_string(k) +
                                    " has fan-in " + std::to_string(g.children.size()));
      for (int c : g.children)
        if (c < 0 || c >= static_cast<int>(k))
          throw std::invalid_argument("gate " + std::to_string(k) + " child " + std::to_string(c) +
                                      " does not precede it");
    } else if (!g.children.empty()) {
      throw std::invalid_argument("input gate with children");
    }
  }
  // Reachability from the sink: anything else would be a second output.
  std::vector<bool> seen(gates_.size(), false);
  std::vector<int> stack{sink_};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = true;
    for (int c : gates_[static_cast<std::size_t>(v)].children) stack.push_back(c);
  }
  for (std::size_t k = 0; k < gates_.size(); ++k)
    if (!seen[k])
      throw std::invalid_argument("gate " + std::to_string(k) + " is unreachable from the sink");
}

Rational ArithmeticCircuit::evaluate(const Point& point) const {
  validate();
  std::vector<Rational> val(gates_.size());
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const Gate& g = gates_[k];
    switch (g.kind) {
      case GateKind::Const:
        val[k] = g.value;
        break;
      case GateKind::Var: {
        auto it = point.find(g.var);
        if (it == point.end())
          throw std::invalid_argument("circuit evaluate: no assignment for variable " + g.var.str());
        val[k] = it->second;
        break;
      }
      case GateKind::Add: {
        Rational s = 0;
        for (int c : g.children) s += val[static_cast<std::size_t>(c)];
        val[k] = s;
        break;
      }
      case GateKind::Mul: {
        Rational p = 1;
        for (int c : g.children) p *= val[static_cast<std::size_t>(c)];
        val[k] = p;
        break;
      }
    }
  }
  return val[static_cast<std::size_t>(sink_)];
}

SparsePolynomial ArithmeticCircuit::expand(std::size_t max_terms) const {
  validate();
  std::vector<SparsePolynomial> val(gates_.size());
  auto guard = [&](const SparsePolynomial& p) {
    if (p.term_count() > max_terms)
      throw std::runtime_error("circuit expansion exceeded the term cap of " + std::to_string(max_terms));
  };
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const Gate& g = gates_[k];
    switch (g.kind) {
      case GateKind::Const:
        val[k] = SparsePolynomial::constant(g.value);
        break;
      case GateKind::Var:
        val[k] = SparsePolynomial::variable(g.var);
        break;
      case GateKind::Add: {
        SparsePolynomial s;
        for (int c : g.children) {
          s = s + val[static_cast<std::size_t>(c)];
          guard(s);
        }
        val[k] = std::move(s);
        break;
      }
      case GateKind::Mul: {
        SparsePolynomial p = SparsePolynomial::constant(1);
        for (int c : g.children) {
          p = p * val[static_cast<std::size_t>(c)];
          guard(p);
        }
        val[k] = std::move(p);
        break;
      }
    }
  }
  return val[static_cast<std::size_t>(sink_)];
}

int ArithmeticCircuit::size() const {
  int ops = 0;
  for (const Gate& g : gates_)
    if (g.kind == GateKind::Add || g.kind == GateKind::Mul) ++ops;
  return ops;
}

int ArithmeticCircuit::depth() const {
  if (gates_.empty() || sink_ < 0) return 0;
  std::vector<int> layer(gates_.size(), 1);
  for (std::size_t k = 0; k < gates_.size(); ++k) {
    const Gate& g = gates_[k];
    if (g.kind == GateKind::Add || g.kind == GateKind::Mul) {
      int deepest = 0;
      for (int c : g.children) deepest = std::max(deepest, layer[static_cast<std::size_t>(c)]);
      layer[k] = deepest + 1;
    }
  }
  return layer[static_cast<std::size_t>(sink_)];
}

ArithmeticCircuit build_loop_case_circuit(int n) {
  if (n < 2) throw std::invalid_argument("loop-case circuit needs n >= 2");
  ArithmeticCircuit c;
  int one = c.add_const(1);
  std::vector<int> factors;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int x = c.add_var(VarId::undirected(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)));
      factors.push_back(c.add_op(GateKind::Add, {one, x}));
    }
  int sink = c.add_op(GateKind::Mul, factors);
  c.set_sink(sink);
  return c;
}

}  // namespace homopoly
