#include "homopoly/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace homopoly {

namespace {

Rational lookup(const Point& p, const VarId& v, const char* who) {
  auto it = p.find(v);
  if (it == p.end())
    throw std::invalid_argument(std::string(who) + ": no assignment for variable " + v.str());
  return it->second;
}

std::string describe_scales(int base, int d, const std::set<VarId>& vars) {
  std::ostringstream os;
  os << base << "^0.." << base << "^" << d << " in ";
  if (vars.empty()) {
    os << "all variables";
  } else {
    bool first = true;
    for (const auto& v : vars) {
      if (!first) os << ",";
      os << v.str();
      first = false;
    }
  }
  return os.str();
}

struct ExtractRaw {
  Rational value;
};

// Core extraction; counters land in the oracle's shared transcript.
ExtractRaw extract_impl(const Oracle& oracle, int k, const std::set<VarId>& vars,
                        const Point& point, int degree_bound,
                        const ExtractOptions& opts) {
  if (k < 0) throw std::invalid_argument("extract_homogeneous: negative degree");
  if (degree_bound < 0) throw std::invalid_argument("extract_homogeneous: negative degree bound");
  if (opts.scale_base < 2) throw std::invalid_argument("extract_homogeneous: scale base must be >= 2");
  if (k > degree_bound) return {Rational(0)};

  // Variables outside the oracle's universe cannot influence its values, so
  // scaling them is a no-op; skip them instead of demanding assignments.
  const std::set<VarId> universe_set(oracle.universe().begin(),
                                     oracle.universe().end());
  std::set<VarId> scaled;
  if (vars.empty()) {
    scaled = universe_set;
  } else {
    for (const auto& v : vars)
      if (universe_set.count(v)) scaled.insert(v);
  }

  const int points = degree_bound + 1 + (opts.verify_bound ? 1 : 0);
  std::vector<Rational> nodes;
  std::vector<Rational> values;
  nodes.reserve(static_cast<std::size_t>(points));
  values.reserve(static_cast<std::size_t>(points));
  Rational lambda(1);
  for (int i = 0; i < points; ++i) {
    Point scaled_point = point;
    for (const auto& v : scaled) {
      auto it = scaled_point.find(v);
      if (it == scaled_point.end())
        throw std::invalid_argument("extract_homogeneous: no assignment for variable " + v.str());
      it->second *= lambda;
    }
    nodes.push_back(lambda);
    values.push_back(oracle(scaled_point));
    lambda *= opts.scale_base;
  }

  auto transcript = oracle.transcript();
  transcript->scales.push_back(describe_scales(opts.scale_base, degree_bound, vars));

  std::vector<Rational> main_nodes(nodes.begin(), nodes.begin() + degree_bound + 1);
  std::vector<Rational> main_values(values.begin(), values.begin() + degree_bound + 1);
  std::vector<Rational> coeffs =
      solve_vandermonde(main_nodes, main_values, &transcript->arithmetic_ops);

  if (opts.verify_bound) {
    Rational predicted(0);
    Rational power(1);
    for (const auto& c : coeffs) {
      predicted += c * power;
      power *= nodes.back();
      transcript->arithmetic_ops += 2;
    }
    if (predicted != values.back())
      throw std::runtime_error("extract_homogeneous: stated degree bound is violated");
  }
  return {coeffs[static_cast<std::size_t>(k)]};
}

}  // namespace

Oracle::Oracle(SparsePolynomial p, int degree_bound) {
  const int true_degree = static_cast<int>(p.degree());
  if (degree_bound < 0) {
    degree_bound = true_degree;
  } else if (degree_bound < true_degree) {
    throw std::invalid_argument("Oracle: stated degree bound is below the true degree");
  }
  const std::set<VarId> vars = p.variables();
  universe_.assign(vars.begin(), vars.end());
  degree_bound_ = degree_bound;
  transcript_ = std::make_shared<OracleTranscript>();
  auto poly = std::make_shared<SparsePolynomial>(std::move(p));
  auto transcript = transcript_;
  fn_ = [poly, transcript](const Point& x) {
    ++transcript->call_count;
    return poly->evaluate(x);
  };
  is_root_ = true;
}

Oracle::Oracle(Eval fn, std::vector<VarId> universe, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("Oracle: negative degree bound");
  universe_ = std::move(universe);
  degree_bound_ = degree_bound;
  transcript_ = std::make_shared<OracleTranscript>();
  auto transcript = transcript_;
  auto inner = std::move(fn);
  fn_ = [inner, transcript](const Point& x) {
    ++transcript->call_count;
    return inner(x);
  };
  is_root_ = true;
}

Rational Oracle::operator()(const Point& x) const { return fn_(x); }

Oracle Oracle::derived(Eval fn, std::vector<VarId> universe, int degree_bound) const {
  Oracle out;
  out.fn_ = std::move(fn);
  out.universe_ = std::move(universe);
  out.degree_bound_ = degree_bound;
  out.transcript_ = transcript_;
  out.is_root_ = false;
  return out;
}

std::vector<Rational> solve_vandermonde(const std::vector<Rational>& nodes,
                                        const std::vector<Rational>& values,
                                        std::size_t* ops) {
  const std::size_t m = nodes.size();
  if (values.size() != m)
    throw std::invalid_argument("solve_vandermonde: nodes/values size mismatch");
  if (m == 0) return {};

  std::size_t local_ops = 0;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    Rational power(1);
    for (std::size_t j = 0; j < m; ++j) {
      a[i][j] = power;
      power *= nodes[i];
      ++local_ops;
    }
    a[i][m] = values[i];
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m)
      throw std::invalid_argument("solve_vandermonde: nodes are not distinct");
    std::swap(a[col], a[pivot]);
    const Rational inv = a[col][col];
    for (std::size_t j = col; j <= m; ++j) {
      a[col][j] /= inv;
      ++local_ops;
    }
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j <= m; ++j) {
        a[row][j] -= factor * a[col][j];
        local_ops += 2;
      }
    }
  }

  std::vector<Rational> coeffs(m);
  for (std::size_t i = 0; i < m; ++i) coeffs[i] = a[i][m];
  if (ops) *ops += local_ops;
  return coeffs;
}

ExtractResult extract_homogeneous(const Oracle& oracle, int k,
                                  const std::set<VarId>& vars, const Point& point,
                                  const ExtractOptions& opts) {
  auto transcript = oracle.transcript();
  const OracleTranscript before = *transcript;
  ExtractRaw raw = extract_impl(oracle, k, vars, point, oracle.degree_bound(), opts);

  OracleTranscript delta;
  delta.call_count = transcript->call_count - before.call_count;
  delta.substitution_count = transcript->substitution_count - before.substitution_count;
  delta.arithmetic_ops = transcript->arithmetic_ops - before.arithmetic_ops;
  delta.scales.assign(transcript->scales.begin() + static_cast<std::ptrdiff_t>(before.scales.size()),
                      transcript->scales.end());
  return {raw.value, delta};
}

SparsePolynomial extract_homogeneous_symbolic(const SparsePolynomial& p, int k,
                                              const std::set<VarId>& vars) {
  return vars.empty() ? p.homogeneous_component(k) : p.homogeneous_component(k, vars);
}

Oracle project(const Oracle& oracle, const Substitution& sigma) {
  std::set<VarId> target_set;
  for (const auto& v : oracle.universe()) {
    auto it = sigma.find(v);
    if (it == sigma.end()) {
      target_set.insert(v);
    } else if (std::holds_alternative<VarId>(it->second)) {
      target_set.insert(std::get<VarId>(it->second));
    }
  }
  std::vector<VarId> universe(target_set.begin(), target_set.end());

  Oracle inner = oracle;
  auto fn = [inner, sigma](const Point& p) {
    ++inner.transcript()->substitution_count;
    Point q;
    for (const auto& v : inner.universe()) {
      auto it = sigma.find(v);
      if (it == sigma.end()) {
        q[v] = lookup(p, v, "project");
      } else if (std::holds_alternative<Rational>(it->second)) {
        q[v] = std::get<Rational>(it->second);
      } else {
        q[v] = lookup(p, std::get<VarId>(it->second), "project");
      }
    }
    return inner(q);
  };
  return oracle.derived(std::move(fn), std::move(universe), oracle.degree_bound());
}

Oracle component_oracle(const Oracle& oracle, int k, const std::set<VarId>& vars,
                        int degree_bound, const ExtractOptions& opts) {
  Oracle inner = oracle;
  auto fn = [inner, k, vars, degree_bound, opts](const Point& p) {
    return extract_impl(inner, k, vars, p, degree_bound, opts).value;
  };
  return oracle.derived(std::move(fn), oracle.universe(), oracle.degree_bound());
}

}  // namespace homopoly
