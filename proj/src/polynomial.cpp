#include "homopoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace homopoly {

VarId VarId::undirected(std::uint32_t i, std::uint32_t j) {
  if (i == j) throw std::invalid_argument("undirected edge variable needs two distinct endpoints");
  if (i > j) std::swap(i, j);
  VarId v;
  v.ns = VarNs::Undirected;
  v.i = i;
  v.j = j;
  return v;
}

// Equal endpoints are allowed here: ordered-pair variables double as grid
// coordinates in the reduction pipelines, where the diagonal is meaningful.
VarId VarId::directed(std::uint32_t i, std::uint32_t j) {
  VarId v;
  v.ns = VarNs::Directed;
  v.i = i;
  v.j = j;
  return v;
}

VarId VarId::aux(std::string name) {
  if (name.empty()) throw std::invalid_argument("auxiliary variable needs a name");
  VarId v;
  v.ns = VarNs::Aux;
  v.name = std::move(name);
  return v;
}

std::string VarId::str() const {
  std::ostringstream out;
  switch (ns) {
    case VarNs::Undirected: out << "x{" << i << "," << j << "}"; break;
    case VarNs::Directed: out << "xd{" << i << "," << j << "}"; break;
    case VarNs::Aux: out << name; break;
  }
  return out.str();
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : m) {
    if (!first) out << " * ";
    first = false;
    out << v.str();
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

bool TermOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic on (VarId, exponent) pairs
}

SparsePolynomial SparsePolynomial::constant(const Rational& c) {
  SparsePolynomial p;
  p.add_term({}, c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(const VarId& v) {
  SparsePolynomial p;
  p.add_term({{v, 1}}, 1);
  return p;
}

SparsePolynomial SparsePolynomial::monomial(const Monomial& m, const Rational& coef) {
  SparsePolynomial p;
  p.add_term(m, coef);
  return p;
}

void SparsePolynomial::add_term(const Monomial& m, const Rational& coef) {
  if (coef == 0) return;
  for (std::size_t k = 0; k + 1 < m.size(); ++k)
    if (!(m[k].first < m[k + 1].first))
      throw std::invalid_argument("monomial variables must be strictly increasing");
  for (const auto& [v, e] : m)
    if (e == 0) throw std::invalid_argument("monomial exponents must be positive");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coef);
  } else {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  SparsePolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    if (a[ia].first < b[ib].first) {
      out.push_back(a[ia++]);
    } else if (b[ib].first < a[ia].first) {
      out.push_back(b[ib++]);
    } else {
      out.emplace_back(a[ia].first, a[ia].second + b[ib].second);
      ++ia;
      ++ib;
    }
  }
  for (; ia < a.size(); ++ia) out.push_back(a[ia]);
  for (; ib < b.size(); ++ib) out.push_back(b[ib]);
  return out;
}

}  // namespace

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  SparsePolynomial r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(merge_monomials(ma, mb), ca * cb);
  return r;
}

SparsePolynomial SparsePolynomial::scalar(const Rational& c) const {
  SparsePolynomial r;
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

unsigned SparsePolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
  return d;
}

unsigned SparsePolynomial::degree_in(const std::set<VarId>& vars) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned dm = 0;
    for (const auto& [v, e] : m)
      if (vars.count(v)) dm += e;
    d = std::max(d, dm);
  }
  return d;
}

std::set<VarId> SparsePolynomial::variables() const {
  std::set<VarId> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

SparsePolynomial SparsePolynomial::substitute(const Substitution& sub) const {
  SparsePolynomial r;
  for (const auto& [m, c] : terms_) {
    Rational coef = c;
    std::map<VarId, std::uint32_t> exps;  // rebuilt monomial, exponents may merge
    bool dead = false;
    for (const auto& [v, e] : m) {
      auto it = sub.find(v);
      if (it == sub.end()) {
        exps[v] += e;
      } else if (std::holds_alternative<Rational>(it->second)) {
        const Rational& val = std::get<Rational>(it->second);
        if (val == 0) {
          dead = true;
          break;
        }
        coef *= pow_rational(val, e);
      } else {
        exps[std::get<VarId>(it->second)] += e;
      }
    }
    if (dead) continue;
    Monomial nm(exps.begin(), exps.end());
    r.add_term(nm, coef);
  }
  return r;
}

SparsePolynomial SparsePolynomial::homogeneous_component(unsigned k) const {
  SparsePolynomial r;
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == k) r.terms_.emplace(m, c);
  return r;
}

SparsePolynomial SparsePolynomial::homogeneous_component(unsigned k, const std::set<VarId>& vars) const {
  SparsePolynomial r;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (const auto& [v, e] : m)
      if (vars.count(v)) d += e;
    if (d == k) r.terms_.emplace(m, c);
  }
  return r;
}

Rational SparsePolynomial::evaluate(const Point& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("evaluate: no assignment for variable " + v.str());
      if (it->second == 0) {
        term = 0;
        break;
      }
      term *= pow_rational(it->second, e);
    }
    total += term;
  }
  return total;
}

std::string SparsePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (m.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << monomial_str(m);
    } else {
      out << to_string(mag) << " * " << monomial_str(m);
    }
  }
  return out.str();
}

bool equals_exact(const SparsePolynomial& a, const SparsePolynomial& b) { return a == b; }

bool equals_probabilistic(const SparsePolynomial& a, const SparsePolynomial& b,
                          Rng& rng, unsigned trials) {
  std::set<VarId> vars = a.variables();
  for (const VarId& v : b.variables()) vars.insert(v);
  for (unsigned t = 0; t < trials; ++t) {
    Point p;
    for (const VarId& v : vars) p[v] = Rational(BigInt(rng.below(1ULL << 31)));
    if (a.evaluate(p) != b.evaluate(p)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

MonomialSet MonomialSet::from_polynomial(const SparsePolynomial& p) {
  Set s;
  for (const auto& [m, c] : p.terms()) {
    if (c != 1)
      throw std::invalid_argument("monomial-set view needs 0/1 coefficients, found " + to_string(c) +
                                  " at " + monomial_str(m));
    for (const auto& [v, e] : m)
      if (e != 1)
        throw std::invalid_argument("monomial-set view needs a multilinear polynomial, found " +
                                    monomial_str(m));
    s.insert(m);
  }
  return MonomialSet(std::move(s));
}

SparsePolynomial MonomialSet::to_polynomial() const {
  SparsePolynomial p;
  for (const Monomial& m : set_) p.add_term(m, 1);
  return p;
}

bool divides(const Monomial& sub, const Monomial& super) {
  std::size_t is = 0;
  for (const auto& [v, e] : sub) {
    while (is < super.size() && super[is].first < v) ++is;
    if (is == super.size() || super[is].first != v || super[is].second < e) return false;
  }
  return true;
}

MonomialSet MonomialSet::hereditary_closure() const {
  Set out;
  // Multilinear monomials dominate our uses, so enumerate subsets directly;
  // general exponents fall back to decrementing one variable at a time.
  std::vector<Monomial> stack(set_.begin(), set_.end());
  while (!stack.empty()) {
    Monomial m = stack.back();
    stack.pop_back();
    if (!out.insert(m).second) continue;
    for (std::size_t k = 0; k < m.size(); ++k) {
      Monomial down = m;
      if (down[k].second > 1) {
        --down[k].second;
      } else {
        down.erase(down.begin() + static_cast<std::ptrdiff_t>(k));
      }
      if (!out.count(down)) stack.push_back(down);
    }
  }
  return MonomialSet(std::move(out));
}

bool MonomialSet::is_hereditary() const {
  for (const Monomial& m : set_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      Monomial down = m;
      if (down[k].second > 1) {
        --down[k].second;
      } else {
        down.erase(down.begin() + static_cast<std::ptrdiff_t>(k));
      }
      if (!set_.count(down)) return false;
    }
  }
  return true;
}

std::optional<std::pair<Monomial, Monomial>> MonomialSet::comparable_pair(bool exclude_constant) const {
  std::vector<const Monomial*> ms;
  for (const Monomial& m : set_) {
    if (exclude_constant && m.empty()) continue;
    ms.push_back(&m);
  }
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = 0; b < ms.size(); ++b)
      if (a != b && divides(*ms[a], *ms[b])) return std::make_pair(*ms[a], *ms[b]);
  return std::nullopt;
}

bool MonomialSet::is_pure(bool exclude_constant) const {
  return !comparable_pair(exclude_constant).has_value();
}

MonomialSet MonomialSet::generators() const {
  Set out;
  for (const Monomial& m : set_) {
    bool maximal = true;
    for (const Monomial& other : set_) {
      if (&other != &m && divides(m, other) && m != other) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(m);
  }
  return MonomialSet(std::move(out));
}

}  // namespace homopoly
