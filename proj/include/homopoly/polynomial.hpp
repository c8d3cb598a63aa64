#pragma once

// Sparse multivariate polynomials over exact rationals.
//
// Variables live in three namespaces: undirected edge variables x{i,j}
// (stored with i < j), directed edge variables xd{i,j}, and named auxiliary
// variables.  Terms are kept in a canonical graded-lexicographic order so
// that iteration, printing and serialization are bit-stable.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "homopoly/rational.hpp"
#include "homopoly/rng.hpp"

namespace homopoly {

enum class VarNs : std::uint8_t { Undirected = 0, Directed = 1, Aux = 2 };

struct VarId {
  VarNs ns = VarNs::Aux;
  std::uint32_t i = 0, j = 0;  // endpoints for edge namespaces
  std::string name;            // auxiliary namespace only

  static VarId undirected(std::uint32_t i, std::uint32_t j);
  static VarId directed(std::uint32_t i, std::uint32_t j);
  static VarId aux(std::string name);

  bool operator==(const VarId& o) const { return ns == o.ns && i == o.i && j == o.j && name == o.name; }
  bool operator!=(const VarId& o) const { return !(*this == o); }
  bool operator<(const VarId& o) const {
    if (ns != o.ns) return ns < o.ns;
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return name < o.name;
  }

  std::string str() const;  // "x{1,2}", "xd{2,1}", "y"
};

// Exponent vector, sorted by VarId, all exponents >= 1.  The empty monomial
// is the constant term.
using Monomial = std::vector<std::pair<VarId, std::uint32_t>>;

unsigned total_degree(const Monomial& m);
std::string monomial_str(const Monomial& m);  // "x{1,2}^2 * y", "1" for empty

// Graded lexicographic: lower total degree first, ties broken by the
// variable/exponent sequence.  This is the single canonical term order.
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// A point assigns values to variables.
using Point = std::map<VarId, Rational>;

// Substitutions map a variable to either a constant or another variable.
// When several variables map to one target variable their exponents add.
using Substitution = std::map<VarId, std::variant<Rational, VarId>>;

class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  SparsePolynomial() = default;
  static SparsePolynomial constant(const Rational& c);
  static SparsePolynomial variable(const VarId& v);
  static SparsePolynomial monomial(const Monomial& m, const Rational& coef);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Zero coefficients are never stored; add_term folds into the map.
  void add_term(const Monomial& m, const Rational& coef);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial scalar(const Rational& c) const;

  bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const SparsePolynomial& o) const { return !(*this == o); }

  unsigned degree() const;                                 // 0 for the zero polynomial
  unsigned degree_in(const std::set<VarId>& vars) const;   // max degree restricted to vars
  std::set<VarId> variables() const;

  SparsePolynomial substitute(const Substitution& sub) const;

  // Sum of the terms whose degree (restricted to `vars` when given, total
  // otherwise) is exactly k.
  SparsePolynomial homogeneous_component(unsigned k) const;
  SparsePolynomial homogeneous_component(unsigned k, const std::set<VarId>& vars) const;

  // Throws std::invalid_argument naming the first missing variable.
  Rational evaluate(const Point& point) const;

  std::string str() const;  // canonical text form, "0" for zero

 private:
  TermMap terms_;
};

bool equals_exact(const SparsePolynomial& a, const SparsePolynomial& b);

// Samples integer points coordinatewise uniform in [0, 2^31) over the union
// of both variable sets.  A disagreement is definitive; agreement on all
// trials is only evidence.  Used as a fast pre-check, never as the verdict.
bool equals_probabilistic(const SparsePolynomial& a, const SparsePolynomial& b,
                          Rng& rng, unsigned trials = 20);

// ---------------------------------------------------------------------------
// Monomial-set view for multilinear 0/1 polynomials and the hereditary
// machinery: a set of monomials is hereditary when it is closed under taking
// sub-monomials (divisors).

class MonomialSet {
 public:
  using Set = std::set<Monomial, TermOrder>;

  MonomialSet() = default;
  explicit MonomialSet(Set monomials) : set_(std::move(monomials)) {}

  // Requires every coefficient to be exactly 1 and every exponent 1.
  static MonomialSet from_polynomial(const SparsePolynomial& p);
  SparsePolynomial to_polynomial() const;

  const Set& monomials() const { return set_; }
  bool contains(const Monomial& m) const { return set_.count(m) != 0; }
  std::size_t size() const { return set_.size(); }
  bool operator==(const MonomialSet& o) const { return set_ == o.set_; }
  bool operator!=(const MonomialSet& o) const { return !(*this == o); }

  // Downward closure under sub-monomials.  Nonempty input always yields a
  // closure containing the empty monomial.
  MonomialSet hereditary_closure() const;
  bool is_hereditary() const;

  // No two distinct monomials comparable under divisibility.  The constant
  // (empty) monomial divides everything, so by default it is excluded from
  // the comparison; pass exclude_constant = false to count it.
  bool is_pure(bool exclude_constant = true) const;

  // The pair witnessing impurity (smaller divides larger), if any.
  std::optional<std::pair<Monomial, Monomial>> comparable_pair(bool exclude_constant = true) const;

  // Maximal monomials under divisibility; these generate the closure.
  MonomialSet generators() const;

 private:
  Set set_;
};

// True when sub divides super (componentwise exponents <=).
bool divides(const Monomial& sub, const Monomial& super);

}  // namespace homopoly
