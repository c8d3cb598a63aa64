#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homopoly/polynomial.hpp"
#include "homopoly/rng.hpp"

using namespace homopoly;

namespace {

SparsePolynomial x(int i, int j) {
  return SparsePolynomial::variable(VarId::undirected(i, j));
}

SparsePolynomial random_poly(Rng& rng, int max_terms) {
  const std::vector<VarId> pool = {VarId::undirected(1, 2), VarId::undirected(1, 3),
                                   VarId::aux("y"), VarId::directed(2, 1)};
  SparsePolynomial p;
  const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
  for (int t = 0; t < terms; ++t) {
    std::map<VarId, unsigned> exps;
    for (const VarId& v : pool) {
      const unsigned e = static_cast<unsigned>(rng.below(3));
      if (e) exps[v] = e;
    }
    p.add_term(Monomial(exps.begin(), exps.end()), Rational(rng.range(-5, 5)));
  }
  return p;
}

}  // namespace

TEST_CASE("variable identity and ordering") {
  CHECK(VarId::undirected(2, 1) == VarId::undirected(1, 2));
  CHECK(VarId::undirected(1, 2).str() == "x{1,2}");
  CHECK(VarId::directed(2, 1).str() == "xd{2,1}");
  CHECK(VarId::directed(1, 2) != VarId::directed(2, 1));
  CHECK(VarId::aux("y").str() == "y");
  CHECK(VarId::undirected(1, 2) < VarId::directed(1, 2));
  CHECK(VarId::directed(3, 1) < VarId::aux("a"));
  CHECK_THROWS_AS(VarId::undirected(2, 2), std::invalid_argument);
}

TEST_CASE("term order is graded lexicographic") {
  const SparsePolynomial p =
      x(1, 2) * x(1, 2) + x(1, 3) + SparsePolynomial::constant(Rational(4));
  CHECK(p.str() == "4 + x{1,3} + x{1,2}^2");
}

TEST_CASE("printing covers signs, rationals, and exponents") {
  SparsePolynomial p;
  p.add_term({{VarId::undirected(1, 2), 1}}, Rational(-3, 2));
  p.add_term({}, Rational(1));
  CHECK(p.str() == "1 - 3/2 * x{1,2}");
  CHECK(SparsePolynomial().str() == "0");
  SparsePolynomial q;
  q.add_term({{VarId::aux("y"), 2}}, Rational(-1));
  CHECK(q.str() == "-y^2");
}

TEST_CASE("ring laws on random polynomials") {
  Rng rng = Rng::stream(7, "poly_ring_laws");
  for (int trial = 0; trial < 25; ++trial) {
    const SparsePolynomial a = random_poly(rng, 4);
    const SparsePolynomial b = random_poly(rng, 4);
    const SparsePolynomial c = random_poly(rng, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == SparsePolynomial());
    CHECK(a * SparsePolynomial::constant(Rational(1)) == a);
    CHECK(a * SparsePolynomial() == SparsePolynomial());
    CHECK(a.scalar(Rational(3)) == a + a + a);
  }
}

TEST_CASE("zero coefficients vanish from the term map") {
  SparsePolynomial p = x(1, 2) - x(1, 2);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  p.add_term({{VarId::undirected(1, 2), 1}}, Rational(2));
  p.add_term({{VarId::undirected(1, 2), 1}}, Rational(-2));
  CHECK(p.is_zero());
}

TEST_CASE("homogeneous components partition the polynomial") {
  Rng rng = Rng::stream(7, "poly_components");
  for (int trial = 0; trial < 10; ++trial) {
    const SparsePolynomial p = random_poly(rng, 5);
    SparsePolynomial sum;
    for (unsigned k = 0; k <= p.degree(); ++k) sum = sum + p.homogeneous_component(k);
    CHECK(sum == p);
  }
}

TEST_CASE("restricted grading counts only the named variables") {
  const VarId y = VarId::aux("y");
  SparsePolynomial p;
  p.add_term({{VarId::undirected(1, 2), 2}, {y, 1}}, Rational(5));
  p.add_term({{VarId::undirected(1, 3), 1}}, Rational(7));
  const SparsePolynomial in_y = p.homogeneous_component(1, {y});
  CHECK(in_y.coefficient({{VarId::undirected(1, 2), 2}, {y, 1}}) == 5);
  CHECK(in_y.term_count() == 1);
  const SparsePolynomial deg0 = p.homogeneous_component(0, {y});
  CHECK(deg0.coefficient({{VarId::undirected(1, 3), 1}}) == 7);
  CHECK(p.degree_in({y}) == 1);
  CHECK(p.degree() == 3);
}

TEST_CASE("substitution handles constants, renames, and exponent merging") {
  const VarId a = VarId::undirected(1, 2), b = VarId::undirected(1, 3);
  const VarId y = VarId::aux("y");
  SparsePolynomial p;
  p.add_term({{a, 1}, {b, 2}}, Rational(1));

  Substitution to_const;
  to_const.emplace(a, Rational(3));
  CHECK(p.substitute(to_const).coefficient({{b, 2}}) == 3);

  Substitution rename;
  rename.emplace(a, y);
  rename.emplace(b, y);
  const SparsePolynomial merged = p.substitute(rename);
  CHECK(merged.coefficient({{y, 3}}) == 1);

  Substitution kill;
  kill.emplace(a, Rational(0));
  CHECK(p.substitute(kill).is_zero());
}

TEST_CASE("evaluate demands a complete point") {
  const SparsePolynomial p = x(1, 2) * x(1, 3);
  Point pt;
  pt[VarId::undirected(1, 2)] = Rational(2);
  CHECK_THROWS_WITH_AS(p.evaluate(pt), doctest::Contains("x{1,3}"),
                       std::invalid_argument);
  pt[VarId::undirected(1, 3)] = Rational(5, 2);
  CHECK(p.evaluate(pt) == Rational(5));
}

TEST_CASE("probabilistic equality separates unequal polynomials") {
  Rng rng = Rng::stream(7, "poly_pit");
  const SparsePolynomial a = x(1, 2) * x(1, 2) + x(1, 3);
  const SparsePolynomial b = x(1, 2) * x(1, 3) + x(1, 3);
  CHECK(equals_probabilistic(a, a, rng));
  CHECK_FALSE(equals_probabilistic(a, b, rng));
  CHECK(equals_exact(a, a));
  CHECK_FALSE(equals_exact(a, b));
}

TEST_CASE("monomial set view requires multilinear 0/1 input") {
  CHECK_THROWS_AS(MonomialSet::from_polynomial(x(1, 2).scalar(Rational(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(MonomialSet::from_polynomial(x(1, 2) * x(1, 2)),
                  std::invalid_argument);
  const MonomialSet m = MonomialSet::from_polynomial(x(1, 2) * x(1, 3) + x(1, 2));
  CHECK(m.size() == 2);
  CHECK(m.to_polynomial() == x(1, 2) * x(1, 3) + x(1, 2));
}

TEST_CASE("hereditary closure is idempotent and downward closed") {
  const VarId a = VarId::undirected(1, 2), b = VarId::undirected(1, 3),
              c = VarId::undirected(2, 3);
  MonomialSet::Set seed;
  seed.insert({{a, 1}, {b, 1}, {c, 1}});
  const MonomialSet m(seed);
  const MonomialSet closed = m.hereditary_closure();
  CHECK(closed.size() == 8);  // all subsets of a three-element monomial
  CHECK(closed.is_hereditary());
  CHECK(closed.hereditary_closure() == closed);
  CHECK(closed.contains({}));
  CHECK_FALSE(m.is_hereditary());
  CHECK(closed.generators() == MonomialSet(seed));
}

TEST_CASE("purity and comparable witnesses") {
  const VarId a = VarId::undirected(1, 2), b = VarId::undirected(1, 3);
  MonomialSet::Set s;
  s.insert({{a, 1}});
  s.insert({{a, 1}, {b, 1}});
  const MonomialSet m(s);
  CHECK_FALSE(m.is_pure());
  const auto pair = m.comparable_pair();
  REQUIRE(pair.has_value());
  CHECK(divides(pair->first, pair->second));

  MonomialSet::Set t;
  t.insert(Monomial{});
  t.insert({{a, 1}});
  const MonomialSet with_const(t);
  CHECK(with_const.is_pure(true));
  CHECK_FALSE(with_const.is_pure(false));
}

TEST_CASE("divides is componentwise") {
  const VarId a = VarId::undirected(1, 2), b = VarId::undirected(1, 3);
  CHECK(divides({}, {{a, 1}}));
  CHECK(divides({{a, 1}}, {{a, 2}, {b, 1}}));
  CHECK_FALSE(divides({{a, 2}}, {{a, 1}, {b, 3}}));
  CHECK_FALSE(divides({{b, 1}}, {{a, 2}}));
}
