#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homopoly/families.hpp"
#include "homopoly/reduction.hpp"
#include "homopoly/rng.hpp"

using namespace homopoly;

namespace {

const VarId A = VarId::undirected(1, 2);
const VarId B = VarId::undirected(1, 3);
const VarId Y = VarId::aux("y");

// 3 + 2*a*b + a^2*y - 5*b*y^2
SparsePolynomial sample() {
  SparsePolynomial p;
  p.add_term({}, Rational(3));
  p.add_term({{A, 1}, {B, 1}}, Rational(2));
  p.add_term({{A, 2}, {Y, 1}}, Rational(1));
  p.add_term({{B, 1}, {Y, 2}}, Rational(-5));
  return p;
}

Point sample_point() {
  Point pt;
  pt[A] = Rational(2);
  pt[B] = Rational(3);
  pt[Y] = Rational(5);
  return pt;
}

}  // namespace

TEST_CASE("vandermonde solve recovers coefficients exactly") {
  // p(t) = 7 - t + 2/3 t^2 sampled at 1, 2, 4
  const std::vector<Rational> nodes = {Rational(1), Rational(2), Rational(4)};
  std::vector<Rational> values;
  for (const Rational& t : nodes)
    values.push_back(Rational(7) - t + Rational(2, 3) * t * t);
  std::size_t ops = 0;
  const std::vector<Rational> coef = solve_vandermonde(nodes, values, &ops);
  REQUIRE(coef.size() == 3);
  CHECK(coef[0] == 7);
  CHECK(coef[1] == -1);
  CHECK(coef[2] == Rational(2, 3));
  CHECK(ops > 0);
  CHECK_THROWS_AS(solve_vandermonde({Rational(1), Rational(1)},
                                    {Rational(0), Rational(0)}),
                  std::invalid_argument);
}

TEST_CASE("oracle bookkeeping starts at zero and counts calls") {
  Oracle o(sample());
  CHECK(o.degree_bound() == 3);
  CHECK(o.universe().size() == 3);
  CHECK(o.transcript()->call_count == 0);
  const Rational v = o(sample_point());
  CHECK(v == sample().evaluate(sample_point()));
  CHECK(o.transcript()->call_count == 1);
}

TEST_CASE("a stated bound below the true degree is rejected") {
  CHECK_THROWS_AS(Oracle(sample(), 2), std::invalid_argument);
  const Oracle loose(sample(), 5);
  CHECK(loose.degree_bound() == 5);
}

TEST_CASE("extraction agrees with the symbolic component in every grading") {
  Oracle o(sample());
  const Point pt = sample_point();
  SUBCASE("total degree") {
    for (int k = 0; k <= 3; ++k) {
      const ExtractResult r = extract_homogeneous(o, k, {}, pt);
      CHECK(r.value == sample().homogeneous_component(k).evaluate(pt));
      CHECK(r.value == extract_homogeneous_symbolic(sample(), k, {}).evaluate(pt));
    }
  }
  SUBCASE("restricted to y") {
    for (int k = 0; k <= 2; ++k) {
      const ExtractResult r = extract_homogeneous(o, k, {Y}, pt);
      CHECK(r.value ==
            sample().homogeneous_component(k, {Y}).evaluate(pt));
    }
  }
  SUBCASE("restricted to a pair of variables") {
    const std::set<VarId> vars = {A, B};
    for (int k = 0; k <= 3; ++k) {
      const ExtractResult r = extract_homogeneous(o, k, vars, pt);
      CHECK(r.value == sample().homogeneous_component(k, vars).evaluate(pt));
    }
  }
}

TEST_CASE("call counts equal the stated bound plus one") {
  Oracle o(sample());
  const Point pt = sample_point();
  const ExtractResult r = extract_homogeneous(o, 1, {}, pt);
  CHECK(r.transcript.call_count == 4);  // degree 3 bound
  CHECK(o.transcript()->call_count == 4);
  CHECK(r.transcript.scales.size() == 1);

  // A looser stated bound costs proportionally more calls.
  Oracle loose(sample(), 5);
  extract_homogeneous(loose, 1, {}, pt);
  CHECK(loose.transcript()->call_count == 6);
}

TEST_CASE("components above the bound are free") {
  Oracle o(sample());
  const ExtractResult r = extract_homogeneous(o, 4, {}, sample_point());
  CHECK(r.value == 0);
  CHECK(r.transcript.call_count == 0);
  CHECK(o.transcript()->call_count == 0);
}

TEST_CASE("scaling base does not change the result") {
  Oracle o(sample());
  const Point pt = sample_point();
  const Rational base2 = extract_homogeneous(o, 2, {}, pt).value;
  for (int base : {3, 5, 7}) {
    ExtractOptions opts;
    opts.scale_base = base;
    CHECK(extract_homogeneous(o, 2, {}, pt, opts).value == base2);
  }
  ExtractOptions bad;
  bad.scale_base = 1;
  CHECK_THROWS_AS(extract_homogeneous(o, 2, {}, pt, bad), std::invalid_argument);
}

TEST_CASE("bound verification catches an understated bound") {
  // Build an evaluator-backed oracle that lies about its degree.
  const SparsePolynomial p = sample();  // degree 3
  Oracle lying([p](const Point& x) { return p.evaluate(x); },
               {A, B, Y}, 2);
  ExtractOptions opts;
  opts.verify_bound = true;
  CHECK_THROWS_AS(extract_homogeneous(lying, 1, {}, sample_point(), opts),
                  std::runtime_error);

  Oracle honest(p);
  opts.verify_bound = true;
  CHECK(extract_homogeneous(honest, 1, {}, sample_point(), opts).value ==
        p.homogeneous_component(1).evaluate(sample_point()));
}

TEST_CASE("projection forwards exactly one call and counts substitutions") {
  Oracle root(sample());
  Substitution sub;
  sub.emplace(A, Rational(1));
  sub.emplace(B, VarId::aux("z"));
  Oracle projected = project(root, sub);

  Point pt;
  pt[VarId::aux("z")] = Rational(3);
  pt[Y] = Rational(5);
  const Rational got = projected(pt);

  Substitution check_sub;
  check_sub.emplace(A, Rational(1));
  check_sub.emplace(B, VarId::aux("z"));
  CHECK(got == sample().substitute(check_sub).evaluate(pt));
  CHECK(root.transcript()->call_count == 1);
  CHECK(root.transcript()->substitution_count == 1);

  // Chained projections compose additively: two layers, two substitutions.
  Substitution again;
  again.emplace(VarId::aux("z"), Rational(2));
  Oracle twice = project(projected, again);
  Point pt2;
  pt2[Y] = Rational(5);
  twice(pt2);
  CHECK(root.transcript()->call_count == 2);
  CHECK(root.transcript()->substitution_count == 3);  // 1 + one per layer
}

TEST_CASE("projection complains about unassigned surviving variables") {
  Oracle root(sample());
  Substitution sub;
  sub.emplace(A, Rational(1));
  sub.emplace(B, VarId::aux("z"));
  Oracle projected = project(root, sub);
  Point incomplete;
  incomplete[VarId::aux("z")] = Rational(1);  // y is still unassigned
  CHECK_THROWS_WITH_AS(projected(incomplete), doctest::Contains("y"),
                       std::invalid_argument);
}

TEST_CASE("component oracles nest with multiplying cost") {
  Oracle root(sample());
  // Degree in y is at most 2, degree in {a,b} at most 3.
  Oracle in_y = component_oracle(root, 1, {Y}, 2);
  Oracle nested = component_oracle(in_y, 2, {A, B}, 3);
  const Point pt = sample_point();
  const Rational got = nested(pt);
  const SparsePolynomial expected =
      sample().homogeneous_component(1, {Y}).homogeneous_component(2, {A, B});
  CHECK(got == expected.evaluate(pt));
  // (2+1) outer points, each triggering (2+1+1)... the inner bound is 2 in y:
  // 3 calls per inner evaluation, 4 outer points in {a,b}.
  CHECK(root.transcript()->call_count == 12);
}

TEST_CASE("scaled variables outside the universe are ignored") {
  SparsePolynomial p;  // constant 4, no variables at all
  p.add_term({}, Rational(4));
  Oracle o(p);
  const ExtractResult r0 = extract_homogeneous(o, 0, {Y}, Point{});
  CHECK(r0.value == 4);
  const ExtractResult r1 = extract_homogeneous(o, 1, {Y}, Point{});
  CHECK(r1.value == 0);
}

TEST_CASE("scaling by powers keeps the invariance the construction relies on") {
  // f(3 x) recovers sum_k 3^k CH_k(x), checked against direct evaluation.
  const SparsePolynomial p = sample();
  Oracle o(p);
  Point pt = sample_point();
  Point scaled = pt;
  for (auto& [v, val] : scaled) val *= 3;
  Rational expect(0);
  Rational pw(1);
  for (unsigned k = 0; k <= p.degree(); ++k) {
    expect += pw * p.homogeneous_component(k).evaluate(pt);
    pw *= 3;
  }
  CHECK(o(scaled) == expect);
}
