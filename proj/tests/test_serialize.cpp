#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <string>

#include "homopoly/circuit.hpp"
#include "homopoly/families.hpp"
#include "homopoly/serialize.hpp"

using namespace homopoly;
using nlohmann::json;

TEST_CASE("variable identifiers parse back from their printed form") {
  for (const VarId& v : {VarId::undirected(1, 2), VarId::undirected(3, 11),
                         VarId::directed(2, 1), VarId::directed(4, 4),
                         VarId::aux("y"), VarId::aux("zp")}) {
    CHECK(parse_varid(v.str()) == v);
  }
  CHECK(parse_varid("x{2,1}") == VarId::undirected(1, 2));
  CHECK_THROWS_AS(parse_varid("x{1,}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_varid(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_varid("3y"), std::invalid_argument);
}

TEST_CASE("polynomial text round-trips through parse") {
  SparsePolynomial p;
  p.add_term({}, Rational(-3, 2));
  p.add_term({{VarId::undirected(1, 2), 2}, {VarId::aux("y"), 1}}, Rational(5));
  p.add_term({{VarId::directed(2, 1), 1}}, Rational(-1));
  p.add_term({{VarId::aux("w"), 3}}, Rational(7, 5));
  CHECK(parse_polynomial(p.str()) == p);

  for (int n = 2; n <= 4; ++n) {
    const SparsePolynomial f = hom_poly(make_family(FamilyKind::Edge, 2), n);
    CHECK(parse_polynomial(f.str()) == f);
  }
  const SparsePolynomial cut = cut_poly_symmetrized(2, true);
  CHECK(parse_polynomial(cut.str()) == cut);

  CHECK(parse_polynomial("0").is_zero());
  CHECK(parse_polynomial("  1 - 3/2*x{1,2} ").str() == "1 - 3/2 * x{1,2}");
  CHECK(parse_polynomial("x{1,2} * x{1,2}").str() == "x{1,2}^2");
  CHECK(parse_polynomial("2 + 3").str() == "5");
}

TEST_CASE("malformed polynomial text is rejected") {
  for (const char* bad : {"", "1 +", "x{1,2", "* 3", "3/0", "x{1,2}^", "1 2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_polynomial(bad), std::invalid_argument);
  }
}

TEST_CASE("graph json round-trips and canonicalizes") {
  Graph g;
  g.n = 4;
  g.add_edge(3, 1);
  g.add_edge(2, 4);
  g.add_loop(2);
  const json j = graph_to_json(g);
  CHECK(j["n"] == 4);
  CHECK(graph_from_json(j) == g);

  const Graph parsed = graph_from_json(json::parse(
      R"({"n":3,"edges":[[2,1],[2,3]],"loops":[]})"));
  CHECK(parsed.has_edge(1, 2));
  CHECK(parsed.has_edge(2, 3));
  CHECK(parsed.edge_count() == 2);

  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":2,"edges":[[1,3]],"loops":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n":-1,"edges":[],"loops":[]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges":[]})")),
                  std::invalid_argument);
}

TEST_CASE("polynomial json carries exact rationals both ways") {
  const SparsePolynomial p = F_poly_half_form(3);
  const json j = polynomial_to_json(p);
  CHECK(polynomial_from_json(j) == p);
  // Serialized coefficients are strings, so exactness survives any reader.
  bool saw_fraction = false;
  for (const auto& term : j.at("terms"))
    if (term.at("coeff").get<std::string>().find('/') != std::string::npos)
      saw_fraction = true;
  CHECK(saw_fraction);

  CHECK(polynomial_from_json(polynomial_to_json(SparsePolynomial{})).is_zero());
}

TEST_CASE("circuit json round-trips and validates on load") {
  const ArithmeticCircuit c = build_loop_case_circuit(3);
  const json j = circuit_to_json(c);
  const ArithmeticCircuit back = circuit_from_json(j);
  CHECK(back.size() == c.size());
  CHECK(back.depth() == c.depth());
  CHECK(back.expand() == c.expand());

  json broken = j;
  broken["sink"] = 99;
  CHECK_THROWS_AS(circuit_from_json(broken), std::invalid_argument);
  json dangling = j;
  dangling["gates"][0] = {{"kind", "add"}, {"children", {5}}};
  CHECK_THROWS_AS(circuit_from_json(dangling), std::invalid_argument);
  json unknown = j;
  unknown["gates"][0] = {{"kind", "nand"}, {"children", {0}}};
  CHECK_THROWS_AS(circuit_from_json(unknown), std::invalid_argument);
}

TEST_CASE("atomic writes land complete and readable") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "homopoly-serialize-test";
  const fs::path file = dir / "nested" / "out.txt";
  fs::remove_all(dir);
  write_file_atomic(file.string(), "first");
  CHECK(read_file(file.string()) == "first");
  write_file_atomic(file.string(), "second\nline");
  CHECK(read_file(file.string()) == "second\nline");
  // No temp file debris next to the target.
  std::size_t entries = 0;
  for (const auto& e : fs::directory_iterator(file.parent_path())) {
    (void)e;
    ++entries;
  }
  CHECK(entries == 1);
  CHECK_THROWS_AS(read_file((dir / "missing.txt").string()), std::runtime_error);
  fs::remove_all(dir);
}
