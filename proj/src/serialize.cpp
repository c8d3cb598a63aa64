#include "homopoly/serialize.hpp"

#include <unistd.h>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace homopoly {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument(std::string("polynomial parse: expected '") + c +
                                  "' at position " + std::to_string(pos));
  }
  std::uint64_t read_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("polynomial parse: expected a number at position " +
                                  std::to_string(pos));
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      ++pos;
    }
    return v;
  }
  BigInt read_bigint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("polynomial parse: expected a number at position " +
                                  std::to_string(pos));
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits.push_back(s[pos]);
      ++pos;
    }
    return BigInt(digits);
  }
  std::string read_name() {
    skip_ws();
    std::string name;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      name.push_back(s[pos]);
      ++pos;
    }
    if (name.empty())
      throw std::invalid_argument("polynomial parse: expected a variable at position " +
                                  std::to_string(pos));
    return name;
  }
};

Rational read_rational(Cursor& c) {
  BigInt num = c.read_bigint();
  if (c.eat('/')) {
    BigInt den = c.read_bigint();
    if (den == 0) throw std::invalid_argument("polynomial parse: zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

VarId read_varid(Cursor& c) {
  const std::string name = c.read_name();
  if (std::isdigit(static_cast<unsigned char>(name[0])))
    throw std::invalid_argument("variable parse: a name may not start with a digit: '" +
                                name + "'");
  if ((name == "x" || name == "xd") && c.peek() == '{') {
    c.expect('{');
    const std::uint64_t i = c.read_uint();
    c.expect(',');
    const std::uint64_t j = c.read_uint();
    c.expect('}');
    return name == "x" ? VarId::undirected(static_cast<std::uint32_t>(i),
                                           static_cast<std::uint32_t>(j))
                       : VarId::directed(static_cast<std::uint32_t>(i),
                                         static_cast<std::uint32_t>(j));
  }
  return VarId::aux(name);
}

// One product of factors; leaves the cursor on '+', '-', or the end.
void read_term(Cursor& c, int sign, SparsePolynomial& acc) {
  Rational coeff(sign);
  std::map<VarId, unsigned> exps;
  bool expect_factor = true;
  while (expect_factor) {
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff *= read_rational(c);
    } else {
      const VarId v = read_varid(c);
      unsigned e = 1;
      if (c.eat('^')) e = static_cast<unsigned>(c.read_uint());
      exps[v] += e;
    }
    expect_factor = c.eat('*');
  }
  Monomial m(exps.begin(), exps.end());
  acc.add_term(m, coeff);
}

}  // namespace

VarId parse_varid(const std::string& text) {
  Cursor c{text};
  const VarId v = read_varid(c);
  if (!c.done())
    throw std::invalid_argument("variable parse: trailing input in '" + text + "'");
  return v;
}

SparsePolynomial parse_polynomial(const std::string& text) {
  Cursor c{text};
  SparsePolynomial acc;
  if (c.done()) throw std::invalid_argument("polynomial parse: empty input");
  int sign = c.eat('-') ? -1 : 1;
  read_term(c, sign, acc);
  while (!c.done()) {
    if (c.eat('+'))
      sign = 1;
    else if (c.eat('-'))
      sign = -1;
    else
      throw std::invalid_argument("polynomial parse: expected '+' or '-' at position " +
                                  std::to_string(c.pos));
    read_term(c, sign, acc);
  }
  return acc;
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) j["edges"].push_back({u, v});
  j["loops"] = nlohmann::json::array();
  for (int v : g.loops) j["loops"].push_back(v);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph json: needs an integer field \"n\"");
  Graph g;
  g.n = j["n"].get<int>();
  if (g.n < 0) throw std::invalid_argument("graph json: \"n\" must be nonnegative");
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph json: each edge must be a pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (j.contains("loops"))
    for (const auto& v : j["loops"]) g.add_loop(v.get<int>());
  return g;
}

nlohmann::json polynomial_to_json(const SparsePolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (const auto& [v, e] : m) vars.push_back({{"var", v.str()}, {"exp", e}});
    terms.push_back({{"coeff", to_string(c)}, {"monomial", std::move(vars)}});
  }
  return nlohmann::json{{"terms", std::move(terms)}};
}

SparsePolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw std::invalid_argument("polynomial json: needs an array field \"terms\"");
  SparsePolynomial p;
  for (const auto& t : j["terms"]) {
    const Rational coeff = parse_rational(t.at("coeff").get<std::string>());
    std::map<VarId, unsigned> exps;
    for (const auto& f : t.at("monomial"))
      exps[parse_varid(f.at("var").get<std::string>())] += f.at("exp").get<unsigned>();
    p.add_term(Monomial(exps.begin(), exps.end()), coeff);
  }
  return p;
}

nlohmann::json circuit_to_json(const ArithmeticCircuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates()) {
    nlohmann::json jg;
    switch (g.kind) {
      case GateKind::Const:
        jg["kind"] = "const";
        jg["value"] = to_string(g.value);
        break;
      case GateKind::Var:
        jg["kind"] = "var";
        jg["var"] = g.var.str();
        break;
      case GateKind::Add:
      case GateKind::Mul:
        jg["kind"] = g.kind == GateKind::Add ? "add" : "mul";
        jg["children"] = g.children;
        break;
    }
    gates.push_back(std::move(jg));
  }
  return nlohmann::json{{"gates", std::move(gates)}, {"sink", c.sink()}};
}

ArithmeticCircuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("gates") || !j["gates"].is_array() ||
      !j.contains("sink"))
    throw std::invalid_argument("circuit json: needs \"gates\" and \"sink\"");
  ArithmeticCircuit c;
  for (const auto& jg : j["gates"]) {
    const std::string kind = jg.at("kind").get<std::string>();
    if (kind == "const") {
      c.add_const(parse_rational(jg.at("value").get<std::string>()));
    } else if (kind == "var") {
      c.add_var(parse_varid(jg.at("var").get<std::string>()));
    } else if (kind == "add" || kind == "mul") {
      c.add_op(kind == "add" ? GateKind::Add : GateKind::Mul,
               jg.at("children").get<std::vector<int>>());
    } else {
      throw std::invalid_argument("circuit json: unknown gate kind \"" + kind + "\"");
    }
  }
  c.set_sink(j["sink"].get<int>());
  c.validate();
  return c;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace homopoly
