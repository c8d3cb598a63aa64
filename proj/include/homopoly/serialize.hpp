#pragma once

// Text and JSON (de)serialization for graphs, polynomials, and circuits,
// plus atomic file output.  The polynomial text grammar is exactly what
// SparsePolynomial::str() emits: terms joined by " + " / " - ", factors
// joined by " * ", variables "x{i,j}", "xd{i,j}", or a bare auxiliary name,
// exponents "^e", rational coefficients "p/q".  Whitespace is flexible on
// input.  Auxiliary names may not begin with "x{" or "xd{".

#include <string>

#include "json.hpp"

#include "homopoly/circuit.hpp"
#include "homopoly/graph.hpp"
#include "homopoly/polynomial.hpp"

namespace homopoly {

VarId parse_varid(const std::string& text);
SparsePolynomial parse_polynomial(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json circuit_to_json(const ArithmeticCircuit& c);
ArithmeticCircuit circuit_from_json(const nlohmann::json& j);

// Writes to a sibling temp file, then renames over the target, so readers
// never observe a half-written file.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace homopoly
