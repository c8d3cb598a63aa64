#pragma once

// Small labeled graphs (vertices 1..n), allowed to carry loops, plus the
// homomorphism search and the graph constructions the reduction machinery
// needs.  Everything here is exhaustive and deterministic; these are the
// reference implementations the polynomial families are checked against.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace homopoly {

struct Graph {
  int n = 0;                              // vertices are 1..n
  std::set<std::pair<int, int>> edges;    // stored with first < second
  std::set<int> loops;

  void add_edge(int u, int v);            // canonicalizes order; u == v adds a loop
  void add_loop(int v);
  bool has_edge(int u, int v) const;      // u == v queries the loop set
  bool has_loop(int v) const { return loops.count(v) != 0; }
  std::vector<int> neighbors(int v) const;  // sorted, loop does not list v itself
  std::size_t edge_count() const { return edges.size(); }
  bool loop_free() const { return loops.empty(); }

  bool operator==(const Graph& o) const { return n == o.n && edges == o.edges && loops == o.loops; }
};

// Degree of v: incident edges, a loop counting 2.  max_degree of the empty
// graph is 0.
int degree(const Graph& g, int v);
int max_degree(const Graph& g);

enum class FamilyKind {
  Complete,          // K_n
  CompleteBipartite, // K_{a,b}
  Path,              // P_n, n vertices
  Cycle,             // C_n, n >= 3
  Edge,              // single edge on 2 vertices
  SingleLoopedVertex,
  Edgeless,          // n isolated vertices
};

Graph make_family(FamilyKind kind, int n, int b = 0);

// A vertex map 1..n(G) -> 1..n(H).
struct Homomorphism {
  std::vector<int> mapping;  // mapping[v-1] is the image of v
};

// True when phi maps every edge (and loop) of g onto an edge (or loop) of h.
bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& phi);

// Exhaustive backtracking over vertex images in index order, pruning on
// adjacency.  Deterministic: returns the lexicographically first witness.
std::optional<Homomorphism> find_homomorphism(const Graph& g, const Graph& h);

// Homomorphisms both ways; such graphs index identical polynomial families.
bool are_bihomomorphic(const Graph& a, const Graph& b);

// Disjoint union over all vertices v of the subgraph induced by the open
// neighborhood of v.  Rejects graphs with loops.  component_of reports, for
// each vertex of the result, which source vertex's neighborhood it came from.
Graph neighborhood_union(const Graph& h, std::vector<int>* component_of = nullptr);

// Adds an apex vertex n+1 adjacent to every existing vertex.
Graph cone(const Graph& g);

// Streams every loop-free graph on [n] in lexicographic edge-indicator order
// (edges sorted lexicographically, earlier edges more significant).
// Guarded by the enumeration cap; see Caps below.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn);
std::vector<Graph> enumerate_graphs(int n);

// Caps: subset-scan constructions are exponential in edge count, so they are
// guarded by enumeration_cap (vertices).  The environment variable
// HOMOPOLY_MAX_N overrides the default; an explicit set_enumeration_cap call
// overrides both.
int enumeration_cap();
void set_enumeration_cap(int cap);

}  // namespace homopoly
