#include "homopoly/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace homopoly {

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) {
    loops.insert(u);
    return;
  }
  if (u > v) std::swap(u, v);
  edges.emplace(u, v);
}

void Graph::add_loop(int v) {
  if (v < 1 || v > n) throw std::invalid_argument("loop vertex out of range");
  loops.insert(v);
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return loops.count(u) != 0;
  if (u > v) std::swap(u, v);
  return edges.count({u, v}) != 0;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int degree(const Graph& g, int v) {
  int d = static_cast<int>(g.neighbors(v).size());
  if (g.has_loop(v)) d += 2;
  return d;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 1; v <= g.n; ++v) d = std::max(d, degree(g, v));
  return d;
}

Graph make_family(FamilyKind kind, int n, int b) {
  Graph g;
  switch (kind) {
    case FamilyKind::Complete:
      if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
      g.n = n;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
      return g;
    case FamilyKind::CompleteBipartite:
      if (n < 1 || b < 1) throw std::invalid_argument("complete bipartite graph needs both sides nonempty");
      g.n = n + b;
      for (int i = 1; i <= n; ++i)
        for (int j = n + 1; j <= n + b; ++j) g.add_edge(i, j);
      return g;
    case FamilyKind::Path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      g.n = n;
      for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
      return g;
    case FamilyKind::Cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      g.n = n;
      for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
      g.add_edge(n, 1);
      return g;
    case FamilyKind::Edge:
      g.n = 2;
      g.add_edge(1, 2);
      return g;
    case FamilyKind::SingleLoopedVertex:
      g.n = 1;
      g.add_loop(1);
      return g;
    case FamilyKind::Edgeless:
      if (n < 1) throw std::invalid_argument("edgeless graph needs n >= 1");
      g.n = n;
      return g;
  }
  throw std::invalid_argument("unknown family kind");
}

bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& phi) {
  if (static_cast<int>(phi.mapping.size()) != g.n) return false;
  for (int img : phi.mapping)
    if (img < 1 || img > h.n) return false;
  for (const auto& [u, v] : g.edges)
    if (!h.has_edge(phi.mapping[u - 1], phi.mapping[v - 1])) return false;
  for (int v : g.loops)
    if (!h.has_loop(phi.mapping[v - 1])) return false;
  return true;
}

namespace {

bool extend(const Graph& g, const Graph& h, std::vector<int>& img, int v) {
  if (v > g.n) return true;
  for (int cand = 1; cand <= h.n; ++cand) {
    if (g.has_loop(v) && !h.has_loop(cand)) continue;
    bool ok = true;
    for (int u = 1; u < v && ok; ++u)
      if (g.has_edge(u, v) && !h.has_edge(img[u - 1], cand)) ok = false;
    if (!ok) continue;
    img[v - 1] = cand;
    if (extend(g, h, img, v + 1)) return true;
  }
  return false;
}

}  // namespace

std::optional<Homomorphism> find_homomorphism(const Graph& g, const Graph& h) {
  if (h.n < 1) return std::nullopt;
  std::vector<int> img(static_cast<std::size_t>(g.n), 0);
  if (!extend(g, h, img, 1)) return std::nullopt;
  return Homomorphism{std::move(img)};
}

bool are_bihomomorphic(const Graph& a, const Graph& b) {
  return find_homomorphism(a, b).has_value() && find_homomorphism(b, a).has_value();
}

Graph neighborhood_union(const Graph& h, std::vector<int>* component_of) {
  if (!h.loop_free())
    throw std::invalid_argument("neighborhood_union is defined for loop-free graphs only");
  Graph out;
  if (component_of) component_of->clear();
  for (int v = 1; v <= h.n; ++v) {
    std::vector<int> nb = h.neighbors(v);
    int base = out.n;
    out.n += static_cast<int>(nb.size());
    if (component_of)
      for (std::size_t k = 0; k < nb.size(); ++k) component_of->push_back(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (h.has_edge(nb[a], nb[b]))
          out.add_edge(base + static_cast<int>(a) + 1, base + static_cast<int>(b) + 1);
  }
  return out;
}

Graph cone(const Graph& g) {
  Graph out = g;
  out.n = g.n + 1;
  for (int v = 1; v <= g.n; ++v) out.add_edge(v, out.n);
  return out;
}

namespace {

int g_enumeration_cap = -1;  // resolved lazily so the env var is read once

int resolve_cap() {
  if (g_enumeration_cap > 0) return g_enumeration_cap;
  if (const char* env = std::getenv("HOMOPOLY_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 6;
}

}  // namespace

int enumeration_cap() { return resolve_cap(); }
void set_enumeration_cap(int cap) { g_enumeration_cap = cap; }

void enumerate_graphs(int n, const std::function<void(const Graph&)>& fn) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs needs n >= 1");
  if (n > enumeration_cap())
    throw std::invalid_argument("enumerate_graphs: n exceeds the enumeration cap (" +
                                std::to_string(enumeration_cap()) + ")");
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
  const std::size_t m = all_edges.size();
  // Lexicographic order on the indicator tuple: the first edge is the most
  // significant position.
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    Graph g;
    g.n = n;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (1ULL << (m - 1 - b))) g.edges.insert(all_edges[b]);
    fn(g);
  }
}

std::vector<Graph> enumerate_graphs(int n) {
  std::vector<Graph> out;
  enumerate_graphs(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace homopoly
