#include "homopoly/families.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <vector>

namespace homopoly {

namespace {

Monomial sorted_monomial(std::vector<std::pair<VarId, std::uint32_t>> vars) {
  std::sort(vars.begin(), vars.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Monomial out;
  for (const auto& [v, e] : vars) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == v) {
      out.back().second += e;
    } else {
      out.emplace_back(v, e);
    }
  }
  return out;
}

// Connected components as vertex lists, via BFS on the neighbor map.
std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<std::size_t>(g.n) + 1, 0);
  for (int s = 1; s <= g.n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          q.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// Two-colors one component; fills sides[0] / sides[1] on success.
bool two_color_component(const Graph& g, const std::vector<int>& comp,
                         std::vector<int> sides[2]) {
  std::map<int, int> color;
  std::queue<int> q;
  color[comp.front()] = 0;
  q.push(comp.front());
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (g.has_loop(u)) return false;
    for (int v : g.neighbors(u)) {
      auto it = color.find(v);
      if (it == color.end()) {
        color[v] = 1 - color[u];
        q.push(v);
      } else if (it->second == color[u]) {
        return false;
      }
    }
  }
  for (int v : comp) sides[color[v]].push_back(v);
  return true;
}

bool is_complete_bipartite_component(const Graph& g,
                                     const std::vector<int>& comp) {
  std::vector<int> sides[2];
  if (!two_color_component(g, comp, sides)) return false;
  if (sides[0].empty() || sides[1].empty()) return false;
  for (int a : sides[0])
    for (int b : sides[1])
      if (!g.has_edge(a, b)) return false;
  return true;
}

bool is_clique_component(const Graph& g, const std::vector<int>& comp) {
  if (comp.size() < 2) return false;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (std::size_t j = i + 1; j < comp.size(); ++j)
      if (!g.has_edge(comp[i], comp[j])) return false;
  return true;
}

// Edge subset = single nontrivial component of the given shape, all other
// vertices isolated.
template <typename ComponentPred>
SparsePolynomial scan_family(int n, bool include_empty, ComponentPred pred) {
  SparsePolynomial out;
  enumerate_graphs(n, [&](const Graph& g) {
    if (g.edges.empty()) {
      if (include_empty) out.add_term({}, Rational(1));
      return;
    }
    int nontrivial = 0;
    bool ok = true;
    for (const auto& comp : components(g)) {
      if (comp.size() == 1) continue;
      ++nontrivial;
      if (nontrivial > 1 || !pred(g, comp)) {
        ok = false;
        break;
      }
    }
    if (ok && nontrivial == 1) out.add_term(edge_monomial(g.edges), Rational(1));
  });
  return out;
}

Monomial bipartite_monomial(std::uint32_t a_mask, std::uint32_t b_mask,
                            int n) {
  std::vector<std::pair<VarId, std::uint32_t>> vars;
  for (int i = 1; i <= n; ++i) {
    if (!(a_mask & (1u << (i - 1)))) continue;
    for (int j = 1; j <= n; ++j) {
      if (!(b_mask & (1u << (j - 1)))) continue;
      vars.emplace_back(VarId::undirected(i, j), 1);
    }
  }
  return sorted_monomial(std::move(vars));
}

}  // namespace

Monomial edge_monomial(const std::set<std::pair<int, int>>& edges) {
  std::vector<std::pair<VarId, std::uint32_t>> vars;
  vars.reserve(edges.size());
  for (const auto& [u, v] : edges) vars.emplace_back(VarId::undirected(u, v), 1);
  return sorted_monomial(std::move(vars));
}

SparsePolynomial hom_poly(const Graph& h, int n) {
  if (h.n < 1) throw std::invalid_argument("hom_poly: target graph is empty");
  SparsePolynomial out;
  enumerate_graphs(n, [&](const Graph& g) {
    if (find_homomorphism(g, h).has_value())
      out.add_term(edge_monomial(g.edges), Rational(1));
  });
  return out;
}

SparsePolynomial F_poly(int n, bool include_empty) {
  if (n < 0) throw std::invalid_argument("F_poly: negative size");
  if (n > 20) throw std::invalid_argument("F_poly: size too large");
  SparsePolynomial out;
  if (include_empty) out.add_term({}, Rational(1));
  const std::uint32_t full = (n >= 32) ? 0 : ((1u << n) - 1);
  for (std::uint32_t a = 1; a <= full; ++a) {
    const std::uint32_t rest = full & ~a;
    // Unordered pair {A, B}: put the lowest vertex of the union in A.
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if ((a & -a) > (b & -b)) continue;
      out.add_term(bipartite_monomial(a, b, n), Rational(1));
    }
  }
  return out;
}

SparsePolynomial F_poly_scan(int n, bool include_empty) {
  return scan_family(n, include_empty, [](const Graph& g, const std::vector<int>& comp) {
    return is_complete_bipartite_component(g, comp);
  });
}

SparsePolynomial F_poly_half_form(int n) {
  if (n < 0) throw std::invalid_argument("F_poly_half_form: negative size");
  if (n > 20) throw std::invalid_argument("F_poly_half_form: size too large");
  SparsePolynomial out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t a = 0; a < limit; ++a) {
    const std::uint32_t rest = (limit - 1) & ~a;
    std::uint32_t b = rest;
    while (true) {
      out.add_term(bipartite_monomial(a, b, n), Rational(1, 2));
      if (b == 0) break;
      b = (b - 1) & rest;
    }
  }
  return out;
}

SparsePolynomial G_poly(int n) {
  if (n < 1) throw std::invalid_argument("G_poly: size must be positive");
  if (n > 24) throw std::invalid_argument("G_poly: size too large");
  SparsePolynomial out;
  const std::uint32_t full = (1u << n) - 1;
  // One monomial per partition of [n] into two nonempty sides; fixing
  // vertex 1 on side A visits each partition exactly once.
  for (std::uint32_t a = 1; a <= full; a += 2) {
    if (a == full) continue;
    out.add_term(bipartite_monomial(a, full & ~a, n), Rational(1));
  }
  return out;
}

SparsePolynomial cut_poly(int n, int q, bool include_trivial) {
  if (n < 1) throw std::invalid_argument("cut_poly: size must be positive");
  if (n > 20) throw std::invalid_argument("cut_poly: size too large");
  if (q < 1) throw std::invalid_argument("cut_poly: q must be positive");
  const auto exp = static_cast<std::uint32_t>(q - 1);
  SparsePolynomial out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (!include_trivial && (v == 0 || v == limit - 1)) continue;
    std::vector<std::pair<VarId, std::uint32_t>> vars;
    for (int i = 1; i <= n; ++i) {
      if (!(v & (1u << (i - 1)))) continue;
      for (int j = 1; j <= n; ++j) {
        if (v & (1u << (j - 1))) continue;
        vars.emplace_back(VarId::directed(i, j), exp);
      }
    }
    out.add_term(sorted_monomial(std::move(vars)), Rational(1));
  }
  return out;
}

SparsePolynomial cut_poly_symmetrized(int n, bool include_trivial) {
  if (n < 1) throw std::invalid_argument("cut_poly_symmetrized: size must be positive");
  if (n > 20) throw std::invalid_argument("cut_poly_symmetrized: size too large");
  SparsePolynomial out;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t v = 0; v < limit; ++v) {
    if (!include_trivial && (v == 0 || v == limit - 1)) continue;
    std::vector<std::pair<VarId, std::uint32_t>> vars;
    for (int i = 1; i <= n; ++i) {
      if (!(v & (1u << (i - 1)))) continue;
      for (int j = 1; j <= n; ++j) {
        if (v & (1u << (j - 1))) continue;
        vars.emplace_back(VarId::directed(i, j), 1);
        vars.emplace_back(VarId::directed(j, i), 1);
      }
    }
    out.add_term(sorted_monomial(std::move(vars)), Rational(1));
  }
  return out;
}

SparsePolynomial clique_gf(int n, bool include_empty) {
  if (n < 0) throw std::invalid_argument("clique_gf: negative size");
  if (n > 20) throw std::invalid_argument("clique_gf: size too large");
  SparsePolynomial out;
  if (include_empty) out.add_term({}, Rational(1));
  const std::uint32_t limit = (n >= 32) ? 0 : (1u << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::vector<int> verts;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) verts.push_back(i);
    if (verts.size() < 2) continue;
    std::vector<std::pair<VarId, std::uint32_t>> vars;
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        vars.emplace_back(VarId::undirected(verts[i], verts[j]), 1);
    out.add_term(sorted_monomial(std::move(vars)), Rational(1));
  }
  return out;
}

SparsePolynomial clique_gf_scan(int n, bool include_empty) {
  return scan_family(n, include_empty, [](const Graph& g, const std::vector<int>& comp) {
    return is_clique_component(g, comp);
  });
}

bool is_bipartite(const Graph& g) {
  for (const auto& comp : components(g)) {
    std::vector<int> sides[2];
    if (!two_color_component(g, comp, sides)) return false;
  }
  return true;
}

}  // namespace homopoly
