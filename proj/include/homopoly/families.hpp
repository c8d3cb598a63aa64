#pragma once

// The polynomial families under study, each built by definitional brute
// force so they can serve as oracles for the reduction checks.
//
// Boundary conventions that the source material leaves ambiguous (empty
// edge set in / out, trivial subsets in / out) are explicit parameters here;
// the reduction-chain calibration pass decides which settings the verified
// identities actually require and records them.

#include <set>

#include "homopoly/graph.hpp"
#include "homopoly/polynomial.hpp"

namespace homopoly {

// Monomial for an edge subset of K_n in the undirected namespace.
Monomial edge_monomial(const std::set<std::pair<int, int>>& edges);

// Sum over all edge subsets E' of K_n whose graph admits a homomorphism
// into h, of the multilinear monomial for E'.  Subset scan, so n is capped.
SparsePolynomial hom_poly(const Graph& h, int n);

// Graphs consisting of one complete bipartite connected component with every
// other component a single vertex.  include_empty adds 1 for the empty edge
// set.  Two constructions:
//   F_poly        enumerates unordered pairs of disjoint nonempty vertex
//                 sets directly (scales to the sizes the reduction needs),
//   F_poly_scan   classifies every edge subset (definitional; n capped).
SparsePolynomial F_poly(int n, bool include_empty = true);
SparsePolynomial F_poly_scan(int n, bool include_empty = true);

// Closed form: half the sum over ordered pairs (V, V') of disjoint, possibly
// empty subsets of the complete bipartite monomial on (V, V').  Coefficients
// are rational: the empty-sided pairs contribute a constant (2^(n+1)-1)/2.
SparsePolynomial F_poly_half_form(int n);

// Spanning complete bipartite enumerator: one monomial per unordered
// partition {V, V^c} of [n] with both sides nonempty.  Coefficients 0/1.
SparsePolynomial G_poly(int n);

// Directed cut enumerator: sum over subsets V of the product over i in V,
// j outside V of xd{i,j}^(q-1).  include_trivial keeps V empty and V = [n]
// (each contributes the constant 1).
SparsePolynomial cut_poly(int n, int q, bool include_trivial);

// Symmetrized variant: each subset V contributes the product of BOTH
// directed cut monomials, xd{i,j} and xd{j,i} for i in V, j outside.  This
// is what evaluating the spanning enumerator on the doubled layout actually
// produces (see the reduction chain); kept here so the identity has an
// independently constructed target.
SparsePolynomial cut_poly_symmetrized(int n, bool include_trivial);

// Graphs consisting of one clique component (size >= 2), all other
// components single vertices; include_empty adds 1 for the empty edge set.
SparsePolynomial clique_gf(int n, bool include_empty = true);
SparsePolynomial clique_gf_scan(int n, bool include_empty = true);

// Independent bipartiteness test (BFS two-coloring) for cross-checks.
bool is_bipartite(const Graph& g);

}  // namespace homopoly
