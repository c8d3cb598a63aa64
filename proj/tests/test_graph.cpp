#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homopoly/graph.hpp"
#include "homopoly/rng.hpp"

using namespace homopoly;

TEST_CASE("edges canonicalize and validate") {
  Graph g;
  g.n = 3;
  g.add_edge(3, 1);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(g.edges.count({1, 3}) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 4), std::invalid_argument);
  g.add_edge(2, 2);
  CHECK(g.has_loop(2));
  CHECK_FALSE(g.loop_free());
}

TEST_CASE("family constructors") {
  const Graph k4 = make_family(FamilyKind::Complete, 4);
  CHECK(k4.edge_count() == 6);
  const Graph p3 = make_family(FamilyKind::Path, 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(1, 2));
  CHECK(p3.has_edge(2, 3));
  const Graph c5 = make_family(FamilyKind::Cycle, 5);
  CHECK(c5.edge_count() == 5);
  CHECK(c5.has_edge(1, 5));
  const Graph k23 = make_family(FamilyKind::CompleteBipartite, 2, 3);
  CHECK(k23.n == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.has_edge(1, 3));
  CHECK_FALSE(k23.has_edge(1, 2));
  const Graph looped = make_family(FamilyKind::SingleLoopedVertex, 1);
  CHECK(looped.has_loop(1));
  const Graph e3 = make_family(FamilyKind::Edgeless, 3);
  CHECK(e3.edge_count() == 0);
  CHECK_THROWS_AS(make_family(FamilyKind::Cycle, 2), std::invalid_argument);
}

TEST_CASE("homomorphism search basics") {
  const Graph edge = make_family(FamilyKind::Edge, 2);
  const Graph k3 = make_family(FamilyKind::Complete, 3);
  const Graph c4 = make_family(FamilyKind::Cycle, 4);
  const Graph c5 = make_family(FamilyKind::Cycle, 5);

  // Even structures map onto an edge, odd cycles cannot.
  CHECK(find_homomorphism(c4, edge).has_value());
  CHECK_FALSE(find_homomorphism(k3, edge).has_value());
  CHECK_FALSE(find_homomorphism(c5, edge).has_value());
  CHECK(find_homomorphism(edge, k3).has_value());
  CHECK(find_homomorphism(c5, k3).has_value());

  const auto h = find_homomorphism(c4, edge);
  REQUIRE(h.has_value());
  CHECK(is_homomorphism(c4, edge, *h));
}

TEST_CASE("loops absorb everything") {
  const Graph looped = make_family(FamilyKind::SingleLoopedVertex, 1);
  const Graph k3 = make_family(FamilyKind::Complete, 3);
  CHECK(find_homomorphism(k3, looped).has_value());
  CHECK_FALSE(find_homomorphism(looped, k3).has_value());
}

TEST_CASE("bihomomorphism is reflexive and symmetric") {
  const std::vector<Graph> sample = {
      make_family(FamilyKind::Edge, 2), make_family(FamilyKind::Complete, 3),
      make_family(FamilyKind::Cycle, 4), make_family(FamilyKind::CompleteBipartite, 2, 2)};
  for (const Graph& g : sample) {
    CHECK(are_bihomomorphic(g, g));
    for (const Graph& h : sample) CHECK(are_bihomomorphic(g, h) == are_bihomomorphic(h, g));
  }
  // A 4-cycle is bihomomorphic to a single edge (both are bipartite with an edge).
  CHECK(are_bihomomorphic(make_family(FamilyKind::Cycle, 4), make_family(FamilyKind::Edge, 2)));
  CHECK_FALSE(are_bihomomorphic(make_family(FamilyKind::Complete, 3),
                                make_family(FamilyKind::Edge, 2)));
}

TEST_CASE("neighborhood union of the zoo") {
  // Triangle: every neighborhood induces an edge, so the union is three
  // disjoint edges.
  const Graph u3 = neighborhood_union(make_family(FamilyKind::Complete, 3));
  CHECK(u3.n == 6);
  CHECK(u3.edge_count() == 3);
  for (int v = 1; v <= u3.n; ++v) CHECK(degree(u3, v) == 1);

  // 4-cycle: neighborhoods are pairs of opposite, non-adjacent vertices.
  const Graph u4 = neighborhood_union(make_family(FamilyKind::Cycle, 4));
  CHECK(u4.n == 8);
  CHECK(u4.edge_count() == 0);

  // K4: neighborhoods induce triangles.
  const Graph uk4 = neighborhood_union(make_family(FamilyKind::Complete, 4));
  CHECK(uk4.n == 12);
  CHECK(uk4.edge_count() == 12);
  CHECK(max_degree(uk4) == 2);

  // Component bookkeeping: vertex block v covers h's neighborhood size.
  std::vector<int> component_of;
  const Graph up3 = neighborhood_union(make_family(FamilyKind::Path, 3), &component_of);
  CHECK(up3.n == 4);  // degrees 1, 2, 1
  CHECK(component_of.size() == 4);
  CHECK(component_of[0] == 1);
  CHECK(component_of[1] == 2);
  CHECK(component_of[2] == 2);
  CHECK(component_of[3] == 3);

  CHECK_THROWS_AS(neighborhood_union(make_family(FamilyKind::SingleLoopedVertex, 1)),
                  std::invalid_argument);
}

TEST_CASE("max degree strictly drops across the union on a random sample") {
  Rng rng = Rng::stream(11, "graph_union_degree");
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.range(2, 6));
    Graph g;
    g.n = n;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (rng.coin()) g.add_edge(i, j);
    if (g.edges.empty()) continue;
    ++tested;
    const Graph u = neighborhood_union(g);
    const int before = max_degree(g);
    const int after = u.n > 0 ? max_degree(u) : 0;
    CHECK(after < before);
  }
  CHECK(tested > 100);
}

TEST_CASE("cone adds a dominating vertex") {
  const Graph g = make_family(FamilyKind::Cycle, 4);
  const Graph c = cone(g);
  CHECK(c.n == 5);
  CHECK(c.edge_count() == g.edge_count() + 4);
  CHECK(degree(c, 5) == 4);
  for (int v = 1; v <= 4; ++v) CHECK(c.has_edge(v, 5));
}

TEST_CASE("graph enumeration covers every labeled graph once") {
  int count = 0;
  bool saw_triangle = false;
  enumerate_graphs(3, [&](const Graph& g) {
    ++count;
    if (g.edge_count() == 3) saw_triangle = true;
  });
  CHECK(count == 8);
  CHECK(saw_triangle);
  CHECK_THROWS_AS(enumerate_graphs(enumeration_cap() + 1, [](const Graph&) {}),
                  std::invalid_argument);
}

TEST_CASE("enumeration cap is adjustable") {
  const int old_cap = enumeration_cap();
  set_enumeration_cap(4);
  CHECK(enumeration_cap() == 4);
  CHECK_THROWS_AS(enumerate_graphs(5, [](const Graph&) {}), std::invalid_argument);
  set_enumeration_cap(old_cap);
}
