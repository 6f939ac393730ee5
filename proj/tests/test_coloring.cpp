#include <catch2/catch_amalgamated.hpp>

#include "girth5/catalog.hpp"
#include "girth5/coloring.hpp"
#include "girth5/properties.hpp"

using namespace girth5;

TEST_CASE("triangle-free planar catalog graphs are 3-colorable") {
  CHECK(colorable(make_concentric(5, 3), 3));
  CHECK(colorable(make_concentric(7, 2, {0, 2, 4}), 3));
}

TEST_CASE("the odd-cycle Mycielskian is 4-chromatic") {
  EmbeddedGraph G = make_mycielski(5);
  CHECK(G.n() == 11);
  CHECK(!colorable(G, 3));
  CHECK(colorable(G, 4));
}

TEST_CASE("chains are 4-chromatic for every length") {
  for (int k = 0; k <= 4; k++) {
    ChainGraph c = make_chain(k, ChainEmbedding::abstract_planar);
    CHECK(!colorable(c.G, 3));
    CHECK(colorable(c.G, 4));
  }
}

TEST_CASE("precoloring extension returns a proper extension") {
  EmbeddedGraph G = make_concentric(5, 2);
  // shift the second ring's colors so that the spokes stay proper
  Precoloring phi;
  const int a[5] = {0, 1, 0, 1, 2}, b[5] = {1, 2, 1, 2, 0};
  for (int i = 0; i < 5; i++) {
    phi[G.rings[0].cycle[i]] = a[i];
    phi[G.rings[1].cycle[i]] = b[i];
  }
  auto res = extends(G, phi);
  REQUIRE(res.has_value());
  for (const auto& e : G.edges) CHECK((*res)[e.u] != (*res)[e.v]);
  for (auto [v, c] : phi) CHECK((*res)[v] == c);
}

TEST_CASE("improper ring precolorings are rejected") {
  EmbeddedGraph G = make_concentric(5, 2);
  Precoloring phi;
  for (int i = 0; i < 5; i++) {
    phi[G.rings[0].cycle[i]] = 0;
    phi[G.rings[1].cycle[i]] = 0;
  }
  CHECK_THROWS_AS(extends(G, phi), GraphError);
}

TEST_CASE("all proper precolorings of a square ring are enumerated") {
  ChainGraph c = make_chain(2, ChainEmbedding::broken_cylinder);
  auto phis = enumerate_precolorings(c.G);
  CHECK(phis.size() == 18 * 18);  // 18 proper 3-colorings per 4-cycle ring
  for (const auto& phi : phis) CHECK(precoloring_proper(c.G, phi));
}

TEST_CASE("broken chains are critical with respect to their rings") {
  for (int k = 2; k <= 3; k++) {
    ChainGraph c = make_chain(k, ChainEmbedding::broken_cylinder);
    CriticalityReport rep = is_ring_critical(c.G);
    CHECK(rep.critical);
    // every non-ring edge carries a witness precoloring that stops extending
    // once the edge is removed
    std::set<int> ring_edges = c.G.ring_edge_set();
    for (int e = 0; e < c.G.m(); e++)
      if (!ring_edges.count(e)) CHECK(rep.witnesses.count(e) == 1);
  }
}

TEST_CASE("broken chain face weight is fixed") {
  ChainGraph c = make_chain(2, ChainEmbedding::broken_cylinder);
  CHECK(graph_weight(c.G) == Rational(16, 4113));
}

TEST_CASE("four-cycle colorings split into the three allowed types") {
  std::vector<int> lam = {0, 1, 0, 1};
  CHECK(four_cycle_type(lam, {0, 1, 2, 3}) == FourCycleType::empty);
  lam = {0, 1, 2, 1};
  CHECK(four_cycle_type(lam, {0, 1, 2, 3}) == FourCycleType::x1x3);
  lam = {0, 1, 0, 2};
  CHECK(four_cycle_type(lam, {0, 1, 2, 3}) == FourCycleType::x2x4);
  lam = {0, 1, 2, 0};
  CHECK_THROWS_AS(four_cycle_type(lam, {0, 1, 2, 3}), GraphError);
}

TEST_CASE("a graph subsumes its own subgraph colorings") {
  ChainGraph c = make_chain(2, ChainEmbedding::broken_cylinder);
  CHECK(subsumes(c.G, c.G));
}
