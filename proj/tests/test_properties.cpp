#include <catch2/catch_amalgamated.hpp>

#include "girth5/catalog.hpp"
#include "girth5/properties.hpp"
#include "girth5/topology.hpp"

using namespace girth5;

TEST_CASE("face weights use the length constants on open 5-faces") {
  EmbeddedGraph G = make_exceptional(ExceptionalClass::E2, 9);
  Rational w(0);
  int open5 = 0;
  for (const auto& f : G.faces)
    if (!f.is_ring_face && f.length == 5) {
      CHECK(face_weight(f) == s_value(5));
      open5++;
      w += face_weight(f);
    }
  CHECK(open5 >= 1);
  CHECK(graph_weight(G) >= w);
}

TEST_CASE("elasticity is the covering surplus") {
  CHECK(elasticity(5, {5}) == Rational(0));
  CHECK(elasticity(5, {5, 5}) == Rational(5));
  CHECK(elasticity(9, {5, 6}) == Rational(2));
}

TEST_CASE("structural flags on broken chains") {
  for (int k = 2; k <= 3; k++) {
    ChainGraph c = make_chain(k, ChainEmbedding::broken_cylinder);
    PropertyReport rep = check_properties(c.G);
    const bool want[10] = {1, 1, 1, 1, 0, 1, 1, 0, 1, 1};
    for (int i = 0; i < 10; i++) {
      INFO("k=" << k << " I" << i);
      CHECK(rep.I[i] == want[i]);
    }
    CHECK(!rep.well_behaved_flag);
    CHECK(rep.all({0, 1, 2, 3}));
    CHECK(!rep.all({0, 4}));
  }
}

TEST_CASE("structural flags on a sparse concentric cylinder") {
  EmbeddedGraph G = make_concentric(7, 2, {0, 2, 4});
  PropertyReport rep = check_properties(G);
  const bool want[10] = {1, 1, 1, 1, 0, 0, 1, 0, 1, 1};
  for (int i = 0; i < 10; i++) {
    INFO("I" << i);
    CHECK(rep.I[i] == want[i]);
  }
}

TEST_CASE("every short cycle of a broken chain is non-contractible") {
  ChainGraph c = make_chain(2, ChainEmbedding::broken_cylinder);
  auto cycles = enumerate_cycles(c.G, 4);
  CHECK(cycles.size() == 3);  // the two rings and the middle quadrilateral
  for (const auto& C : cycles)
    CHECK(cycle_class(c.G, C).topology != CycleClass::contractible);
  ShortCycleReport q = short_cycle_queries(c.G, 0, 4, std::nullopt);
  CHECK(q.noncontractible_edges.size() == 12);
}

TEST_CASE("edge queries against a surrounding cycle satisfy the bounds") {
  ChainGraph c = make_chain(4, ChainEmbedding::broken_cylinder);
  std::vector<int> K0 = c.G.rings[1].cycle;
  REQUIRE(surrounds_ring(c.G, K0, 0));
  ShortCycleReport q = short_cycle_queries(c.G, 0, 4, K0);
  CHECK((long long)q.incomparable_edges.size() <= 10 * (long long)K0.size());
  CHECK(q.bound_to_edges.size() <= 346);
  CHECK(q.near7_edges.size() <= 35);
}
