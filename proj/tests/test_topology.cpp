#include <catch2/catch_amalgamated.hpp>

#include "girth5/catalog.hpp"
#include "girth5/properties.hpp"
#include "girth5/topology.hpp"

using namespace girth5;

namespace {

std::vector<int> by_ids(const EmbeddedGraph& G, std::vector<long long> ids) {
  std::vector<int> out;
  for (long long id : ids) out.push_back(G.vindex.at(id));
  return out;
}

}  // namespace

TEST_CASE("triangles of the canonical chain embedding are non-contractible") {
  ChainGraph c = make_chain(2, ChainEmbedding::canonical_klein);
  for (const auto& C : enumerate_cycles(c.G, 4)) {
    CycleClass cc = cycle_class(c.G, C);
    CHECK(cc.topology != CycleClass::contractible);
  }
}

TEST_CASE("middle quadrilateral of a broken chain surrounds both rings") {
  ChainGraph c = make_chain(4, ChainEmbedding::broken_cylinder);
  std::vector<int> C = by_ids(c.G, {8, 5, 9, 10});
  CycleClass cc = cycle_class(c.G, C);
  REQUIRE(cc.topology == CycleClass::surrounds);
  CHECK(surrounds_ring(c.G, C, 0));
  CHECK(surrounds_ring(c.G, C, 1));
}

TEST_CASE("cutting a broken chain along a middle quadrilateral") {
  ChainGraph c = make_chain(4, ChainEmbedding::broken_cylinder);
  std::vector<int> C = by_ids(c.G, {8, 5, 9, 10});
  std::vector<EmbeddedGraph> pieces = cut_along_cycle(c.G, C);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].n() + pieces[1].n() == c.G.n() + 4);
  for (const auto& P : pieces) {
    CHECK(P.euler_genus() == 0);
    int facial = 0;
    for (const auto& r : P.rings)
      if (r.kind == RingSpec::facial) facial++;
    CHECK(facial >= 1);  // the piece keeps one original ring
    CHECK(P.rings.size() >= 2);
  }
}

TEST_CASE("a two-face cycle of a prism bounds a one-chord disk") {
  EmbeddedGraph G = make_concentric(5, 2);
  std::vector<int> C = by_ids(G, {1, 2, 3, 8, 7, 6});
  CycleClass cc = cycle_class(G, C);
  REQUIRE(cc.topology == CycleClass::contractible);
  EmbeddedGraph D = disk_interior(G, C);
  CHECK(D.n() == 6);
  CHECK(D.m() == 7);  // the six boundary edges plus one spoke
}

TEST_CASE("the inner ring cycle surrounds the outer ring") {
  EmbeddedGraph G = make_concentric(7, 3);
  CHECK(surrounds_ring(G, G.rings[1].cycle, 0));
  CHECK(surrounds_ring(G, G.rings[0].cycle, 1));
}

TEST_CASE("cylinder catalog graphs have the advertised topology") {
  EmbeddedGraph G = make_concentric(7, 2, {0, 2, 4});
  CHECK(G.n() == 14);
  CHECK(G.m() == 17);
  CHECK(G.euler_genus() == 0);
  CHECK(G.rings.size() == 2);
  ChainGraph broken = make_chain(2, ChainEmbedding::broken_cylinder);
  CHECK(broken.G.euler_genus() == 0);
  CHECK(broken.G.rings.size() == 2);
}

TEST_CASE("cut refuses cycles that touch a ring") {
  EmbeddedGraph G = make_concentric(5, 2);
  CHECK_THROWS_AS(cut_along_cycle(G, by_ids(G, {1, 2, 7, 6})), GraphError);
}
