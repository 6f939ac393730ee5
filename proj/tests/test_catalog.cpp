#include <catch2/catch_amalgamated.hpp>

#include "girth5/canonical.hpp"
#include "girth5/catalog.hpp"
#include "girth5/coloring.hpp"
#include "girth5/properties.hpp"

using namespace girth5;

TEST_CASE("chains carry exactly four triangles and 5-faces elsewhere") {
  for (int k = 0; k <= 4; k++) {
    ChainGraph c = make_chain(k, ChainEmbedding::abstract_planar);
    CHECK(c.G.n() == 4 + 3 * k);
    CHECK(c.G.euler_genus() == 0);
    CHECK(enumerate_cycles(c.G, 3).size() == 4);
    int triangles = 0;
    for (const auto& f : c.G.faces) {
      if (f.length == 3) triangles++;
      CHECK((f.length == 3 || f.length == 5));
    }
    CHECK(triangles == 4);
  }
}

TEST_CASE("the chain recursion consumes the previous second edge") {
  ChainGraph a = make_chain(2, ChainEmbedding::abstract_planar);
  ChainGraph b = make_chain(3, ChainEmbedding::abstract_planar);
  CHECK(b.G.n() == a.G.n() + 3);
  CHECK(b.G.m() == a.G.m() + 5);
  CHECK(a.e1 == b.e1);
  // the consumed edge disappears from the longer chain
  CHECK(a.G.find_edge(a.G.vindex.at(a.e2.first), a.G.vindex.at(a.e2.second)) >=
        0);
  CHECK(b.G.find_edge(b.G.vindex.at(a.e2.first), b.G.vindex.at(a.e2.second)) <
        0);
}

TEST_CASE("canonical Klein embeddings keep short cycles non-contractible") {
  for (int k = 0; k <= 3; k++) {
    ChainGraph c = make_chain(k, ChainEmbedding::canonical_klein);
    CHECK(c.G.euler_genus() == 2);
    CHECK(!c.G.orientable());
  }
}

TEST_CASE("broken chains expose two distant square rings") {
  for (int k = 2; k <= 4; k++) {
    ChainGraph c = make_chain(k, ChainEmbedding::broken_cylinder);
    CHECK(c.G.m() == make_chain(k, ChainEmbedding::abstract_planar).G.m() - 2);
    BrokenChainCheck bc = is_broken_chain(c.G);
    CHECK(bc.is_broken_chain);
    CHECK(bc.k == k);
  }
  CHECK_THROWS_AS(make_chain(1, ChainEmbedding::broken_cylinder), GraphError);
}

TEST_CASE("non-chains are not recognized as broken chains") {
  EmbeddedGraph G = make_concentric(4, 4);
  BrokenChainCheck bc = is_broken_chain(G);
  CHECK(!bc.is_broken_chain);
}

TEST_CASE("exceptional constructors respect their length floors") {
  CHECK_THROWS_AS(make_exceptional(ExceptionalClass::E1, 7), GraphError);
  CHECK_THROWS_AS(make_exceptional(ExceptionalClass::E2, 8), GraphError);
  CHECK_THROWS_AS(make_exceptional(ExceptionalClass::E3, 10), GraphError);
  CHECK_THROWS_AS(make_exceptional(ExceptionalClass::E4, 9), GraphError);
  CHECK_THROWS_AS(make_exceptional(ExceptionalClass::E5, 9), GraphError);
  CHECK(classify_exceptional(make_exceptional(ExceptionalClass::E0, 12)) ==
        ExceptionalClass::E0);
  CHECK(classify_exceptional(make_exceptional(ExceptionalClass::E2, 11)) ==
        ExceptionalClass::E2);
}

TEST_CASE("plain ring graphs classify as non-exceptional") {
  EmbeddedGraph G = make_exceptional(ExceptionalClass::E0, 9);
  CHECK(classify_exceptional(G) == ExceptionalClass::E0);
  // the classifier's domain is single-ring disks
  ChainGraph c = make_chain(2, ChainEmbedding::broken_cylinder);
  CHECK_THROWS_AS(classify_exceptional(c.G), GraphError);
}

TEST_CASE("concentric graphs have the documented shape") {
  EmbeddedGraph G = make_concentric(7, 2, {0, 2, 4});
  CHECK(G.n() == 14);
  CHECK(G.m() == 17);
  CHECK(G.euler_genus() == 0);
  REQUIRE(G.rings.size() == 2);
  CHECK(G.rings[0].cycle.size() == 7);
  CHECK(G.rings[1].cycle.size() == 7);
  EmbeddedGraph full = make_concentric(5, 3);
  CHECK(full.n() == 15);
  CHECK(full.m() == 25);  // three cycles of five plus ten spokes
  CHECK_THROWS_AS(make_concentric(5, 1), GraphError);
  CHECK_THROWS_AS(make_concentric(5, 2, {1}), GraphError);
}

TEST_CASE("the Mycielskian doubles the odd cycle") {
  EmbeddedGraph G = make_mycielski(7);
  CHECK(G.n() == 15);
  CHECK(G.m() == 4 * 7);  // cycle + two shadow edges per vertex + hub
  CHECK_THROWS_AS(make_mycielski(4), GraphError);
  CHECK_THROWS_AS(make_mycielski(3), GraphError);
}
