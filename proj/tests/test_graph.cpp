#include <catch2/catch_amalgamated.hpp>

#include "girth5/catalog.hpp"
#include "girth5/graph.hpp"

using namespace girth5;

namespace {

const char* kPentagonDisk = R"(# pentagon bounding a disk
vertex 1
vertex 2
vertex 3
vertex 4
vertex 5
edge 1 1 2
edge 2 2 3
edge 3 3 4
edge 4 4 5
edge 5 5 1
ring facial 1 2 3 4 5
)";

}  // namespace

TEST_CASE("parser accepts the basic grammar") {
  EmbeddedGraph G = parse_document(kPentagonDisk);
  CHECK(G.n() == 5);
  CHECK(G.m() == 5);
  CHECK(G.rings.size() == 1);
  CHECK(G.euler_genus() == 0);
  CHECK(G.faces.size() == 2);
}

TEST_CASE("parser reports malformed input with line numbers") {
  CHECK_THROWS_AS(parse_document("vertex\n"), ParseError);
  CHECK_THROWS_AS(parse_document("vertex 1\nvertex 1\n"), ParseError);
  CHECK_THROWS_AS(parse_document("vertex 1\nvertex 2\nedge 1 1 3\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("bogus 1\n"), ParseError);
  CHECK_THROWS_AS(
      parse_document("vertex 1\nvertex 2\nedge 1 1 2\nedge 1 1 2\n"),
      ParseError);
  CHECK_THROWS_AS(parse_document("vertex 1\nprecoloring 1=7\n"), ParseError);
}

TEST_CASE("comments and precolorings parse") {
  EmbeddedGraph G = parse_document(
      "vertex 1  # endpoint\nvertex 2\nedge 1 1 2\nprecoloring 1=2 2=0\n");
  CHECK(G.precoloring[G.vindex.at(1)] == 2);
  CHECK(G.precoloring[G.vindex.at(2)] == 0);
}

TEST_CASE("serialize-then-parse is a fixed point") {
  for (const std::string& doc :
       {emit_document(parse_document(kPentagonDisk)),
        emit_document(make_chain(3, ChainEmbedding::broken_cylinder).G),
        emit_document(make_chain(2, ChainEmbedding::canonical_klein).G),
        emit_document(make_exceptional(ExceptionalClass::E2, 9)),
        emit_document(make_concentric(7, 2, {0, 2, 4})),
        emit_document(make_mycielski(5))}) {
    CHECK(emit_document(parse_document(doc)) == doc);
  }
}

TEST_CASE("negative-sign edges flip orientability") {
  std::string doc =
      "vertex 1\nvertex 2\nvertex 3\n"
      "edge 1 1 2\nedge 2 2 3\nedge 3 3 1 sign -1\n";
  EmbeddedGraph G = parse_document(doc);
  CHECK(!G.orientable());
  CHECK(emit_document(G).find("sign -1") != std::string::npos);
}

TEST_CASE("chain embeddings have the advertised genus and cuffs") {
  ChainGraph planar = make_chain(3, ChainEmbedding::abstract_planar);
  CHECK(planar.G.euler_genus() == 0);
  ChainGraph klein = make_chain(3, ChainEmbedding::canonical_klein);
  CHECK(klein.G.euler_genus() == 2);
  CHECK(!klein.G.orientable());
  ChainGraph broken = make_chain(3, ChainEmbedding::broken_cylinder);
  CHECK(broken.G.euler_genus() == 0);
  CHECK(broken.G.orientable());
  CHECK(broken.G.rings.size() == 2);
  for (const auto& r : broken.G.rings) CHECK(r.cycle.size() == 4);
}

TEST_CASE("default rotation is by edge id when no rot line is given") {
  EmbeddedGraph G = parse_document(
      "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
      "edge 1 1 2\nedge 2 1 3\nedge 3 1 4\n");
  REQUIRE(G.rot[G.vindex.at(1)].size() == 3);
  CHECK(dart_edge(G.rot[G.vindex.at(1)][0]) == 0);
  CHECK(dart_edge(G.rot[G.vindex.at(1)][1]) == 1);
  CHECK(dart_edge(G.rot[G.vindex.at(1)][2]) == 2);
}

TEST_CASE("vertex rings parse with the weak marker") {
  EmbeddedGraph G = parse_document(
      "vertex 1\nvertex 2\nedge 1 1 2\nring vertex 1 weak\nring vertex 2\n");
  REQUIRE(G.rings.size() == 2);
  CHECK(G.rings[0].kind == RingSpec::vertex);
  CHECK(G.rings[0].weak);
  CHECK(!G.rings[1].weak);
  CHECK(G.rings[0].length() == 0);
  CHECK(G.rings[1].length() == 1);
}
