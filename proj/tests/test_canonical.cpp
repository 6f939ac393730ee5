#include <catch2/catch_amalgamated.hpp>

#include "girth5/canonical.hpp"
#include "girth5/catalog.hpp"

using namespace girth5;

TEST_CASE("distinct chain lengths get distinct keys") {
  ChainGraph a = make_chain(2, ChainEmbedding::broken_cylinder);
  ChainGraph b = make_chain(3, ChainEmbedding::broken_cylinder);
  CHECK(canonical_form(a.G).key != canonical_form(b.G).key);
}

TEST_CASE("relabeling does not change the key") {
  ChainGraph a = make_chain(2, ChainEmbedding::broken_cylinder);
  std::string doc = emit_document(a.G);
  // shift every vertex id by 100
  std::string shifted;
  std::istringstream in(doc);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "vertex") {
      long long v;
      ls >> v;
      shifted += "vertex " + std::to_string(v + 100) + "\n";
    } else if (kw == "edge") {
      long long id, u, v;
      ls >> id >> u >> v;
      shifted += "edge " + std::to_string(id) + " " + std::to_string(u + 100) +
                 " " + std::to_string(v + 100);
      std::string rest;
      std::getline(ls, rest);
      shifted += rest + "\n";
    } else if (kw == "ring") {
      std::string kind;
      ls >> kind;
      shifted += "ring " + kind;
      long long v;
      while (ls >> v) shifted += " " + std::to_string(v + 100);
      shifted += "\n";
    } else if (kw == "rot") {
      std::string vtok;
      ls >> vtok;
      long long v = std::stoll(vtok.substr(0, vtok.size() - 1));
      shifted += "rot " + std::to_string(v + 100) + ":";
      std::string rest;
      std::getline(ls, rest);
      shifted += rest + "\n";
    } else {
      shifted += line + "\n";
    }
  }
  EmbeddedGraph H = parse_document(shifted);
  CHECK(canonical_form(a.G).key == canonical_form(H).key);
  CHECK(are_isomorphic_abstract(a.G, H));
}

TEST_CASE("non-isomorphic graphs separate") {
  EmbeddedGraph a = make_concentric(5, 2);
  EmbeddedGraph b = make_concentric(5, 2, {0, 1, 2, 3});
  CHECK(canonical_form(a).key != canonical_form(b).key);
  CHECK(!are_isomorphic_abstract(a, b));
}

TEST_CASE("isomorphism respects ring assignment by default") {
  EmbeddedGraph a = make_concentric(5, 3);
  CHECK(are_isomorphic_abstract(a, a));
  EmbeddedGraph b = make_exceptional(ExceptionalClass::E0, 9);
  CHECK(!are_isomorphic_abstract(a, b));
}
