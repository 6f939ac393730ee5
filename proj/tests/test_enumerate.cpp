#include <catch2/catch_amalgamated.hpp>

#include "girth5/canonical.hpp"
#include "girth5/coloring.hpp"
#include "girth5/enumerate.hpp"

using namespace girth5;

namespace {

SearchSpec disk_spec(int l, int k) {
  SearchSpec s;
  s.topology = SearchSpec::disk;
  s.ring_lengths = {l};
  s.max_internal = k;
  return s;
}

SearchSpec cyl33(int k) {
  SearchSpec s;
  s.topology = SearchSpec::cylinder;
  s.ring_lengths = {3, 3};
  s.max_internal = k;
  return s;
}

std::multiset<std::pair<int, int>> sizes(const EnumResult& r) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& G : r.graphs) out.insert({G.n(), G.m()});
  return out;
}

std::set<std::string> keys(const EnumResult& r) {
  std::set<std::string> out;
  for (const auto& G : r.graphs) out.insert(canonical_form(G).key);
  return out;
}

}  // namespace

TEST_CASE("short disks admit no ring-critical graph") {
  for (int l = 5; l <= 8; l++)
    CHECK(enumerate_critical(disk_spec(l, 5)).graphs.empty());
}

TEST_CASE("the nine-disk has a unique critical graph") {
  EnumResult res = enumerate_critical(disk_spec(9, 5));
  REQUIRE(res.graphs.size() == 1);
  const EmbeddedGraph& G = res.graphs[0];
  CHECK(G.n() == 10);  // ring plus a single internal vertex
  CHECK(G.m() == 12);
  CHECK(is_ring_critical(G).critical);
}

TEST_CASE("short cylinder search finds the three known shapes") {
  EnumResult res = enumerate_critical(cyl33(2));
  CHECK(sizes(res) ==
        std::multiset<std::pair<int, int>>{{6, 7}, {6, 8}, {8, 11}});
  for (const auto& G : res.graphs) {
    CHECK(is_ring_critical(G).critical);
    for (const auto& C : enumerate_cycles(G, 4))
      CHECK(cycle_class(G, C).topology != CycleClass::contractible);
  }
}

TEST_CASE("outputs carry no duplicate canonical keys") {
  EnumResult res = enumerate_critical(cyl33(2));
  CHECK(keys(res).size() == res.graphs.size());
}

TEST_CASE("the naive oracle agrees on small disks") {
  for (int l = 5; l <= 6; l++) {
    EnumResult fast = enumerate_critical(disk_spec(l, 2));
    EnumResult naive = enumerate_critical_naive(disk_spec(l, 2));
    CHECK(keys(fast) == keys(naive));
  }
  EnumResult fast9 = enumerate_critical(disk_spec(9, 2));
  EnumResult naive9 = enumerate_critical_naive(disk_spec(9, 2));
  CHECK(fast9.graphs.size() == 1);
  CHECK(keys(fast9) == keys(naive9));
}

TEST_CASE("the naive oracle agrees on the short cylinder") {
  EnumResult fast = enumerate_critical(cyl33(2));
  EnumResult naive = enumerate_critical_naive(cyl33(2));
  CHECK(fast.graphs.size() == 3);
  CHECK(keys(fast) == keys(naive));
}

TEST_CASE("the naive oracle reports when a search exceeds its budget") {
  CHECK_THROWS_AS(enumerate_critical_naive(cyl33(3)), GraphError);
}

TEST_CASE("punctured search with a short ring finds nothing") {
  SearchSpec s;
  s.topology = SearchSpec::cylinder;
  s.punctured = true;
  s.induced_ring = false;
  s.ring_lengths = {3};
  s.max_internal = 5;
  EnumResult res = enumerate_critical(s);
  CHECK(res.graphs.empty());
  s.ring_lengths = {4};
  s.max_internal = 4;
  CHECK(enumerate_critical(s).graphs.empty());
}

TEST_CASE("basic-graph enumeration at a small budget") {
  BasicResult res = enumerate_basic(2);
  CHECK(res.all.size() == 27);
  for (const auto& G : res.tf2c) {
    BasicClaimReport c = basic_claim_checks(G);
    CHECK(c.simultaneous_ok);
    CHECK(c.two_for_one_ok);
  }
}
