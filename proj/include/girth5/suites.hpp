// Named verification suites.  Each suite runs a deterministic list of cases
// and reports {id, params, expected, actual, ok}; budgets default to the
// values used by the acceptance run and can be overridden per key.
#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <json.hpp>

#include "girth5/canonical.hpp"
#include "girth5/catalog.hpp"
#include "girth5/coloring.hpp"
#include "girth5/enumerate.hpp"
#include "girth5/graph.hpp"
#include "girth5/properties.hpp"
#include "girth5/rational.hpp"
#include "girth5/topology.hpp"
#include "girth5/weights.hpp"

namespace girth5 {

struct SuiteCase {
  std::string id;
  std::string params;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCase> cases;
  double elapsed = 0;  // seconds; excluded from determinism comparisons
  bool ok() const {
    for (const auto& c : cases)
      if (!c.ok) return false;
    return true;
  }
  int exit_code() const { return ok() ? 0 : 1; }
  int failed() const {
    int f = 0;
    for (const auto& c : cases)
      if (!c.ok) f++;
    return f;
  }
};

using Budget = std::map<std::string, long long>;

inline nlohmann::json suite_json(const SuiteReport& r, bool with_elapsed = true) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["ok"] = r.ok();
  j["failed"] = r.failed();
  j["cases"] = nlohmann::json::array();
  for (const auto& c : r.cases)
    j["cases"].push_back({{"id", c.id},
                          {"params", c.params},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"ok", c.ok}});
  if (with_elapsed) j["elapsed_seconds"] = r.elapsed;
  return j;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "s-props",     "surfineq",        "cyl",
      "chains",      "exceptional",     "basic",
      "critshort",   "planechar-small", "diskweight-small",
      "aksen-small", "grotzsch-random", "concentric"};
  return names;
}

namespace detail {

inline long long budget_of(const Budget& b, const std::string& key,
                           long long dflt) {
  auto it = b.find(key);
  return it == b.end() ? dflt : it->second;
}

inline void add_case(SuiteReport& r, const std::string& id,
                     const std::string& params, const std::string& expected,
                     const std::string& actual) {
  r.cases.push_back({id, params, expected, actual, expected == actual});
}

inline void add_flag(SuiteReport& r, const std::string& id,
                     const std::string& params, bool ok) {
  r.cases.push_back({id, params, "pass", ok ? "pass" : "fail", ok});
}

inline std::string count_triangles(const EmbeddedGraph& G) {
  return std::to_string(enumerate_cycles(G, 3).size());
}

// deterministic triangle-free planar graph sampler: random non-edges are
// added when they keep the graph planar and create no triangle
inline EmbeddedGraph sample_triangle_free_planar(int n, std::mt19937& rng) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  std::vector<std::set<int>> adj(n);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; a++)
    for (int b = a + 1; b < n; b++) pairs.push_back({a, b});
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<std::pair<long long, long long>> edges;
  for (auto [a, b] : pairs) {
    bool tri = false;
    for (int c : adj[a])
      if (adj[b].count(c)) tri = true;
    if (tri) continue;
    BG g(n);
    for (auto [u, v] : edges) boost::add_edge(u, v, g);
    boost::add_edge(a, b, g);
    if (!boost::boyer_myrvold_planarity_test(g)) continue;
    adj[a].insert(b);
    adj[b].insert(a);
    edges.push_back({a + 1, b + 1});
  }
  std::vector<long long> vids;
  for (int v = 1; v <= n; v++) vids.push_back(v);
  EmbeddedGraph G = build_graph(vids, edges);
  G.finalize();
  return G;
}

// The three shapes of the short-ring cylinder classification, as predicates
// on an enumerated (3,3) output.
inline std::string critshort_shape(const EmbeddedGraph& G) {
  int extra = G.m() - 6;  // ring edges excluded
  if (G.n() == 6 && extra == 1) return "one-edge";
  if (G.n() == 6 && extra == 2) return "two-edges";
  if (G.n() == 8 && G.m() == 11) {
    // two adjacent internal cubic vertices, each with a neighbor in both rings
    std::vector<int> internal;
    for (int v = 0; v < G.n(); v++) {
      bool ring = false;
      for (const auto& r : G.rings)
        for (int x : r.cycle)
          if (x == v) ring = true;
      if (!ring) internal.push_back(v);
    }
    if (internal.size() != 2) return "other";
    auto [u, v] = std::pair(internal[0], internal[1]);
    if (G.find_edge(u, v) < 0) return "other";
    for (int w : internal) {
      if (G.deg(w) != 3) return "other";
      bool in1 = false, in2 = false;
      for (auto [x, e] : G.adj[w]) {
        (void)e;
        for (int y : G.rings[0].cycle)
          if (x == y) in1 = true;
        for (int y : G.rings[1].cycle)
          if (x == y) in2 = true;
      }
      if (!in1 || !in2) return "other";
    }
    return "two-vertices";
  }
  return "other";
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, const Budget& budget = {});

namespace detail {

inline void suite_s_props(SuiteReport& r, const Budget& b) {
  const long long want[] = {4, 72, 540, 2184};
  for (int l = 5; l <= 8; l++)
    add_case(r, "s-value", "l=" + std::to_string(l),
             Rational(want[l - 5], 4113).str(), s_value(l).str());
  long long lmax = budget_of(b, "lmax", 200);
  bool linear = true;
  for (long long l = 9; l <= lmax; l++)
    if (s_value(l) != Rational(l - 8)) linear = false;
  add_flag(r, "s-linear-tail", "l=9.." + std::to_string(lmax), linear);
  IneqReport rep = check_s_properties(budget_of(b, "props-lmax", 60));
  add_case(r, "s-inequalities", "lmax=" + std::to_string(budget_of(b, "props-lmax", 60)),
           "0 failures", std::to_string(rep.failures.size()) + " failures");
}

inline void suite_surfineq(SuiteReport& r, const Budget& b) {
  long long g = budget_of(b, "gmax", 6), t = budget_of(b, "tmax", 8);
  std::string p = "g<=" + std::to_string(g) + ",t<=" + std::to_string(t);
  IneqReport rep = check_surfineq(g, t);
  add_case(r, "surface-inequalities", p, "0 failures",
           std::to_string(rep.failures.size()) + " failures");
  add_flag(r, "grid-nonempty", p, rep.cases_checked > 0);
  IneqReport neg = check_surfineq(g, t, true);
  add_flag(r, "negative-control", p + ",hypothesis-a-dropped",
           !neg.failures.empty());
}

inline void suite_cyl(SuiteReport& r, const Budget& b) {
  long long grid = budget_of(b, "grid", 12);
  CylTable T = build_cyl_table(grid);
  IneqReport rep = verify_cyl_table(T);
  add_case(r, "constraints", "grid=0.." + std::to_string(grid), "0 failures",
           std::to_string(rep.failures.size()) + " failures");
  add_case(r, "corner", "x=0,y=0", "0", T.at(0, 0).str());
  if (grid >= 4) {
    add_flag(r, "floor-4-4", "x=4,y=4", T.at(4, 4) >= Rational(886));
    add_case(r, "value-4-4", "x=4,y=4", "1819", T.at(4, 4).str());
  }
  if (grid >= 7) {
    add_case(r, "value-7-7", "x=7,y=7", "35160862464244829/4113",
             T.at(7, 7).str());
    add_case(r, "eta", "from cyl(7,7)", "2355777785104411011/4",
             eta_value(T).str());
  }
}

inline void suite_chains(SuiteReport& r, const Budget& b) {
  long long kmax = budget_of(b, "k", 4);
  for (int k = 0; k <= (int)kmax; k++) {
    std::string p = "k=" + std::to_string(k);
    ChainGraph c = make_chain(k, ChainEmbedding::abstract_planar);
    add_case(r, "planar", p, "0", std::to_string(c.G.euler_genus()));
    add_flag(r, "four-chromatic", p,
             !colorable(c.G, 3) && colorable(c.G, 4));
    add_case(r, "triangles", p, "4", count_triangles(c.G));
    bool faces5 = true;
    for (const auto& f : c.G.faces)
      if (f.length != 3 && f.length != 5) faces5 = false;
    add_flag(r, "faces-3-or-5", p, faces5);
    ChainGraph kl = make_chain(k, ChainEmbedding::canonical_klein);
    add_case(r, "klein-genus", p, "2", std::to_string(kl.G.euler_genus()));
    bool nc = true;
    for (const auto& C : enumerate_cycles(kl.G, 4))
      if (cycle_class(kl.G, C).topology == CycleClass::contractible) nc = false;
    add_flag(r, "klein-no-contractible-short-cycle", p, nc);
  }
  long long bk = budget_of(b, "broken-k", 3);
  for (int k = 2; k <= (int)bk; k++) {
    std::string p = "k=" + std::to_string(k);
    ChainGraph c = make_chain(k, ChainEmbedding::broken_cylinder);
    add_flag(r, "broken-ring-critical", p, is_ring_critical(c.G).critical);
    BrokenChainCheck bc = is_broken_chain(c.G);
    add_flag(r, "broken-recognized", p, bc.is_broken_chain && bc.k == k);
    // color propagation: whenever the designated diagonal pair of one end
    // ring gets distinct colors, so does the corresponding pair of the other
    // end ring.  The pairs chain through the construction: the source pair
    // is the second broken edge, the target the diagonal of the first end
    // ring that is not the first broken edge.
    int a1 = c.G.vindex.at(c.e2.first), a2 = c.G.vindex.at(c.e2.second);
    int b1 = c.G.vindex.at(c.ring1[1]), b2 = c.G.vindex.at(c.ring1[3]);
    ColorInstance I = ColorInstance::of(c.G);
    bool prop = true;
    long long count = 0;
    std::vector<int> col(c.G.n(), -1);
    std::function<void(int)> all = [&](int v) {
      if (!prop) return;
      if (v == c.G.n()) {
        count++;
        if (col[a1] != col[a2] && col[b1] == col[b2]) prop = false;
        return;
      }
      for (int x = 0; x < 3; x++) {
        bool okc = true;
        for (int w : I.adj[v])
          if (w < v && col[w] == x) okc = false;
        if (!okc) continue;
        col[v] = x;
        all(v + 1);
        col[v] = -1;
      }
    };
    all(0);
    add_flag(r, "broken-color-propagation", p, prop && count > 0);
  }
}

inline void suite_exceptional(SuiteReport& r, const Budget&) {
  std::vector<std::pair<ExceptionalClass, int>> want = {
      {ExceptionalClass::E0, 5},  {ExceptionalClass::E1, 8},
      {ExceptionalClass::E2, 9},  {ExceptionalClass::E3, 11},
      {ExceptionalClass::E4, 10}, {ExceptionalClass::E5, 10}};
  for (auto [cls, l] : want) {
    std::string p = exceptional_name(cls) + ",l=" + std::to_string(l);
    EmbeddedGraph G = make_exceptional(cls, l);
    add_case(r, "classify", p, exceptional_name(cls),
             exceptional_name(classify_exceptional(G)));
    EmbeddedGraph H = parse_document(emit_document(G));
    add_case(r, "round-trip", p, emit_document(G), emit_document(H));
  }
}

inline void suite_basic(SuiteReport& r, const Budget& b) {
  BasicResult res = enumerate_basic((int)budget_of(b, "internal", 4));
  add_case(r, "maximal-classes", "internal<=" + std::to_string(budget_of(b, "internal", 4)),
           "5", std::to_string(res.maximal.size()));
  add_flag(r, "tf2c-nonempty", "", !res.tf2c.empty());
  for (size_t i = 0; i < res.tf2c.size(); i++) {
    BasicClaimReport c = basic_claim_checks(res.tf2c[i]);
    std::string p = "n=" + std::to_string(res.tf2c[i].n()) +
                    ",m=" + std::to_string(res.tf2c[i].m());
    add_flag(r, "claim-simultaneous-" + std::to_string(i), p, c.simultaneous_ok);
    add_flag(r, "claim-two-for-one-" + std::to_string(i), p, c.two_for_one_ok);
  }
  std::set<std::string> keys;
  bool dup = false;
  for (const auto& G : res.all)
    if (!keys.insert(canonical_form(G).key).second) dup = true;
  add_flag(r, "all-distinct", "count=" + std::to_string(res.all.size()), !dup);
}

inline void suite_critshort(SuiteReport& r, const Budget& b) {
  SearchSpec spec;
  spec.topology = SearchSpec::cylinder;
  spec.ring_lengths = {3, 3};
  spec.max_internal = (int)budget_of(b, "internal", 6);
  EnumResult res = enumerate_critical(spec);
  std::string p = "rings=(3,3),internal<=" + std::to_string(spec.max_internal);
  add_case(r, "count", p, "3", std::to_string(res.graphs.size()));
  std::multiset<std::string> shapes;
  for (const auto& G : res.graphs) shapes.insert(critshort_shape(G));
  std::string got;
  for (const auto& s : shapes) got += (got.empty() ? "" : ",") + s;
  add_case(r, "shapes", p, "one-edge,two-edges,two-vertices", got);
}

inline void suite_planechar_small(SuiteReport& r, const Budget& b) {
  long long lmax = budget_of(b, "lmax", 10);
  for (int l = 5; l <= (int)lmax; l++) {
    SearchSpec spec;
    spec.topology = SearchSpec::disk;
    spec.ring_lengths = {l};
    spec.max_internal = (int)budget_of(b, "internal", 5);
    EnumResult res = enumerate_critical(spec);
    std::string p = "|R|=" + std::to_string(l);
    if (l <= 8) {
      add_case(r, "count", p, "0", std::to_string(res.graphs.size()));
    } else if (l == 9) {
      add_case(r, "count", p, "1", std::to_string(res.graphs.size()));
      for (const auto& G : res.graphs)
        add_case(r, "internal-tree-size", p, "1", std::to_string(G.n() - l));
    } else {
      add_case(r, "count", p, "3", std::to_string(res.graphs.size()));
    }
    for (const auto& G : res.graphs) {
      std::string q = p + ",n=" + std::to_string(G.n());
      CriticalityReport c = is_ring_critical(G);
      add_flag(r, "output-critical", q, c.critical);
      PropertyReport props = check_properties(G);
      add_flag(r, "output-I0-I2", q, props.all({0, 1, 2}));
    }
  }
}

inline void suite_diskweight_small(SuiteReport& r, const Budget& b) {
  long long lmax = budget_of(b, "lmax", 10);
  for (int l = 9; l <= (int)lmax; l++) {
    SearchSpec spec;
    spec.topology = SearchSpec::disk;
    spec.ring_lengths = {l};
    spec.max_internal = (int)budget_of(b, "internal", 5);
    EnumResult res = enumerate_critical(spec);
    for (const auto& G : res.graphs) {
      Rational w = graph_weight(G);
      ExceptionalClass cls = classify_exceptional(G);
      std::string p = "|R|=" + std::to_string(l) + ",n=" + std::to_string(G.n()) +
                      ",class=" + exceptional_name(cls) + ",w=" + w.str();
      Rational s5 = s_value(5);
      add_flag(r, "bound-general", p, w <= s_value(l - 3) + s5);
      if (cls != ExceptionalClass::E1)
        add_flag(r, "bound-not-E1", p, w <= s_value(l - 4) + Rational(2) * s5);
      if (!very_exceptional(cls) && l - 5 >= 5)
        add_flag(r, "bound-not-very-exceptional", p,
                 w <= s_value(l - 5) + Rational(5) * s5);
      if (cls == ExceptionalClass::none && l - 5 >= 5)
        add_flag(r, "bound-not-exceptional", p,
                 w <= s_value(l - 5) - Rational(5) * s5);
    }
  }
}

inline void suite_aksen_small(SuiteReport& r, const Budget& b) {
  long long nmax = budget_of(b, "n", 12);
  for (int rl : {3, 4}) {
    SearchSpec spec;
    spec.topology = SearchSpec::cylinder;
    spec.punctured = true;
    spec.ring_lengths = {rl};
    spec.max_internal = (int)nmax - rl;
    spec.induced_ring = false;
    EnumResult res = enumerate_critical(spec);
    std::string p = "|R|=" + std::to_string(rl) + ",n<=" + std::to_string(nmax);
    add_case(r, "count", p, "0", std::to_string(res.graphs.size()));
  }
}

inline void suite_grotzsch_random(SuiteReport& r, const Budget& b) {
  int n = (int)budget_of(b, "n", 20);
  int trials = (int)budget_of(b, "trials", 200);
  std::mt19937 rng((unsigned)budget_of(b, "seed", 1));
  int colored = 0, tfree = 0;
  for (int t = 0; t < trials; t++) {
    EmbeddedGraph G = sample_triangle_free_planar(n, rng);
    if (enumerate_cycles(G, 3).empty()) tfree++;
    if (colorable(G, 3)) colored++;
  }
  std::string p = "n=" + std::to_string(n) + ",trials=" + std::to_string(trials);
  add_case(r, "triangle-free", p, std::to_string(trials), std::to_string(tfree));
  add_case(r, "three-colorable", p, std::to_string(trials),
           std::to_string(colored));
}

inline void suite_concentric(SuiteReport& r, const Budget&) {
  struct Inst {
    std::string id;
    EmbeddedGraph G;
  };
  std::vector<Inst> insts;
  for (int k = 2; k <= 6; k++)
    insts.push_back({"broken-" + std::to_string(k),
                     make_chain(k, ChainEmbedding::broken_cylinder).G});
  for (auto [l, d] : std::vector<std::pair<int, int>>{{3, 2}, {3, 3}, {3, 4},
                                                      {4, 2}, {4, 3}, {4, 4},
                                                      {5, 2}, {5, 3}, {5, 4},
                                                      {6, 2}, {6, 3}, {6, 4},
                                                      {7, 2}, {7, 3}, {8, 2},
                                                      {8, 3}, {9, 2}})
    insts.push_back({"concentric-" + std::to_string(l) + "-" + std::to_string(d),
                     make_concentric(l, d)});
  insts.push_back({"concentric-7-2-sparse", make_concentric(7, 2, {0, 2, 4})});
  insts.push_back({"concentric-6-2-sparse", make_concentric(6, 2, {0, 2, 4})});
  insts.push_back({"concentric-5-2-sparse", make_concentric(5, 2, {0, 2})});
  for (auto& inst : insts) {
    const EmbeddedGraph& G = inst.G;
    std::vector<int> K0 = G.rings[1].cycle;
    std::optional<std::vector<int>> k0;
    if (surrounds_ring(G, K0, 0)) k0 = K0;
    ShortCycleReport q = short_cycle_queries(G, 0, 4, k0);
    std::string p = inst.id + ",n=" + std::to_string(G.n()) +
                    ",m=" + std::to_string(G.m());
    if (k0)
      add_flag(r, "incomparable-bound", p,
               (long long)q.incomparable_edges.size() <= 10 * (long long)K0.size());
    add_flag(r, "bound-to-bound", p, q.bound_to_edges.size() <= 346);
    add_flag(r, "near7-bound", p, q.near7_edges.size() <= 35);
  }
  add_case(r, "instance-count", "", "25", std::to_string(insts.size()));
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, const Budget& budget) {
  SuiteReport r;
  r.suite = name;
  auto t0 = std::chrono::steady_clock::now();
  if (name == "s-props")
    detail::suite_s_props(r, budget);
  else if (name == "surfineq")
    detail::suite_surfineq(r, budget);
  else if (name == "cyl")
    detail::suite_cyl(r, budget);
  else if (name == "chains")
    detail::suite_chains(r, budget);
  else if (name == "exceptional")
    detail::suite_exceptional(r, budget);
  else if (name == "basic")
    detail::suite_basic(r, budget);
  else if (name == "critshort")
    detail::suite_critshort(r, budget);
  else if (name == "planechar-small")
    detail::suite_planechar_small(r, budget);
  else if (name == "diskweight-small")
    detail::suite_diskweight_small(r, budget);
  else if (name == "aksen-small")
    detail::suite_aksen_small(r, budget);
  else if (name == "grotzsch-random")
    detail::suite_grotzsch_random(r, budget);
  else if (name == "concentric")
    detail::suite_concentric(r, budget);
  else
    throw std::invalid_argument("unknown suite: " + name);
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

}  // namespace girth5
