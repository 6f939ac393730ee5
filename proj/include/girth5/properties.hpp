// Structural properties of embedded graphs with rings: the conditions
// I0-I9, internal 2-cuts, omnipresent faces, allowable paths and the
// well-behaved predicate, the (<=4)-cycle capture predicate, and the
// short-cycle edge queries used by the edge-count lemmas.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "girth5/topology.hpp"
#include "girth5/weights.hpp"

namespace girth5 {

// ------------------------------------------------------- face/graph weight

// w(f) = s(|f|) for open 2-cell faces of length >= 5, |f| otherwise.
inline Rational face_weight(const FaceRecord& f) {
  if (f.open_2cell && f.length >= 5) return s_value(f.length);
  return Rational(f.length);
}

// w(G,R): the sum over internal (non-ring) faces.
inline Rational graph_weight(const EmbeddedGraph& G) {
  Rational w(0);
  for (const auto& f : G.faces)
    if (!f.is_ring_face) w += face_weight(f);
  return w;
}

// Elasticity of a face f covered by the faces S_f of a subgraph: total
// covering length minus |f|.
inline Rational elasticity(int face_length, const std::vector<int>& cover_lengths) {
  long long sum = 0;
  for (int h : cover_lengths) sum += h;
  return Rational(sum - face_length);
}

// All simple cycles of length <= maxlen, as vertex sequences.  Canonical:
// smallest vertex first, second vertex smaller than last (one direction).
inline std::vector<std::vector<int>> enumerate_cycles(const EmbeddedGraph& G,
                                                      int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<char> used(G.n(), 0);
  std::vector<int> path;
  std::function<void(int, int)> go = [&](int s, int v) {
    for (auto [w, e] : G.adj[v]) {
      (void)e;
      if (w == s) {
        if ((int)path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (w < s || used[w] || (int)path.size() >= maxlen) continue;
      used[w] = 1;
      path.push_back(w);
      go(s, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int s = 0; s < G.n(); s++) {
    used[s] = 1;
    path = {s};
    go(s, s);
    used[s] = 0;
  }
  return out;
}

inline int girth(const EmbeddedGraph& G, int cap = 16) {
  for (int l = 3; l <= cap; l++) {
    for (const auto& C : enumerate_cycles(G, l))
      if ((int)C.size() == l) return l;
  }
  return cap + 1;  // no cycle of length <= cap
}

// --------------------------------------------------------- internal 2-cut

// A,B cover V, |A cap B| = 2, both differences nonempty, A contains all
// ring vertices, no edge between A-B and B-A.  Equivalently: some vertex
// pair whose removal leaves >= 2 components, at least one of them free of
// ring vertices.
inline bool has_internal_two_cut(const EmbeddedGraph& G) {
  std::set<int> rv = G.ring_vertex_set();
  int n = G.n();
  for (int x = 0; x < n; x++)
    for (int y = x + 1; y < n; y++) {
      std::vector<int> comp(n, -1);
      int nc = 0;
      for (int s = 0; s < n; s++) {
        if (s == x || s == y || comp[s] >= 0) continue;
        std::vector<int> st = {s};
        comp[s] = nc;
        while (!st.empty()) {
          int v = st.back();
          st.pop_back();
          for (auto [w, e] : G.adj[v]) {
            (void)e;
            if (w == x || w == y || comp[w] >= 0) continue;
            comp[w] = nc;
            st.push_back(w);
          }
        }
        nc++;
      }
      if (nc < 2) continue;
      std::vector<char> has_ring(nc, 0);
      for (int v = 0; v < n; v++)
        if (comp[v] >= 0 && rv.count(v)) has_ring[comp[v]] = 1;
      for (int c = 0; c < nc; c++)
        if (!has_ring[c]) return true;
    }
  return false;
}

// ------------------------------------------------------ omnipresent faces

// A face is omnipresent if it is not open 2-cell and each boundary walk is
// a vertex ring or a cycle cutting off (away from the face) a disk
// containing exactly one ring.
inline bool face_omnipresent(const EmbeddedGraph& G, int fi) {
  const FaceRecord& f = G.faces[fi];
  if (f.open_2cell) return false;
  for (const auto& walk : f.walks) {
    if (walk.empty()) continue;  // isolated vertex ring
    std::vector<int> vs = walk_vertices(G, walk);
    std::set<int> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) return false;  // not a cycle
    CycleClass cc;
    try {
      cc = cycle_class(G, vs);
    } catch (const GraphError&) {
      return false;
    }
    bool ok = false;
    for (size_t i = 0; i < cc.sides.size(); i++) {
      if (cc.sides[i].count(fi)) continue;  // that side contains the face
      if (cc.side_genus[i] == 0 && cc.side_rings[i].size() == 1) ok = true;
    }
    if (!ok) return false;
  }
  return true;
}

inline bool has_omnipresent_face(const EmbeddedGraph& G) {
  for (int fi = 0; fi < (int)G.faces.size(); fi++)
    if (face_omnipresent(G, fi)) return true;
  return false;
}

// ------------------------------------------------------- allowable paths

// Interior edges of a separating cycle's disk side: both incident faces in S.
inline std::vector<int> interior_edges(const EmbeddedGraph& G,
                                       const std::set<int>& S,
                                       const std::set<int>& cyc_edges) {
  std::vector<int> out;
  for (int e = 0; e < G.m(); e++) {
    if (cyc_edges.count(e)) continue;
    auto [f1, f2] = edge_faces(G, e);
    if (S.count(f1) && S.count(f2)) out.push_back(e);
  }
  return out;
}

// P as a vertex sequence with both ends on rings and interior off the rings.
inline bool path_allowable(const EmbeddedGraph& G, const std::vector<int>& P) {
  int u = P.front(), v = P.back();
  int ru = -1, rv = -1;
  for (int i = 0; i < (int)G.rings.size(); i++) {
    const auto& r = G.rings[i];
    if (std::count(r.cycle.begin(), r.cycle.end(), u)) ru = i;
    if (std::count(r.cycle.begin(), r.cycle.end(), v)) rv = i;
  }
  if (ru < 0 || rv < 0 || ru != rv) return false;
  const RingSpec& R = G.rings[ru];
  if (R.kind != RingSpec::facial) return false;
  int plen = (int)P.size() - 1;
  if (plen < 3) return false;
  int k = (int)R.cycle.size();
  int pu = -1, pv = -1;
  for (int i = 0; i < k; i++) {
    if (R.cycle[i] == u) pu = i;
    if (R.cycle[i] == v) pv = i;
  }
  // The two arcs of R between u and v.
  for (int dir = 0; dir < 2; dir++) {
    std::vector<int> Q;  // u ... v along the ring
    int step = dir == 0 ? 1 : k - 1;
    for (int i = pu;; i = (i + step) % k) {
      Q.push_back(R.cycle[i]);
      if (i == pv) break;
    }
    int qlen = (int)Q.size() - 1;
    if (plen + qlen > 8 || qlen == 0) continue;
    // Cycle P followed by reversed interior of Q.
    std::vector<int> C = P;
    for (int i = (int)Q.size() - 2; i >= 1; i--) C.push_back(Q[i]);
    std::set<int> cs(C.begin(), C.end());
    if (cs.size() != C.size()) continue;  // not a simple cycle
    CycleClass cc;
    try {
      cc = cycle_class(G, C);
    } catch (const GraphError&) {
      continue;
    }
    if (cc.topology != CycleClass::contractible) continue;
    std::vector<int> ces = cycle_edges(G, C);
    std::set<int> ceset(ces.begin(), ces.end());
    for (size_t i = 0; i < cc.sides.size(); i++) {
      if (cc.side_genus[i] != 0 || !cc.side_rings[i].empty()) continue;
      const std::set<int>& S = cc.sides[i];
      if (plen == 3) {
        if ((int)C.size() == 5 && S.size() == 1) return true;
        continue;
      }
      // plen == 4
      std::vector<int> inner = interior_edges(G, S, ceset);
      if (inner.empty()) return true;
      if (inner.size() == 1 && qlen == 4) {
        const EdgeRec& e = G.edges[inner[0]];
        int pm = P[2], qm = Q[2];
        if ((e.u == pm && e.v == qm) || (e.u == qm && e.v == pm)) return true;
      }
    }
  }
  return false;
}

// Candidate paths: ends on rings, interior vertices off the rings, not a
// subgraph of the rings; length 1..4.
inline std::vector<std::vector<int>> boundary_paths(const EmbeddedGraph& G) {
  std::set<int> rv = G.ring_vertex_set();
  std::set<int> re = G.ring_edge_set();
  std::vector<std::vector<int>> out;
  for (int u : rv)
    for (auto [w, e] : G.adj[u])
      if (rv.count(w) && u < w && !re.count(e)) out.push_back({u, w});
  std::vector<int> path;
  std::vector<char> used(G.n(), 0);
  std::function<void(int)> go = [&](int v) {
    for (auto [w, e] : G.adj[v]) {
      (void)e;
      if (rv.count(w)) {
        // each path found from both ends; keep the smaller-start direction
        if (w > path.front() && (int)path.size() >= 2) {
          out.push_back(path);
          out.back().push_back(w);
        }
        continue;
      }
      if (used[w] || (int)path.size() >= 4) continue;
      used[w] = 1;
      path.push_back(w);
      go(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int u : rv) {
    path = {u};
    go(u);
  }
  return out;
}

inline bool well_behaved(const EmbeddedGraph& G) {
  for (const auto& P : boundary_paths(G))
    if (!path_allowable(G, P)) return false;
  return true;
}

// ------------------------------------------------------------ I0-I9 report

struct PropertyReport {
  std::array<bool, 10> I{};  // I0..I9
  bool well_behaved_flag = false;
  bool all(std::initializer_list<int> which) const {
    for (int i : which)
      if (!I[i]) return false;
    return true;
  }
};

namespace detail {

// A graph has no even cycle iff every biconnected block is a single edge or
// an odd cycle.
inline bool no_even_cycle(const std::map<int, std::vector<int>>& adj) {
  std::map<int, int> num, low;
  std::vector<std::pair<int, int>> stack;
  bool ok = true;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int pe) {
    num[v] = low[v] = ++timer;
    for (int w : adj.at(v)) {
      if (w == pe) continue;  // parent (simple graphs: by vertex)
      if (num.count(w)) {
        if (num[w] < num[v]) {
          stack.push_back({v, w});
          low[v] = std::min(low[v], num[w]);
        }
        continue;
      }
      stack.push_back({v, w});
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= num[v]) {
        // pop the block
        std::set<int> bv;
        int be = 0;
        while (true) {
          auto [a, b] = stack.back();
          stack.pop_back();
          bv.insert(a);
          bv.insert(b);
          be++;
          if (a == v && b == w) break;
        }
        if (be >= 2) {
          // must be exactly an odd cycle
          if ((int)bv.size() != be || be % 2 == 0) ok = false;
        }
      }
    }
  };
  for (const auto& [v, nb] : adj) {
    (void)nb;
    if (!num.count(v)) dfs(v, -1);
  }
  return ok;
}

inline std::vector<std::vector<int>> cycles_in_subgraph(
    const std::map<int, std::vector<int>>& adj) {
  std::vector<int> verts;
  for (const auto& [v, nb] : adj) {
    (void)nb;
    verts.push_back(v);
  }
  std::vector<std::vector<int>> out;
  std::set<int> used;
  std::vector<int> path;
  std::function<void(int, int)> go = [&](int s, int v) {
    for (int w : adj.at(v)) {
      if (w == s) {
        if ((int)path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (w < s || used.count(w)) continue;
      used.insert(w);
      path.push_back(w);
      go(s, w);
      path.pop_back();
      used.erase(w);
    }
  };
  for (int s : verts) {
    used.insert(s);
    path = {s};
    go(s, s);
    used.erase(s);
  }
  return out;
}

}  // namespace detail

inline PropertyReport check_properties(const EmbeddedGraph& G) {
  PropertyReport rep;
  std::set<int> rv = G.ring_vertex_set();
  std::set<int> re = G.ring_edge_set();
  auto internal = [&](int v) { return !rv.count(v); };

  // I0: internal vertices have degree >= 3.
  rep.I[0] = true;
  for (int v = 0; v < G.n(); v++)
    if (internal(v) && G.deg(v) < 3) rep.I[0] = false;

  // Subgraph on internal degree-3 vertices, for I1/I2.
  std::map<int, std::vector<int>> d3;
  for (int v = 0; v < G.n(); v++) {
    if (!internal(v) || G.deg(v) != 3) continue;
    d3[v] = {};
    for (auto [w, e] : G.adj[v]) {
      (void)e;
      if (internal(w) && G.deg(w) == 3) d3[v].push_back(w);
    }
  }
  rep.I[1] = detail::no_even_cycle(d3);

  rep.I[2] = true;
  for (const auto& C : detail::cycles_in_subgraph(d3)) {
    std::set<int> cs(C.begin(), C.end());
    std::vector<char> sees(G.n(), 0);
    for (int v = 0; v < G.n(); v++) {
      if (cs.count(v)) continue;
      for (auto [w, e] : G.adj[v]) {
        (void)e;
        if (cs.count(w)) sees[v] = 1;
      }
    }
    for (const auto& e : G.edges)
      if (!cs.count(e.u) && !cs.count(e.v) && sees[e.u] && sees[e.v])
        rep.I[2] = false;
  }

  // I3: internal faces closed 2-cell of length >= 5.
  rep.I[3] = true;
  for (const auto& f : G.faces) {
    if (f.is_ring_face) continue;
    if (!f.closed_2cell || f.length < 5) rep.I[3] = false;
  }

  // I4: paths of length <= 2 with both ends on rings are ring subgraphs.
  rep.I[4] = true;
  for (const auto& e : G.edges) {
    int ei = G.eindex.at(e.id);
    if (rv.count(e.u) && rv.count(e.v) && !re.count(ei)) rep.I[4] = false;
  }
  for (int w = 0; w < G.n(); w++) {
    std::vector<std::pair<int, int>> ringnb;  // (vertex, edge)
    for (auto [x, e] : G.adj[w])
      if (rv.count(x)) ringnb.push_back({x, e});
    for (size_t i = 0; i < ringnb.size(); i++)
      for (size_t j = i + 1; j < ringnb.size(); j++) {
        bool in_rings = rv.count(w) && re.count(ringnb[i].second) &&
                        re.count(ringnb[j].second);
        if (!in_rings) rep.I[4] = false;
      }
  }

  // I5: no adjacent degree-2 vertices.
  rep.I[5] = true;
  for (const auto& e : G.edges)
    if (G.deg(e.u) == 2 && G.deg(e.v) == 2) rep.I[5] = false;

  // I6: sphere with one ring, or omnipresent face, implies no internal 2-cut.
  rep.I[6] = true;
  {
    auto [g, orient] = std::pair<long long, bool>(G.euler_genus(), true);
    (void)orient;
    bool hyp = (g == 0 && G.rings.size() == 1) || has_omnipresent_face(G);
    if (hyp && has_internal_two_cut(G)) rep.I[6] = false;
  }

  // I7: distance between distinct rings >= 4.
  rep.I[7] = true;
  for (size_t i = 0; i < G.rings.size(); i++) {
    // BFS from ring i.
    std::vector<int> dist(G.n(), -1);
    std::vector<int> q;
    for (int v : G.rings[i].cycle) {
      dist[v] = 0;
      q.push_back(v);
    }
    for (size_t h = 0; h < q.size(); h++) {
      int v = q[h];
      for (auto [w, e] : G.adj[v]) {
        (void)e;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push_back(w);
        }
      }
    }
    for (size_t j = i + 1; j < G.rings.size(); j++)
      for (int v : G.rings[j].cycle)
        if (dist[v] >= 0 && dist[v] < 4) rep.I[7] = false;
  }

  // I8: non-separating cycles have length >= 7.
  rep.I[8] = true;
  for (const auto& C : enumerate_cycles(G, 6)) {
    CycleClass cc = cycle_class(G, C);
    if (cc.topology == CycleClass::nonseparating) rep.I[8] = false;
  }

  // I9: ring-disjoint open disks bounded by (<=9)-cycles are a face, a pair
  // of faces split by a chord (lengths 5 and |C|-3, which sum to |C|+2 as
  // the chord is counted twice), or (|C|=9) three 5-faces around a cubic
  // vertex.
  rep.I[9] = true;
  for (const auto& C : enumerate_cycles(G, 9)) {
    CycleClass cc = cycle_class(G, C);
    if (cc.topology != CycleClass::contractible) continue;
    std::set<int> cs(C.begin(), C.end());
    for (size_t i = 0; i < cc.sides.size(); i++) {
      if (cc.side_genus[i] != 0 || !cc.side_rings[i].empty()) continue;
      const std::set<int>& S = cc.sides[i];
      if (S.size() == 1) continue;
      if (S.size() == 2) {
        std::multiset<int> ls;
        for (int fi : S) ls.insert(G.faces[fi].length);
        std::multiset<int> want = {5, (int)C.size() - 3};
        if (ls == want) continue;
      }
      if (S.size() == 3 && C.size() == 9) {
        bool all5 = true;
        std::set<int> inner;
        for (int fi : S) {
          if (G.faces[fi].length != 5) all5 = false;
          for (int v : G.faces[fi].vertices)
            if (!cs.count(v)) inner.insert(v);
        }
        if (all5 && inner.size() == 1 && G.deg(*inner.begin()) == 3) continue;
      }
      rep.I[9] = false;
    }
  }

  rep.well_behaved_flag = well_behaved(G);
  return rep;
}

// --------------------------------------------------- (<=4)-cycle capture

// M (an edge subset) captures (<=4)-cycles if it contains every (<=4)-cycle
// of G and is null or has minimum degree >= 2.
inline bool captures_short_cycles(const EmbeddedGraph& G,
                                  const std::set<int>& M) {
  for (const auto& C : enumerate_cycles(G, 4))
    for (int e : cycle_edges(G, C))
      if (!M.count(e)) return false;
  if (M.empty()) return true;
  std::map<int, int> mdeg;
  for (int e : M) {
    mdeg[G.edges[e].u]++;
    mdeg[G.edges[e].v]++;
  }
  for (auto [v, d] : mdeg)
    if (d < 2) return false;
  return true;
}

// ----------------------------------------------------- short-cycle queries

struct ShortCycleReport {
  std::set<int> noncontractible_edges;  // edges on non-contractible (<=k)-cycles
  std::set<int> incomparable_edges;     // outside the K0 disk, on (<=7)-cycles
                                        // surrounding R incomparable with K0
  std::set<int> bound_to_edges;         // non-contractible (<=6)-cycles bound
                                        // to the 6-ring R
  std::set<int> near7_edges;            // non-contractible 7-cycles sharing
                                        // >= 4 vertices with the 7-ring R
};

inline bool cycle_bound_to_ring(const EmbeddedGraph& G,
                                const std::vector<int>& C,
                                const RingSpec& R) {
  std::set<int> cs(C.begin(), C.end());
  std::set<int> rs(R.cycle.begin(), R.cycle.end());
  int common = 0;
  for (int v : cs)
    if (rs.count(v)) common++;
  if (common >= 3) return true;
  // edges cr, c'r' with r,r' distinct non-adjacent ring vertices
  std::vector<int> attached;  // ring vertices r with a neighbor in C-R
  for (int r : rs) {
    if (cs.count(r)) continue;
    for (auto [w, e] : G.adj[r]) {
      (void)e;
      if (cs.count(w) && !rs.count(w)) {
        attached.push_back(r);
        break;
      }
    }
  }
  for (size_t i = 0; i < attached.size(); i++)
    for (size_t j = i + 1; j < attached.size(); j++)
      if (G.find_edge(attached[i], attached[j]) < 0) return true;
  return false;
}

inline ShortCycleReport short_cycle_queries(
    const EmbeddedGraph& G, int ring_index, int k,
    const std::optional<std::vector<int>>& K0 = std::nullopt) {
  if (ring_index < 0 || ring_index >= (int)G.rings.size())
    throw GraphError("ring index out of range");
  ShortCycleReport rep;
  int maxlen = std::max({k, 7, 6});
  const RingSpec& R = G.rings[ring_index];
  if (R.kind == RingSpec::facial && R.cycle.size() == 7) maxlen = std::max(maxlen, 7);
  std::vector<std::vector<int>> cycles = enumerate_cycles(G, maxlen);

  std::set<int> disk0;
  bool have_k0 = false;
  if (K0) {
    if (!surrounds_ring(G, *K0, ring_index))
      throw GraphError("K0 does not surround R");
    disk0 = surrounding_disk_faces(G, *K0, ring_index);
    have_k0 = true;
  }
  std::set<int> k0_edges;
  if (have_k0)
    for (int e : cycle_edges(G, *K0)) k0_edges.insert(e);
  auto outside_disk0 = [&](int e) {
    if (k0_edges.count(e)) return false;
    auto [f1, f2] = edge_faces(G, e);
    return !disk0.count(f1) && !disk0.count(f2);
  };

  for (const auto& C : cycles) {
    int len = (int)C.size();
    CycleClass cc = cycle_class(G, C);
    bool noncon = cc.topology != CycleClass::contractible;
    std::vector<int> ces = cycle_edges(G, C);
    if (noncon && len <= k)
      for (int e : ces) rep.noncontractible_edges.insert(e);
    if (have_k0 && len <= 7 && cc.topology == CycleClass::surrounds &&
        surrounds_ring(G, C, ring_index)) {
      std::set<int> dc = surrounding_disk_faces(G, C, ring_index);
      bool sub1 = std::includes(dc.begin(), dc.end(), disk0.begin(), disk0.end());
      bool sub2 = std::includes(disk0.begin(), disk0.end(), dc.begin(), dc.end());
      if (!sub1 && !sub2)
        for (int e : ces)
          if (outside_disk0(e)) rep.incomparable_edges.insert(e);
    }
    if (R.kind == RingSpec::facial && R.cycle.size() == 6 && noncon &&
        len <= 6 && cycle_bound_to_ring(G, C, R))
      for (int e : ces) rep.bound_to_edges.insert(e);
    if (R.kind == RingSpec::facial && R.cycle.size() == 7 && noncon &&
        len == 7) {
      std::set<int> rs(R.cycle.begin(), R.cycle.end());
      int common = 0;
      for (int v : C)
        if (rs.count(v)) common++;
      if (common >= 4)
        for (int e : ces) rep.near7_edges.insert(e);
    }
  }
  return rep;
}

}  // namespace girth5
