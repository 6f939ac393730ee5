// Cycle topology on embedded graphs: sidedness, separation, contractibility
// and ring-surrounding decided by dual-graph cut-and-count; cutting along a
// cycle; extraction of disk interiors; and expansion of subgraph faces into
// independent embedded graphs with their natural rings.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

// The two faces incident with an edge (equal if the edge has the same face
// on both sides).
inline std::pair<int, int> edge_faces(const EmbeddedGraph& G, int e) {
  int d = dart_make(e, 0);
  return {G.signal_face[signal_make(d, +1)], G.signal_face[signal_make(d, -1)]};
}

inline std::vector<int> cycle_edges(const EmbeddedGraph& G,
                                    const std::vector<int>& C) {
  if (C.size() < 3) throw GraphError("input not a cycle");
  std::set<int> seen(C.begin(), C.end());
  if (seen.size() != C.size()) throw GraphError("cycle repeats a vertex");
  std::vector<int> es;
  for (size_t i = 0; i < C.size(); i++) {
    int e = G.find_edge(C[i], C[(i + 1) % C.size()]);
    if (e < 0) throw GraphError("input not a cycle");
    es.push_back(e);
  }
  return es;
}

struct CycleClass {
  bool two_sided = true;
  enum Topology {
    contractible,
    surrounds,
    separating_noncontractible,
    nonseparating
  } topology = nonseparating;
  int surrounded_ring = -1;
  // When separating: the two face sets (dual components) flanking the cycle.
  std::vector<std::set<int>> sides;
  std::vector<long long> side_genus;
  std::vector<std::vector<int>> side_rings;
};

namespace detail {
struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace detail

// Euler genus of the surface piece consisting of the faces in S, capped with
// a disk along the separating cycle whose edges are `ces`.
inline long long side_genus_capped(const EmbeddedGraph& G,
                                   const std::set<int>& S,
                                   const std::vector<int>& ces) {
  std::set<int> V, E;
  for (int f : S) V.insert(G.faces[f].vertices.begin(), G.faces[f].vertices.end());
  for (int e = 0; e < G.m(); e++) {
    auto [f1, f2] = edge_faces(G, e);
    if (S.count(f1) && S.count(f2)) E.insert(e);
  }
  for (int e : ces) E.insert(e);
  long long F = (long long)S.size() + 1;  // cap
  return 2 - ((long long)V.size() - (long long)E.size() + F);
}

inline CycleClass cycle_class(const EmbeddedGraph& G, const std::vector<int>& C) {
  std::vector<int> ces = cycle_edges(G, C);
  CycleClass res;
  int sgn = 1;
  for (int e : ces) sgn *= G.edges[e].sign;
  res.two_sided = sgn == +1;
  if (!res.two_sided) {
    res.topology = CycleClass::nonseparating;
    return res;
  }
  // Dual of the component containing C, minus the dual edges crossed by C.
  int c = G.comp[C[0]];
  std::set<int> cset(ces.begin(), ces.end());
  detail::DSU dsu((int)G.faces.size());
  for (int e = 0; e < G.m(); e++) {
    if (cset.count(e)) continue;
    auto [f1, f2] = edge_faces(G, e);
    dsu.unite(f1, f2);
  }
  int d0 = dart_make(ces[0], 0);
  int fa = G.signal_face[signal_make(d0, +1)];
  int fb = G.signal_face[signal_make(d0, -1)];
  if (dsu.find(fa) == dsu.find(fb)) {
    res.topology = CycleClass::nonseparating;
    return res;
  }
  for (int root : {dsu.find(fa), dsu.find(fb)}) {
    std::set<int> side;
    for (int f = 0; f < (int)G.faces.size(); f++) {
      if (G.faces[f].component != c && G.faces[f].component != -2) continue;
      if (dsu.find(f) == root) side.insert(f);
    }
    res.sides.push_back(side);
    res.side_genus.push_back(side_genus_capped(G, side, ces));
    std::vector<int> rs;
    for (size_t ri = 0; ri < G.rings.size(); ri++)
      if (side.count(G.ring_face[ri])) rs.push_back((int)ri);
    res.side_rings.push_back(rs);
  }
  bool contr = false;
  int best_ring = -1;
  for (int i = 0; i < 2; i++) {
    if (res.side_genus[i] != 0) continue;
    if (res.side_rings[i].empty()) contr = true;
    else if (res.side_rings[i].size() == 1 &&
             (best_ring < 0 || res.side_rings[i][0] < best_ring))
      best_ring = res.side_rings[i][0];
  }
  if (contr) {
    res.topology = CycleClass::contractible;
  } else if (best_ring >= 0) {
    res.topology = CycleClass::surrounds;
    res.surrounded_ring = best_ring;
  } else {
    res.topology = CycleClass::separating_noncontractible;
  }
  return res;
}

// Does C surround ring `ri` (a genus-0 side whose only ring is ri)?
inline bool surrounds_ring(const EmbeddedGraph& G, const std::vector<int>& C,
                           int ri) {
  CycleClass cc = cycle_class(G, C);
  if (cc.topology != CycleClass::surrounds &&
      cc.topology != CycleClass::separating_noncontractible)
    return false;
  for (int i = 0; i < (int)cc.sides.size(); i++)
    if (cc.side_genus[i] == 0 && cc.side_rings[i].size() == 1 &&
        cc.side_rings[i][0] == ri)
      return true;
  return false;
}

// The open-disk face set bounded by C on the side containing ring ri's ring
// face (used for comparing surrounding cycles).
inline std::set<int> surrounding_disk_faces(const EmbeddedGraph& G,
                                            const std::vector<int>& C, int ri) {
  CycleClass cc = cycle_class(G, C);
  for (int i = 0; i < (int)cc.sides.size(); i++)
    if (cc.side_genus[i] == 0 && cc.side_rings[i].size() == 1 &&
        cc.side_rings[i][0] == ri)
      return cc.sides[i];
  throw GraphError("cycle does not surround the ring");
}

// ------------------------------------------------------------ cut along C

// Cuts the (connected) embedded graph along the simple cycle C, which must be
// vertex-disjoint from all rings.  The duplicated cycle vertices become
// non-weak vertex rings of the pieces.
inline std::vector<EmbeddedGraph> cut_along_cycle(const EmbeddedGraph& G,
                                                  const std::vector<int>& C) {
  std::vector<int> ces = cycle_edges(G, C);
  if (G.ncomp != 1) throw GraphError("cut requires a connected graph");
  for (const auto& r : G.rings)
    for (int v : r.cycle)
      if (std::find(C.begin(), C.end(), v) != C.end())
        throw GraphError("cut cycle meets a ring");
  int mm = (int)C.size();
  // Switching normalization: make sign(e_i)=+1 for i<m-1 by flipping cycle
  // vertices; the last edge keeps the cycle's sign product.
  std::vector<int> sign(G.m());
  for (int e = 0; e < G.m(); e++) sign[e] = G.edges[e].sign;
  std::vector<std::vector<int>> rot = G.rot;
  std::vector<bool> flip(G.n(), false);
  auto do_flip = [&](int v) {
    flip[v] = !flip[v];
    for (auto [w, e] : G.adj[v]) {
      (void)w;
      sign[e] = -sign[e];
    }
    std::reverse(rot[v].begin(), rot[v].end());
  };
  for (int i = 1; i < mm; i++)
    if (sign[ces[i - 1]] == -1) do_flip(C[i]);
  std::vector<int> eflip(mm);  // side swap across each cycle edge copy
  for (int i = 0; i < mm; i++) eflip[i] = sign[ces[i]] == -1 ? 1 : 0;

  // Side of each non-cycle dart at a cycle vertex: darts strictly between
  // the outgoing and incoming cycle darts (clockwise) are side 0.
  std::map<int, int> cpos;
  for (int i = 0; i < mm; i++) cpos[C[i]] = i;
  std::vector<int> dart_side(2 * G.m(), -1);
  std::vector<std::vector<int>> side_arc0(mm), side_arc1(mm);
  for (int i = 0; i < mm; i++) {
    int v = C[i];
    int eo = ces[i], en = ces[(i + mm - 1) % mm];
    int od = dart_make(eo, G.edges[eo].u == v ? 0 : 1);
    int nd = dart_make(en, G.edges[en].u == v ? 0 : 1);
    const auto& rv = rot[v];
    int k = (int)rv.size();
    int po = -1;
    for (int j = 0; j < k; j++)
      if (rv[j] == od) po = j;
    int side = 0;
    for (int j = 1; j < k; j++) {
      int d = rv[(po + j) % k];
      if (d == nd) {
        side = 1;
        continue;
      }
      dart_side[d] = side;
      (side == 0 ? side_arc0[i] : side_arc1[i]).push_back(d);
    }
  }

  // Build the cut graph: cycle vertices/edges duplicated per side.
  long long maxv = G.vid.back();
  long long maxe = 0;
  for (const auto& e : G.edges) maxe = std::max(maxe, e.id);
  EmbeddedGraph H;
  // vertex ids: originals; side-1 copies of C get maxv+1+i
  std::map<std::pair<int, int>, long long> copy_vid;  // (cycle pos, side)
  for (int i = 0; i < mm; i++) {
    copy_vid[{i, 0}] = G.vid[C[i]];
    copy_vid[{i, 1}] = maxv + 1 + i;
  }
  std::vector<long long> hv;
  for (int v = 0; v < G.n(); v++)
    if (!cpos.count(v)) hv.push_back(G.vid[v]);
  for (int i = 0; i < mm; i++) {
    hv.push_back(copy_vid[{i, 0}]);
    hv.push_back(copy_vid[{i, 1}]);
  }
  std::sort(hv.begin(), hv.end());
  H.vid = hv;
  std::map<long long, int> hidx;
  for (int i = 0; i < H.n(); i++) hidx[H.vid[i]] = i;

  std::set<int> cesset(ces.begin(), ces.end());
  // Map old dart -> new vertex index at its origin.
  auto origin_of = [&](int d) -> long long {
    int v = G.dart_from(d);
    auto it = cpos.find(v);
    if (it == cpos.end()) return G.vid[v];
    int side = dart_side[d];
    return copy_vid[{it->second, side}];
  };
  // New edges: non-cycle edges keep id/sign (post-switching); cycle edge
  // copies: side 0 keeps id, side 1 gets maxe+1+i; both sign +1.
  std::map<std::pair<int, int>, long long> copy_eid;  // (cycle idx, side)
  auto addEdge = [&](long long id, long long a, long long b, int sg) {
    EdgeRec e;
    e.id = id;
    e.u = hidx.at(a);
    e.v = hidx.at(b);
    e.sign = sg;
    if (H.vid[e.u] > H.vid[e.v]) std::swap(e.u, e.v);
    H.edges.push_back(e);
  };
  for (int e = 0; e < G.m(); e++) {
    if (cesset.count(e)) continue;
    long long a = origin_of(dart_make(e, 0));
    long long b = origin_of(dart_make(e, 1));
    addEdge(G.edges[e].id, a, b, sign[e]);
  }
  for (int i = 0; i < mm; i++) {
    for (int side = 0; side < 2; side++) {
      long long a = copy_vid[{i, side}];
      long long b = copy_vid[{(i + 1) % mm, side ^ eflip[i]}];
      long long id = side == 0 ? G.edges[ces[i]].id : maxe + 1 + i;
      copy_eid[{i, side}] = id;
      addEdge(id, a, b, +1);
    }
  }
  std::sort(H.edges.begin(), H.edges.end(),
            [](const EdgeRec& a, const EdgeRec& b) { return a.id < b.id; });
  std::map<long long, int> heidx;
  for (int i = 0; i < H.m(); i++) heidx[H.edges[i].id] = i;
  auto hdart = [&](int he, long long atv) {
    return dart_make(he, H.vid[H.edges[he].u] == atv ? 0 : 1);
  };

  H.rot.assign(H.n(), {});
  // Rotations of untouched vertices: translate darts.
  for (int v = 0; v < G.n(); v++) {
    if (cpos.count(v)) continue;
    for (int d : rot[v]) {
      int e = dart_edge(d);
      int he;
      if (cesset.count(e))
        throw GraphError("internal cut error");
      he = heidx.at(G.edges[e].id);
      H.rot[hidx.at(G.vid[v])].push_back(hdart(he, G.vid[v]));
    }
  }
  // Cycle-vertex copies: [out-copy, side arc, in-copy] clockwise for side 0;
  // [in-copy, side arc, out-copy] for side 1.
  for (int i = 0; i < mm; i++) {
    int prev = (i + mm - 1) % mm;
    for (int side = 0; side < 2; side++) {
      long long me = copy_vid[{i, side}];
      int hv2 = hidx.at(me);
      long long out_id = copy_eid.at({i, side});
      long long in_id = copy_eid.at({prev, side ^ eflip[prev]});
      std::vector<int>& arc = side == 0 ? side_arc0[i] : side_arc1[i];
      std::vector<int> seq;
      if (side == 0) {
        seq.push_back(hdart(heidx.at(out_id), me));
        for (int d : arc)
          seq.push_back(hdart(heidx.at(G.edges[dart_edge(d)].id), me));
        seq.push_back(hdart(heidx.at(in_id), me));
      } else {
        seq.push_back(hdart(heidx.at(in_id), me));
        for (int d : arc)
          seq.push_back(hdart(heidx.at(G.edges[dart_edge(d)].id), me));
        seq.push_back(hdart(heidx.at(out_id), me));
      }
      H.rot[hv2] = seq;
    }
  }
  H.precoloring.assign(H.n(), -1);
  // Rings: originals survive (their vertices are untouched); copies become
  // non-weak vertex rings.
  for (const auto& r : G.rings) {
    RingSpec nr = r;
    nr.cycle.clear();
    for (int v : r.cycle) nr.cycle.push_back(hidx.at(G.vid[v]));
    H.rings.push_back(nr);
  }
  for (int i = 0; i < mm; i++)
    for (int side = 0; side < 2; side++) {
      RingSpec nr;
      nr.kind = RingSpec::vertex;
      nr.weak = false;
      nr.cycle = {hidx.at(copy_vid[{i, side}])};
      H.rings.push_back(nr);
    }
  H.finalize();

  // Split into connected pieces.
  std::vector<EmbeddedGraph> pieces;
  std::vector<std::vector<int>> comp_vs(H.ncomp);
  for (int v = 0; v < H.n(); v++) comp_vs[H.comp[v]].push_back(v);
  if (H.ncomp == 1) {
    pieces.push_back(H);
    return pieces;
  }
  for (int cidx = 0; cidx < H.ncomp; cidx++) {
    EmbeddedGraph P;
    std::set<int> vs(comp_vs[cidx].begin(), comp_vs[cidx].end());
    for (int v : comp_vs[cidx]) P.vid.push_back(H.vid[v]);
    std::sort(P.vid.begin(), P.vid.end());
    std::map<long long, int> pidx;
    for (int i = 0; i < P.n(); i++) pidx[P.vid[i]] = i;
    std::map<long long, int> peidx;
    for (const auto& e : H.edges) {
      if (!vs.count(e.u)) continue;
      EdgeRec ne;
      ne.id = e.id;
      ne.u = pidx.at(H.vid[e.u]);
      ne.v = pidx.at(H.vid[e.v]);
      ne.sign = e.sign;
      if (P.vid[ne.u] > P.vid[ne.v]) std::swap(ne.u, ne.v);
      peidx[ne.id] = (int)P.edges.size();
      P.edges.push_back(ne);
    }
    P.rot.assign(P.n(), {});
    for (int v : comp_vs[cidx]) {
      int pv = pidx.at(H.vid[v]);
      for (int d : H.rot[v]) {
        int pe = peidx.at(H.edges[dart_edge(d)].id);
        P.rot[pv].push_back(
            dart_make(pe, P.vid[P.edges[pe].u] == H.vid[v] ? 0 : 1));
      }
    }
    P.precoloring.assign(P.n(), -1);
    for (const auto& r : H.rings) {
      if (!vs.count(r.cycle[0])) continue;
      RingSpec nr = r;
      nr.cycle.clear();
      for (int v : r.cycle) nr.cycle.push_back(pidx.at(H.vid[v]));
      P.rings.push_back(nr);
    }
    P.finalize();
    pieces.push_back(std::move(P));
  }
  return pieces;
}

// ------------------------------------------------------------ disk interior

// The graph drawn in the closure of the open disk bounded by the
// contractible non-facial cycle C, with C as its sole facial ring.
inline EmbeddedGraph disk_interior(const EmbeddedGraph& G,
                                   const std::vector<int>& C) {
  CycleClass cc = cycle_class(G, C);
  if (cc.topology != CycleClass::contractible)
    throw GraphError("cycle is not contractible");
  int side = -1;
  for (int i = 0; i < 2; i++)
    if (cc.side_genus[i] == 0 && cc.side_rings[i].empty()) side = i;
  const std::set<int>& S = cc.sides[side];
  if (S.size() == 1) throw GraphError("C is facial");
  std::vector<int> ces = cycle_edges(G, C);
  std::set<int> cset(C.begin(), C.end());
  std::set<int> keepE(ces.begin(), ces.end());
  for (int e = 0; e < G.m(); e++) {
    auto [f1, f2] = edge_faces(G, e);
    if (S.count(f1) && S.count(f2)) keepE.insert(e);
  }
  std::set<int> keepV(C.begin(), C.end());
  for (int e : keepE) {
    keepV.insert(G.edges[e].u);
    keepV.insert(G.edges[e].v);
  }
  EmbeddedGraph P;
  for (int v : keepV) P.vid.push_back(G.vid[v]);
  std::sort(P.vid.begin(), P.vid.end());
  std::map<long long, int> pidx;
  for (int i = 0; i < P.n(); i++) pidx[P.vid[i]] = i;
  std::map<int, int> pe_of;
  for (int e : keepE) {
    EdgeRec ne;
    ne.id = G.edges[e].id;
    ne.u = pidx.at(G.vid[G.edges[e].u]);
    ne.v = pidx.at(G.vid[G.edges[e].v]);
    ne.sign = G.edges[e].sign;
    if (P.vid[ne.u] > P.vid[ne.v]) std::swap(ne.u, ne.v);
    pe_of[e] = (int)P.edges.size();
    P.edges.push_back(ne);
  }
  P.rot.assign(P.n(), {});
  for (int v : keepV) {
    int pv = pidx.at(G.vid[v]);
    for (int d : G.rot[v]) {
      int e = dart_edge(d);
      if (!keepE.count(e)) continue;
      int pe = pe_of.at(e);
      P.rot[pv].push_back(dart_make(pe, P.vid[P.edges[pe].u] == G.vid[v] ? 0 : 1));
    }
  }
  P.precoloring.assign(P.n(), -1);
  RingSpec r;
  r.kind = RingSpec::facial;
  for (int v : C) r.cycle.push_back(pidx.at(G.vid[v]));
  P.rings.push_back(r);
  P.finalize();
  return P;
}

// ----------------------------------------------------------- face expansion

struct SubgraphSpec {
  std::vector<int> edges;              // edge indices of J
  std::vector<int> isolated_vertices;  // vertex indices (must be vertex rings)
};

struct ExpansionFace {
  // A face (region) of J: the dual component id and its boundary walks,
  // each walk a sequence of G-signals (empty for an isolated vertex ring,
  // which is recorded in `vertex_walks`).
  int region = -1;
  std::vector<std::vector<int>> walks;       // signal sequences along J
  std::vector<int> vertex_walks;             // isolated J-vertices on region
};

namespace detail {

// Region (dual component after deleting J-crossing dual edges) per face.
inline std::vector<int> region_of_faces(const EmbeddedGraph& G,
                                        const std::set<int>& jedges) {
  DSU dsu((int)G.faces.size());
  for (int e = 0; e < G.m(); e++) {
    if (jedges.count(e)) continue;
    auto [f1, f2] = edge_faces(G, e);
    dsu.unite(f1, f2);
  }
  std::vector<int> reg(G.faces.size());
  for (int f = 0; f < (int)G.faces.size(); f++) reg[f] = dsu.find(f);
  return reg;
}

}  // namespace detail

// Compute the faces (regions) of the subgraph J inside G, with boundary
// walks traced in J's induced embedding and matched to regions of G.
inline std::vector<ExpansionFace> subgraph_faces(const EmbeddedGraph& G,
                                                 const SubgraphSpec& J) {
  std::set<int> jedges(J.edges.begin(), J.edges.end());
  std::vector<int> reg = detail::region_of_faces(G, jedges);
  // J-induced rotation: G's rotation filtered to J darts.
  std::vector<std::vector<int>> jrot(G.n());
  for (int v = 0; v < G.n(); v++)
    for (int d : G.rot[v])
      if (jedges.count(dart_edge(d))) jrot[v].push_back(d);
  std::map<int, int> jpos;
  for (int v = 0; v < G.n(); v++)
    for (int i = 0; i < (int)jrot[v].size(); i++) jpos[jrot[v][i]] = i;
  auto jnext = [&](int sig) {
    int d = signal_dart(sig), s = signal_side(sig);
    int a = dart_opposite(d);
    int w = G.dart_from(a);
    int s2 = s * G.edge_sign(d);
    const auto& r = jrot[w];
    int p = jpos.at(a);
    int q = s2 == +1 ? (p + 1) % (int)r.size()
                     : (p + (int)r.size() - 1) % (int)r.size();
    return signal_make(r[q], s2);
  };
  // Trace J's orbits and pair them by the mirror involution.
  std::map<int, int> orbit_of;
  std::vector<std::vector<int>> orbits;
  for (int e : J.edges)
    for (int end = 0; end < 2; end++)
      for (int side : {+1, -1}) {
        int s0 = signal_make(dart_make(e, end), side);
        if (orbit_of.count(s0)) continue;
        std::vector<int> orb;
        int s = s0;
        do {
          orbit_of[s] = (int)orbits.size();
          orb.push_back(s);
          s = jnext(s);
        } while (s != s0);
        orbits.push_back(std::move(orb));
      }
  std::map<int, ExpansionFace> by_region;
  std::set<int> done;
  for (int i = 0; i < (int)orbits.size(); i++) {
    if (done.count(i)) continue;
    int j = orbit_of.at(G.mirror_signal(orbits[i][0]));
    std::vector<int> walk;
    int rep;
    if (j == i) {
      for (size_t k = 0; k < orbits[i].size() / 2; k++)
        walk.push_back(orbits[i][k]);
      done.insert(i);
    } else {
      walk = orbits[i];
      done.insert(i);
      done.insert(j);
    }
    // The region this walk faces: the G-face of its first signal.
    rep = reg[G.signal_face[walk[0]]];
    // For a mirror pair the two orbits face (possibly) different regions:
    // each orbit is a one-sided traversal.  Record both orbits separately
    // when their regions differ.
    if (j != i) {
      int repj = reg[G.signal_face[orbits[j][0]]];
      if (repj != rep) {
        auto& fj = by_region[repj];
        fj.region = repj;
        fj.walks.push_back(orbits[j]);
      } else {
        // Both sides of this walk face the same region (e.g. a pendant
        // path): the walk appears once; the region sees the full closed
        // walk from orbit i already (it traverses both sides).
      }
    }
    auto& fr = by_region[rep];
    fr.region = rep;
    fr.walks.push_back(walk);
  }
  for (int v : J.isolated_vertices) {
    // An isolated J-vertex sits inside the region of any face containing it;
    // use its cuff face.
    int f = -1;
    for (size_t ri = 0; ri < G.rings.size(); ri++)
      if (G.rings[ri].kind == RingSpec::vertex && G.rings[ri].cycle[0] == v)
        f = G.ring_face[ri];
    if (f < 0) throw GraphError("isolated subgraph vertex is not a vertex ring");
    auto& fr = by_region[reg[f]];
    fr.region = reg[f];
    fr.vertex_walks.push_back(v);
  }
  std::vector<ExpansionFace> out;
  for (auto& [r, f] : by_region) out.push_back(std::move(f));
  return out;
}

// Expand the listed faces (regions) of J into embedded graphs carrying their
// natural rings.  Supported: regions that are open disks or genus-0 regions
// with two boundary walks (cylinder); anything else raises an error.
inline std::vector<EmbeddedGraph> face_expansion(
    const EmbeddedGraph& G, const SubgraphSpec& J,
    const std::vector<ExpansionFace>& S) {
  std::set<int> jedges(J.edges.begin(), J.edges.end());
  std::vector<int> reg = detail::region_of_faces(G, jedges);
  // Validate property (1): every J edge borders some selected region.
  {
    std::set<int> covered;
    for (const auto& f : S)
      for (const auto& w : f.walks)
        for (int sig : w) covered.insert(dart_edge(signal_dart(sig)));
    for (int e : J.edges)
      if (!covered.count(e))
        throw GraphError("subgraph is not the union of the selected face boundaries");
  }
  std::vector<EmbeddedGraph> out;
  for (const auto& face : S) {
    std::set<int> D;  // G-faces of this region
    for (int f = 0; f < (int)G.faces.size(); f++)
      if (reg[f] == face.region) D.insert(f);
    // Interior vertices and edges: drawn strictly inside the region.
    std::set<int> jverts;
    for (int e : J.edges) {
      jverts.insert(G.edges[e].u);
      jverts.insert(G.edges[e].v);
    }
    for (int v : J.isolated_vertices) jverts.insert(v);
    std::set<int> intE, intV;
    for (int e = 0; e < G.m(); e++) {
      if (jedges.count(e)) continue;
      auto [f1, f2] = edge_faces(G, e);
      if (D.count(f1) && D.count(f2)) intE.insert(e);
    }
    for (int f : D)
      for (int v : G.faces[f].vertices)
        if (!jverts.count(v)) intV.insert(v);

    EmbeddedGraph P;
    long long maxv = G.vid.back();
    long long maxe = 0;
    for (const auto& e : G.edges) maxe = std::max(maxe, e.id);
    long long next_vid = maxv + 1, next_eid = maxe + 1;
    // Walk-visit copies: each occurrence of a J-vertex on a walk of this
    // region becomes its own copy.  copy key: (walk idx, position).
    struct Copy {
      long long id;
      int orig;
      std::vector<int> arc;  // non-J darts attached to this copy, clockwise
      int in_dart, out_dart; // J-signals around the visit
      int side;              // side parity at the visit (+1/-1)
    };
    std::vector<std::vector<Copy>> copies(face.walks.size());
    std::map<int, std::vector<std::pair<int, int>>> visits;  // vertex -> keys
    for (size_t wi = 0; wi < face.walks.size(); wi++) {
      const auto& w = face.walks[wi];
      int L = (int)w.size();
      for (int p = 0; p < L; p++) {
        int sig_in = w[(p + L - 1) % L];  // arrives at this vertex
        int sig_out = w[p];               // leaves it
        int v = G.dart_from(signal_dart(sig_out));
        Copy c;
        c.orig = v;
        c.in_dart = signal_dart(sig_in);
        c.out_dart = signal_dart(sig_out);
        // Arrival side at v after traversing in_dart's edge:
        int s_arr = signal_side(sig_in) * G.edge_sign(c.in_dart);
        c.side = s_arr;
        // Non-J darts between the arrival dart (opposite of in_dart) and
        // the out dart, in traversal direction.
        int a = dart_opposite(c.in_dart);
        const auto& rv = G.rot[v];
        int k = (int)rv.size();
        int pa = -1;
        for (int q = 0; q < k; q++)
          if (rv[q] == a) pa = q;
        for (int step = 1; step < k; step++) {
          int d = s_arr == +1 ? rv[(pa + step) % k]
                              : rv[(pa + k - (step % k)) % k];
          if (d == c.out_dart) break;
          if (jedges.count(dart_edge(d)))
            throw GraphError("out of supported scope: branching boundary walk");
          c.arc.push_back(d);
        }
        c.id = 0;
        copies[wi].push_back(c);
        visits[v].push_back({(int)wi, p});
      }
    }
    // Assign ids: first visit of a vertex keeps the original id.
    std::map<std::pair<int, int>, long long> copy_id;
    for (auto& [v, ks] : visits)
      for (size_t q = 0; q < ks.size(); q++)
        copy_id[ks[q]] = q == 0 ? G.vid[v] : next_vid++;
    for (size_t wi = 0; wi < copies.size(); wi++)
      for (size_t p = 0; p < copies[wi].size(); p++)
        copies[wi][p].id = copy_id.at({(int)wi, (int)p});

    for (int v : intV) P.vid.push_back(G.vid[v]);
    for (int v : face.vertex_walks) P.vid.push_back(G.vid[v]);
    for (auto& [k, id] : copy_id) P.vid.push_back(id);
    std::sort(P.vid.begin(), P.vid.end());
    std::map<long long, int> pidx;
    for (int i = 0; i < P.n(); i++) pidx[P.vid[i]] = i;

    std::map<int, int> pe_of;  // interior G edge -> new edge idx
    auto addEdge = [&](long long id, long long a, long long b, int sg) {
      EdgeRec ne;
      ne.id = id;
      ne.u = pidx.at(a);
      ne.v = pidx.at(b);
      ne.sign = sg;
      if (P.vid[ne.u] > P.vid[ne.v]) std::swap(ne.u, ne.v);
      P.edges.push_back(ne);
      return (int)P.edges.size() - 1;
    };
    for (int e : intE)
      pe_of[e] = addEdge(G.edges[e].id, G.vid[G.edges[e].u],
                         G.vid[G.edges[e].v], G.edges[e].sign);
    // Boundary edge copies along the walks.
    std::vector<std::vector<int>> wedge(face.walks.size());
    std::map<std::pair<long long, long long>, bool> have;
    for (size_t wi = 0; wi < face.walks.size(); wi++) {
      int L = (int)face.walks[wi].size();
      for (int p = 0; p < L; p++) {
        long long a = copies[wi][p].id;
        long long b = copies[wi][(p + 1) % L].id;
        long long id;
        int e = dart_edge(copies[wi][p].out_dart);
        auto key = std::minmax(a, b);
        if (a == G.vid[G.edges[e].u] && b == G.vid[G.edges[e].v] && !have[key])
          id = G.edges[e].id;
        else if (b == G.vid[G.edges[e].u] && a == G.vid[G.edges[e].v] && !have[key])
          id = G.edges[e].id;
        else
          id = next_eid++;
        have[key] = true;
        wedge[wi].push_back(addEdge(id, a, b, +1));
      }
    }
    // Each non-J dart inside the region attaches to a unique copy or an
    // interior vertex.
    std::map<int, std::pair<long long, int>> dart_home;  // dart -> (vid, pos)
    // Rotations.
    P.rot.assign(P.n(), {});
    P.precoloring.assign(P.n(), -1);
    auto pdart = [&](int pe, long long atv) {
      return dart_make(pe, P.vid[P.edges[pe].u] == atv ? 0 : 1);
    };
    // interior vertices: full rotation translated
    for (int v : intV) {
      int pv = pidx.at(G.vid[v]);
      for (int d : G.rot[v]) {
        int e = dart_edge(d);
        auto it = pe_of.find(e);
        if (it == pe_of.end())
          throw GraphError("out of supported scope: interior vertex on region boundary");
        P.rot[pv].push_back(pdart(it->second, G.vid[v]));
      }
    }
    // copies: the kept darts at a visit are, in clockwise order, the
    // arrival dart (copy of the in-edge), the arc darts, and the out-edge
    // dart; reversed when the visit is traversed on side -1.
    for (size_t wi = 0; wi < face.walks.size(); wi++) {
      int L = (int)copies[wi].size();
      for (int p = 0; p < L; p++) {
        const Copy& c = copies[wi][p];
        int pv = pidx.at(c.id);
        int out_e = wedge[wi][p];
        int in_e = wedge[wi][(p + L - 1) % L];
        std::vector<int> seq;
        seq.push_back(pdart(in_e, c.id));
        for (int d : c.arc) {
          auto it = pe_of.find(dart_edge(d));
          if (it == pe_of.end())
            throw GraphError("out of supported scope: edge leaves the region");
          seq.push_back(pdart(it->second, c.id));
        }
        seq.push_back(pdart(out_e, c.id));
        if (c.side == -1) std::reverse(seq.begin(), seq.end());
        P.rot[pv] = seq;
      }
    }
    // Isolated vertex-ring walks: the vertex must have no edges drawn in
    // the region (hole-drilling around populated vertex rings is out of
    // the supported scope).
    for (int v : face.vertex_walks)
      for (auto [w, e] : G.adj[v]) {
        (void)w;
        auto [f1, f2] = edge_faces(G, e);
        if (D.count(f1) || D.count(f2))
          throw GraphError("out of supported scope: vertex ring with edges in face");
      }
    // natural rings
    for (size_t wi = 0; wi < face.walks.size(); wi++) {
      RingSpec r;
      r.kind = RingSpec::facial;
      for (const Copy& c : copies[wi]) r.cycle.push_back(pidx.at(c.id));
      P.rings.push_back(r);
    }
    for (int v : face.vertex_walks) {
      RingSpec r;
      r.kind = RingSpec::vertex;
      r.weak = false;
      for (size_t ri = 0; ri < G.rings.size(); ri++)
        if (G.rings[ri].kind == RingSpec::vertex && G.rings[ri].cycle[0] == v)
          r.weak = G.rings[ri].weak;
      r.cycle = {pidx.at(G.vid[v])};
      P.rings.push_back(r);
    }
    // Ring vertex indices reference P.vid positions, which sort_edges_by_id
    // does not disturb.
    P.sort_edges_by_id();
    P.finalize();
    out.push_back(std::move(P));
  }
  return out;
}

}  // namespace girth5
