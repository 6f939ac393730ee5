// Exhaustive desk-scale enumeration of ring-critical embedded graphs in the
// disk and the cylinder, with isomorphism rejection via canonical keys.
// Generation is abstract-first (adjacency growth with sound pruning), then
// criticality is certified by the coloring engine, and finally all genus-0
// embeddings with facial rings are realized and filtered by the requested
// contractibility constraints.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "girth5/canonical.hpp"
#include "girth5/coloring.hpp"
#include "girth5/properties.hpp"

namespace girth5 {

struct SearchSpec {
  enum Topology { disk, cylinder } topology = disk;
  std::vector<int> ring_lengths;  // one entry (disk) or two (cylinder)
  int max_internal = 2;
  int girth_floor = 5;       // applies to contractible cycles
  bool induced_ring = true;  // forbid chords within a ring
  bool punctured = false;    // cylinder with one ring: the second cuff is
                             // ringless; every short cycle must be
                             // non-contractible around it
};

struct EnumResult {
  std::vector<EmbeddedGraph> graphs;
  long long abstract_candidates = 0;
  long long critical_candidates = 0;
};

namespace detail {

struct AbsGraph {
  int n = 0;                    // current vertex count
  int nring = 0;                // ring vertices are 0..nring-1
  std::vector<int> ring_len;    // ring i occupies consecutive indices
  std::vector<uint32_t> adj;    // adjacency bitmask rows
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int a, int b) const { return adj[a] >> b & 1; }
  void add_edge(int a, int b) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  void pop_edge() {
    auto [a, b] = edges.back();
    edges.pop_back();
    adj[a] &= ~(1u << b);
    adj[b] &= ~(1u << a);
  }
  int deg(int v) const { return __builtin_popcount(adj[v]); }
  int ring_of(int v) const {
    int s = 0;
    for (size_t i = 0; i < ring_len.size(); i++) {
      if (v < s + ring_len[i]) return (int)i;
      s += ring_len[i];
    }
    return -1;
  }
  uint32_t ring_mask(int i) const {
    int s = 0;
    for (int j = 0; j < i; j++) s += ring_len[j];
    uint32_t m = 0;
    for (int v = s; v < s + ring_len[i]; v++) m |= 1u << v;
    return m;
  }
};

// Every component must contain a ring vertex: a ring-free component would
// have to be planar of girth >= 3 yet non-3-colorable to obstruct anything,
// which cannot appear in a critical graph at these scales.
inline bool components_touch_rings(const AbsGraph& A) {
  uint32_t all = A.n >= 32 ? ~0u : (1u << A.n) - 1;
  uint32_t seen = 0;
  for (int s = 0; s < A.nring; s++) {
    if (seen >> s & 1) continue;
    uint32_t comp = 1u << s;
    std::vector<int> st = {s};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      uint32_t nb = A.adj[v] & ~comp;
      while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        comp |= 1u << w;
        st.push_back(w);
      }
    }
    seen |= comp;
  }
  return seen == all;
}

inline int abs_dist(const AbsGraph& A, int a, int b) {
  if (a == b) return 0;
  std::vector<int> dist(A.n, -1);
  std::vector<int> q = {a};
  dist[a] = 0;
  for (size_t h = 0; h < q.size(); h++) {
    int v = q[h];
    uint32_t nb = A.adj[v];
    while (nb) {
      int w = __builtin_ctz(nb);
      nb &= nb - 1;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        if (w == b) return dist[b];
        q.push_back(w);
      }
    }
  }
  return -1;
}

// All simple cycles up to maxlen, one orientation/rotation each.
inline std::vector<std::vector<int>> abs_cycles(const AbsGraph& A, int maxlen) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  uint32_t used = 0;
  std::function<void(int, int)> go = [&](int s, int v) {
    uint32_t nb = A.adj[v];
    while (nb) {
      int w = __builtin_ctz(nb);
      nb &= nb - 1;
      if (w == s) {
        if ((int)path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (w < s || (used >> w & 1) || (int)path.size() >= maxlen) continue;
      used |= 1u << w;
      path.push_back(w);
      go(s, w);
      path.pop_back();
      used &= ~(1u << w);
    }
  };
  for (int s = 0; s < A.n; s++) {
    used = 1u << s;
    path = {s};
    go(s, s);
  }
  return out;
}

inline bool cycle_is_ring(const AbsGraph& A, const std::vector<int>& C) {
  int s = 0;
  for (int rl : A.ring_len) {
    if ((int)C.size() == rl) {
      bool all = true;
      for (int v : C)
        if (v < s || v >= s + rl) all = false;
      if (all) return true;
    }
    s += rl;
  }
  return false;
}

// Planarity of the abstract graph plus one apex per ring; this is exactly
// embeddability in the disk / cylinder with the rings facial.
inline bool apex_planar(const AbsGraph& A) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BG g(A.n + A.ring_len.size());
  for (auto [a, b] : A.edges) boost::add_edge(a, b, g);
  int s = 0;
  for (size_t i = 0; i < A.ring_len.size(); i++) {
    for (int v = s; v < s + A.ring_len[i]; v++)
      boost::add_edge(A.n + (int)i, v, g);
    s += A.ring_len[i];
  }
  return boost::boyer_myrvold_planarity_test(g);
}

inline bool abs_reaches(const AbsGraph& A, uint32_t from, uint32_t to,
                        uint32_t avoid) {
  uint32_t seen = from & ~avoid;
  if (!seen) return false;
  if (seen & to) return true;
  std::vector<int> st;
  for (uint32_t m = seen; m;) {
    st.push_back(__builtin_ctz(m));
    m &= m - 1;
  }
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    uint32_t nb = A.adj[v] & ~avoid & ~seen;
    while (nb) {
      int w = __builtin_ctz(nb);
      nb &= nb - 1;
      if (to >> w & 1) return true;
      seen |= 1u << w;
      st.push_back(w);
    }
  }
  return false;
}

// Sound and monotone cylinder prune.  A short cycle that has to be
// non-contractible must separate the two cuffs, so in the two-ring case no
// ring-to-ring path may avoid it, and in the punctured case no two
// vertex-disjoint short cycles may both be reachable from the ring while
// avoiding each other (they have to be nested around the puncture).
inline bool short_cycles_separating(const AbsGraph& A, int maxshort,
                                    bool punctured) {
  auto cycles = abs_cycles(A, maxshort);
  std::vector<uint32_t> shorts;
  for (auto& C : cycles) {
    if (cycle_is_ring(A, C)) continue;
    uint32_t m = 0;
    for (int v : C) m |= 1u << v;
    shorts.push_back(m);
  }
  uint32_t ring1 = A.ring_mask(0);
  if (!punctured) {
    uint32_t ring2 = A.ring_mask(1);
    for (uint32_t cm : shorts)
      if (abs_reaches(A, ring1 & ~cm, ring2 & ~cm, cm)) return false;
    return true;
  }
  for (size_t i = 0; i < shorts.size(); i++)
    for (size_t j = i + 1; j < shorts.size(); j++) {
      uint32_t ci = shorts[i], cj = shorts[j];
      if (ci & cj) continue;
      if ((ci | cj) & ring1) continue;
      if (abs_reaches(A, ring1 & ~cj, ci, cj) &&
          abs_reaches(A, ring1 & ~ci, cj, ci))
        return false;
    }
  return true;
}

// --------------------------------------------------------------- criticality

// 3-colorability with fixed colors, directly on the bitmask graph.
inline bool abs_colorable(const AbsGraph& A, const std::vector<int>& fixed) {
  std::vector<int> col(A.n, -1);
  for (int v = 0; v < A.n && v < (int)fixed.size(); v++) {
    if (fixed[v] < 0) continue;
    uint32_t nb = A.adj[v];
    while (nb) {
      int w = __builtin_ctz(nb);
      nb &= nb - 1;
      if (w < (int)fixed.size() && fixed[w] == fixed[v]) return false;
    }
    col[v] = fixed[v];
  }
  std::function<bool(int)> go = [&](int v) -> bool {
    while (v < A.n && col[v] >= 0) v++;
    if (v == A.n) return true;
    for (int c = 0; c < 3; c++) {
      bool ok = true;
      uint32_t nb = A.adj[v];
      while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        if (col[w] == c) ok = false;
      }
      if (!ok) continue;
      col[v] = c;
      if (go(v + 1)) return true;
      col[v] = -1;
    }
    return false;
  };
  return go(0);
}

// Precolorings of the ring vertices that are proper along the rings, up to
// global color permutation (colorability and extendability are invariant
// under recoloring, so witnesses survive the quotient): colors appear in
// increasing order of first use.
inline std::vector<std::vector<int>> abs_precolorings(const AbsGraph& A) {
  std::vector<std::vector<int>> out;
  std::vector<int> phi(A.nring, -1);
  std::function<void(int, int)> go = [&](int v, int used) {
    if (v == A.nring) {
      out.push_back(phi);
      return;
    }
    int r = A.ring_of(v);
    int s = 0;
    for (int j = 0; j < r; j++) s += A.ring_len[j];
    int rl = A.ring_len[r];
    for (int c = 0; c < 3 && c <= used; c++) {
      if (v > s && c == phi[v - 1]) continue;
      if (v == s + rl - 1 && rl > 1 && c == phi[s]) continue;
      phi[v] = c;
      go(v + 1, std::max(used, c + 1));
      phi[v] = -1;
    }
  };
  go(0, 0);
  return out;
}

// Edge indices not lying on a ring cycle.
inline std::vector<char> abs_ring_edge_flags(const AbsGraph& A) {
  std::vector<char> flag(A.edges.size(), 0);
  for (size_t i = 0; i < A.edges.size(); i++) {
    auto [a, b] = A.edges[i];
    if (a < A.nring && b < A.nring && A.ring_of(a) == A.ring_of(b)) {
      int r = A.ring_of(a);
      int s = 0;
      for (int j = 0; j < r; j++) s += A.ring_len[j];
      int rl = A.ring_len[r];
      int d = ((b - s) - (a - s) + rl) % rl;
      if (d == 1 || d == rl - 1) flag[i] = 1;
    }
  }
  return flag;
}

// G is ring-critical iff it is more than the union of its rings and for
// every non-ring edge e some precoloring extends to G - e but not to G.
inline bool abs_ring_critical(const AbsGraph& A) {
  std::vector<char> ring_edge = abs_ring_edge_flags(A);
  bool any_nonring = false;
  for (char f : ring_edge)
    if (!f) any_nonring = true;
  if (!any_nonring) return false;
  auto phis = abs_precolorings(A);
  std::vector<const std::vector<int>*> failing;
  for (const auto& phi : phis)
    if (!abs_colorable(A, phi)) failing.push_back(&phi);
  if (failing.empty()) return false;
  AbsGraph B = A;  // single mutable copy; colorability only reads adj
  for (size_t ei = 0; ei < A.edges.size(); ei++) {
    if (ring_edge[ei]) continue;
    auto [a, b] = A.edges[ei];
    B.adj[a] &= ~(1u << b);
    B.adj[b] &= ~(1u << a);
    bool witness = false;
    for (const auto* phi : failing)
      if (abs_colorable(B, *phi)) {
        witness = true;
        break;
      }
    B.adj[a] |= 1u << b;
    B.adj[b] |= 1u << a;
    if (!witness) return false;
  }
  return true;
}

// ---------------------------------------------------------------- embeddings

inline EmbeddedGraph abs_to_embedded(const AbsGraph& A,
                                     const std::vector<std::vector<int>>& rot) {
  std::vector<long long> vids;
  for (int v = 0; v < A.n; v++) vids.push_back(v + 1);
  std::vector<std::pair<long long, long long>> el;
  for (auto [a, b] : A.edges) el.push_back({a + 1, b + 1});
  std::map<long long, std::vector<long long>> rots;
  for (int v = 0; v < A.n; v++) {
    std::vector<long long> r;
    for (int w : rot[v]) r.push_back(w + 1);
    rots[v + 1] = r;
  }
  EmbeddedGraph G = build_graph(vids, el, rots);
  int s = 0;
  for (int rl : A.ring_len) {
    RingSpec r;
    r.kind = RingSpec::facial;
    for (int v = s; v < s + rl; v++) r.cycle.push_back(v);
    G.rings.push_back(r);
    s += rl;
  }
  G.finalize();  // throws if a ring is not facial
  return G;
}

// Genus-0-with-facial-rings test on raw rotation arrays (all edges
// positive): trace face orbits with next(u->w) = (w -> successor of u in
// rot[w]), check 2c - n + m - f == 0 and that each ring cycle is a face walk
// in one of the two directions.  Avoids building an EmbeddedGraph (and its
// non-facial-ring exception) for the overwhelming share of rotation systems.
inline bool rot_is_planar_ring_facial(const AbsGraph& A,
                                      const std::vector<std::vector<int>>& rot,
                                      int ncomp) {
  int m = (int)A.edges.size();
  // dart 2i: edges[i].first -> second; dart 2i+1: reverse
  static thread_local std::vector<int> dart_id;  // n*n table
  dart_id.assign(A.n * A.n, -1);
  for (int i = 0; i < m; i++) {
    auto [a, b] = A.edges[i];
    dart_id[a * A.n + b] = 2 * i;
    dart_id[b * A.n + a] = 2 * i + 1;
  }
  static thread_local std::vector<int> succ;  // face-successor per dart
  succ.assign(2 * m, -1);
  for (int w = 0; w < A.n; w++) {
    int deg = (int)rot[w].size();
    for (int p = 0; p < deg; p++) {
      int u = rot[w][p], x = rot[w][(p + 1) % deg];
      succ[dart_id[u * A.n + w]] = dart_id[w * A.n + x];
    }
  }
  static thread_local std::vector<int> face_of;
  face_of.assign(2 * m, -1);
  static thread_local std::vector<int> face_len;
  face_len.clear();
  int f = 0;
  for (int d0 = 0; d0 < 2 * m; d0++) {
    if (face_of[d0] != -1) continue;
    int len = 0, d = d0;
    do {
      face_of[d] = f;
      len++;
      d = succ[d];
    } while (d != d0);
    face_len.push_back(len);
    f++;
  }
  if (2 * ncomp - A.n + m - f != 0) return false;
  int s = 0;
  for (int rl : A.ring_len) {
    bool ok = false;
    for (int dir = 0; dir < 2 && !ok; dir++) {
      int a = dir ? s + 1 : s, b = dir ? s : s + 1;
      int d = dart_id[a * A.n + b];
      if (face_of[d] < 0 || face_len[face_of[d]] != rl) continue;
      ok = true;
      for (int i = 0; i < rl && ok; i++) {
        int u = s + (dir ? (i + 1) % rl : i), w = s + (dir ? i : (i + 1) % rl);
        if (face_of[dart_id[u * A.n + w]] != face_of[d]) ok = false;
      }
    }
    if (!ok) return false;
    s += rl;
  }
  return true;
}

// Visit every embedding with Euler genus 0 and all rings facial; fn returns
// true to stop the search.
inline void for_each_genus0_embedding(
    const AbsGraph& A, const std::function<bool(EmbeddedGraph&)>& fn) {
  std::vector<std::vector<int>> nbrs(A.n);
  for (int v = 0; v < A.n; v++) {
    uint32_t nb = A.adj[v];
    while (nb) {
      int w = __builtin_ctz(nb);
      nb &= nb - 1;
      nbrs[v].push_back(w);
    }
  }
  int ncomp = 0;
  {
    std::vector<char> vis(A.n, 0);
    for (int v = 0; v < A.n; v++) {
      if (vis[v]) continue;
      ncomp++;
      std::vector<int> st{v};
      vis[v] = 1;
      while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int w : nbrs[x])
          if (!vis[w]) vis[w] = 1, st.push_back(w);
      }
    }
  }
  std::vector<std::vector<int>> rot(A.n);
  bool stop = false;
  // Ring faces are built in by construction: at ring vertex r_i the
  // successor of r_{i-1} in the rotation is r_{i+1} (or the mirror pair,
  // per-ring direction).  Ring 0's direction is fixed, which also kills the
  // global reflection.
  std::vector<int> ring_start(A.ring_len.size(), 0);
  for (size_t r = 1; r < A.ring_len.size(); r++)
    ring_start[r] = ring_start[r - 1] + A.ring_len[r - 1];
  std::vector<int> ring_dir(A.ring_len.size(), 0);
  std::function<void(int)> place = [&](int v) {
    if (stop) return;
    if (v == A.n) {
      if (!rot_is_planar_ring_facial(A, rot, ncomp)) return;
      EmbeddedGraph G = abs_to_embedded(A, rot);
      if (fn(G)) stop = true;
      return;
    }
    if (v < A.nring) {
      int r = A.ring_of(v), rl = A.ring_len[r], s = ring_start[r];
      int i = v - s;
      int prev = s + (i - 1 + rl) % rl, nxt = s + (i + 1) % rl;
      int dlo = 0, dhi = 1;  // the direction is chosen at the ring's first
      if (v == s) {          // vertex and reused by the rest of the ring
        if (r > 0) dhi = 2;
      } else {
        dlo = ring_dir[r];
        dhi = dlo + 1;
      }
      for (int dir = dlo; dir < dhi; dir++) {
        if (v == s) ring_dir[r] = dir;
        std::vector<int> head = {dir ? nxt : prev, dir ? prev : nxt};
        std::vector<int> rest;
        for (int w : nbrs[v])
          if (w != prev && w != nxt) rest.push_back(w);
        std::sort(rest.begin(), rest.end());
        do {
          rot[v] = head;
          rot[v].insert(rot[v].end(), rest.begin(), rest.end());
          place(v + 1);
          if (stop) return;
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
      return;
    }
    std::vector<int> perm = nbrs[v];
    std::sort(perm.begin(), perm.end());
    do {
      rot[v] = perm;
      place(v + 1);
      if (stop) return;
    } while (!perm.empty() &&
             std::next_permutation(perm.begin() + 1, perm.end()));
  };
  place(0);
}

// All such embeddings, one per canonical key.
inline std::vector<EmbeddedGraph> genus0_embeddings(const AbsGraph& A) {
  std::vector<EmbeddedGraph> out;
  std::set<std::string> seen;
  for_each_genus0_embedding(A, [&](EmbeddedGraph& G) {
    std::string key = canonical_form(G).key;
    if (seen.insert(key).second) out.push_back(G);
    return false;
  });
  return out;
}

// Structural pruning for induced-ring girth-5 disk searches, following the
// disk characterization: the internal part of a critical graph is a tree
// with at most |R|-8 vertices, or (|R| >= 10) connected with at most |R|-5
// vertices and exactly one cycle, of length 5.  The cyclomatic number of
// the internal part only grows during generation, so partial graphs whose
// internal part has two independent cycles, or one cycle of length != 5,
// are dead.  Only valid for |R| <= 11 (at 12 a further shape appears).
inline bool disk_internal_part_ok(const AbsGraph& A, int l, bool final) {
  int k = A.n - A.nring;
  if (k == 0) return true;
  int m_int = 0;
  for (auto [a, b] : A.edges)
    if (a >= A.nring && b >= A.nring) m_int++;
  // components of the internal part
  int comps = 0;
  uint32_t intmask = 0;
  for (int v = A.nring; v < A.n; v++) intmask |= 1u << v;
  uint32_t left = intmask;
  while (left) {
    comps++;
    int s = __builtin_ctz(left);
    uint32_t comp = 1u << s;
    std::vector<int> st = {s};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      uint32_t nb = A.adj[v] & intmask & ~comp;
      while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        comp |= 1u << w;
        st.push_back(w);
      }
    }
    left &= ~comp;
  }
  int c = m_int - k + comps;
  if (c >= 2) return false;
  if (c == 1) {
    if (l < 10 || k > l - 5) return false;
    // peel leaves of the internal part; the remainder is the unique cycle
    std::vector<int> d(A.n, 0);
    for (auto [a, b] : A.edges)
      if (a >= A.nring && b >= A.nring) {
        d[a]++;
        d[b]++;
      }
    uint32_t alive = intmask;
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = A.nring; v < A.n; v++) {
        if (!(alive >> v & 1) || d[v] != 1) continue;
        alive &= ~(1u << v);
        uint32_t nb = A.adj[v] & alive;
        while (nb) {
          int w = __builtin_ctz(nb);
          nb &= nb - 1;
          d[w]--;
        }
        d[v] = 0;
        changed = true;
      }
    }
    if (__builtin_popcount(alive) != 5) return false;
  }
  if (final) {
    if (comps > 1) return false;
    if (c == 0 && (l < 9 || k > l - 8)) return false;
  }
  return true;
}

// The symmetry group of the labeled rings: dihedral action on each ring
// cycle, plus the swap of two rings of equal length.  Each element is a
// permutation of 0..nring-1.
inline std::vector<std::vector<int>> ring_symmetries(
    const std::vector<int>& ring_len) {
  int nring = 0;
  for (int rl : ring_len) nring += rl;
  std::vector<int> start(ring_len.size(), 0);
  for (size_t i = 1; i < ring_len.size(); i++)
    start[i] = start[i - 1] + ring_len[i - 1];
  std::vector<std::vector<int>> out;
  std::vector<std::vector<std::vector<int>>> per_ring;
  for (size_t i = 0; i < ring_len.size(); i++) {
    std::vector<std::vector<int>> ds;
    int k = ring_len[i];
    for (int dir = 0; dir < 2; dir++)
      for (int s = 0; s < k; s++) {
        std::vector<int> p(k);
        for (int j = 0; j < k; j++)
          p[j] = ((s + (dir ? -j : j)) % k + k) % k;
        ds.push_back(p);
      }
    per_ring.push_back(ds);
  }
  bool swappable = ring_len.size() == 2 && ring_len[0] == ring_len[1];
  std::vector<size_t> idx(ring_len.size(), 0);
  std::function<void(size_t, bool)> emit = [&](size_t i, bool swapped) {
    if (i == ring_len.size()) {
      std::vector<int> p(nring);
      for (size_t r = 0; r < ring_len.size(); r++) {
        size_t tr = swapped ? 1 - r : r;
        for (int j = 0; j < ring_len[r]; j++)
          p[start[r] + j] = start[tr] + per_ring[r][idx[r]][j];
      }
      out.push_back(p);
      return;
    }
    for (idx[i] = 0; idx[i] < per_ring[i].size(); idx[i]++) emit(i + 1, swapped);
  };
  emit(0, false);
  if (swappable) emit(0, true);
  return out;
}

// Lex-minimality of an edge set among ring vertices under the ring group;
// also reports the stabilizer of the set.
inline bool cross_set_canonical(const std::vector<std::pair<int, int>>& set,
                                const std::vector<std::vector<int>>& syms,
                                std::vector<const std::vector<int>*>* stab) {
  std::vector<std::pair<int, int>> id = set;
  std::sort(id.begin(), id.end());
  if (stab) stab->clear();
  for (const auto& s : syms) {
    std::vector<std::pair<int, int>> img;
    for (auto [a, b] : set) img.push_back(std::minmax(s[a], s[b]));
    std::sort(img.begin(), img.end());
    if (img < id) return false;
    if (stab && img == id) stab->push_back(&s);
  }
  return true;
}

// Orderly rejection: accept only the minimal relabeling of the candidate
// under the cross-edge stabilizer combined with permutations of the
// internal vertices in which every internal vertex keeps at least one
// earlier neighbor (the invariant the generator maintains).
inline bool labeling_is_canonical(
    const AbsGraph& A, const std::vector<const std::vector<int>*>& stab) {
  int k = A.n - A.nring;
  std::vector<int> perm(k);
  std::vector<uint32_t> id_key, k2;
  auto key_of = [&](const std::vector<int>* sigma, const std::vector<int>& p,
                    std::vector<uint32_t>& rows) {
    rows.assign(A.n, 0);
    auto lbl = [&](int v) {
      if (v < A.nring) return sigma ? (*sigma)[v] : v;
      return A.nring + p[v - A.nring];
    };
    for (auto [a, b] : A.edges) {
      int x = lbl(a), y = lbl(b);
      rows[x] |= 1u << y;
      rows[y] |= 1u << x;
    }
    for (int v = A.nring; v < A.n; v++)
      if (!(rows[v] & ((1u << v) - 1))) return false;
    return true;
  };
  for (int i = 0; i < k; i++) perm[i] = i;
  key_of(nullptr, perm, id_key);
  for (const auto* sigma : stab) {
    std::sort(perm.begin(), perm.end());
    do {
      if (key_of(sigma, perm, k2) && k2 < id_key) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return true;
}

// Prefix-closed orderly rejection for cylinder searches.  The key of a
// labeled candidate is the sequence of lower-neighbor masks of the internal
// vertices (ring bits low, earlier-internal bits above them); the candidate
// is kept only when its key is lexicographically minimal over the cross-set
// stabilizer combined with ALL permutations of the internal vertices.
// Removing the last internal vertex of a minimal labeling leaves a minimal
// labeling, so a failed test soundly prunes the whole subtree.  (This needs
// the generator to allow internal vertices with no earlier neighbor, unlike
// labeling_is_canonical above.)
inline bool partial_canonical(
    const AbsGraph& A, const std::vector<const std::vector<int>*>& stab) {
  int k = A.n - A.nring;
  if (k == 0) return true;
  uint32_t low[28], intadj[28], ringm[28];
  for (int i = 0; i < k; i++) {
    int v = A.nring + i;
    low[i] = A.adj[v] & ((1u << v) - 1);
    intadj[i] = A.adj[v] >> A.nring;
  }
  int used[28], placed[28];
  for (const auto* sp : stab) {
    const std::vector<int>& s = *sp;
    for (int i = 0; i < k; i++) {
      uint32_t rm = A.adj[A.nring + i] & ((1u << A.nring) - 1);
      uint32_t im = 0;
      while (rm) {
        int r = __builtin_ctz(rm);
        rm &= rm - 1;
        im |= 1u << s[r];
      }
      ringm[i] = im;
      used[i] = 0;
    }
    // true iff some completion of positions p.. yields a strictly smaller key
    std::function<bool(int)> dfs = [&](int p) -> bool {
      if (p == k) return false;
      for (int i = 0; i < k; i++) {
        if (used[i]) continue;
        uint32_t m = ringm[i];
        for (int q = 0; q < p; q++)
          if (intadj[i] >> placed[q] & 1) m |= 1u << (A.nring + q);
        if (m > low[p]) continue;
        if (m < low[p]) return true;
        used[i] = 1;
        placed[p] = i;
        bool r = dfs(p + 1);
        used[i] = 0;
        if (r) return true;
      }
      return false;
    };
    if (dfs(0)) return false;
  }
  return true;
}

}  // namespace detail

inline EnumResult enumerate_critical(const SearchSpec& spec) {
  size_t want_rings =
      spec.topology == SearchSpec::disk || spec.punctured ? 1 : 2;
  if (spec.ring_lengths.size() != want_rings)
    throw GraphError("bad search specification");
  detail::AbsGraph base;
  base.ring_len = spec.ring_lengths;
  for (int rl : spec.ring_lengths) base.nring += rl;
  base.n = base.nring;
  int maxn = base.nring + spec.max_internal;
  if (maxn > 28) throw GraphError("budget exceeded");
  base.adj.assign(maxn, 0);
  {
    int s = 0;
    for (int rl : base.ring_len) {
      for (int i = 0; i < rl; i++) base.add_edge(s + i, s + (i + 1) % rl);
      s += rl;
    }
  }
  bool disk_like = spec.topology == SearchSpec::disk;
  int maxshort = spec.girth_floor - 1;
  int l0 = spec.ring_lengths[0];
  bool disk_char =
      disk_like && spec.girth_floor >= 5 && spec.induced_ring && l0 <= 11;
  int max_internal = spec.max_internal;
  if (disk_char) {
    int bound = l0 <= 8 ? 0 : (l0 == 9 ? 1 : l0 - 5);
    max_internal = std::min(max_internal, bound);
  }

  EnumResult res;
  std::set<std::string> seen;

  std::vector<std::pair<int, int>> rr;
  for (int a = 0; a < base.nring; a++)
    for (int b = a + 1; b < base.nring; b++) {
      if (base.has_edge(a, b)) continue;
      if (spec.induced_ring && base.ring_of(a) == base.ring_of(b)) continue;
      rr.push_back({a, b});
    }

  detail::AbsGraph A = base;

  auto short_ok = [&]() {
    if (disk_like) {
      for (const auto& C : detail::abs_cycles(A, maxshort))
        if (!detail::cycle_is_ring(A, C)) return false;
      return true;
    }
    return detail::short_cycles_separating(A, maxshort, spec.punctured);
  };

  // incremental short-cycle bookkeeping for cylinder searches: vertex masks
  // of all non-ring cycles of length <= maxshort in the current graph
  std::vector<uint32_t> cyc_masks;
  uint32_t ring1m = base.ring_mask(0);
  uint32_t ring2m = disk_like || spec.punctured ? 0 : base.ring_mask(1);
  auto fast_reaches = [&](uint32_t from, uint32_t to, uint32_t avoid) {
    uint32_t seen = from & ~avoid;
    if (!seen) return false;
    uint32_t frontier = seen;
    while (frontier) {
      if (seen & to) return true;
      uint32_t next = 0;
      uint32_t f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        next |= A.adj[v];
      }
      next &= ~avoid & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen & to) != 0;
  };
  // a single new cycle: does it already fail the separation requirement?
  auto fast_sep_fails = [&](uint32_t cm) {
    if (!spec.punctured) return fast_reaches(ring1m & ~cm, ring2m & ~cm, cm);
    for (uint32_t cj : cyc_masks) {
      if (cj & cm) continue;
      if ((cj | cm) & ring1m) continue;
      if (fast_reaches(ring1m & ~cj, cm, cj) &&
          fast_reaches(ring1m & ~cm, cj, cm))
        return true;
    }
    return false;
  };
  auto separation_ok = [&]() {
    if (!spec.punctured) {
      for (uint32_t cm : cyc_masks)
        if (fast_reaches(ring1m & ~cm, ring2m & ~cm, cm)) return false;
      return true;
    }
    for (size_t i = 0; i < cyc_masks.size(); i++)
      for (size_t j = i + 1; j < cyc_masks.size(); j++) {
        uint32_t ci = cyc_masks[i], cj = cyc_masks[j];
        if (ci & cj) continue;
        if ((ci | cj) & ring1m) continue;
        if (fast_reaches(ring1m & ~cj, ci, cj) &&
            fast_reaches(ring1m & ~ci, cj, ci))
          return false;
      }
    return true;
  };

  std::vector<std::vector<int>> syms = detail::ring_symmetries(base.ring_len);
  std::vector<const std::vector<int>*> stab;

  // does this embedding satisfy the requested contractibility constraints?
  auto embedding_passes = [&](EmbeddedGraph& G) {
    if (spec.topology == SearchSpec::cylinder && !spec.punctured) {
      for (const auto& C : enumerate_cycles(G, maxshort))
        if (cycle_class(G, C).topology == CycleClass::contractible)
          return false;
      return true;
    }
    if (spec.punctured) {
      // some internal face must sit inside every short cycle's disk sides
      for (int fi = 0; fi < (int)G.faces.size(); fi++) {
        if (G.faces[fi].is_ring_face) continue;
        bool all = true;
        for (const auto& C : enumerate_cycles(G, maxshort)) {
          CycleClass cc = cycle_class(G, C);
          if (cc.topology != CycleClass::contractible) continue;
          for (size_t i = 0; i < cc.sides.size(); i++)
            if (cc.side_genus[i] == 0 && cc.side_rings[i].empty() &&
                !cc.sides[i].count(fi))
              all = false;
        }
        if (all) return true;
      }
      return false;
    }
    return true;
  };

  std::function<void()> consider = [&]() {
    res.abstract_candidates++;
    for (int v = base.nring; v < A.n; v++)
      if (A.deg(v) < 3) return;
    if (!detail::components_touch_rings(A)) return;
    if (spec.punctured && 3 * (int)A.edges.size() > 5 * A.n - l0 - 3) return;
    if (disk_char && !detail::disk_internal_part_ok(A, l0, true)) return;
    if (!detail::apex_planar(A)) return;
    if (!detail::abs_ring_critical(A)) return;
    // disk mode rejects label duplicates here; the cylinder searches do it
    // level by level (partial_canonical) and arrive deduplicated
    if (disk_like && !detail::labeling_is_canonical(A, stab)) return;
    res.critical_candidates++;
    // one representative embedding satisfying the constraints suffices:
    // candidates surviving the orderly rejection are pairwise
    // non-isomorphic as abstract ring-labeled graphs
    std::optional<EmbeddedGraph> rep;
    detail::for_each_genus0_embedding(A, [&](EmbeddedGraph& G) {
      if (!embedding_passes(G)) return false;
      rep = std::move(G);
      return true;
    });
    if (!rep) return;
    std::string key = canonical_form(*rep).key;
    if (seen.insert(key).second) res.graphs.push_back(std::move(*rep));
  };

  std::function<void(int)> grow = [&](int remaining) {
    consider();
    if (remaining == 0) return;
    int v = A.n;
    A.n++;
    A.adj[v] = 0;
    // all-pairs distances in the graph before v, for girth pruning
    std::vector<std::vector<int>> dist;
    if (disk_like) {
      dist.assign(v, std::vector<int>(v, -1));
      for (int s = 0; s < v; s++) {
        dist[s][s] = 0;
        std::vector<int> q = {s};
        for (size_t h = 0; h < q.size(); h++) {
          uint32_t nb = A.adj[q[h]];
          while (nb) {
            int w = __builtin_ctz(nb);
            nb &= nb - 1;
            if (dist[s][w] < 0) {
              dist[s][w] = dist[s][q[h]] + 1;
              q.push_back(w);
            }
          }
        }
      }
    }
    std::vector<int> chosen;
    std::function<void(int)> pick = [&](int start) {
      if (!chosen.empty() || !disk_like) {
        bool feasible = true;
        for (int u = base.nring; u < A.n; u++)
          if (A.deg(u) + (remaining - 1) < 3) feasible = false;
        if (feasible && disk_char) {
          feasible = detail::disk_internal_part_ok(A, l0, false);
          if (feasible) {
            // each later vertex repairs at most one unit of degree deficit
            // while the internal part stays a tree, plus one extra when it
            // closes the single allowed 5-cycle
            int deficit = 0, m_int = 0;
            for (int u = base.nring; u < A.n; u++)
              deficit += std::max(0, 3 - A.deg(u));
            for (auto [a, b] : A.edges)
              if (a >= base.nring && b >= base.nring) m_int++;
            int allow = remaining - 1;
            if (l0 >= 10 && m_int < A.n - base.nring) allow++;
            if (deficit > allow) feasible = false;
          }
        }
        // Euler bound: a connected punctured-cylinder candidate has every
        // 2-cell face of length >= 5 except the ring face and at most one
        // short puncture face, so 3m <= 5n - |R| - 3 in the final graph.
        // Adding r' more vertices adds >= max(D, ceil((D+3r')/2)) edges,
        // where D is the current internal degree deficit.
        if (feasible && spec.punctured) {
          int D = 0;
          for (int u = base.nring; u < A.n; u++)
            D += std::max(0, 3 - (int)A.deg(u));
          int m = (int)A.edges.size(), B = l0 + 3;
          feasible = false;
          for (int rp = 0; rp <= remaining - 1 && !feasible; rp++) {
            int add = std::max(D, (D + 3 * rp + 1) / 2);
            if (3 * (m + add) <= 5 * (A.n + rp) - B) feasible = true;
          }
        }
        // old cycles may lose their separation through paths via v
        if (feasible && !disk_like && chosen.size() >= 2)
          feasible = separation_ok();
        if (feasible && !disk_like)
          feasible = detail::partial_canonical(A, stab);
        if (feasible) grow(remaining - 1);
      }
      for (int w = start; w < v; w++) {
        if (spec.punctured &&
            3 * ((int)A.edges.size() + 1) >
                5 * (A.n + remaining - 1) - l0 - 3)
          break;
        size_t pushed = 0;
        bool ok = true;
        if (disk_like) {
          for (int x : chosen) {
            int d = dist[w][x];
            if (d >= 0 && d + 2 < spec.girth_floor) ok = false;
          }
        } else {
          // short cycles closed by the edge vw pair w with an earlier
          // neighbor x of v: an edge wx (length 3) or a common neighbor
          // (length 4); a cycle that fails to separate now never recovers,
          // killing every superset of this neighbor choice
          for (int x : chosen) {
            if (maxshort >= 3 && A.has_edge(w, x)) {
              // v is internal, so this triangle is never a ring
              uint32_t cm = (1u << v) | (1u << w) | (1u << x);
              if (fast_sep_fails(cm)) {
                ok = false;
                break;
              }
              cyc_masks.push_back(cm);
              pushed++;
            }
            if (maxshort >= 4) {
              uint32_t common = A.adj[w] & A.adj[x] & ~(1u << v);
              bool bad = false;
              while (common) {
                int y = __builtin_ctz(common);
                common &= common - 1;
                uint32_t cm =
                    (1u << v) | (1u << w) | (1u << x) | (1u << y);
                if (fast_sep_fails(cm)) {
                  bad = true;
                  break;
                }
                cyc_masks.push_back(cm);
                pushed++;
              }
              if (bad) {
                ok = false;
                break;
              }
            }
          }
        }
        if (!ok) {
          cyc_masks.resize(cyc_masks.size() - pushed);
          continue;
        }
        A.add_edge(v, w);
        chosen.push_back(w);
        pick(w + 1);
        chosen.pop_back();
        A.pop_edge();
        cyc_masks.resize(cyc_masks.size() - pushed);
      }
    };
    pick(0);
    A.n--;
  };

  std::vector<std::pair<int, int>> cross;
  std::function<void(size_t)> rredges = [&](size_t i) {
    if (i == rr.size()) {
      // explore each cross-edge set only in its canonical labeling; the
      // stabilizer feeds the orderly rejection of internal labelings
      if (detail::cross_set_canonical(cross, syms, &stab) &&
          detail::apex_planar(A)) {
        cyc_masks.clear();
        for (const auto& C : detail::abs_cycles(A, maxshort)) {
          if (detail::cycle_is_ring(A, C)) continue;
          uint32_t m = 0;
          for (int x : C) m |= 1u << x;
          cyc_masks.push_back(m);
        }
        grow(max_internal);
      }
      return;
    }
    rredges(i + 1);
    auto [a, b] = rr[i];
    A.add_edge(a, b);
    cross.push_back({a, b});
    if (short_ok()) rredges(i + 1);
    cross.pop_back();
    A.pop_edge();
  };
  rredges(0);
  return res;
}

// Naive generate-and-filter oracle: iterates every subset of the candidate
// edge set, then applies the same final filters.  Usable for tiny budgets.
inline EnumResult enumerate_critical_naive(const SearchSpec& spec) {
  detail::AbsGraph base;
  base.ring_len = spec.ring_lengths;
  for (int rl : spec.ring_lengths) base.nring += rl;
  int maxn = base.nring + spec.max_internal;
  base.n = maxn;
  base.adj.assign(maxn, 0);
  {
    int s = 0;
    for (int rl : base.ring_len) {
      for (int i = 0; i < rl; i++) base.add_edge(s + i, s + (i + 1) % rl);
      s += rl;
    }
  }
  std::vector<std::pair<int, int>> cand;
  for (int a = 0; a < maxn; a++)
    for (int b = a + 1; b < maxn; b++) {
      if (base.has_edge(a, b)) continue;
      if (a < base.nring && b < base.nring && spec.induced_ring &&
          base.ring_of(a) == base.ring_of(b))
        continue;
      cand.push_back({a, b});
    }
  if (cand.size() > 26) throw GraphError("budget exceeded");
  bool disk_like = spec.topology == SearchSpec::disk;
  int maxshort = spec.girth_floor - 1;
  EnumResult res;
  std::set<std::string> seen;
  for (uint64_t mask = 0; mask < (1ull << cand.size()); mask++) {
    detail::AbsGraph A = base;
    for (size_t i = 0; i < cand.size(); i++)
      if (mask >> i & 1) A.add_edge(cand[i].first, cand[i].second);
    // the used internal vertices must form a prefix (kills the label
    // symmetry of unused slots; other duplicates die on the canonical key)
    int used_internal = 0;
    bool gap = false;
    for (int v = base.nring; v < maxn; v++) {
      if (A.deg(v) > 0) {
        if (v != base.nring + used_internal) gap = true;
        used_internal++;
      }
    }
    if (gap) continue;
    A.n = base.nring + used_internal;
    A.adj.resize(A.n);
    res.abstract_candidates++;
    bool ok = true;
    for (int v = base.nring; v < A.n; v++)
      if (A.deg(v) < 3) ok = false;
    if (!ok || !detail::components_touch_rings(A)) continue;
    if (disk_like) {
      bool g5 = true;
      for (const auto& C : detail::abs_cycles(A, maxshort))
        if (!detail::cycle_is_ring(A, C)) g5 = false;
      if (!g5) continue;
    } else if (!detail::short_cycles_separating(A, maxshort, spec.punctured)) {
      continue;
    }
    if (!detail::apex_planar(A)) continue;
    if (!detail::abs_ring_critical(A)) continue;
    res.critical_candidates++;
    for (EmbeddedGraph& G : detail::genus0_embeddings(A)) {
      bool good = true;
      if (spec.topology == SearchSpec::cylinder && !spec.punctured)
        for (const auto& C : enumerate_cycles(G, maxshort))
          if (cycle_class(G, C).topology == CycleClass::contractible)
            good = false;
      if (!good) continue;
      std::string key = canonical_form(G).key;
      if (seen.insert(key).second) res.graphs.push_back(G);
    }
  }
  return res;
}

// Basic graphs: ring-critical cylinder graphs with rings of length <= 4 and
// contractible girth >= 5 that contain a triangle, fail to be 2-connected,
// or have the rings at distance one with at most two extra vertices.
struct BasicResult {
  std::vector<EmbeddedGraph> all;
  std::vector<EmbeddedGraph> tf2c;     // triangle-free and 2-connected
  std::vector<EmbeddedGraph> maximal;  // maximal tf2c under subgraph order
};

namespace detail {

inline bool two_connected(const EmbeddedGraph& G) {
  if (G.n() < 3) return false;
  for (int x = 0; x < G.n(); x++) {
    std::vector<char> vis(G.n(), 0);
    vis[x] = 1;
    int start = x == 0 ? 1 : 0;
    std::vector<int> st = {start};
    vis[start] = 1;
    int cnt = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (auto [w, e] : G.adj[v]) {
        (void)e;
        if (!vis[w]) {
          vis[w] = 1;
          cnt++;
          st.push_back(w);
        }
      }
    }
    if (cnt != G.n() - 1) return false;
  }
  return true;
}

inline bool has_triangle(const EmbeddedGraph& G) {
  return !enumerate_cycles(G, 3).empty();
}

// H embeds as a subgraph of G with ring i mapped onto ring i as a cycle
// (any rotation/reflection).
inline bool subgraph_of(const EmbeddedGraph& H, const EmbeddedGraph& G) {
  if (H.n() > G.n() || H.m() > G.m()) return false;
  if (H.rings.size() != G.rings.size()) return false;
  int n = H.n();
  std::vector<int> map(n, -1);
  std::vector<char> used(G.n(), 0);
  std::vector<std::vector<std::vector<int>>> ring_maps;
  for (size_t r = 0; r < H.rings.size(); r++) {
    const auto& hc = H.rings[r].cycle;
    const auto& gc = G.rings[r].cycle;
    if (hc.size() != gc.size()) return false;
    std::vector<std::vector<int>> opts;
    int k = (int)hc.size();
    for (int dir = 0; dir < 2; dir++)
      for (int s = 0; s < k; s++) {
        std::vector<int> img(k);
        for (int i = 0; i < k; i++)
          img[i] = gc[((s + (dir ? -i : i)) % k + k) % k];
        opts.push_back(img);
      }
    ring_maps.push_back(opts);
  }
  std::vector<int> internalH;
  std::set<int> hring;
  for (const auto& r : H.rings) hring.insert(r.cycle.begin(), r.cycle.end());
  for (int v = 0; v < n; v++)
    if (!hring.count(v)) internalH.push_back(v);
  std::function<bool(size_t)> mapint = [&](size_t i) -> bool {
    if (i == internalH.size()) {
      for (const auto& e : H.edges)
        if (G.find_edge(map[e.u], map[e.v]) < 0) return false;
      return true;
    }
    int v = internalH[i];
    for (int w = 0; w < G.n(); w++) {
      if (used[w]) continue;
      bool ok = true;
      for (auto [x, e] : H.adj[v]) {
        (void)e;
        if (map[x] >= 0 && G.find_edge(w, map[x]) < 0) ok = false;
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (mapint(i + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  std::function<bool(size_t)> chooser = [&](size_t r) -> bool {
    if (r == ring_maps.size()) return mapint(0);
    const auto& hc = H.rings[r].cycle;
    for (const auto& img : ring_maps[r]) {
      bool clash = false;
      for (size_t i = 0; i < hc.size(); i++)
        if (used[img[i]]) clash = true;
      if (clash) continue;
      for (size_t i = 0; i < hc.size(); i++) {
        map[hc[i]] = img[i];
        used[img[i]] = 1;
      }
      if (chooser(r + 1)) return true;
      for (size_t i = 0; i < hc.size(); i++) {
        map[hc[i]] = -1;
        used[img[i]] = 0;
      }
    }
    return false;
  };
  return chooser(0);
}

}  // namespace detail

inline BasicResult enumerate_basic(int max_internal = 4) {
  BasicResult out;
  std::set<std::string> seen;
  for (auto [l1, l2] :
       std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
    SearchSpec spec;
    spec.topology = SearchSpec::cylinder;
    spec.ring_lengths = {l1, l2};
    spec.max_internal = max_internal;
    spec.girth_floor = 5;
    // ring chords are allowed: they create triangles, which is fine as long
    // as the triangles are non-contractible (clause one of the definition)
    spec.induced_ring = false;
    EnumResult r = enumerate_critical(spec);
    for (EmbeddedGraph& G : r.graphs) {
      bool tri = detail::has_triangle(G);
      bool twoc = detail::two_connected(G);
      int internal = G.n() - l1 - l2;
      int dist = -1;
      {
        std::vector<int> d(G.n(), -1);
        std::vector<int> q;
        for (int v : G.rings[0].cycle) {
          d[v] = 0;
          q.push_back(v);
        }
        for (size_t h = 0; h < q.size(); h++)
          for (auto [w, e] : G.adj[q[h]]) {
            (void)e;
            if (d[w] < 0) {
              d[w] = d[q[h]] + 1;
              q.push_back(w);
            }
          }
        for (int v : G.rings[1].cycle)
          if (d[v] >= 0 && (dist < 0 || d[v] < dist)) dist = d[v];
      }
      if (!(tri || !twoc || (dist == 1 && internal <= 2))) continue;
      std::string key = canonical_form(G).key;
      if (!seen.insert(key).second) continue;
      out.all.push_back(G);
      if (!tri && twoc) out.tf2c.push_back(G);
    }
  }
  for (size_t i = 0; i < out.tf2c.size(); i++) {
    bool maximal = true;
    for (size_t j = 0; j < out.tf2c.size(); j++) {
      if (i == j) continue;
      bool proper = out.tf2c[j].n() > out.tf2c[i].n() ||
                    out.tf2c[j].m() > out.tf2c[i].m();
      if (proper && detail::subgraph_of(out.tf2c[i], out.tf2c[j]))
        maximal = false;
    }
    if (maximal) out.maximal.push_back(out.tf2c[i]);
  }
  return out;
}

}  // namespace girth5
