// Constructors and recognizers for the named graph families: the recursive
// 4-chromatic chains (planar, Klein-bottle and broken-cylinder embeddings),
// the exceptional disk graphs E0-E5, Mycielski graphs, and concentric
// cylinder instances used by the edge-bound checks.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "girth5/canonical.hpp"
#include "girth5/graph.hpp"
#include "girth5/weights.hpp"

namespace girth5 {

// ------------------------------------------------ faces -> rotation system

// Builds an embedding (all edge signs +1) from a list of faces given as
// vertex cycles; every edge must lie on exactly two faces.  Face
// orientations are made coherent by propagation, then the rotation at each
// vertex is read off the face corners.
struct FacePlan {
  std::vector<long long> vids;
  std::vector<std::vector<long long>> faces;  // input: vertex cycles

  // realized state
  std::vector<std::vector<long long>> oriented;  // coherently oriented faces
  std::vector<std::pair<long long, long long>> edge_list;
  std::map<long long, std::vector<long long>> rotations;

  void realize() {
    std::map<std::pair<long long, long long>, std::vector<int>> on;  // edge -> faces
    for (int fi = 0; fi < (int)faces.size(); fi++) {
      const auto& f = faces[fi];
      int k = (int)f.size();
      for (int i = 0; i < k; i++) {
        auto e = std::minmax(f[i], f[(i + 1) % k]);
        if (e.first == e.second) throw GraphError("face repeats a vertex");
        on[e].push_back(fi);
      }
    }
    edge_list.clear();
    for (const auto& [e, fs] : on) {
      if (fs.size() != 2) throw GraphError("edge not on exactly two faces");
      edge_list.push_back(e);
    }
    // orient coherently: shared edges traversed in opposite directions
    std::vector<int> flip(faces.size(), -1);
    auto dir_in = [&](int fi, long long a, long long b) {
      const auto& f = faces[fi];
      int k = (int)f.size();
      for (int i = 0; i < k; i++)
        if (f[i] == a && f[(i + 1) % k] == b) return +1;
      return -1;  // must be b->a
    };
    for (int s = 0; s < (int)faces.size(); s++) {
      if (flip[s] >= 0) continue;
      flip[s] = 0;
      std::vector<int> q = {s};
      while (!q.empty()) {
        int fi = q.back();
        q.pop_back();
        const auto& f = faces[fi];
        int k = (int)f.size();
        for (int i = 0; i < k; i++) {
          long long a = f[i], b = f[(i + 1) % k];
          auto key = std::minmax(a, b);
          for (int gi : on[key]) {
            if (gi == fi) continue;
            // with flips applied, gi must traverse b->a where fi does a->b
            int da = flip[fi] ? -dir_in(fi, a, b) : dir_in(fi, a, b);
            int db_raw = dir_in(gi, a, b);
            int need = -da;  // gi's effective direction
            int gflip = db_raw == need ? 0 : 1;
            if (flip[gi] < 0) {
              flip[gi] = gflip;
              q.push_back(gi);
            } else if (flip[gi] != gflip) {
              throw GraphError("face set is not coherently orientable");
            }
          }
        }
      }
    }
    oriented = faces;
    for (size_t i = 0; i < faces.size(); i++)
      if (flip[i]) std::reverse(oriented[i].begin(), oriented[i].end());
    // rotation via corner successors: face ... x,u,y ... makes y follow x
    // around u
    std::map<long long, std::map<long long, long long>> next;
    for (const auto& f : oriented) {
      int k = (int)f.size();
      for (int i = 0; i < k; i++) {
        long long x = f[i], u = f[(i + 1) % k], y = f[(i + 2) % k];
        if (next[u].count(x)) throw GraphError("inconsistent corner at vertex");
        next[u][x] = y;
      }
    }
    rotations.clear();
    for (const auto& [u, nx] : next) {
      std::vector<long long> rotv;
      long long start = nx.begin()->first;
      long long cur = start;
      do {
        rotv.push_back(cur);
        auto it = nx.find(cur);
        if (it == nx.end()) throw GraphError("open rotation at vertex");
        cur = it->second;
      } while (cur != start && (int)rotv.size() <= (int)nx.size());
      if ((int)rotv.size() != (int)nx.size())
        throw GraphError("rotation does not close into a single cycle");
      rotations[u] = rotv;
    }
  }

  EmbeddedGraph build(const std::vector<std::pair<long long, long long>>&
                          negative_edges = {}) {
    if (oriented.empty()) realize();
    return build_graph(vids, edge_list, rotations, negative_edges);
  }
};

inline void attach_facial_ring(EmbeddedGraph& G,
                               const std::vector<long long>& cycle_vids) {
  RingSpec r;
  r.kind = RingSpec::facial;
  for (long long v : cycle_vids) {
    // vid is sorted; vindex is only built by finalize()
    auto it = std::lower_bound(G.vid.begin(), G.vid.end(), v);
    if (it == G.vid.end() || *it != v) throw GraphError("unknown ring vertex");
    r.cycle.push_back((int)(it - G.vid.begin()));
  }
  G.rings.push_back(r);
}

// ----------------------------------------------------------------- chains

enum class ChainEmbedding { abstract_planar, canonical_klein, broken_cylinder };

struct ChainGraph {
  EmbeddedGraph G;
  std::pair<long long, long long> e1, e2;  // vertex id pairs
  std::vector<long long> ring1, ring2;     // end 4-cycles (vertex ids)
};

namespace detail {

struct ChainData {
  std::vector<long long> vids;
  std::vector<std::pair<long long, long long>> broken_edges;  // without e1,e2
  std::pair<long long, long long> e1, e2;
  std::vector<long long> ring1, ring2;
  std::vector<std::vector<long long>> broken_faces;  // ring faces first
};

// Step i (1-based) introduces y1=3i+2, y2=3i+3, c=3i+4; the consumed pair
// is (a,b) = (3,4) for i=1 and (y1,y2) of step i-1 afterwards.
inline ChainData chain_data(int k) {
  ChainData D;
  for (long long v = 1; v <= 4 + 3 * (long long)k; v++) D.vids.push_back(v);
  D.e1 = {1, 2};
  D.ring1 = {1, 3, 2, 4};
  auto E = [&](long long a, long long b) { D.broken_edges.push_back({a, b}); };
  E(1, 3);
  E(2, 3);
  E(1, 4);
  E(2, 4);
  if (k == 0) {
    D.e2 = {3, 4};
    D.ring2 = {1, 3, 2, 4};
    D.broken_faces = {{1, 3, 2, 4}, {1, 3, 2, 4}};
    return D;
  }
  long long a = 3, b = 4;
  for (int i = 1; i <= k; i++) {
    long long y1 = 3 * i + 2, y2 = 3 * i + 3, c = 3 * i + 4;
    E(b, c);
    E(a, y1);
    E(a, y2);
    E(c, y1);
    E(c, y2);
    if (i == 1) {
      D.broken_faces.push_back({1, 3, y1, c, 4});
      D.broken_faces.push_back({2, 3, y2, c, 4});
    } else {
      // common neighbors of (a,b) are a and c of step i-1
      long long pa = (i == 2) ? 3 : 3 * (i - 2) + 2;
      long long pc = 3 * (i - 1) + 4;
      D.broken_faces.push_back({pa, a, y1, c, b});
      D.broken_faces.push_back({pc, a, y2, c, b});
    }
    a = y1;
    b = y2;
  }
  long long y1 = 3 * k + 2, y2 = 3 * k + 3, c = 3 * k + 4;
  long long ak = k == 1 ? 3 : 3 * (k - 1) + 2;
  D.e2 = {y1, y2};
  D.ring2 = {y1, ak, y2, c};
  D.broken_faces.insert(D.broken_faces.begin(), D.ring2);
  D.broken_faces.insert(D.broken_faces.begin(), D.ring1);
  return D;
}

// Insert vertex id `nv` into u's rotation in the corner crossed by the
// oriented face cycle `face` at u (after u's predecessor in the face).
inline void insert_in_corner(std::map<long long, std::vector<long long>>& rot,
                             const std::vector<long long>& face, long long u,
                             long long nv) {
  int k = (int)face.size();
  long long pred = -1;
  for (int i = 0; i < k; i++)
    if (face[(i + 1) % k] == u) pred = face[i];
  if (pred < 0) throw GraphError("vertex not on face");
  auto& r = rot.at(u);
  for (size_t i = 0; i < r.size(); i++)
    if (r[i] == pred) {
      r.insert(r.begin() + i + 1, nv);
      return;
    }
  throw GraphError("predecessor missing from rotation");
}

}  // namespace detail

inline ChainGraph make_chain(int k, ChainEmbedding emb) {
  if (k < 0) throw GraphError("negative chain length");
  detail::ChainData D = detail::chain_data(k);
  ChainGraph out;
  out.e1 = D.e1;
  out.e2 = D.e2;
  out.ring1 = D.ring1;
  out.ring2 = D.ring2;
  if (emb == ChainEmbedding::broken_cylinder) {
    if (k < 2)
      throw GraphError("broken chain needs k >= 2 for disjoint rings");
    FacePlan P;
    P.vids = D.vids;
    P.faces = D.broken_faces;
    out.G = P.build();
    attach_facial_ring(out.G, D.ring1);
    attach_facial_ring(out.G, D.ring2);
    out.G.finalize();
    return out;
  }
  if (emb == ChainEmbedding::abstract_planar) {
    FacePlan P;
    P.vids = D.vids;
    if (k == 0) {
      P.faces = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
    } else {
      P.faces.assign(D.broken_faces.begin() + 2, D.broken_faces.end());
      P.faces.push_back({1, 3, 2});
      P.faces.push_back({2, 4, 1});
      long long y1 = D.e2.first, y2 = D.e2.second;
      long long ak = D.ring2[1], ck = D.ring2[3];
      P.faces.push_back({y1, ak, y2});
      P.faces.push_back({y2, ck, y1});
    }
    out.G = P.build();
    out.G.finalize();
    return out;
  }
  // canonical Klein-bottle embedding: broken-cylinder rotations plus e1 and
  // e2 drawn through crosscaps inside the two end faces
  FacePlan P;
  P.vids = D.vids;
  P.faces = D.broken_faces;
  P.realize();
  const auto& f1 = P.oriented[0];  // ring1 face
  const auto& f2 = P.oriented[1];  // ring2 face
  detail::insert_in_corner(P.rotations, f1, D.e1.first, D.e1.second);
  detail::insert_in_corner(P.rotations, f1, D.e1.second, D.e1.first);
  detail::insert_in_corner(P.rotations, f2, D.e2.first, D.e2.second);
  detail::insert_in_corner(P.rotations, f2, D.e2.second, D.e2.first);
  auto edges = P.edge_list;
  edges.push_back(D.e1);
  edges.push_back(D.e2);
  out.G = build_graph(P.vids, edges, P.rotations, {D.e1, D.e2});
  out.G.finalize();
  return out;
}

// ------------------------------------------------------ exceptional disks

// Disk graphs over a ring 1..l.  `attach` optionally overrides the ring
// attachment positions (1-based ring vertex ids); the default realizes the
// canonical face lengths.
inline EmbeddedGraph make_exceptional(ExceptionalClass cls, int l,
                                      std::vector<long long> attach = {}) {
  if (l < 5) throw GraphError("ring too short");
  auto ring_ok = [&](int minl) {
    if (l < minl) throw GraphError("ring too short for this class");
  };
  std::vector<long long> ring;
  for (long long v = 1; v <= l; v++) ring.push_back(v);
  auto arc = [&](long long a, long long b) {  // ring path a..b ascending mod l
    std::vector<long long> p = {a};
    while (p.back() != b) p.push_back(p.back() % l + 1);
    return p;
  };
  FacePlan P;
  P.vids = ring;
  std::vector<std::vector<long long>> inner;
  switch (cls) {
    case ExceptionalClass::E0: {
      inner = {ring};
      break;
    }
    case ExceptionalClass::E1: {
      ring_ok(8);
      if (attach.empty()) attach = {1, 5};
      auto A = arc(attach[0], attach[1]);
      auto B = arc(attach[1], attach[0]);
      inner = {A, B};
      break;
    }
    case ExceptionalClass::E2:
    case ExceptionalClass::E3: {
      ring_ok(cls == ExceptionalClass::E2 ? 9 : 11);
      if (attach.empty())
        attach = cls == ExceptionalClass::E2
                     ? std::vector<long long>{1, 4, 7}
                     : std::vector<long long>{1, 4, 8};
      long long v0 = l + 1;
      P.vids.push_back(v0);
      for (int i = 0; i < 3; i++) {
        auto A = arc(attach[i], attach[(i + 1) % 3]);
        A.push_back(v0);
        inner.push_back(A);
      }
      break;
    }
    case ExceptionalClass::E4: {
      ring_ok(10);
      if (attach.empty()) attach = {1, 4, 6, 9};
      long long u = l + 1, v = l + 2;
      P.vids.push_back(u);
      P.vids.push_back(v);
      auto A = arc(attach[0], attach[1]);
      A.push_back(u);
      auto B = arc(attach[1], attach[2]);
      B.push_back(v);
      B.push_back(u);
      auto C = arc(attach[2], attach[3]);
      C.push_back(v);
      auto E = arc(attach[3], attach[0]);
      E.push_back(u);
      E.push_back(v);
      inner = {A, B, C, E};
      break;
    }
    case ExceptionalClass::E5: {
      ring_ok(10);
      if (attach.empty()) attach = {1, 3, 5, 7, 9};
      std::vector<long long> pent;
      for (int j = 0; j < 5; j++) {
        P.vids.push_back(l + 1 + j);
        pent.push_back(l + 1 + j);
      }
      for (int j = 0; j < 5; j++) {
        auto A = arc(attach[j], attach[(j + 1) % 5]);
        A.push_back(pent[(j + 1) % 5]);
        A.push_back(pent[j]);
        inner.push_back(A);
      }
      inner.push_back(pent);
      break;
    }
    default:
      throw GraphError("not a constructible class");
  }
  P.faces = inner;
  P.faces.push_back(ring);  // the ring face
  EmbeddedGraph G = P.build();
  attach_facial_ring(G, ring);
  G.finalize();
  return G;
}

inline ExceptionalClass classify_exceptional(const EmbeddedGraph& G) {
  if (G.rings.size() != 1 || G.rings[0].kind != RingSpec::facial)
    throw GraphError("not a disk instance");
  if (G.euler_genus() != 0) throw GraphError("not a disk instance");
  int l = (int)G.rings[0].cycle.size();
  if (l < 5) throw GraphError("not a disk instance");
  std::set<int> rv(G.rings[0].cycle.begin(), G.rings[0].cycle.end());
  std::vector<int> internal;
  for (int v = 0; v < G.n(); v++)
    if (!rv.count(v)) internal.push_back(v);
  std::multiset<int> flens;
  for (const auto& f : G.faces)
    if (!f.is_ring_face) flens.insert(f.length);
  int extra_edges = G.m() - l;
  if (internal.empty() && extra_edges == 0) return ExceptionalClass::E0;
  if (internal.empty() && extra_edges == 1 && l >= 8)
    return ExceptionalClass::E1;
  auto all_deg3 = [&] {
    for (int v : internal)
      if (G.deg(v) != 3) return false;
    return true;
  };
  if (internal.size() == 1 && all_deg3()) {
    if (l >= 9 && flens == std::multiset<int>{5, 5, l - 4})
      return ExceptionalClass::E2;
    if (l >= 11 && flens == std::multiset<int>{5, 6, l - 5})
      return ExceptionalClass::E3;
  }
  if (internal.size() == 2 && all_deg3() && l >= 10 &&
      G.find_edge(internal[0], internal[1]) >= 0 &&
      flens == std::multiset<int>{5, 5, 5, l - 5})
    return ExceptionalClass::E4;
  if (internal.size() == 5 && all_deg3() && l >= 10 &&
      flens == std::multiset<int>{5, 5, 5, 5, 5, l - 5}) {
    std::set<int> iv(internal.begin(), internal.end());
    for (const auto& f : G.faces)
      if (!f.is_ring_face && f.length == 5 &&
          std::set<int>(f.vertices.begin(), f.vertices.end()) == iv)
        return ExceptionalClass::E5;
  }
  return ExceptionalClass::none;
}

// -------------------------------------------------------------- mycielski

inline EmbeddedGraph make_mycielski(int l) {
  if (l < 5 || l % 2 == 0) throw GraphError("odd cycle of length >= 5 required");
  std::vector<long long> vids;
  for (long long v = 1; v <= 2 * l + 1; v++) vids.push_back(v);
  std::vector<std::pair<long long, long long>> edges;
  for (int i = 1; i <= l; i++) {
    int j = i % l + 1;
    edges.push_back({i, j});          // cycle
    edges.push_back({l + i, j});      // shadow of i to neighbor j
    edges.push_back({l + j, i});      // shadow of j to neighbor i
    edges.push_back({l + i, 2 * l + 1});
  }
  EmbeddedGraph G = build_graph(vids, edges);
  G.finalize();
  return G;
}

// ----------------------------------------------------------- broken chains

struct BrokenChainCheck {
  bool is_broken_chain = false;
  int k = -1;
};

inline BrokenChainCheck is_broken_chain(const EmbeddedGraph& G) {
  BrokenChainCheck res;
  if (G.rings.size() != 2) return res;
  for (const auto& r : G.rings)
    if (r.kind != RingSpec::facial || r.cycle.size() != 4) return res;
  if ((G.n() - 4) % 3 != 0) return res;
  int k = (G.n() - 4) / 3;
  if (k < 2) return res;
  ChainGraph ref = make_chain(k, ChainEmbedding::broken_cylinder);
  if (canonical_form(G) == canonical_form(ref.G)) {
    res.is_broken_chain = true;
    res.k = k;
  }
  return res;
}

// ------------------------------------------------------ cylinder instances

// `depth` concentric cycles of length l in the cylinder; consecutive layers
// joined by spokes at the listed positions (0-based, at least two).  Rings
// are the innermost and outermost cycles.
inline EmbeddedGraph make_concentric(int l, int depth,
                                     std::vector<int> spokes = {}) {
  if (l < 3 || depth < 2) throw GraphError("need l >= 3 and depth >= 2");
  if (spokes.empty())
    for (int p = 0; p < l; p++) spokes.push_back(p);
  std::sort(spokes.begin(), spokes.end());
  if (spokes.size() < 2) throw GraphError("need at least two spokes");
  auto vid = [&](int layer, int pos) {
    return (long long)layer * l + ((pos % l + l) % l) + 1;
  };
  FacePlan P;
  for (int j = 0; j < depth; j++)
    for (int p = 0; p < l; p++) P.vids.push_back(vid(j, p));
  std::vector<long long> ring1, ring2;
  for (int p = 0; p < l; p++) ring1.push_back(vid(0, p));
  for (int p = 0; p < l; p++) ring2.push_back(vid(depth - 1, p));
  P.faces.push_back(ring1);
  P.faces.push_back(ring2);
  int m = (int)spokes.size();
  for (int j = 0; j + 1 < depth; j++)
    for (int i = 0; i < m; i++) {
      int p = spokes[i], q = spokes[(i + 1) % m];
      std::vector<long long> f;
      for (int x = p;; x = (x + 1) % l) {
        f.push_back(vid(j, x));
        if (x == q) break;
      }
      for (int x = q;; x = (x - 1 + l) % l) {
        f.push_back(vid(j + 1, x));
        if (x == p) break;
      }
      P.faces.push_back(f);
    }
  EmbeddedGraph G = P.build();
  attach_facial_ring(G, ring1);
  attach_facial_ring(G, ring2);
  G.finalize();
  return G;
}

}  // namespace girth5
