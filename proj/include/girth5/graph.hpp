// Combinatorial-map representation of graphs embedded in surfaces with
// rings: rotation system per vertex plus an edge signature in {+1,-1}.
// Includes the line-based document parser, the canonical emitter, face
// tracing via the signal permutation, and Euler genus / orientability.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace girth5 {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

struct GraphError : std::runtime_error {
  explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EdgeRec {
  long long id = 0;
  int u = -1, v = -1;  // vertex indices, vid[u] < vid[v]
  int sign = +1;
};

struct RingSpec {
  enum Kind { facial, vertex } kind = facial;
  std::vector<int> cycle;  // vertex indices; singleton for vertex rings
  bool weak = false;       // vertex rings only
  int length() const {
    if (kind == facial) return (int)cycle.size();
    return weak ? 0 : 1;
  }
};

// A dart is 2*edge_index + end, where end 0 sits at edges[e].u.
inline int dart_make(int e, int end) { return 2 * e + end; }
inline int dart_edge(int d) { return d / 2; }
inline int dart_end(int d) { return d % 2; }
inline int dart_opposite(int d) { return d ^ 1; }

// A signal is 2*dart + (side == +1 ? 0 : 1).
inline int signal_make(int d, int side) { return 2 * d + (side == +1 ? 0 : 1); }
inline int signal_dart(int s) { return s / 2; }
inline int signal_side(int s) { return s % 2 == 0 ? +1 : -1; }

struct FaceRecord {
  std::vector<std::vector<int>> walks;  // dart sequences (may be empty walks)
  int length = 0;       // dart count plus vertex-ring contributions
  bool open_2cell = true;
  bool closed_2cell = false;
  bool is_ring_face = false;
  int ring_index = -1;           // facial ring owning this face, if any
  std::vector<int> vertex_rings; // ring indices of vertex rings on this face
  std::set<int> vertices;        // incident vertex indices
  int component = -1;
};

struct EmbeddedGraph {
  std::vector<long long> vid;          // sorted original ids
  std::vector<EdgeRec> edges;          // sorted by id
  std::vector<std::vector<int>> rot;   // clockwise darts per vertex
  std::vector<RingSpec> rings;
  std::vector<int> precoloring;        // per-vertex color 0..2 or -1
  std::vector<std::vector<int>> outer_walks;  // declared shared-face walks

  // Derived (filled by finalize()):
  std::map<long long, int> vindex;
  std::map<long long, int> eindex;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge idx)
  std::vector<int> dart_vertex;        // vertex a dart leaves from
  std::vector<int> rot_pos;            // position of dart in its rotation
  std::vector<FaceRecord> faces;
  std::vector<int> signal_face;        // face id per signal
  std::vector<int> ring_face;          // face id per ring (cuff face)
  std::vector<int> comp;               // component index per vertex
  int ncomp = 0;

  int n() const { return (int)vid.size(); }
  int m() const { return (int)edges.size(); }
  int deg(int v) const { return (int)rot[v].size(); }
  int dart_from(int d) const { return dart_vertex[d]; }
  int dart_to(int d) const { return dart_vertex[dart_opposite(d)]; }
  int edge_sign(int d) const { return edges[dart_edge(d)].sign; }
  int other_end(int e, int v) const {
    return edges[e].u == v ? edges[e].v : edges[e].u;
  }
  int find_edge(int u, int v) const {
    for (auto [w, e] : adj[u])
      if (w == v) return e;
    return -1;
  }
  bool ring_vertex(int v) const {
    for (const auto& r : rings)
      for (int x : r.cycle)
        if (x == v) return true;
    return false;
  }
  std::set<int> ring_vertex_set() const {
    std::set<int> s;
    for (const auto& r : rings) s.insert(r.cycle.begin(), r.cycle.end());
    return s;
  }
  std::set<int> ring_edge_set() const {
    std::set<int> s;
    for (const auto& r : rings)
      if (r.kind == RingSpec::facial)
        for (size_t i = 0; i < r.cycle.size(); i++) {
          int e = find_edge(r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]);
          if (e >= 0) s.insert(e);
        }
    return s;
  }

  // Signal permutation: traverse the dart's edge, then continue along the
  // rotation at the far end (successor on side +1, predecessor on side -1).
  int next_signal(int sig) const {
    int d = signal_dart(sig), s = signal_side(sig);
    int a = dart_opposite(d);
    int w = dart_vertex[a];
    int s2 = s * edge_sign(d);
    const auto& r = rot[w];
    int p = rot_pos[a];
    int q = s2 == +1 ? (p + 1) % (int)r.size()
                     : (p + (int)r.size() - 1) % (int)r.size();
    return signal_make(r[q], s2);
  }
  // Mirror involution pairing the two traversals of a face walk.
  int mirror_signal(int sig) const {
    int d = signal_dart(sig), s = signal_side(sig);
    return signal_make(dart_opposite(d), -s * edge_sign(d));
  }

  void finalize();
  void trace_faces();
  void attach_rings();

  // Reorder the edge vector by id (rotations fixed up accordingly); call
  // before finalize() when edges were appended out of order.
  void sort_edges_by_id() {
    std::vector<int> order(m());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return edges[a].id < edges[b].id; });
    std::vector<int> perm(m());
    std::vector<EdgeRec> ne(m());
    for (int i = 0; i < m(); i++) {
      perm[order[i]] = i;
      ne[i] = edges[order[i]];
    }
    edges = std::move(ne);
    for (auto& r : rot)
      for (auto& d : r) d = dart_make(perm[dart_edge(d)], dart_end(d));
  }

  // Per-component Euler genus (2 - V + E - F on the patched surface), summed.
  long long euler_genus() const;
  bool orientable() const;  // no cycle with odd sign product
  long long component_genus(int c) const;
};

// ----------------------------------------------------------------- finalize

inline void EmbeddedGraph::finalize() {
  vindex.clear();
  for (int i = 0; i < n(); i++) vindex[vid[i]] = i;
  eindex.clear();
  adj.assign(n(), {});
  for (int e = 0; e < m(); e++) {
    auto& ed = edges[e];
    if (ed.u == ed.v) throw GraphError("loop edge " + std::to_string(ed.id));
    if (vid[ed.u] > vid[ed.v]) std::swap(ed.u, ed.v);
    eindex[ed.id] = e;
    adj[ed.u].push_back({ed.v, e});
    adj[ed.v].push_back({ed.u, e});
  }
  for (int v = 0; v < n(); v++) {
    std::set<int> seen;
    for (auto [w, e] : adj[v]) {
      (void)e;
      if (!seen.insert(w).second)
        throw GraphError("parallel edges between " + std::to_string(vid[v]) +
                         " and " + std::to_string(vid[w]));
    }
  }
  // Rotations: every dart in exactly one rotation, at its own vertex.
  dart_vertex.assign(2 * m(), -1);
  rot_pos.assign(2 * m(), -1);
  for (int v = 0; v < n(); v++) {
    if ((int)rot[v].size() != (int)adj[v].size())
      throw GraphError("rotation of vertex " + std::to_string(vid[v]) +
                       " does not list each incident dart once");
    for (int i = 0; i < (int)rot[v].size(); i++) {
      int d = rot[v][i];
      int e = dart_edge(d);
      int at = dart_end(d) == 0 ? edges[e].u : edges[e].v;
      if (at != v)
        throw GraphError("dart of edge " + std::to_string(edges[e].id) +
                         " listed at wrong vertex " + std::to_string(vid[v]));
      if (dart_vertex[d] != -1)
        throw GraphError("dart listed twice");
      dart_vertex[d] = v;
      rot_pos[d] = i;
    }
  }
  for (int d = 0; d < 2 * m(); d++)
    if (dart_vertex[d] == -1) throw GraphError("dart missing from rotations");

  // Components.
  comp.assign(n(), -1);
  ncomp = 0;
  for (int v = 0; v < n(); v++) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[x]) {
        (void)e;
        if (comp[w] == -1) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ncomp++;
  }

  trace_faces();
  attach_rings();
}

inline void EmbeddedGraph::trace_faces() {
  faces.clear();
  signal_face.assign(4 * m(), -1);
  std::vector<int> orbit_of(4 * m(), -1);
  std::vector<std::vector<int>> orbits;
  for (int s0 = 0; s0 < 4 * m(); s0++) {
    if (orbit_of[s0] != -1) continue;
    std::vector<int> orb;
    int s = s0;
    do {
      orbit_of[s] = (int)orbits.size();
      orb.push_back(s);
      s = next_signal(s);
    } while (s != s0);
    orbits.push_back(std::move(orb));
  }
  std::vector<int> face_of_orbit(orbits.size(), -1);
  for (size_t i = 0; i < orbits.size(); i++) {
    if (face_of_orbit[i] != -1) continue;
    int j = orbit_of[mirror_signal(orbits[i][0])];
    FaceRecord f;
    std::vector<int> walk;
    if (j == (int)i) {
      // Self-mirrored orbit: the walk is traversed twice within the orbit.
      assert(orbits[i].size() % 2 == 0);
      for (size_t k = 0; k < orbits[i].size() / 2; k++)
        walk.push_back(signal_dart(orbits[i][k]));
      face_of_orbit[i] = (int)faces.size();
    } else {
      for (int s : orbits[i]) walk.push_back(signal_dart(s));
      face_of_orbit[i] = face_of_orbit[j] = (int)faces.size();
    }
    f.walks.push_back(walk);
    f.length = (int)walk.size();
    for (int d : walk) {
      f.vertices.insert(dart_vertex[d]);
      f.component = comp[dart_vertex[d]];
    }
    faces.push_back(std::move(f));
  }
  for (int s = 0; s < 4 * m(); s++) signal_face[s] = face_of_orbit[orbit_of[s]];
  // Isolated vertices: one empty-walk face each.
  for (int v = 0; v < n(); v++)
    if (deg(v) == 0) {
      FaceRecord f;
      f.walks.push_back({});
      f.length = 0;
      f.vertices.insert(v);
      f.component = comp[v];
      faces.push_back(std::move(f));
    }
  int total = 0;
  for (const auto& f : faces) total += (int)f.walks[0].size();
  assert(total == 2 * m());
}

// Vertex sequence of a dart walk (origin of each dart).
inline std::vector<int> walk_vertices(const EmbeddedGraph& G,
                                      const std::vector<int>& walk) {
  std::vector<int> vs;
  for (int d : walk) vs.push_back(G.dart_from(d));
  return vs;
}

// Does the cyclic dart walk visit exactly the simple cycle `cyc` (in either
// rotation/direction)?
inline bool walk_matches_cycle(const EmbeddedGraph& G,
                               const std::vector<int>& walk,
                               const std::vector<int>& cyc) {
  if (walk.size() != cyc.size()) return false;
  std::vector<int> vs = walk_vertices(G, walk);
  int k = (int)cyc.size();
  for (int dir = 0; dir < 2; dir++) {
    for (int off = 0; off < k; off++) {
      bool ok = true;
      for (int i = 0; i < k && ok; i++) {
        int j = dir == 0 ? (off + i) % k : (off - i % k + 2 * k) % k;
        if (vs[i] != cyc[j % k]) ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

inline void EmbeddedGraph::attach_rings() {
  ring_face.assign(rings.size(), -1);
  std::set<int> used;
  for (size_t ri = 0; ri < rings.size(); ri++) {
    auto& r = rings[ri];
    for (int v : r.cycle)
      if (!used.insert(v).second)
        throw GraphError("rings are not pairwise vertex-disjoint");
    if (r.kind == RingSpec::facial) {
      if (r.cycle.size() < 3) throw GraphError("facial ring too short");
      std::set<int> distinct(r.cycle.begin(), r.cycle.end());
      if (distinct.size() != r.cycle.size())
        throw GraphError("ring cycle repeats a vertex");
      for (size_t i = 0; i < r.cycle.size(); i++)
        if (find_edge(r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]) < 0)
          throw GraphError("ring is not a cycle of the graph");
      int e0 = find_edge(r.cycle[0], r.cycle[1]);
      int d0 = dart_make(e0, edges[e0].u == r.cycle[0] ? 0 : 1);
      int chosen = -1;
      for (int side : {+1, -1}) {
        int f = signal_face[signal_make(d0, side)];
        if (walk_matches_cycle(*this, faces[f].walks[0], r.cycle)) {
          chosen = f;
          break;
        }
      }
      if (chosen < 0) throw GraphError("ring is not facial");
      ring_face[ri] = chosen;
      faces[chosen].is_ring_face = true;
      faces[chosen].ring_index = (int)ri;
    } else {
      int v = r.cycle[0];
      int f;
      if (deg(v) == 0) {
        f = -1;
        for (int i = 0; i < (int)faces.size(); i++)
          if (faces[i].walks[0].empty() && faces[i].vertices.count(v)) f = i;
      } else {
        // Deterministic cuff convention: the face on side +1 of the
        // smallest dart at v.
        int dmin = *std::min_element(rot[v].begin(), rot[v].end());
        f = signal_face[signal_make(dmin, +1)];
      }
      if (f < 0) throw GraphError("vertex ring has no incident face");
      ring_face[ri] = f;
      faces[f].open_2cell = false;
      faces[f].vertex_rings.push_back((int)ri);
      faces[f].length += r.length();
    }
  }
  // Outer-walk declarations merge one face per component into a shared face.
  if (!outer_walks.empty()) {
    std::vector<int> merged;
    for (const auto& ow : outer_walks) {
      int found = -1;
      for (int i = 0; i < (int)faces.size(); i++) {
        if (faces[i].walks.size() != 1) continue;
        const auto& f = faces[i];
        if (ow.size() == 1 && f.walks[0].empty() && f.vertices.count(ow[0]))
          found = i;
        else if (!f.walks[0].empty() &&
                 walk_matches_cycle(*this, f.walks[0], ow))
          found = i;
        if (found >= 0) break;
      }
      if (found < 0) throw GraphError("outer walk does not match a face");
      merged.push_back(found);
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    if (merged.size() < 2) throw GraphError("outer declaration needs two or more walks");
    FaceRecord big;
    big.open_2cell = false;
    big.length = 0;
    for (int i : merged) {
      const FaceRecord& f = faces[i];
      if (f.is_ring_face) throw GraphError("outer walk is a ring face");
      big.walks.push_back(f.walks[0]);
      big.length += f.length;
      big.vertices.insert(f.vertices.begin(), f.vertices.end());
      for (int ri : f.vertex_rings) big.vertex_rings.push_back(ri);
    }
    big.component = -2;  // spans components
    std::vector<FaceRecord> kept;
    std::vector<int> remap(faces.size(), -1);
    for (int i = 0; i < (int)faces.size(); i++) {
      if (std::binary_search(merged.begin(), merged.end(), i)) continue;
      remap[i] = (int)kept.size();
      kept.push_back(faces[i]);
    }
    int bigid = (int)kept.size();
    kept.push_back(big);
    for (int i : merged) remap[i] = bigid;
    for (auto& sf : signal_face) if (sf >= 0) sf = remap[sf];
    for (auto& rf : ring_face) rf = remap[rf];
    faces = std::move(kept);
  }
  // Closed-2-cell flags: open 2-cell and bounded by a simple cycle.
  for (auto& f : faces) {
    if (!f.open_2cell || f.walks.size() != 1) continue;
    std::vector<int> vs = walk_vertices(*this, f.walks[0]);
    std::set<int> distinct(vs.begin(), vs.end());
    f.closed_2cell = !vs.empty() && distinct.size() == vs.size();
  }
}

// Genus bookkeeping ignores outer-face merging: each component is treated as
// cellularly embedded in its own surface (genus of the whole = sum).
inline long long EmbeddedGraph::component_genus(int c) const {
  long long V = 0, E = 0, F = 0;
  for (int v = 0; v < n(); v++)
    if (comp[v] == c) V++;
  for (const auto& e : edges)
    if (comp[e.u] == c) E++;
  // Count traced walks belonging to the component (merged faces count once
  // per constituent walk for genus purposes).  Empty walks correspond
  // one-to-one to isolated vertices among the face's vertices.
  for (const auto& f : faces) {
    int empty_walks = 0;
    for (const auto& w : f.walks) {
      if (w.empty())
        empty_walks++;
      else if (comp[dart_vertex[w[0]]] == c)
        F++;
    }
    if (empty_walks > 0)
      for (int v : f.vertices)
        if (deg(v) == 0 && comp[v] == c) F++;
  }
  return 2 - (V - E + F);
}

inline long long EmbeddedGraph::euler_genus() const {
  long long g = 0;
  for (int c = 0; c < ncomp; c++) g += component_genus(c);
  return g;
}

inline bool EmbeddedGraph::orientable() const {
  std::vector<int> flip(n(), -2);
  for (int v0 = 0; v0 < n(); v0++) {
    if (flip[v0] != -2) continue;
    flip[v0] = 0;
    std::vector<int> stack{v0};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj[x]) {
        int want = edges[e].sign == +1 ? flip[x] : 1 - flip[x];
        if (flip[w] == -2) {
          flip[w] = want;
          stack.push_back(w);
        } else if (flip[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// -------------------------------------------------------------------- parser

inline EmbeddedGraph parse_document(const std::string& text) {
  EmbeddedGraph G;
  std::vector<long long> verts;
  struct RawEdge { long long id, u, v; int sign; int line; };
  struct RawRot { long long v; std::vector<std::pair<long long, int>> darts; int line; };
  struct RawRing { bool facial; std::vector<long long> vs; bool weak; int line; };
  std::vector<RawEdge> redges;
  std::vector<RawRot> rrots;
  std::vector<RawRing> rrings;
  std::vector<std::pair<std::vector<long long>, int>> routers;
  std::vector<std::tuple<long long, int, int>> rpre;  // vid, color, line

  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ln++;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError(ln, msg);
    };
    if (kw == "vertex") {
      long long id;
      if (!(ls >> id)) throw fail("expected vertex id");
      verts.push_back(id);
    } else if (kw == "edge") {
      RawEdge e{};
      e.sign = +1;
      e.line = ln;
      if (!(ls >> e.id >> e.u >> e.v)) throw fail("expected edge id and endpoints");
      std::string opt;
      if (ls >> opt) {
        int sg;
        if (opt != "sign" || !(ls >> sg) || (sg != 1 && sg != -1))
          throw fail("expected 'sign -1' or 'sign 1'");
        e.sign = sg;
      }
      redges.push_back(e);
    } else if (kw == "rot") {
      RawRot r{};
      r.line = ln;
      std::string vtok;
      if (!(ls >> vtok) || vtok.empty() || vtok.back() != ':')
        throw fail("expected 'rot <vid>:'");
      try {
        r.v = std::stoll(vtok.substr(0, vtok.size() - 1));
      } catch (...) {
        throw fail("bad vertex id in rot");
      }
      std::string dt;
      while (ls >> dt) {
        auto dot = dt.find('.');
        if (dot == std::string::npos) throw fail("dart must be <eid>.<0|1>");
        long long eid;
        int end;
        try {
          eid = std::stoll(dt.substr(0, dot));
          end = std::stoi(dt.substr(dot + 1));
        } catch (...) {
          throw fail("bad dart token");
        }
        if (end != 0 && end != 1) throw fail("dart end must be 0 or 1");
        r.darts.push_back({eid, end});
      }
      rrots.push_back(std::move(r));
    } else if (kw == "ring") {
      std::string kind;
      if (!(ls >> kind)) throw fail("expected ring kind");
      RawRing r{};
      r.line = ln;
      if (kind == "facial") {
        r.facial = true;
        long long v;
        while (ls >> v) r.vs.push_back(v);
        if (r.vs.size() < 3) throw fail("facial ring needs at least 3 vertices");
      } else if (kind == "vertex") {
        r.facial = false;
        long long v;
        if (!(ls >> v)) throw fail("expected ring vertex id");
        r.vs.push_back(v);
        std::string w;
        if (ls >> w) {
          if (w != "weak") throw fail("unexpected token after ring vertex");
          r.weak = true;
        }
      } else {
        throw fail("ring kind must be 'facial' or 'vertex'");
      }
      rrings.push_back(std::move(r));
    } else if (kw == "outer") {
      std::vector<long long> vs;
      long long v;
      while (ls >> v) vs.push_back(v);
      if (vs.empty()) throw fail("outer needs at least one vertex");
      routers.push_back({std::move(vs), ln});
    } else if (kw == "precoloring") {
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw fail("precoloring token must be v=c");
        long long v;
        int c;
        try {
          v = std::stoll(tok.substr(0, eq));
          c = std::stoi(tok.substr(eq + 1));
        } catch (...) {
          throw fail("bad precoloring token");
        }
        if (c < 0 || c > 2) throw fail("color must be 0, 1 or 2");
        rpre.push_back({v, c, ln});
      }
    } else {
      throw fail("unknown directive '" + kw + "'");
    }
  }

  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
    throw ParseError(0, "duplicate vertex id");
  G.vid = verts;
  std::map<long long, int> vidx;
  for (int i = 0; i < (int)verts.size(); i++) vidx[verts[i]] = i;
  auto vat = [&](long long id, int line) {
    auto it = vidx.find(id);
    if (it == vidx.end())
      throw ParseError(line, "unknown vertex " + std::to_string(id));
    return it->second;
  };

  std::sort(redges.begin(), redges.end(),
            [](const RawEdge& a, const RawEdge& b) { return a.id < b.id; });
  std::map<long long, int> eidx;
  for (const auto& re : redges) {
    if (eidx.count(re.id))
      throw ParseError(re.line, "duplicate edge id " + std::to_string(re.id));
    EdgeRec e;
    e.id = re.id;
    e.u = vat(re.u, re.line);
    e.v = vat(re.v, re.line);
    e.sign = re.sign;
    if (G.vid[e.u] > G.vid[e.v]) std::swap(e.u, e.v);
    eidx[re.id] = (int)G.edges.size();
    G.edges.push_back(e);
  }

  G.rot.assign(G.n(), {});
  std::vector<bool> has_rot(G.n(), false);
  for (const auto& rr : rrots) {
    int v = vat(rr.v, rr.line);
    if (has_rot[v]) throw ParseError(rr.line, "duplicate rot line");
    has_rot[v] = true;
    for (auto [eid, end] : rr.darts) {
      auto it = eidx.find(eid);
      if (it == eidx.end())
        throw ParseError(rr.line, "unknown edge " + std::to_string(eid));
      int e = it->second;
      // Dart ends in the document refer to the declared endpoint order,
      // which finalize() normalizes to vid[u] < vid[v]; recompute the end
      // from the vertex the rotation belongs to.
      int at0 = G.edges[e].u, at1 = G.edges[e].v;
      int d;
      if (at0 == v)
        d = dart_make(e, 0);
      else if (at1 == v)
        d = dart_make(e, 1);
      else
        throw ParseError(rr.line, "dart of edge " + std::to_string(eid) +
                                      " not incident with this vertex");
      G.rot[v].push_back(d);
    }
  }
  // Vertices with degree >= 1 but no rot line: default rotation by edge id.
  std::vector<std::vector<int>> degdarts(G.n());
  for (int e = 0; e < G.m(); e++) {
    degdarts[G.edges[e].u].push_back(dart_make(e, 0));
    degdarts[G.edges[e].v].push_back(dart_make(e, 1));
  }
  for (int v = 0; v < G.n(); v++)
    if (!has_rot[v]) G.rot[v] = degdarts[v];

  for (const auto& rr : rrings) {
    RingSpec r;
    r.kind = rr.facial ? RingSpec::facial : RingSpec::vertex;
    r.weak = rr.weak;
    for (long long id : rr.vs) r.cycle.push_back(vat(id, rr.line));
    G.rings.push_back(std::move(r));
  }
  for (auto& [vs, lo] : routers) {
    std::vector<int> walk;
    for (long long id : vs) walk.push_back(vat(id, lo));
    G.outer_walks.push_back(std::move(walk));
  }
  G.precoloring.assign(G.n(), -1);
  for (auto [v, c, lo] : rpre) G.precoloring[vat(v, lo)] = c;

  G.finalize();
  return G;
}

// ----------------------------------------------------------------- emitter

inline std::string emit_document(const EmbeddedGraph& G) {
  std::ostringstream out;
  for (long long id : G.vid) out << "vertex " << id << "\n";
  for (const auto& e : G.edges) {
    out << "edge " << e.id << " " << G.vid[e.u] << " " << G.vid[e.v];
    if (e.sign == -1) out << " sign -1";
    out << "\n";
  }
  auto dart_key = [&](int d) {
    return std::pair<long long, int>(G.edges[dart_edge(d)].id, dart_end(d));
  };
  for (int v = 0; v < G.n(); v++) {
    if (G.rot[v].empty()) continue;
    int k = (int)G.rot[v].size();
    int best = 0;
    for (int i = 1; i < k; i++)
      if (dart_key(G.rot[v][i]) < dart_key(G.rot[v][best])) best = i;
    out << "rot " << G.vid[v] << ":";
    for (int i = 0; i < k; i++) {
      int d = G.rot[v][(best + i) % k];
      out << " " << G.edges[dart_edge(d)].id << "." << dart_end(d);
    }
    out << "\n";
  }
  for (size_t ri = 0; ri < G.rings.size(); ri++) {
    const auto& r = G.rings[ri];
    if (r.kind == RingSpec::vertex) {
      out << "ring vertex " << G.vid[r.cycle[0]] << (r.weak ? " weak" : "")
          << "\n";
      continue;
    }
    // Choose, among the rotations/directions of the cycle that make the
    // parser pick the same ring face, the lexicographically smallest one.
    int k = (int)r.cycle.size();
    std::vector<long long> best;
    for (int dir = 0; dir < 2; dir++)
      for (int off = 0; off < k; off++) {
        std::vector<int> cand(k);
        for (int i = 0; i < k; i++)
          cand[i] = dir == 0 ? r.cycle[(off + i) % k]
                             : r.cycle[(off - i % k + 2 * k) % k];
        int e0 = G.find_edge(cand[0], cand[1]);
        int d0 = dart_make(e0, G.edges[e0].u == cand[0] ? 0 : 1);
        int chosen = -1;
        for (int side : {+1, -1}) {
          int f = G.signal_face[signal_make(d0, side)];
          if (walk_matches_cycle(G, G.faces[f].walks[0], r.cycle)) {
            chosen = f;
            break;
          }
        }
        if (chosen != G.ring_face[ri]) continue;
        std::vector<long long> ids(k);
        for (int i = 0; i < k; i++) ids[i] = G.vid[cand[i]];
        if (best.empty() || ids < best) best = ids;
      }
    if (best.empty()) throw GraphError("cannot emit ring representation");
    out << "ring facial";
    for (long long id : best) out << " " << id;
    out << "\n";
  }
  for (const auto& ow : G.outer_walks) {
    // Canonical form: rotate/reflect to the smallest id sequence.
    int k = (int)ow.size();
    std::vector<long long> best;
    for (int dir = 0; dir < 2; dir++)
      for (int off = 0; off < k; off++) {
        std::vector<long long> ids(k);
        for (int i = 0; i < k; i++)
          ids[i] = G.vid[dir == 0 ? ow[(off + i) % k]
                                  : ow[(off - i % k + 2 * k) % k]];
        if (best.empty() || ids < best) best = ids;
      }
    out << "outer";
    for (long long id : best) out << " " << id;
    out << "\n";
  }
  bool any = false;
  for (int v = 0; v < G.n(); v++) any |= G.precoloring.size() && G.precoloring[v] >= 0;
  if (any) {
    out << "precoloring";
    for (int v = 0; v < G.n(); v++)
      if (G.precoloring[v] >= 0)
        out << " " << G.vid[v] << "=" << G.precoloring[v];
    out << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------- constructors

// Build from explicit data; rotation given as neighbor lists in clockwise
// order (edge ids assigned 1..m by sorted endpoint pairs).
inline EmbeddedGraph build_graph(
    const std::vector<long long>& vertices,
    const std::vector<std::pair<long long, long long>>& edge_list,
    const std::map<long long, std::vector<long long>>& rotations = {},
    const std::vector<std::pair<long long, long long>>& negative_edges = {}) {
  EmbeddedGraph G;
  G.vid = vertices;
  std::sort(G.vid.begin(), G.vid.end());
  std::map<long long, int> vidx;
  for (int i = 0; i < G.n(); i++) vidx[G.vid[i]] = i;
  std::set<std::pair<long long, long long>> neg;
  for (auto [a, b] : negative_edges) neg.insert(std::minmax(a, b));
  std::map<std::pair<long long, long long>, int> epos;
  long long next_id = 1;
  for (auto [a, b] : edge_list) {
    EdgeRec e;
    e.id = next_id++;
    e.u = vidx.at(a);
    e.v = vidx.at(b);
    e.sign = neg.count(std::minmax(a, b)) ? -1 : +1;
    if (G.vid[e.u] > G.vid[e.v]) std::swap(e.u, e.v);
    epos[std::minmax(a, b)] = (int)G.edges.size();
    G.edges.push_back(e);
  }
  G.rot.assign(G.n(), {});
  for (int v = 0; v < G.n(); v++) {
    auto it = rotations.find(G.vid[v]);
    std::vector<long long> nb;
    if (it != rotations.end()) {
      nb = it->second;
    } else {
      for (const auto& [key, ei] : epos) {
        (void)ei;
        if (key.first == G.vid[v]) nb.push_back(key.second);
        else if (key.second == G.vid[v]) nb.push_back(key.first);
      }
      std::sort(nb.begin(), nb.end());
    }
    for (long long w : nb) {
      int e = epos.at(std::minmax(G.vid[v], w));
      G.rot[v].push_back(dart_make(e, G.edges[e].u == v ? 0 : 1));
    }
  }
  G.precoloring.assign(G.n(), -1);
  return G;  // caller adds rings, then calls finalize()
}

}  // namespace girth5
