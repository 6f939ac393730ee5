// 3-coloring precoloring extension with weak-ring semantics, criticality
// tests, subsumption, 4-cycle coloring types, and the two coloring claims
// for small two-ring cylinder graphs.  The solver is exact backtracking
// with forward checking over a fixed vertex order, so witnesses are
// reproducible.
#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

// Lightweight coloring instance decoupled from the embedding.
struct ColorInstance {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<int> fixed;      // -1 or forced color
  std::vector<int> forbidden;  // -1 or excluded color (weak rings)
  int colors = 3;

  static ColorInstance of(const EmbeddedGraph& G) {
    ColorInstance I;
    I.n = G.n();
    I.adj.assign(I.n, {});
    for (const auto& e : G.edges) {
      I.adj[e.u].push_back(e.v);
      I.adj[e.v].push_back(e.u);
    }
    I.fixed.assign(I.n, -1);
    I.forbidden.assign(I.n, -1);
    return I;
  }
  void drop_edge(int u, int v) {
    auto rm = [&](std::vector<int>& a, int x) {
      for (size_t i = 0; i < a.size(); i++)
        if (a[i] == x) {
          a.erase(a.begin() + i);
          return;
        }
    };
    rm(adj[u], v);
    rm(adj[v], u);
  }
};

namespace detail {

inline bool solve_colors(const ColorInstance& I, std::vector<int>& out) {
  int n = I.n;
  std::vector<int> domain(n, (1 << I.colors) - 1);
  for (int v = 0; v < n; v++) {
    if (I.fixed[v] >= 0) domain[v] = 1 << I.fixed[v];
    if (I.forbidden[v] >= 0) domain[v] &= ~(1 << I.forbidden[v]);
    if (domain[v] == 0) return false;
  }
  std::vector<int> color(n, -1);
  // Fixed ascending vertex order; colors ascending (determinism).
  std::vector<std::vector<int>> trail(n);
  std::function<bool(int)> go = [&](int v) -> bool {
    while (v < n && color[v] >= 0) v++;
    if (v == n) return true;
    int dom = domain[v];
    for (int c = 0; c < I.colors; c++) {
      if (!(dom >> c & 1)) continue;
      color[v] = c;
      bool ok = true;
      std::vector<int>& undo = trail[v];
      undo.clear();
      for (int w : I.adj[v]) {
        if (color[w] == c) { ok = false; break; }
        if (color[w] < 0 && (domain[w] >> c & 1)) {
          domain[w] &= ~(1 << c);
          undo.push_back(w);
          if (domain[w] == 0) { ok = false; break; }
        }
      }
      if (ok && go(v + 1)) return true;
      for (int w : undo) domain[w] |= 1 << c;
      color[v] = -1;
    }
    return false;
  };
  // Pre-assign fixed vertices so adjacent equal fixings fail fast.
  for (int v = 0; v < n; v++)
    if (I.fixed[v] >= 0) {
      color[v] = I.fixed[v];
      for (int w : I.adj[v])
        if (I.fixed[w] == I.fixed[v]) return false;
    }
  for (int v = 0; v < n; v++)
    if (color[v] >= 0)
      for (int w : I.adj[v])
        if (color[w] < 0) domain[w] &= ~(1 << color[v]);
  for (int v = 0; v < n; v++)
    if (color[v] < 0 && domain[v] == 0) return false;
  if (!go(0)) return false;
  out = color;
  return true;
}

}  // namespace detail

// A precoloring assigns a color to every ring vertex; proper on the union
// of the rings (weak vertex rings are isolated there, so unconstrained).
using Precoloring = std::map<int, int>;  // vertex index -> color

inline std::vector<int> ring_vertices_sorted(const EmbeddedGraph& G) {
  std::set<int> s = G.ring_vertex_set();
  return std::vector<int>(s.begin(), s.end());
}

inline bool precoloring_proper(const EmbeddedGraph& G, const Precoloring& phi) {
  auto rv = G.ring_vertex_set();
  for (int v : rv)
    if (!phi.count(v)) return false;
  for (const auto& r : G.rings) {
    if (r.kind != RingSpec::facial) continue;
    int k = (int)r.cycle.size();
    for (int i = 0; i < k; i++)
      if (phi.at(r.cycle[i]) == phi.at(r.cycle[(i + 1) % k])) return false;
  }
  return true;
}

// The weak/non-weak extension semantics: psi = phi on non-weak ring
// vertices, psi(v) != phi(v) on weak vertex rings.
inline void apply_precoloring(const EmbeddedGraph& G, const Precoloring& phi,
                              ColorInstance& I) {
  for (const auto& r : G.rings) {
    bool weak = r.kind == RingSpec::vertex && r.weak;
    for (int v : r.cycle) {
      if (weak)
        I.forbidden[v] = phi.at(v);
      else
        I.fixed[v] = phi.at(v);
    }
  }
}

inline std::optional<std::vector<int>> extends(const EmbeddedGraph& G,
                                               const Precoloring& phi) {
  if (!precoloring_proper(G, phi))
    throw GraphError("precoloring is not proper on the rings");
  ColorInstance I = ColorInstance::of(G);
  apply_precoloring(G, phi, I);
  std::vector<int> out;
  if (detail::solve_colors(I, out)) return out;
  return std::nullopt;
}

// All proper precolorings of the rings, lexicographic in sorted ring-vertex
// order.
inline std::vector<Precoloring> enumerate_precolorings(const EmbeddedGraph& G) {
  std::vector<int> rv = ring_vertices_sorted(G);
  // Adjacency restricted to ring edges.
  std::map<int, std::vector<int>> radj;
  for (const auto& r : G.rings) {
    if (r.kind != RingSpec::facial) continue;
    int k = (int)r.cycle.size();
    for (int i = 0; i < k; i++) {
      radj[r.cycle[i]].push_back(r.cycle[(i + 1) % k]);
      radj[r.cycle[(i + 1) % k]].push_back(r.cycle[i]);
    }
  }
  std::vector<Precoloring> out;
  Precoloring cur;
  std::function<void(size_t)> go = [&](size_t i) {
    if (i == rv.size()) {
      out.push_back(cur);
      return;
    }
    int v = rv[i];
    for (int c = 0; c < 3; c++) {
      bool ok = true;
      for (int w : radj[v]) {
        auto it = cur.find(w);
        if (it != cur.end() && it->second == c) ok = false;
      }
      if (!ok) continue;
      cur[v] = c;
      go(i + 1);
      cur.erase(v);
    }
  };
  go(0);
  return out;
}

inline bool graph_equals_rings(const EmbeddedGraph& G) {
  std::set<int> rv = G.ring_vertex_set();
  if ((int)rv.size() != G.n()) return false;
  std::set<int> re = G.ring_edge_set();
  return (int)re.size() == G.m();
}

struct CriticalityReport {
  bool critical = false;
  std::string reason;
  // For each non-ring edge index: a precoloring extending to G-e but not G.
  std::map<int, Precoloring> witnesses;
};

// R-criticality via single-edge deletions: colorability is monotone under
// subgraphs, so if some precoloring distinguishes a proper subgraph G' from
// G, it also distinguishes G-e for any edge e of G missing from G'.  Proper
// subgraphs with all edges but fewer vertices can only drop isolated
// internal vertices, which never affect extendability; their presence is
// checked separately.
inline CriticalityReport is_ring_critical(const EmbeddedGraph& G) {
  CriticalityReport rep;
  if (G.rings.empty()) {
    rep.reason = "no rings";
    return rep;
  }
  if (graph_equals_rings(G)) {
    rep.reason = "graph equals its rings";
    return rep;
  }
  std::set<int> rv = G.ring_vertex_set();
  for (int v = 0; v < G.n(); v++)
    if (!rv.count(v) && G.deg(v) == 0) {
      rep.reason = "isolated internal vertex";
      return rep;
    }
  std::set<int> re = G.ring_edge_set();
  std::vector<Precoloring> phis = enumerate_precolorings(G);
  // Precolorings that do not extend to G.
  std::vector<const Precoloring*> fails;
  ColorInstance base = ColorInstance::of(G);
  for (const auto& phi : phis) {
    ColorInstance I = base;
    apply_precoloring(G, phi, I);
    std::vector<int> out;
    if (!detail::solve_colors(I, out)) fails.push_back(&phi);
  }
  if (fails.empty()) {
    rep.reason = "every precoloring extends";
    return rep;
  }
  for (int e = 0; e < G.m(); e++) {
    if (re.count(e)) continue;
    bool found = false;
    for (const Precoloring* phi : fails) {
      ColorInstance I = base;
      I.drop_edge(G.edges[e].u, G.edges[e].v);
      apply_precoloring(G, *phi, I);
      std::vector<int> out;
      if (detail::solve_colors(I, out)) {
        rep.witnesses[e] = *phi;
        found = true;
        break;
      }
    }
    if (!found) {
      rep.reason = "edge " + std::to_string(G.edges[e].id) +
                   " has no distinguishing precoloring";
      return rep;
    }
  }
  rep.critical = true;
  rep.reason = "critical";
  return rep;
}

inline bool is_phi_critical(const EmbeddedGraph& G, const Precoloring& phi) {
  if (graph_equals_rings(G)) return false;
  std::set<int> rv = G.ring_vertex_set();
  for (int v = 0; v < G.n(); v++)
    if (!rv.count(v) && G.deg(v) == 0) return false;
  if (extends(G, phi)) return false;
  std::set<int> re = G.ring_edge_set();
  ColorInstance base = ColorInstance::of(G);
  for (int e = 0; e < G.m(); e++) {
    if (re.count(e)) continue;
    ColorInstance I = base;
    I.drop_edge(G.edges[e].u, G.edges[e].v);
    apply_precoloring(G, phi, I);
    std::vector<int> out;
    if (!detail::solve_colors(I, out)) return false;
  }
  return true;
}

// Greedy construction of a phi-critical subgraph of G (phi must not extend
// to G): repeatedly delete any non-ring edge whose deletion keeps phi
// non-extendable.
inline EmbeddedGraph phi_critical_subgraph(const EmbeddedGraph& G,
                                           const Precoloring& phi) {
  if (extends(G, phi)) throw GraphError("precoloring extends to the graph");
  ColorInstance I = ColorInstance::of(G);
  apply_precoloring(G, phi, I);
  std::set<int> re = G.ring_edge_set();
  std::set<int> removed;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int e = 0; e < G.m(); e++) {
      if (re.count(e) || removed.count(e)) continue;
      ColorInstance J = I;
      J.drop_edge(G.edges[e].u, G.edges[e].v);
      std::vector<int> out;
      if (!detail::solve_colors(J, out)) {
        I = J;
        removed.insert(e);
        progress = true;
      }
    }
  }
  // Materialize the subgraph (embedding restricted; rings kept).
  EmbeddedGraph H;
  H.vid = G.vid;
  std::map<int, int> keep;
  for (int e = 0; e < G.m(); e++) {
    if (removed.count(e)) continue;
    keep[e] = (int)H.edges.size();
    H.edges.push_back(G.edges[e]);
  }
  H.rot.assign(H.n(), {});
  for (int v = 0; v < G.n(); v++)
    for (int d : G.rot[v]) {
      auto it = keep.find(dart_edge(d));
      if (it != keep.end())
        H.rot[v].push_back(dart_make(it->second, dart_end(d)));
    }
  H.rings = G.rings;
  H.precoloring.assign(H.n(), -1);
  H.finalize();
  return H;
}

// ------------------------------------------------------------- subsumption

inline void require_same_rings(const EmbeddedGraph& H, const EmbeddedGraph& G) {
  if (H.rings.size() != G.rings.size()) throw GraphError("ring mismatch");
  for (size_t i = 0; i < H.rings.size(); i++) {
    const auto& a = H.rings[i];
    const auto& b = G.rings[i];
    if (a.kind != b.kind || a.weak != b.weak ||
        a.cycle.size() != b.cycle.size())
      throw GraphError("ring mismatch");
    for (size_t j = 0; j < a.cycle.size(); j++)
      if (H.vid[a.cycle[j]] != G.vid[b.cycle[j]]) throw GraphError("ring mismatch");
  }
}

// Every precoloring of the common rings extendable in H is extendable in G.
inline bool subsumes(const EmbeddedGraph& H, const EmbeddedGraph& G) {
  require_same_rings(H, G);
  auto phis = enumerate_precolorings(H);
  for (const auto& phi : phis) {
    if (!extends(H, phi)) continue;
    Precoloring phig;
    for (auto [v, c] : phi) phig[G.vindex.at(H.vid[v])] = c;
    if (!extends(G, phig)) return false;
  }
  return true;
}

// ---------------------------------------------------------- 4-cycle types

enum class FourCycleType { empty, x1x3, x2x4 };

inline FourCycleType four_cycle_type(const std::vector<int>& lambda,
                                     const std::array<int, 4>& C) {
  bool d13 = lambda[C[0]] != lambda[C[2]];
  bool d24 = lambda[C[1]] != lambda[C[3]];
  if (d13 && d24)
    throw GraphError("not a proper coloring of a 4-cycle");
  if (d13) return FourCycleType::x1x3;
  if (d24) return FourCycleType::x2x4;
  return FourCycleType::empty;
}

// ------------------------------------------------------- chromatic bounds

inline bool colorable(const EmbeddedGraph& G, int k) {
  if (G.n() > 64) throw GraphError("vertex budget exceeded");
  ColorInstance I = ColorInstance::of(G);
  I.colors = k;
  std::vector<int> out;
  return detail::solve_colors(I, out);
}

// ------------------------------------------- claims for two-ring graphs

struct BasicClaimReport {
  bool simultaneous_ok = false;  // one C1-coloring plus two vetoes suffices
  bool two_for_one_ok = false;   // any two vetoes on C1 met by one on C2
  // witnesses
  std::vector<int> sim_psi;      // coloring of C1 (by position in ring cycle)
  int sim_v1 = -1, sim_v2 = -1, sim_c1 = -1, sim_c2 = -1;
  std::map<std::array<int, 4>, std::pair<int, int>> two_one_witness;
};

// Checks the two coloring claims for a graph with two rings of length <= 4.
// C1 = rings[0], C2 = rings[1].
inline BasicClaimReport basic_claim_checks(const EmbeddedGraph& H) {
  if (H.rings.size() != 2) throw GraphError("two rings required");
  for (const auto& r : H.rings)
    if (r.kind != RingSpec::facial || r.cycle.size() > 4)
      throw GraphError("rings must be facial of length at most 4");
  const auto& C1 = H.rings[0].cycle;
  const auto& C2 = H.rings[1].cycle;
  BasicClaimReport rep;
  // Proper colorings of a ring cycle.
  auto ring_colorings = [&](const std::vector<int>& C) {
    std::vector<std::vector<int>> out;
    int k = (int)C.size();
    std::vector<int> cur(k, -1);
    std::function<void(int)> go = [&](int i) {
      if (i == k) {
        if (cur[0] != cur[k - 1]) out.push_back(cur);
        return;
      }
      for (int c = 0; c < 3; c++) {
        if (i > 0 && cur[i - 1] == c) continue;
        cur[i] = c;
        go(i + 1);
        cur[i] = -1;
      }
    };
    go(0);
    return out;
  };
  auto extends_with = [&](const std::vector<int>& fixC, const std::vector<int>& vals,
                          const std::vector<std::pair<int, int>>& vetoes) {
    ColorInstance I = ColorInstance::of(H);
    for (size_t i = 0; i < fixC.size(); i++) I.fixed[fixC[i]] = vals[i];
    for (auto [v, c] : vetoes) {
      if (I.fixed[v] >= 0) {
        if (I.fixed[v] == c) return false;
      } else if (I.forbidden[v] >= 0 && I.forbidden[v] != c) {
        // two distinct vetoes on one vertex: one admissible color remains
        int rem = 3 - c - I.forbidden[v];
        I.forbidden[v] = -1;
        I.fixed[v] = rem;
      } else {
        I.forbidden[v] = c;
      }
    }
    std::vector<int> out;
    return detail::solve_colors(I, out);
  };

  auto cols1 = ring_colorings(C1);
  auto cols2 = ring_colorings(C2);

  // (simultaneous) exists psi on C1, v1,v2 in C2, c1 != c2 such that every
  // proper coloring phi of C1+C2 matching psi with phi(v_i) != c_i extends.
  for (const auto& psi : cols1) {
    for (int v1 : C2)
      for (int v2 : C2)
        for (int c1 = 0; c1 < 3 && !rep.simultaneous_ok; c1++)
          for (int c2 = 0; c2 < 3; c2++) {
            if (c1 == c2) continue;
            // All phi = psi on C1, any proper coloring of C2 with vetoes.
            bool all = true;
            for (const auto& mu : cols2) {
              bool applicable = true;
              for (size_t i = 0; i < C2.size(); i++) {
                if (C2[i] == v1 && mu[i] == c1) applicable = false;
                if (C2[i] == v2 && mu[i] == c2) applicable = false;
              }
              if (!applicable) continue;
              ColorInstance I = ColorInstance::of(H);
              for (size_t i = 0; i < C1.size(); i++) I.fixed[C1[i]] = psi[i];
              for (size_t i = 0; i < C2.size(); i++) I.fixed[C2[i]] = mu[i];
              std::vector<int> out;
              if (!detail::solve_colors(I, out)) {
                all = false;
                break;
              }
            }
            if (all) {
              rep.simultaneous_ok = true;
              rep.sim_psi = psi;
              rep.sim_v1 = v1;
              rep.sim_v2 = v2;
              rep.sim_c1 = c1;
              rep.sim_c2 = c2;
            }
            if (rep.simultaneous_ok) break;
          }
    if (rep.simultaneous_ok) break;
  }

  // (two-for-one) for all distinct v1,v2 in C1 and c1 != c2, exists v in C2
  // and color c such that every coloring psi of C2 with psi(v) != c extends
  // to phi with phi(v1) != c1, phi(v2) != c2.
  rep.two_for_one_ok = true;
  for (int v1 : C1)
    for (int v2 : C1) {
      if (v1 == v2) continue;
      for (int c1 = 0; c1 < 3; c1++)
        for (int c2 = 0; c2 < 3; c2++) {
          if (c1 == c2) continue;
          bool found = false;
          for (int v : C2)
            for (int c = 0; c < 3 && !found; c++) {
              bool all = true;
              for (const auto& mu : cols2) {
                bool applicable = true;
                for (size_t i = 0; i < C2.size(); i++)
                  if (C2[i] == v && mu[i] == c) applicable = false;
                if (!applicable) continue;
                ColorInstance I = ColorInstance::of(H);
                for (size_t i = 0; i < C2.size(); i++) I.fixed[C2[i]] = mu[i];
                I.forbidden[v1] = c1;
                I.forbidden[v2] = c2;
                std::vector<int> out;
                if (!detail::solve_colors(I, out)) {
                  all = false;
                  break;
                }
              }
              if (all) {
                found = true;
                rep.two_one_witness[{v1, v2, c1, c2}] = {v, c};
              }
            }
          if (!found) rep.two_for_one_ok = false;
        }
    }
  (void)extends_with;
  return rep;
}

}  // namespace girth5
