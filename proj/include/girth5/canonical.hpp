// Canonical forms for embedded graphs with rings.  The key is the minimal
// traversal code over all starting darts and both orientations, so equal
// keys coincide with isomorphism of ring-labeled combinatorial maps (up to
// relabeling, reflection, and switching of edge signs).
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "girth5/graph.hpp"

namespace girth5 {

struct CanonicalForm {
  std::string key;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key == b.key;
  }
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.key < b.key;
  }
};

namespace detail {

// Traversal code starting at dart d0 with global orientation o (+1: read
// rotations forward, -1: backward).  Vertices are labeled in discovery
// order; each vertex's rotation is emitted from its entry dart in the
// direction given by its accumulated flip.  Edge signs are emitted relative
// to the flips (switching-invariant).
inline std::string traversal_code(const EmbeddedGraph& G, int d0, int o) {
  int n = G.n();
  std::vector<int> label(n, -1), flip(n, 0), entry(n, -1);
  std::vector<int> order;
  label[G.dart_from(d0)] = 0;
  flip[G.dart_from(d0)] = o;
  entry[G.dart_from(d0)] = d0;
  order.push_back(G.dart_from(d0));
  std::string code;
  code.reserve(8 * G.m());
  for (size_t qi = 0; qi < order.size(); qi++) {
    int v = order[qi];
    int deg = G.deg(v);
    int pos0 = G.rot_pos[entry[v]];
    code += "|";
    for (int i = 0; i < deg; i++) {
      int pos = ((pos0 + flip[v] * i) % deg + deg) % deg;
      int d = G.rot[v][pos];
      int e = dart_edge(d);
      int w = G.other_end(e, v);
      if (label[w] < 0) {
        label[w] = (int)order.size();
        flip[w] = flip[v] * G.edges[e].sign;
        entry[w] = dart_opposite(d);
        order.push_back(w);
      }
      int eff = G.edges[e].sign * flip[v] * flip[w];
      code += std::to_string(label[w]);
      code += eff == 1 ? "+" : "-";
    }
  }
  if ((int)order.size() != n) {
    // disconnected: canonicalize remaining components recursively would be
    // needed; mark the code so equal keys still imply isomorphism of the
    // reached component plus identical leftover counts.
    code += "#rest" + std::to_string(n - (int)order.size());
  }
  // Ring annotation under the relabeling.
  std::vector<std::string> rcodes;
  for (const auto& r : G.rings) {
    std::string rc = r.kind == RingSpec::facial ? "F" : (r.weak ? "W" : "V");
    if (r.kind == RingSpec::facial) {
      // minimal rotation/direction of the relabeled cycle
      int k = (int)r.cycle.size();
      std::vector<int> lab(k);
      for (int i = 0; i < k; i++) lab[i] = label[r.cycle[i]];
      std::vector<int> best;
      for (int dir = 0; dir < 2; dir++)
        for (int s = 0; s < k; s++) {
          std::vector<int> cand(k);
          for (int i = 0; i < k; i++)
            cand[i] = lab[((s + (dir ? -i : i)) % k + k) % k];
          if (best.empty() || cand < best) best = cand;
        }
      for (int x : best) rc += ":" + std::to_string(x);
    } else {
      rc += ":" + std::to_string(label[r.cycle[0]]);
    }
    rcodes.push_back(rc);
  }
  std::sort(rcodes.begin(), rcodes.end());
  for (const auto& rc : rcodes) code += "/" + rc;
  return code;
}

}  // namespace detail

inline CanonicalForm canonical_form(const EmbeddedGraph& G) {
  CanonicalForm cf;
  if (G.m() == 0) {
    cf.key = "empty" + std::to_string(G.n());
    return cf;
  }
  for (int d = 0; d < 2 * G.m(); d++)
    for (int o : {+1, -1}) {
      std::string code = detail::traversal_code(G, d, o);
      if (cf.key.empty() || code < cf.key) cf.key = code;
    }
  return cf;
}

// Abstract (embedding-oblivious) graph isomorphism with optional ring
// correspondence, by backtracking on sorted-degree vertex order.  Intended
// for desk-scale instances only.
inline bool are_isomorphic_abstract(const EmbeddedGraph& G,
                                    const EmbeddedGraph& H,
                                    bool respect_rings = true) {
  int n = G.n();
  if (n != H.n() || G.m() != H.m() || G.rings.size() != H.rings.size())
    return false;
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; v++) dg[v] = G.deg(v);
  for (int v = 0; v < n; v++) dh[v] = H.deg(v);
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  // ring membership signature per vertex: sorted list of (kind,len,weak)
  auto ring_sig = [](const EmbeddedGraph& X) {
    std::vector<std::vector<int>> sig(X.n());
    for (const auto& r : X.rings)
      for (int v : r.cycle)
        sig[v].push_back(((int)r.kind << 8) | (r.length() << 1) | r.weak);
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
  };
  std::vector<std::vector<int>> sg = ring_sig(G), sh = ring_sig(H);
  std::vector<int> map(n, -1), used(n, 0);
  // order G vertices by decreasing degree for pruning
  std::vector<int> order(n);
  for (int i = 0; i < n; i++) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return dg[a] > dg[b]; });
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == n) {
      if (!respect_rings) return true;
      // rings of G must map onto rings of H (as unordered cycles)
      std::vector<char> matched(H.rings.size(), 0);
      for (const auto& r : G.rings) {
        bool found = false;
        for (size_t j = 0; j < H.rings.size() && !found; j++) {
          if (matched[j]) continue;
          const auto& q = H.rings[j];
          if (q.kind != r.kind || q.weak != r.weak ||
              q.cycle.size() != r.cycle.size())
            continue;
          std::vector<int> im;
          for (int v : r.cycle) im.push_back(map[v]);
          std::set<int> a(im.begin(), im.end());
          std::set<int> b(q.cycle.begin(), q.cycle.end());
          if (a == b) {
            matched[j] = 1;
            found = true;
          }
        }
        if (!found) return false;
      }
      return true;
    }
    int v = order[i];
    for (int w = 0; w < n; w++) {
      if (used[w] || dh[w] != dg[v] || sh[w] != sg[v]) continue;
      bool ok = true;
      for (auto [x, e] : G.adj[v]) {
        (void)e;
        if (map[x] >= 0 && H.find_edge(w, map[x]) < 0) ok = false;
      }
      if (!ok) continue;
      // mapped-neighbor counts must agree (reverse adjacency check)
      int cnt_g = 0;
      for (auto [x, e] : G.adj[v]) {
        (void)e;
        if (map[x] >= 0) cnt_g++;
      }
      int cnt_h = 0;
      for (auto [y, e] : H.adj[w]) {
        (void)e;
        if (used[y]) cnt_h++;
      }
      if (cnt_g != cnt_h) continue;
      map[v] = w;
      used[w] = 1;
      if (go(i + 1)) return true;
      map[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  return go(0);
}

}  // namespace girth5
