// Planar-embedded Brauer trees: rotation systems, the canonical perversity
// function, Green's walk, and the character/edge peeling bijection.
//
// Vertices are 0-based ids; edges are 1-based (edge i corresponds to the
// simple module T_i only after a walk assigns indices, so plain edge ids
// carry no meaning beyond identity).
#pragma once

#include "perveq/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perveq {

struct BrauerTree {
  int exceptional = 0;   // vertex id
  Int multiplicity = 1;  // exceptional multiplicity m >= 1
  // rotation[v] = incident edge ids in anti-clockwise order
  std::vector<std::vector<int>> rotation;
  std::vector<std::array<int, 2>> edge_ends;  // index 1..e (slot 0 unused)
  std::vector<std::string> vertex_name;       // optional labels, "" if none

  int num_vertices() const { return static_cast<int>(rotation.size()); }
  int num_edges() const { return static_cast<int>(edge_ends.size()) - 1; }

  int other_end(int edge, int v) const {
    const auto& e = edge_ends[edge];
    return e[0] == v ? e[1] : e[0];
  }

  void check() const {
    int V = num_vertices(), E = num_edges();
    if (E < 1 || V != E + 1) throw std::invalid_argument("not a tree");
    std::vector<int> seen(E + 1, 0);
    for (int v = 0; v < V; ++v)
      for (int e : rotation[v]) {
        if (e < 1 || e > E) throw std::invalid_argument("bad edge id");
        if (edge_ends[e][0] != v && edge_ends[e][1] != v)
          throw std::invalid_argument("rotation lists a non-incident edge");
        ++seen[e];
      }
    for (int e = 1; e <= E; ++e)
      if (seen[e] != 2) throw std::invalid_argument("edge not listed twice");
    if (distances().empty()) throw std::invalid_argument("tree disconnected");
    if (multiplicity < 1) throw std::invalid_argument("multiplicity < 1");
  }

  // BFS distance of every vertex from the exceptional one; empty if the
  // graph is disconnected.
  std::vector<int> distances() const {
    std::vector<int> dist(num_vertices(), -1);
    std::queue<int> q;
    dist[exceptional] = 0;
    q.push(exceptional);
    int reached = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : rotation[v]) {
        int w = other_end(e, v);
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
          ++reached;
        }
      }
    }
    if (reached != num_vertices()) return {};
    return dist;
  }

  // f(edge) = distance from the exceptional vertex to the nearer endpoint.
  std::vector<int> edge_depths() const {
    auto dist = distances();
    std::vector<int> f(num_edges() + 1, 0);
    for (int e = 1; e <= num_edges(); ++e)
      f[e] = std::min(dist[edge_ends[e][0]], dist[edge_ends[e][1]]);
    return f;
  }

  // The star with e edges in anti-clockwise order around the exceptional
  // centre (vertex 0); edge i ends at leaf i.
  static BrauerTree star(int e, Int mult) {
    if (e < 1 || mult < 1) throw std::invalid_argument("star(e, m)");
    BrauerTree t;
    t.exceptional = 0;
    t.multiplicity = mult;
    t.rotation.resize(e + 1);
    t.edge_ends.resize(e + 1);
    t.vertex_name.resize(e + 1);
    for (int i = 1; i <= e; ++i) {
      t.rotation[0].push_back(i);
      t.rotation[i] = {i};
      t.edge_ends[i] = {0, i};
    }
    return t;
  }

  // A line with `right` edges on one side of the exceptional vertex and
  // `left` on the other; boundary-to-exceptional edge order is
  // 1..right then right+1..right+left.
  static BrauerTree line(int right, int left, Int mult = 1) {
    int e = right + left;
    if (e < 1 || right < 0 || left < 0) throw std::invalid_argument("line");
    BrauerTree t;
    t.multiplicity = mult;
    t.rotation.resize(e + 1);
    t.edge_ends.resize(e + 1);
    t.vertex_name.resize(e + 1);
    // vertices: 0 = exceptional; 1..right on one side (1 adjacent), ...
    t.exceptional = 0;
    int vid = 0;
    // right side: vertex ids right..1 from boundary; edge i joins vertex
    // (right - i + 1) chain ... build explicitly instead:
    // right-side vertices: r_1 (boundary) ... r_right (adjacent to 0)
    // edges: i in 1..right joins r_i and r_{i+1}, with r_{right+1} = 0.
    std::vector<int> rv(right + 1), lv(left + 1);
    for (int i = 1; i <= right; ++i) rv[i] = ++vid;
    for (int i = 1; i <= left; ++i) lv[i] = ++vid;
    auto add_edge = [&](int id, int u, int v) {
      t.edge_ends[id] = {u, v};
    };
    for (int i = 1; i <= right; ++i)
      add_edge(i, rv[i], i == right ? 0 : rv[i + 1]);
    for (int i = 1; i <= left; ++i)
      add_edge(right + i, lv[i], i == left ? 0 : lv[i + 1]);
    // rotations: interior line vertices see both edges; order is immaterial
    // for a 2-valent vertex in a planar line
    for (int i = 1; i <= right; ++i) {
      t.rotation[rv[i]].push_back(i);
      if (i > 1) t.rotation[rv[i]].push_back(i - 1);
    }
    for (int i = 1; i <= left; ++i) {
      t.rotation[lv[i]].push_back(right + i);
      if (i > 1) t.rotation[lv[i]].push_back(right + i - 1);
    }
    if (right > 0) t.rotation[0].push_back(right);
    if (left > 0) t.rotation[0].push_back(right + left);
    return t;
  }
};

// Perversity values on edges 1..e.
struct PerversityFn {
  std::vector<Int> values;  // index 1..e, slot 0 unused

  explicit PerversityFn(int e = 0) : values(e + 1, 0) {}
  Int& operator[](int i) { return values[i]; }
  Int operator[](int i) const { return values[i]; }
  int size() const { return static_cast<int>(values.size()) - 1; }
  bool operator==(const PerversityFn&) const = default;
};

// pi_0(S) = r - f(S) shifted by alpha.
inline PerversityFn canonical_pi(const BrauerTree& t, Int alpha = 0) {
  auto f = t.edge_depths();
  Int r = 0;
  for (int e = 1; e <= t.num_edges(); ++e) r = std::max(r, Int(f[e]));
  PerversityFn pi(t.num_edges());
  for (int e = 1; e <= t.num_edges(); ++e) pi[e] = r - f[e] + alpha;
  return pi;
}

// Green's walk: anti-clockwise boundary walk labelling every edge once with
// a plain index i (giving A_i) and once with delta(j).
struct WalkLabeling {
  std::vector<int> delta;       // permutation of 1..e
  std::vector<int> edge_of_A;   // i -> edge id carrying plain label i
  std::vector<int> edge_of_S;   // i -> edge id of the simple module S_i
  std::vector<Int> pi_of_A;     // i -> pi_alpha(A_i)
  bool start_was_maximal = true;

  int e() const { return static_cast<int>(delta.size()) - 1; }
  // Green correspondent of A_i: top T_i, socle T_{delta^{-1}(i)}, with the
  // parity of pi_alpha(A_i) selecting the short/long dimension class.
  int delta_inv(int i) const {
    for (int j = 1; j <= e(); ++j)
      if (delta[j] == i) return j;
    throw std::logic_error("delta not a permutation");
  }
};

namespace detail {
inline int mod1e(Int x, int e) {
  Int r = ((x - 1) % e + e) % e;
  return static_cast<int>(r) + 1;
}
}  // namespace detail

inline WalkLabeling greens_walk(const BrauerTree& t, int start_vertex,
                                Int alpha) {
  const int e = t.num_edges();
  auto dist = t.distances();
  int maxd = *std::max_element(dist.begin(), dist.end());

  WalkLabeling w;
  w.start_was_maximal = dist[start_vertex] == maxd;
  if (start_vertex == t.exceptional)
    throw std::invalid_argument("walk cannot start at the exceptional vertex");

  // boundary walk: 2e slots; from an arrival edge take its anti-clockwise
  // successor in the rotation at the current vertex
  std::vector<int> slot_edge(2 * e);
  int v = start_vertex;
  int cur = t.rotation[v][0];
  for (int s = 0; s < 2 * e; ++s) {
    slot_edge[s] = cur;
    v = t.other_end(cur, v);
    const auto& rot = t.rotation[v];
    auto it = std::find(rot.begin(), rot.end(), cur);
    cur = rot[(it - rot.begin() + 1) % rot.size()];
  }

  // slot s carries: delta(s'/2 + 1) if s' even, plain (s'+3)/2 if s' odd,
  // where s' = (s - alpha) mod 2e
  w.delta.assign(e + 1, 0);
  w.edge_of_A.assign(e + 1, 0);
  std::vector<int> plain_of_edge(e + 1, 0), dlab_of_edge(e + 1, 0);
  for (int s = 0; s < 2 * e; ++s) {
    Int sp = ((s - alpha) % (2 * e) + 2 * e) % (2 * e);
    int edge = slot_edge[s];
    if (sp % 2 == 0) {
      dlab_of_edge[edge] = static_cast<int>(sp / 2 + 1);
    } else {
      int i = detail::mod1e((sp + 3) / 2, e);
      plain_of_edge[edge] = i;
      w.edge_of_A[i] = edge;
    }
  }
  for (int edge = 1; edge <= e; ++edge) {
    if (!plain_of_edge[edge] || !dlab_of_edge[edge])
      throw std::logic_error("walk failed to label an edge twice");
    // edge A_i also carries label delta(j): delta(j) = i
    w.delta[dlab_of_edge[edge]] = plain_of_edge[edge];
  }

  // S-indices from the alpha-shifted canonical perversity on edges
  auto pi = canonical_pi(t, alpha);
  w.pi_of_A.assign(e + 1, 0);
  w.edge_of_S.assign(e + 1, 0);
  for (int i = 1; i <= e; ++i) {
    int edge = w.edge_of_A[i];
    Int p = pi[edge];
    w.pi_of_A[i] = p;
    Int c = p / 2;
    int sidx = (p % 2 == 0) ? detail::mod1e(w.delta_inv(i) + c, e)
                            : detail::mod1e(i + c, e);
    if (w.edge_of_S[sidx] != 0)
      throw std::logic_error("S-index assigned twice");
    w.edge_of_S[sidx] = edge;
  }
  return w;
}

// Default walk start: lexicographically least vertex at maximal distance.
inline int default_walk_start(const BrauerTree& t) {
  auto dist = t.distances();
  int maxd = *std::max_element(dist.begin(), dist.end());
  for (int v = 0; v < t.num_vertices(); ++v)
    if (dist[v] == maxd) return v;
  throw std::logic_error("no vertex found");
}

struct ValidationReport {
  bool increasing_ok = true;  // pi grows towards the exceptional vertex
  bool parity_ok = true;      // (-1)^pi matches the supplied signs
  std::vector<std::pair<int, int>> bad_pairs;  // offending (outer, inner)
  std::vector<int> bad_parity;

  bool ok() const { return increasing_ok && parity_ok; }
};

// Checks the two conditions for a perversity function on the simple modules
// of a Brauer tree block: strict increase towards the exceptional vertex at
// shared non-exceptional vertices, and the sign condition.  `parities` holds
// +1/-1 per edge (index 1..e).
inline ValidationReport validate_pi(const BrauerTree& t, const PerversityFn& pi,
                                    const std::vector<int>& parities) {
  ValidationReport rep;
  auto dist = t.distances();
  auto f = t.edge_depths();
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (v == t.exceptional) continue;
    for (int e1 : t.rotation[v])
      for (int e2 : t.rotation[v]) {
        if (e1 == e2) continue;
        // e2 closer to the exceptional vertex than e1, sharing v
        if (f[e2] < f[e1] && pi[e2] - pi[e1] <= 0) {
          rep.increasing_ok = false;
          rep.bad_pairs.push_back({e1, e2});
        }
      }
  }
  for (int e = 1; e <= t.num_edges(); ++e) {
    int want = pi[e] % 2 == 0 ? 1 : -1;
    if (parities[e] != want) {
      rep.parity_ok = false;
      rep.bad_parity.push_back(e);
    }
  }
  return rep;
}

// The peeling bijection between non-exceptional vertices and edges: a vertex
// of valency 1 pairs with its unique edge; remove both and repeat.
inline std::vector<int> char_edge_bijection(const BrauerTree& t) {
  int V = t.num_vertices();
  std::vector<int> degree(V, 0), paired(V, 0);
  std::vector<char> edge_gone(t.num_edges() + 1, 0), vert_gone(V, 0);
  for (int v = 0; v < V; ++v) degree[v] = static_cast<int>(t.rotation[v].size());
  int remaining = t.num_edges();
  while (remaining > 0) {
    bool progress = false;
    for (int v = 0; v < V; ++v) {
      if (vert_gone[v] || v == t.exceptional || degree[v] != 1) continue;
      int edge = 0;
      for (int e : t.rotation[v])
        if (!edge_gone[e]) edge = e;
      paired[v] = edge;
      vert_gone[v] = 1;
      edge_gone[edge] = 1;
      --remaining;
      int w = t.other_end(edge, v);
      --degree[v];
      --degree[w];
      progress = true;
    }
    if (!progress) throw std::logic_error("peeling stuck");
  }
  return paired;  // vertex -> edge (0 for the exceptional vertex)
}

}  // namespace perveq
