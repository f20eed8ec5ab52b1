#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gol/algebra.hpp"

namespace gol {

// A finite tree with a cyclic ordering of the edges around every vertex and
// at most one distinguished vertex carrying a multiplicity >= 1. Simple
// modules of the associated algebra correspond to tree edges.
struct BrauerTree {
  int vertices = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> cyclic;  // cyclic[v] = incident edges, in order
  int exceptional_vertex = -1;           // -1 when every multiplicity is 1
  i64 multiplicity = 1;

  int edge_count() const { return int(edges.size()); }

  i64 mult_at(int v) const { return v == exceptional_vertex ? multiplicity : 1; }

  int degree(int v) const { return int(cyclic[v].size()); }

  // Walk length around v: multiplicity times the number of incident edges.
  i64 cycle_length(int v) const { return mult_at(v) * degree(v); }

  // Next edge after e in the cyclic order at v, advanced l steps.
  int next_edge(int v, int e, i64 l) const {
    const auto& c = cyclic[v];
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] == e) return c[(i + std::size_t(l % i64(c.size()))) % c.size()];
    throw std::invalid_argument("BrauerTree::next_edge: edge not incident to vertex");
  }
};

inline void validate_tree(const BrauerTree& t) {
  if (t.vertices < 2) throw std::invalid_argument("tree: need at least two vertices");
  if (int(t.edges.size()) != t.vertices - 1)
    throw std::invalid_argument("tree: edge count must be vertex count minus one");
  for (const auto& e : t.edges) {
    if (e[0] < 0 || e[0] >= t.vertices || e[1] < 0 || e[1] >= t.vertices)
      throw std::invalid_argument("tree: edge endpoint out of range");
    if (e[0] == e[1]) throw std::invalid_argument("tree: self-loop");
  }
  // connectivity (union-find); with |E| = |V|-1 this also rules out cycles
  std::vector<int> parent(t.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : t.edges) {
    int a = find(e[0]), b = find(e[1]);
    if (a == b) throw std::invalid_argument("tree: not acyclic");
    parent[a] = b;
  }
  if (int(t.cyclic.size()) != t.vertices)
    throw std::invalid_argument("tree: cyclic order list must cover every vertex");
  for (int v = 0; v < t.vertices; ++v) {
    std::vector<int> incident;
    for (int e = 0; e < t.edge_count(); ++e)
      if (t.edges[e][0] == v || t.edges[e][1] == v) incident.push_back(e);
    std::vector<int> given = t.cyclic[v];
    std::vector<int> sorted_given = given;
    std::sort(sorted_given.begin(), sorted_given.end());
    if (sorted_given != incident)
      throw std::invalid_argument("tree: cyclic order at vertex " + std::to_string(v) +
                                  " is not a permutation of its incident edges");
  }
  if (t.exceptional_vertex < -1 || t.exceptional_vertex >= t.vertices)
    throw std::invalid_argument("tree: exceptional vertex out of range");
  if (t.multiplicity < 1) throw std::invalid_argument("tree: multiplicity must be >= 1");
  if (t.exceptional_vertex == -1 && t.multiplicity != 1)
    throw std::invalid_argument("tree: multiplicity > 1 requires an exceptional vertex");
}

// Path with n edges: vertices 0..n, edge i joins i and i+1, no exceptional
// vertex.
inline BrauerTree stem(int n) {
  if (n < 1) throw std::invalid_argument("stem: need at least one edge");
  BrauerTree t;
  t.vertices = n + 1;
  for (int i = 0; i < n; ++i) t.edges.push_back({i, i + 1});
  t.cyclic.assign(n + 1, {});
  for (int v = 0; v <= n; ++v) {
    if (v > 0) t.cyclic[v].push_back(v - 1);
    if (v < n) t.cyclic[v].push_back(v);
  }
  return t;
}

// Star with n edges around center 0; optional multiplicity at the center.
inline BrauerTree star(int n, i64 mu = 1) {
  if (n < 1) throw std::invalid_argument("star: need at least one edge");
  BrauerTree t;
  t.vertices = n + 1;
  t.cyclic.assign(n + 1, {});
  for (int i = 0; i < n; ++i) {
    t.edges.push_back({0, i + 1});
    t.cyclic[0].push_back(i);
    t.cyclic[i + 1].push_back(i);
  }
  if (mu > 1) {
    t.exceptional_vertex = 0;
    t.multiplicity = mu;
  }
  return t;
}

// ----- projective shape predictions -----

// Radical structure of one projective: top S_top, two uniserial strands
// descending through the listed simples, and (usually) a socle isomorphic to
// the top. has_socle = false describes a projective whose strands end without
// a repeated top composition factor.
struct ProjectivePrediction {
  int top = 0;
  std::vector<int> strand_a;
  std::vector<int> strand_b;
  bool has_socle = true;

  i64 dim() const { return 1 + i64(strand_a.size()) + i64(strand_b.size()) + (has_socle ? 1 : 0); }
};

inline std::vector<ProjectivePrediction> predict_projectives(const BrauerTree& t) {
  validate_tree(t);
  std::vector<ProjectivePrediction> out;
  for (int e = 0; e < t.edge_count(); ++e) {
    ProjectivePrediction p;
    p.top = e;
    for (int side = 0; side < 2; ++side) {
      int v = t.edges[e][side];
      auto& strand = side == 0 ? p.strand_a : p.strand_b;
      for (i64 l = 1; l < t.cycle_length(v); ++l) strand.push_back(t.next_edge(v, e, l));
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline IntMat predicted_cartan(const std::vector<ProjectivePrediction>& preds, int nsimples) {
  IntMat c(preds.size(), std::vector<i64>(nsimples, 0));
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const auto& p = preds[i];
    c[i][p.top] += p.has_socle ? 2 : 1;
    for (int s : p.strand_a) c[i][s] += 1;
    for (int s : p.strand_b) c[i][s] += 1;
  }
  return c;
}

inline IntMat predicted_cartan(const BrauerTree& t) {
  return predicted_cartan(predict_projectives(t), t.edge_count());
}

// Projective shapes of the basic algebra of the principal block of the
// classical Schur algebra S(p, p) in characteristic p: P_1 = [S1; S2; S1],
// diamonds P_i with strands S_{i-1} and S_{i+1} for 1 < i < p, and the
// socle-free P_p = [S_p; S_{p-1}]. Total dimension 4p - 3.
inline std::vector<ProjectivePrediction> schur_basic_prediction(i64 p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("schur_basic_prediction: p must be prime");
  const int n = int(p);
  std::vector<ProjectivePrediction> out;
  for (int i = 0; i < n; ++i) {
    ProjectivePrediction pr;
    pr.top = i;
    if (i > 0) pr.strand_a.push_back(i - 1);
    if (i + 1 < n) pr.strand_b.push_back(i + 1);
    pr.has_socle = i + 1 < n;
    out.push_back(std::move(pr));
  }
  return out;
}

// ----- the walk algebra of a tree -----

namespace detail {

enum class WalkKind { Idem, Walk, Socle };

struct WalkElt {
  WalkKind kind;
  int edge;    // source edge
  int vertex;  // walk vertex (Walk only)
  i64 len;     // walk length (Walk only)
};

}  // namespace detail

// Basis algebra over F_p on the walk basis of the tree: one idempotent and
// one socle element per edge, plus the proper walks around each endpoint.
// Products concatenate walks around a common vertex; a completed cycle is the
// socle element of its starting edge (the full cycles around both endpoints
// of an edge are identified); everything longer, and every mixed-vertex
// concatenation, is zero. All structure constants are 0 or 1.
inline BasisAlgebra to_algebra(const BrauerTree& t, i64 p) {
  validate_tree(t);
  if (!is_prime(p)) throw std::invalid_argument("to_algebra: p must be prime");
  using detail::WalkElt;
  using detail::WalkKind;

  std::vector<WalkElt> basis;
  std::vector<int> idem_of_edge(t.edge_count(), -1), socle_of_edge(t.edge_count(), -1);
  for (int e = 0; e < t.edge_count(); ++e) {
    idem_of_edge[e] = int(basis.size());
    basis.push_back({WalkKind::Idem, e, -1, 0});
    for (int side = 0; side < 2; ++side) {
      int v = t.edges[e][side];
      for (i64 l = 1; l < t.cycle_length(v); ++l) basis.push_back({WalkKind::Walk, e, v, l});
    }
    socle_of_edge[e] = int(basis.size());
    basis.push_back({WalkKind::Socle, e, -1, 0});
  }
  const int dim = int(basis.size());

  auto target = [&](const WalkElt& x) {
    return x.kind == WalkKind::Walk ? t.next_edge(x.vertex, x.edge, x.len) : x.edge;
  };
  auto walk_index = [&](int e, int v, i64 l) {
    // walks are laid out contiguously after the edge idempotent, first side first
    int base = idem_of_edge[e] + 1;
    if (v == t.edges[e][0]) return base + int(l) - 1;
    base += int(t.cycle_length(t.edges[e][0])) - 1;
    if (v == t.edges[e][1]) return base + int(l) - 1;
    throw std::logic_error("to_algebra: walk vertex not on edge");
  };

  BasisAlgebra a;
  a.ring = Ring::fp(p);
  a.dim = dim;
  a.table.assign(dim, std::vector<Vec>(dim, Vec(dim, 0)));
  for (int i = 0; i < dim; ++i) {
    const WalkElt& x = basis[i];
    for (int j = 0; j < dim; ++j) {
      const WalkElt& y = basis[j];
      // product x * y: y acts first; x must start where y ends
      Vec& out = a.table[i][j];
      if (x.kind == WalkKind::Idem) {
        if (target(y) == x.edge) out[j] = 1;
        continue;
      }
      if (y.kind == WalkKind::Idem) {
        if (x.edge == y.edge) out[i] = 1;
        continue;
      }
      if (x.kind == WalkKind::Socle || y.kind == WalkKind::Socle) continue;  // rad * soc = 0
      if (x.vertex != y.vertex || x.edge != target(y)) continue;
      i64 total = y.len + x.len;
      if (total < t.cycle_length(x.vertex))
        out[walk_index(y.edge, y.vertex, total)] = 1;
      else if (total == t.cycle_length(x.vertex))
        out[socle_of_edge[y.edge]] = 1;
    }
  }
  a.unit.assign(dim, 0);
  for (int e = 0; e < t.edge_count(); ++e) {
    a.unit[idem_of_edge[e]] = 1;
    a.vertices.push_back(unit_vec(dim, idem_of_edge[e]));
  }
  for (int i = 0; i < dim; ++i)
    if (basis[i].kind != WalkKind::Idem) a.radical_gens.push_back(unit_vec(dim, i));

  CheckReport rep = check_algebra(a);
  if (!rep.ok) {
    std::string msg = "to_algebra: constructed algebra fails its structural checks:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw std::runtime_error(msg);
  }
  return a;
}

}  // namespace gol
