#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gol/algebra.hpp"

namespace gol {

// Nonempty proper subset of the vertex idempotents of a split basic algebra;
// e = sum of the selected idempotents.
struct IdempotentSelection {
  std::vector<int> chosen;  // vertex indices, normalized ascending

  IdempotentSelection() = default;
  explicit IdempotentSelection(std::vector<int> verts) : chosen(std::move(verts)) {
    std::sort(chosen.begin(), chosen.end());
    chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  }

  void check(const BasisAlgebra& a) const {
    if (chosen.empty()) throw std::invalid_argument("IdempotentSelection: empty selection");
    if (int(chosen.size()) >= a.vertex_count())
      throw std::invalid_argument("IdempotentSelection: selection must be proper");
    for (int v : chosen)
      if (v < 0 || v >= a.vertex_count())
        throw std::invalid_argument("IdempotentSelection: vertex index out of range");
  }
  bool selected(int v) const { return std::binary_search(chosen.begin(), chosen.end(), v); }
  Vec idempotent(const BasisAlgebra& a) const {
    check(a);
    Vec e(a.dim, 0);
    for (int v : chosen)
      for (int i = 0; i < a.dim; ++i) e[i] = nrm(e[i] + a.vertices[v][i], a.ring.modulus());
    return e;
  }
  IdempotentSelection complement(const BasisAlgebra& a) const {
    check(a);
    IdempotentSelection c;
    for (int v = 0; v < a.vertex_count(); ++v)
      if (!selected(v)) c.chosen.push_back(v);
    return c;
  }
};

namespace detail {

// Coordinates of v in the given independent rows; unique when the rows are
// independent, which all callers guarantee.
inline Vec express(const Mat& rows, const Vec& v) {
  Mat rhs(rows.ring(), 1, rows.cols());
  rhs.set_row(0, v);
  return solve_left(rows, rhs).row(0);
}

}  // namespace detail

// Corner algebra eAe. Basis: the algebra basis elements fixed by x -> exe when
// every basis element projects to itself or to zero (walk bases do); otherwise
// a basis of the projection image, with structure constants re-extracted.
// Vertex idempotents are the selected ones; radical generators span e rad(A) e.
inline BasisAlgebra corner_algebra(const BasisAlgebra& a, const IdempotentSelection& s) {
  s.check(a);
  Vec e = s.idempotent(a);

  std::vector<int> kept;
  bool adapted = true;
  std::vector<Vec> proj(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    proj[i] = a.mul(a.mul(e, unit_vec(a.dim, i)), e);
    if (proj[i] == unit_vec(a.dim, i))
      kept.push_back(i);
    else if (!std::all_of(proj[i].begin(), proj[i].end(), [](i64 x) { return x == 0; }))
      adapted = false;
  }

  // basis rows of eAe inside a's coordinate space
  Mat rows(a.ring, 0, a.dim);
  if (adapted) {
    rows = Mat(a.ring, int(kept.size()), a.dim);
    for (std::size_t k = 0; k < kept.size(); ++k) rows.set_row(int(k), unit_vec(a.dim, kept[k]));
  } else {
    RowSpan image(a.ring, a.dim);
    for (const auto& v : proj) image.insert(v);
    rows = image.to_mat();
  }

  BasisAlgebra c;
  c.ring = a.ring;
  c.dim = rows.rows();
  c.table.assign(c.dim, std::vector<Vec>(c.dim));
  for (int i = 0; i < c.dim; ++i)
    for (int j = 0; j < c.dim; ++j) c.table[i][j] = detail::express(rows, a.mul(rows.row(i), rows.row(j)));
  c.unit = detail::express(rows, e);
  for (int v : s.chosen) c.vertices.push_back(detail::express(rows, a.vertices[v]));
  RowSpan rad = radical_ideal(a);
  RowSpan rad_proj(a.ring, a.dim);
  for (const auto& r : rad.rows()) rad_proj.insert(a.mul(a.mul(e, r), e));
  for (const auto& r : rad_proj.rows()) c.radical_gens.push_back(detail::express(rows, r));

  CheckReport rep = check_algebra(c);
  if (!rep.ok) {
    std::string msg = "corner_algebra: corner fails its structural checks:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw std::runtime_error(msg);
  }
  return c;
}

// Quotient A/AeA by the two-sided ideal generated by e (linear span closure
// under left/right multiplication). Basis: the standard basis elements that
// remain independent modulo the ideal, in index order. Vertices are the images
// of the unselected idempotents; the selected ones must die in the quotient.
inline BasisAlgebra quotient_by_trace_ideal(const BasisAlgebra& a, const IdempotentSelection& s) {
  s.check(a);
  Vec e = s.idempotent(a);
  RowSpan ideal = detail::ideal_span(a, {e});

  std::vector<int> reps;
  RowSpan probe = ideal;
  for (int i = 0; i < a.dim; ++i)
    if (probe.insert(unit_vec(a.dim, i))) reps.push_back(i);
  const int q = int(reps.size());
  if (q + ideal.dim() != a.dim) throw std::runtime_error("quotient_by_trace_ideal: representative count");

  // ideal rows + representatives form an independent spanning set, so the
  // last q coordinates of the unique expression give the quotient coordinates
  Mat stack(a.ring, a.dim, a.dim);
  for (int r = 0; r < ideal.dim(); ++r) stack.set_row(r, ideal.rows()[r]);
  for (int r = 0; r < q; ++r) stack.set_row(ideal.dim() + r, unit_vec(a.dim, reps[r]));
  auto quot_coords = [&](const Vec& v) {
    Vec full = detail::express(stack, v);
    return Vec(full.begin() + ideal.dim(), full.end());
  };

  BasisAlgebra b;
  b.ring = a.ring;
  b.dim = q;
  b.table.assign(q, std::vector<Vec>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      b.table[i][j] = quot_coords(a.mul(unit_vec(a.dim, reps[i]), unit_vec(a.dim, reps[j])));
  b.unit = quot_coords(a.unit);
  const Vec zero(q, 0);
  for (int v = 0; v < a.vertex_count(); ++v) {
    Vec img = quot_coords(a.vertices[v]);
    if (s.selected(v)) {
      if (img != zero) throw std::runtime_error("quotient_by_trace_ideal: selected idempotent survives");
    } else {
      b.vertices.push_back(std::move(img));
    }
  }
  RowSpan rad = radical_ideal(a);
  RowSpan rad_img(a.ring, q);
  for (const auto& r : rad.rows()) rad_img.insert(quot_coords(r));
  for (const auto& r : rad_img.rows()) b.radical_gens.push_back(r);

  CheckReport rep = check_algebra(b);
  if (!rep.ok) {
    std::string msg = "quotient_by_trace_ideal: quotient fails its structural checks:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw std::runtime_error(msg);
  }
  return b;
}

// Decategorified bookkeeping of cutting an algebra along an idempotent: the
// simples split between the corner and the quotient, nothing is lost.
struct RecollementReport {
  int total_vertices = 0;
  int corner_vertices = 0;
  int quotient_vertices = 0;
  int corner_dim = 0;
  int quotient_dim = 0;
  IntMat corner_cartan;
  IntMat quotient_cartan;
};

inline RecollementReport recollement_check(const BasisAlgebra& a, const IdempotentSelection& s) {
  BasisAlgebra corner = corner_algebra(a, s);
  BasisAlgebra quot = quotient_by_trace_ideal(a, s);
  RecollementReport r;
  r.total_vertices = a.vertex_count();
  r.corner_vertices = corner.vertex_count();
  r.quotient_vertices = quot.vertex_count();
  r.corner_dim = corner.dim;
  r.quotient_dim = quot.dim;
  r.corner_cartan = cartan_matrix(corner);
  r.quotient_cartan = cartan_matrix(quot);
  if (r.corner_vertices + r.quotient_vertices != r.total_vertices)
    throw std::runtime_error("recollement_check: vertex counts do not add up");
  return r;
}

}  // namespace gol
