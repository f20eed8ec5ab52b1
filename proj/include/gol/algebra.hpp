#pragma once

// Finite-dimensional algebras over F_p presented by structure constants, and
// their left modules. The engine assumes (and checks) the split basic shape:
// quotient by the radical isomorphic to a product of copies of F_p, one
// primitive idempotent per isomorphism class of simple modules.
//
// Conventions: elements are coordinate row vectors in the given basis; module
// action matrices use the column convention act(b*b') = act(b) * act(b').

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gol/exact.hpp"
#include "gol/rand.hpp"

namespace gol {

using Vec = std::vector<i64>;
using IntMat = std::vector<std::vector<i64>>;

inline Vec unit_vec(int dim, int pos) {
  Vec v(dim, 0);
  v.at(pos) = 1;
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

struct BasisAlgebra {
  Ring ring = Ring::fp(2);
  int dim = 0;
  // table[i][j] = coordinates of b_i * b_j
  std::vector<std::vector<Vec>> table;
  Vec unit;
  // Orthogonal primitive idempotents summing to the unit, one per simple.
  std::vector<Vec> vertices;
  // Vectors generating the radical as a two-sided ideal.
  std::vector<Vec> radical_gens;

  int vertex_count() const { return int(vertices.size()); }

  Vec mul(const Vec& x, const Vec& y) const {
    require_shape(x, "BasisAlgebra::mul");
    require_shape(y, "BasisAlgebra::mul");
    const i64 p = ring.p;
    Vec r(dim, 0);
    for (int i = 0; i < dim; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (y[j] == 0) continue;
        i64 c = x[i] * y[j] % p;
        const Vec& t = table[i][j];
        for (int k = 0; k < dim; ++k) r[k] = (r[k] + c * t[k]) % p;
      }
    }
    return r;
  }

  // coords(b_i * y) = coords(y) * lmat(i);  lmat(i)(l, k) = table[i][l][k]
  Mat left_mult_matrix(int i) const {
    Mat m(ring, dim, dim);
    for (int l = 0; l < dim; ++l) m.set_row(l, table[i][l]);
    return m;
  }
  // coords(y * b_j) = coords(y) * rmat(j);  rmat(j)(l, k) = table[l][j][k]
  Mat right_mult_matrix(int j) const {
    Mat m(ring, dim, dim);
    for (int l = 0; l < dim; ++l) m.set_row(l, table[l][j]);
    return m;
  }

  void require_shape(const Vec& v, const char* where) const {
    if (int(v.size()) != dim) throw std::invalid_argument(std::string(where) + ": bad vector length");
  }
};

struct LeftModule {
  Ring ring = Ring::fp(2);
  int dim = 0;
  std::vector<Mat> action;  // one dim x dim matrix per algebra basis element

  // act(x)(v) for an algebra element x and a module vector v (column sense).
  Vec act(const Vec& x, const Vec& v) const {
    if (int(v.size()) != dim) throw std::invalid_argument("LeftModule::act: bad vector length");
    const i64 p = ring.p;
    Vec r(dim, 0);
    for (std::size_t i = 0; i < action.size(); ++i) {
      if (x[i] == 0) continue;
      for (int a = 0; a < dim; ++a) {
        i64 acc = 0;
        for (int b = 0; b < dim; ++b) acc += action[i](a, b) * v[b] % p;
        r[a] = (r[a] + x[i] * (acc % p)) % p;
      }
    }
    return r;
  }
  Mat act_matrix(const Vec& x) const {
    Mat r(ring, dim, dim);
    for (std::size_t i = 0; i < action.size(); ++i) {
      if (x[i] == 0) continue;
      r = r + action[i].scaled(x[i]);
    }
    return r;
  }
};

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    if (failures.size() < 32) failures.push_back(std::move(what));
  }
};

// ----- structural checks -----

namespace detail {

// Two-sided ideal span generated by the given vectors.
inline RowSpan ideal_span(const BasisAlgebra& a, const std::vector<Vec>& gens) {
  RowSpan span(a.ring, a.dim);
  std::vector<Vec> work;
  for (const auto& g : gens)
    if (span.insert(g)) work.push_back(g);
  while (!work.empty()) {
    Vec v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < a.dim; ++i) {
      Vec left = a.mul(unit_vec(a.dim, i), v);
      if (span.insert(left)) work.push_back(std::move(left));
      Vec right = a.mul(v, unit_vec(a.dim, i));
      if (span.insert(right)) work.push_back(std::move(right));
    }
  }
  return span;
}

// True if powers of the ideal reach zero. I^{k+1} = I * I^k sits inside I^k,
// so a stalled nonzero dimension means the chain stabilized and never dies.
inline bool span_nilpotent(const BasisAlgebra& a, const RowSpan& ideal) {
  std::vector<Vec> cur(ideal.rows().begin(), ideal.rows().end());
  for (int step = 0; step <= a.dim; ++step) {
    if (cur.empty()) return true;
    RowSpan next(a.ring, a.dim);
    for (const auto& u : ideal.rows())
      for (const auto& w : cur) next.insert(a.mul(u, w));
    if (next.dim() == int(cur.size())) return false;
    cur.assign(next.rows().begin(), next.rows().end());
  }
  return false;
}

}  // namespace detail

inline RowSpan radical_ideal(const BasisAlgebra& a) {
  return detail::ideal_span(a, a.radical_gens);
}

// Validates associativity, unit, idempotent axioms, radical nilpotency and
// the split basic quotient. Returns every failed axiom (capped).
inline CheckReport check_algebra(const BasisAlgebra& a) {
  CheckReport rep;
  if (!a.ring.is_field()) {
    rep.fail("ring: base must be F_p");
    return rep;
  }
  if (a.dim <= 0 || int(a.table.size()) != a.dim || int(a.unit.size()) != a.dim) {
    rep.fail("shape: dim/table/unit sizes inconsistent");
    return rep;
  }
  for (int i = 0; i < a.dim; ++i) {
    if (int(a.table[i].size()) != a.dim) { rep.fail("shape: table row " + std::to_string(i)); return rep; }
    for (int j = 0; j < a.dim; ++j)
      if (int(a.table[i][j].size()) != a.dim) { rep.fail("shape: table entry"); return rep; }
  }

  // associativity via one-sided multiplication matrices
  std::vector<Mat> lmat, rmat;
  lmat.reserve(a.dim);
  rmat.reserve(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    lmat.push_back(a.left_mult_matrix(i));
    rmat.push_back(a.right_mult_matrix(i));
  }
  for (int i = 0; i < a.dim && rep.ok; ++i)
    for (int j = 0; j < a.dim && rep.ok; ++j) {
      const Vec& ij = a.table[i][j];
      for (int k = 0; k < a.dim; ++k) {
        Vec lhs = apply_row(ij, rmat[k]);         // (b_i b_j) b_k
        Vec rhs = apply_row(a.table[j][k], lmat[i]);  // b_i (b_j b_k)
        if (lhs != rhs) {
          rep.fail("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
          break;
        }
      }
    }

  for (int i = 0; i < a.dim; ++i) {
    if (a.mul(a.unit, unit_vec(a.dim, i)) != unit_vec(a.dim, i)) {
      rep.fail("unit: 1 * b_" + std::to_string(i) + " != b_" + std::to_string(i));
      break;
    }
    if (a.mul(unit_vec(a.dim, i), a.unit) != unit_vec(a.dim, i)) {
      rep.fail("unit: b_" + std::to_string(i) + " * 1 != b_" + std::to_string(i));
      break;
    }
  }

  // idempotents: orthogonal, idempotent, complete
  const int nv = a.vertex_count();
  Vec esum(a.dim, 0);
  for (int u = 0; u < nv; ++u) {
    const Vec& e = a.vertices[u];
    if (int(e.size()) != a.dim) { rep.fail("vertex " + std::to_string(u) + ": bad length"); continue; }
    if (is_zero_vec(e)) rep.fail("vertex " + std::to_string(u) + ": zero idempotent");
    if (a.mul(e, e) != e) rep.fail("vertex " + std::to_string(u) + ": not idempotent");
    for (int w = 0; w < nv; ++w) {
      if (u == w) continue;
      if (!is_zero_vec(a.mul(e, a.vertices[w])))
        rep.fail("vertices " + std::to_string(u) + "," + std::to_string(w) + ": not orthogonal");
    }
    for (int k = 0; k < a.dim; ++k) esum[k] = nrm(esum[k] + e[k], a.ring.p);
  }
  if (esum != a.unit) rep.fail("vertices: sum differs from unit");

  // radical: nilpotent two-sided ideal with split semisimple quotient
  RowSpan ideal = radical_ideal(a);
  if (!detail::span_nilpotent(a, ideal)) rep.fail("radical: generated ideal is not nilpotent");
  if (ideal.dim() != a.dim - nv)
    rep.fail("radical: ideal dimension " + std::to_string(ideal.dim()) + " != dim - #vertices = " +
             std::to_string(a.dim - nv));
  RowSpan full(a.ring, a.dim);
  for (const auto& r : ideal.rows()) full.insert(r);
  for (const auto& e : a.vertices) full.insert(e);
  if (full.dim() != a.dim) rep.fail("split basic: radical + idempotents do not span");

  return rep;
}

inline CheckReport check_module(const BasisAlgebra& a, const LeftModule& m) {
  CheckReport rep;
  if (int(m.action.size()) != a.dim) {
    rep.fail("module: one action matrix per basis element required");
    return rep;
  }
  for (const auto& mat : m.action)
    if (mat.rows() != m.dim || mat.cols() != m.dim || mat.ring() != m.ring) {
      rep.fail("module: action matrix shape/ring");
      return rep;
    }
  for (int i = 0; i < a.dim && rep.ok; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Mat lhs = m.action[i] * m.action[j];
      Mat rhs(m.ring, m.dim, m.dim);
      for (int k = 0; k < a.dim; ++k)
        if (a.table[i][j][k] != 0) rhs = rhs + m.action[k].scaled(a.table[i][j][k]);
      if (!(lhs == rhs)) {
        rep.fail("module: act(b_i)act(b_j) != act(b_i b_j) at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
        break;
      }
    }
  Mat u = m.act_matrix(a.unit);
  if (!(u == Mat::identity(m.ring, m.dim))) rep.fail("module: unit does not act as identity");
  return rep;
}

// ----- radical series and Cartan data -----

struct RadicalSeries {
  std::vector<int> dims;          // dim rad^k(m), k = 0..L (ends with 0)
  std::vector<std::vector<i64>> layers;  // layers[k][v] = mult of S_v in rad^k/rad^{k+1}
  int loewy_length() const { return int(layers.size()); }
};

inline LeftModule regular_module(const BasisAlgebra& a) {
  LeftModule m;
  m.ring = a.ring;
  m.dim = a.dim;
  // column convention: act(b_i) * coords(y)^T = coords(b_i y)^T = (y * lmat(i))^T
  for (int i = 0; i < a.dim; ++i) m.action.push_back(a.left_mult_matrix(i).transpose());
  return m;
}

namespace detail {

inline RowSpan full_span(Ring r, int dim) {
  RowSpan s(r, dim);
  for (int i = 0; i < dim; ++i) s.insert(unit_vec(dim, i));
  return s;
}

// span of act(r)(v) over radical ideal basis r and subspace basis v
inline RowSpan radical_step(const LeftModule& m, const RowSpan& ideal, const RowSpan& cur) {
  RowSpan next(m.ring, m.dim);
  for (const auto& r : ideal.rows()) {
    Mat mr = m.act_matrix(r);
    for (const auto& v : cur.rows()) {
      Vec w(m.dim, 0);
      for (int i = 0; i < m.dim; ++i) {
        i64 acc = 0;
        for (int j = 0; j < m.dim; ++j) acc += mr(i, j) * v[j] % m.ring.p;
        w[i] = acc % m.ring.p;
      }
      next.insert(w);
    }
  }
  return next;
}

}  // namespace detail

inline RadicalSeries radical_series(const BasisAlgebra& a, const LeftModule& m) {
  RadicalSeries rs;
  RowSpan ideal = radical_ideal(a);
  std::vector<RowSpan> chain;
  chain.push_back(detail::full_span(m.ring, m.dim));
  while (chain.back().dim() > 0) {
    RowSpan next = detail::radical_step(m, ideal, chain.back());
    if (next.dim() >= chain.back().dim())
      throw std::runtime_error("radical_series: radical not nilpotent on module");
    chain.push_back(std::move(next));
  }
  for (const auto& s : chain) rs.dims.push_back(s.dim());
  const int nv = a.vertex_count();
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    std::vector<i64> mult(nv, 0);
    i64 total = 0;
    for (int v = 0; v < nv; ++v) {
      Mat ev = m.act_matrix(a.vertices[v]);
      RowSpan probe(m.ring, m.dim);
      for (const auto& r : chain[k + 1].rows()) probe.insert(r);
      int base = probe.dim();
      for (const auto& r : chain[k].rows()) {
        Vec w(m.dim, 0);
        for (int i = 0; i < m.dim; ++i) {
          i64 acc = 0;
          for (int j = 0; j < m.dim; ++j) acc += ev(i, j) * r[j] % m.ring.p;
          w[i] = acc % m.ring.p;
        }
        probe.insert(w);
      }
      mult[v] = probe.dim() - base;
      total += mult[v];
    }
    if (total != chain[k].dim() - chain[k + 1].dim())
      throw std::runtime_error("radical_series: layer multiplicities do not add up (non-split layer?)");
    rs.layers.push_back(std::move(mult));
  }
  return rs;
}

// Submodule on an explicit basis (rows); actions re-expressed in that basis.
inline LeftModule submodule(const BasisAlgebra& a, const LeftModule& m, const RowSpan& basis) {
  LeftModule sub;
  sub.ring = m.ring;
  sub.dim = basis.dim();
  Mat b = basis.to_mat();
  for (int i = 0; i < a.dim; ++i) {
    Mat img(m.ring, sub.dim, m.dim);
    for (int t = 0; t < sub.dim; ++t) {
      Vec w(m.dim, 0);
      for (int r = 0; r < m.dim; ++r) {
        i64 acc = 0;
        for (int c = 0; c < m.dim; ++c) acc += m.action[i](r, c) * b(t, c) % m.ring.p;
        w[r] = acc % m.ring.p;
      }
      img.set_row(t, w);
    }
    // coords: solve X * b = img (rows are images expressed in basis rows)
    Mat x = solve_left(b, img);
    sub.action.push_back(x.transpose());  // column convention
  }
  return sub;
}

// Left projective A*e for an idempotent e: basis + module structure.
struct ProjectiveModule {
  RowSpan basis;       // rows: coordinate vectors in A
  LeftModule module;   // action in that basis
};

inline ProjectiveModule projective_module(const BasisAlgebra& a, const Vec& idem) {
  RowSpan span(a.ring, a.dim);
  for (int k = 0; k < a.dim; ++k) span.insert(a.mul(unit_vec(a.dim, k), idem));
  ProjectiveModule p{span, submodule(a, regular_module(a), span)};
  return p;
}

inline IntMat cartan_matrix(const BasisAlgebra& a) {
  const int nv = a.vertex_count();
  IntMat c(nv, std::vector<i64>(nv, 0));
  for (int i = 0; i < nv; ++i) {
    ProjectiveModule p = projective_module(a, a.vertices[i]);
    RadicalSeries rs = radical_series(a, p.module);
    for (const auto& layer : rs.layers)
      for (int j = 0; j < nv; ++j) c[i][j] += layer[j];
  }
  return c;
}

// dim Ext^1(S_i, S_j) = multiplicity of S_j in rad P_i / rad^2 P_i.
inline i64 ext1_dim(const BasisAlgebra& a, int i, int j) {
  if (i < 0 || i >= a.vertex_count() || j < 0 || j >= a.vertex_count())
    throw std::invalid_argument("ext1_dim: vertex out of range");
  ProjectiveModule p = projective_module(a, a.vertices[i]);
  RadicalSeries rs = radical_series(a, p.module);
  if (rs.layers.size() < 2) return 0;
  return rs.layers[1][j];
}

inline int loewy_length(const BasisAlgebra& a) {
  return radical_series(a, regular_module(a)).loewy_length();
}

// Scalar by which b_i acts on the simple S_v: lambda(i, v) solves
// residue(b_i) = sum_v lambda(i, v) * residue(e_v) in A/rad.
inline Mat simple_scalars(const BasisAlgebra& a) {
  RowSpan ideal = radical_ideal(a);
  const int nv = a.vertex_count();
  Mat e(a.ring, nv, a.dim);
  for (int v = 0; v < nv; ++v) e.set_row(v, ideal.reduce(a.vertices[v]));
  Mat rhs(a.ring, a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) rhs.set_row(i, ideal.reduce(unit_vec(a.dim, i)));
  return solve_left(e, rhs);
}

inline LeftModule simple_module(const BasisAlgebra& a, int v) {
  if (v < 0 || v >= a.vertex_count()) throw std::invalid_argument("simple_module: vertex out of range");
  Mat lam = simple_scalars(a);  // dim x nv
  LeftModule s;
  s.ring = a.ring;
  s.dim = 1;
  for (int i = 0; i < a.dim; ++i) {
    Mat m(a.ring, 1, 1);
    m.set(0, 0, lam(i, v));
    s.action.push_back(m);
  }
  return s;
}

// ----- projective covers and syzygies -----

struct CoverData {
  std::vector<int> top_mult;          // multiplicity of S_v in top(m)
  std::vector<int> block_vertex;      // vertex of each cover block
  std::vector<Vec> generators;        // lifted generator in m per block
};

namespace detail {

inline CoverData top_generators(const BasisAlgebra& a, const LeftModule& m) {
  RowSpan ideal = radical_ideal(a);
  RowSpan cur = full_span(m.ring, m.dim);
  RowSpan rad = radical_step(m, ideal, cur);
  CoverData cd;
  cd.top_mult.assign(a.vertex_count(), 0);
  RowSpan probe(m.ring, m.dim);
  for (const auto& r : rad.rows()) probe.insert(r);
  for (int v = 0; v < a.vertex_count(); ++v) {
    Mat ev = m.act_matrix(a.vertices[v]);
    for (int u = 0; u < m.dim; ++u) {
      Vec w(m.dim, 0);
      for (int i = 0; i < m.dim; ++i) w[i] = ev(i, u);  // ev * unit_vec(u)
      if (probe.insert(w)) {
        cd.top_mult[v] += 1;
        cd.block_vertex.push_back(v);
        cd.generators.push_back(std::move(w));
      }
    }
  }
  if (probe.dim() != m.dim)
    throw std::runtime_error("top_generators: idempotent images fail to span the top");
  return cd;
}

}  // namespace detail

// Kernel of the projective cover P(m) -> m. No projective-summand stripping is
// performed: the result is the cover kernel, exactly.
inline LeftModule syzygy(const BasisAlgebra& a, const LeftModule& m) {
  if (m.dim == 0) return m;
  CoverData cd = detail::top_generators(a, m);
  // assemble cover P = ⊕ P_{v(t)} and the map matrix into m
  std::vector<ProjectiveModule> blocks;
  int total = 0;
  for (int v : cd.block_vertex) {
    blocks.push_back(projective_module(a, a.vertices[v]));
    total += blocks.back().module.dim;
  }
  LeftModule cover;
  cover.ring = m.ring;
  cover.dim = total;
  for (int i = 0; i < a.dim; ++i) {
    Mat act(m.ring, total, total);
    int off = 0;
    for (const auto& b : blocks) {
      for (int r = 0; r < b.module.dim; ++r)
        for (int c = 0; c < b.module.dim; ++c) act.set(off + r, off + c, b.module.action[i](r, c));
      off += b.module.dim;
    }
    cover.action.push_back(std::move(act));
  }
  // cover basis element (block t, row r) corresponds to algebra element
  // blocks[t].basis.row(r); map: x |-> act(x)(generator_t)
  Mat phi(m.ring, total, m.dim);
  {
    int off = 0;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
      const Mat bmat = blocks[t].basis.to_mat();
      for (int r = 0; r < bmat.rows(); ++r) {
        Vec img = m.act(bmat.row(r), cd.generators[t]);
        phi.set_row(off + r, img);
      }
      off += bmat.rows();
    }
  }
  Mat ker = left_kernel_fp(phi);
  RowSpan kspan(m.ring, total);
  for (int i = 0; i < ker.rows(); ++i) kspan.insert(ker.row(i));
  if (kspan.dim() != ker.rows()) throw std::runtime_error("syzygy: kernel basis degenerate");
  return submodule(a, cover, kspan);
}

// ----- module isomorphism -----

inline std::vector<std::vector<i64>> layer_profile(const BasisAlgebra& a, const LeftModule& m) {
  if (m.dim == 0) return {};
  return radical_series(a, m).layers;
}

// Dimension + radical layer profile first, then an intertwiner search. The
// randomized invertibility search uses its own fixed seed: results are
// deterministic for fixed inputs. For 1-dimensional modules the test is exact.
inline bool module_isomorphic(const BasisAlgebra& a, const LeftModule& x, const LeftModule& y) {
  if (x.dim != y.dim) return false;
  if (x.dim == 0) return true;
  if (layer_profile(a, x) != layer_profile(a, y)) return false;
  // solve T * act_x(b_i) = act_y(b_i) * T
  const int n = x.dim;
  const int unknowns = n * n;
  Mat sys(x.ring, a.dim * unknowns, unknowns);
  for (int g = 0; g < a.dim; ++g) {
    const Mat& ax = x.action[g];
    const Mat& ay = y.action[g];
    // condition entry (r, c): sum_k T(r,k) ax(k,c) - ay(r,k) T(k,c) = 0
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int eq = g * unknowns + r * n + c;
        for (int k = 0; k < n; ++k) {
          sys.add_at(eq, r * n + k, ax(k, c));
          sys.add_at(eq, k * n + c, -ay(r, k));
        }
      }
  }
  Mat sol = right_kernel_fp(sys);
  if (sol.rows() == 0) return false;
  auto try_mat = [&](const Vec& coeffs) {
    Mat t(x.ring, n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        i64 acc = 0;
        for (int s = 0; s < sol.rows(); ++s) acc += coeffs[s] * sol(s, r * n + c) % x.ring.p;
        t.set(r, c, acc);
      }
    return rank_fp(t) == n;
  };
  for (int s = 0; s < sol.rows(); ++s) {
    Vec c(sol.rows(), 0);
    c[s] = 1;
    if (try_mat(c)) return true;
  }
  SeededRng rng(0xA11CEull);
  for (int trial = 0; trial < 200; ++trial) {
    Vec c(sol.rows(), 0);
    for (auto& v : c) v = rng.below(x.ring.p);
    if (try_mat(c)) return true;
  }
  return false;
}

// Least k in [1, bound] with Omega^k(S_v) isomorphic to S_v; 0 when the orbit
// hits the zero module (projective simple). Throws if bound is exceeded.
inline int omega_orbit_period(const BasisAlgebra& a, int v, int bound = 64) {
  LeftModule target = simple_module(a, v);
  LeftModule cur = target;
  for (int k = 1; k <= bound; ++k) {
    cur = syzygy(a, cur);
    if (cur.dim == 0) return 0;
    if (module_isomorphic(a, cur, target)) return k;
  }
  throw std::runtime_error("omega_orbit_period: bound exceeded");
}

// ----- brute-force group algebra construction -----

// F_p G from a group multiplication table (table[i][j] = index of g_i * g_j).
// The radical is found by exhaustive search over all p^n coefficient vectors:
// a vector belongs iff the two-sided ideal it generates is nilpotent, and that
// set is exactly rad(F_p G), so vectors already inside the collected span can
// be skipped soundly. Vertex idempotents are lifted from the quotient by
// fixed-point iteration (x <- 3x^2 - 2x^3) along the nilpotent radical.
// Budget: p^n <= 10^6, else an error; lifting caps at 64 iterations.
inline BasisAlgebra group_algebra_from_table(const std::vector<std::vector<int>>& table, i64 p) {
  const int n = int(table.size());
  if (n == 0) throw std::invalid_argument("group_algebra_from_table: empty table");
  for (const auto& row : table) {
    if (int(row.size()) != n) throw std::invalid_argument("group_algebra_from_table: ragged table");
    for (int x : row)
      if (x < 0 || x >= n) throw std::invalid_argument("group_algebra_from_table: entry out of range");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          throw std::invalid_argument("group_algebra_from_table: table not associative");
  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok = ok && table[e][i] == i && table[i][e] == i;
    if (ok) id = e;
  }
  if (id < 0) throw std::invalid_argument("group_algebra_from_table: no identity element");
  for (int i = 0; i < n; ++i) {
    bool has_inv = false;
    for (int j = 0; j < n && !has_inv; ++j) has_inv = table[i][j] == id && table[j][i] == id;
    if (!has_inv) throw std::invalid_argument("group_algebra_from_table: missing inverse");
  }

  BasisAlgebra a;
  a.ring = Ring::fp(p);
  a.dim = n;
  a.unit = unit_vec(n, id);
  a.table.assign(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.table[i][j] = unit_vec(n, table[i][j]);

  i64 budget = 1;
  for (int i = 0; i < n; ++i) {
    budget *= p;
    if (budget > 1000000)
      throw std::invalid_argument("group_algebra_from_table: search budget exceeded (p^n > 10^6)");
  }

  RowSpan rad(a.ring, n);
  {
    Vec x(n, 0);
    for (i64 code = 1; code < budget; ++code) {
      i64 t = code;
      for (int i = 0; i < n; ++i) {
        x[i] = t % p;
        t /= p;
      }
      if (rad.contains(x)) continue;
      RowSpan ideal = detail::ideal_span(a, {x});
      if (detail::span_nilpotent(a, ideal)) rad.insert(x);
    }
  }
  for (const auto& r : rad.rows()) a.radical_gens.push_back(r);

  // semisimple quotient on representative basis elements
  std::vector<int> reps;
  {
    RowSpan probe(a.ring, n);
    for (const auto& r : rad.rows()) probe.insert(r);
    for (int i = 0; i < n; ++i)
      if (probe.insert(unit_vec(n, i))) reps.push_back(i);
  }
  const int q = int(reps.size());
  Mat stack(a.ring, n, n);
  for (int i = 0; i < rad.dim(); ++i) stack.set_row(i, rad.rows()[i]);
  for (int s = 0; s < q; ++s) stack.set_row(rad.dim() + s, unit_vec(n, reps[s]));
  auto quot_coords = [&](const Vec& z) {
    Mat zrow(a.ring, 1, n);
    zrow.set_row(0, z);
    Mat sol = solve_left(stack, zrow);
    Vec beta(q, 0);
    for (int s = 0; s < q; ++s) beta[s] = sol(0, rad.dim() + s);
    return beta;
  };
  BasisAlgebra quot;
  quot.ring = a.ring;
  quot.dim = q;
  quot.unit = quot_coords(a.unit);
  quot.table.assign(q, std::vector<Vec>(q));
  for (int s = 0; s < q; ++s)
    for (int t = 0; t < q; ++t)
      quot.table[s][t] = quot_coords(a.mul(unit_vec(n, reps[s]), unit_vec(n, reps[t])));

  // exhaustive idempotent enumeration in the quotient
  std::vector<Vec> idems;
  {
    i64 qbudget = 1;
    for (int i = 0; i < q; ++i) qbudget *= p;  // <= budget
    Vec x(q, 0);
    for (i64 code = 1; code < qbudget; ++code) {
      i64 t = code;
      for (int i = 0; i < q; ++i) {
        x[i] = t % p;
        t /= p;
      }
      if (quot.mul(x, x) == x) idems.push_back(x);
    }
  }
  auto below = [&](const Vec& f, const Vec& e) {  // f <= e in the idempotent order
    return quot.mul(e, f) == f && quot.mul(f, e) == f;
  };
  std::vector<Vec> prims;
  for (const auto& e : idems) {
    bool primitive = true;
    for (const auto& f : idems)
      if (!(f == e) && below(f, e)) { primitive = false; break; }
    if (primitive) prims.push_back(e);
  }
  // orthogonal primitive system summing to the quotient unit (backtracking)
  std::vector<Vec> system;
  {
    std::vector<Vec> chosen;
    auto orthogonal = [&](const Vec& e) {
      for (const auto& f : chosen)
        if (!is_zero_vec(quot.mul(e, f)) || !is_zero_vec(quot.mul(f, e))) return false;
      return true;
    };
    auto sum_is_unit = [&]() {
      Vec s(q, 0);
      for (const auto& f : chosen)
        for (int i = 0; i < q; ++i) s[i] = nrm(s[i] + f[i], p);
      return s == quot.unit;
    };
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (sum_is_unit()) {
        system = chosen;
        return true;
      }
      for (std::size_t t = from; t < prims.size(); ++t) {
        if (!orthogonal(prims[t])) continue;
        chosen.push_back(prims[t]);
        if (self(self, t + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    rec(rec, 0);
  }
  if (system.empty())
    throw std::runtime_error("group_algebra_from_table: no orthogonal primitive idempotent system");

  // lift sequentially along the radical
  for (const auto& ebar : system) {
    Vec lift(n, 0);
    for (int s = 0; s < q; ++s)
      for (int i = 0; i < n; ++i) lift[i] = nrm(lift[i] + ebar[s] * (reps[s] == i ? 1 : 0), p);
    Vec esum(n, 0);
    for (const auto& done : a.vertices)
      for (int i = 0; i < n; ++i) esum[i] = nrm(esum[i] + done[i], p);
    Vec comp = a.unit;
    for (int i = 0; i < n; ++i) comp[i] = nrm(comp[i] - esum[i], p);  // 1 - E
    Vec x = a.mul(a.mul(comp, lift), comp);
    bool fixed = false;
    for (int it = 0; it < 64; ++it) {
      Vec x2 = a.mul(x, x);
      if (x2 == x) { fixed = true; break; }
      Vec x3 = a.mul(x2, x);
      for (int i = 0; i < n; ++i) x[i] = nrm(3 * x2[i] - 2 * x3[i], p);
    }
    if (!fixed) throw std::runtime_error("group_algebra_from_table: idempotent lifting did not converge");
    if (is_zero_vec(x)) throw std::runtime_error("group_algebra_from_table: idempotent lift collapsed");
    a.vertices.push_back(std::move(x));
  }
  {
    Vec esum(n, 0);
    for (const auto& e : a.vertices)
      for (int i = 0; i < n; ++i) esum[i] = nrm(esum[i] + e[i], p);
    if (esum != a.unit)
      throw std::runtime_error("group_algebra_from_table: lifted idempotents do not sum to 1");
  }
  return a;
}

}  // namespace gol
