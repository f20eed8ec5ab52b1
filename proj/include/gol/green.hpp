#pragma once

#include <string>
#include <vector>

#include "gol/algebra.hpp"
#include "gol/partitions.hpp"
#include "gol/rand.hpp"

namespace gol {

// Congruence subring of Z_p x (2x2 matrices)^m x Z_p at working precision N.
// Raw coordinates: [d_0; (a_j, b_j, c_j, d_j) for j = 1..m; trailing scalar],
// the leading scalar being optional. Membership: p^x | c_j for all j,
// p^x | (d_j - a_{j-1}) with a_0 := d_0 (j >= 2 only when the leading scalar
// is absent), and the final gluing p^x | (trailing - a_m).
struct GreenOrderSpec {
  i64 p = 5;
  int m = 4;   // number of 2x2 blocks
  int x = 1;   // congruence exponent
  int prec = 4;
  bool leading_scalar = true;

  static GreenOrderSpec lambda0(i64 pp, int precision = 4) {
    if (!is_prime(pp)) throw std::invalid_argument("GreenOrderSpec: p must be prime");
    GreenOrderSpec s;
    s.p = pp;
    s.m = int(pp) - 1;
    s.x = 1;
    s.prec = precision;
    s.leading_scalar = true;
    s.check();
    return s;
  }
  static GreenOrderSpec schur_variant(i64 pp, int precision = 4) {
    GreenOrderSpec s = lambda0(pp, precision);
    s.leading_scalar = false;
    return s;
  }

  void check() const {
    if (!is_prime(p)) throw std::invalid_argument("GreenOrderSpec: p must be prime");
    if (m < 1) throw std::invalid_argument("GreenOrderSpec: need at least one block");
    if (x < 1 || prec <= x) throw std::invalid_argument("GreenOrderSpec: need precision > exponent >= 1");
  }

  Ring ring() const { return Ring::zp(p, prec); }
  i64 modulus() const { return ipow(p, prec); }
  i64 glue_modulus() const { return ipow(p, x); }

  int raw_dim() const { return 4 * m + (leading_scalar ? 2 : 1); }
  int rank() const { return raw_dim(); }  // every congruence rescales one parameter
  int components() const { return m + (leading_scalar ? 2 : 1); }

  // raw coordinate layout
  int idx_d0() const {
    if (!leading_scalar) throw std::invalid_argument("GreenOrderSpec: no leading scalar");
    return 0;
  }
  int block_base(int j) const {
    if (j < 1 || j > m) throw std::invalid_argument("GreenOrderSpec: block index");
    return (leading_scalar ? 1 : 0) + 4 * (j - 1);
  }
  int idx_a(int j) const { return block_base(j); }
  int idx_b(int j) const { return block_base(j) + 1; }
  int idx_c(int j) const { return block_base(j) + 2; }
  int idx_d(int j) const { return block_base(j) + 3; }
  int idx_trailing() const { return raw_dim() - 1; }

  // rational component of a raw coordinate: 0 = leading scalar (when present),
  // then the m matrix blocks, then the trailing scalar.
  int component_of(int raw) const {
    if (raw < 0 || raw >= raw_dim()) throw std::invalid_argument("GreenOrderSpec: raw index");
    if (leading_scalar && raw == 0) return 0;
    if (raw == idx_trailing()) return leading_scalar ? m + 1 : m;
    int j = (raw - (leading_scalar ? 1 : 0)) / 4 + 1;
    return leading_scalar ? j : j - 1;  // without the leading scalar, blocks start at 0
  }
};

struct MemberReport {
  bool ok = true;
  std::vector<std::string> violations;
  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
};

inline void require_raw(const GreenOrderSpec& s, const Vec& v, const char* where) {
  if (int(v.size()) != s.raw_dim())
    throw std::invalid_argument(std::string(where) + ": raw coordinate length mismatch");
}

inline MemberReport member(const GreenOrderSpec& s, const Vec& v) {
  require_raw(s, v, "member");
  const i64 q = s.modulus(), g = s.glue_modulus();
  MemberReport r;
  for (int j = 1; j <= s.m; ++j) {
    if (nrm(v[s.idx_c(j)], q) % g != 0)
      r.fail("p^" + std::to_string(s.x) + " does not divide c_" + std::to_string(j));
    if (j == 1 && !s.leading_scalar) continue;  // first block free on its d-side
    i64 prev = j == 1 ? v[s.idx_d0()] : v[s.idx_a(j - 1)];
    if (nrm(v[s.idx_d(j)] - prev, q) % g != 0)
      r.fail("p^" + std::to_string(s.x) + " does not divide d_" + std::to_string(j) + " - a_" +
             std::to_string(j - 1));
  }
  if (nrm(v[s.idx_trailing()] - v[s.idx_a(s.m)], q) % g != 0)
    r.fail("p^" + std::to_string(s.x) + " does not divide a_" + std::to_string(s.m + 1) + " - a_" +
           std::to_string(s.m));
  return r;
}

inline Vec zero_element(const GreenOrderSpec& s) { return Vec(s.raw_dim(), 0); }

inline Vec one_element(const GreenOrderSpec& s) {
  Vec v(s.raw_dim(), 0);
  if (s.leading_scalar) v[s.idx_d0()] = 1;
  for (int j = 1; j <= s.m; ++j) v[s.idx_a(j)] = v[s.idx_d(j)] = 1;
  v[s.idx_trailing()] = 1;
  return v;
}

// Componentwise product in the ambient ring: scalars multiply, blocks multiply
// as 2x2 matrices. No membership requirement.
inline Vec mul_raw(const GreenOrderSpec& s, const Vec& x, const Vec& y) {
  require_raw(s, x, "mul_raw");
  require_raw(s, y, "mul_raw");
  const i64 q = s.modulus();
  Vec r(s.raw_dim(), 0);
  if (s.leading_scalar) r[s.idx_d0()] = nrm(x[s.idx_d0()] * y[s.idx_d0()], q);
  for (int j = 1; j <= s.m; ++j) {
    i64 xa = x[s.idx_a(j)], xb = x[s.idx_b(j)], xc = x[s.idx_c(j)], xd = x[s.idx_d(j)];
    i64 ya = y[s.idx_a(j)], yb = y[s.idx_b(j)], yc = y[s.idx_c(j)], yd = y[s.idx_d(j)];
    r[s.idx_a(j)] = nrm(xa * ya + xb * yc, q);
    r[s.idx_b(j)] = nrm(xa * yb + xb * yd, q);
    r[s.idx_c(j)] = nrm(xc * ya + xd * yc, q);
    r[s.idx_d(j)] = nrm(xc * yb + xd * yd, q);
  }
  r[s.idx_trailing()] = nrm(x[s.idx_trailing()] * y[s.idx_trailing()], q);
  return r;
}

inline Vec add_raw(const GreenOrderSpec& s, const Vec& x, const Vec& y) {
  require_raw(s, x, "add_raw");
  require_raw(s, y, "add_raw");
  const i64 q = s.modulus();
  Vec r(s.raw_dim(), 0);
  for (int i = 0; i < s.raw_dim(); ++i) r[i] = nrm(x[i] + y[i], q);
  return r;
}

// Product of two members; inputs are re-checked so that closure failures
// surface at the offending call.
inline Vec mul(const GreenOrderSpec& s, const Vec& x, const Vec& y) {
  if (!member(s, x).ok || !member(s, y).ok)
    throw std::invalid_argument("mul: inputs must satisfy the congruences");
  return mul_raw(s, x, y);
}

inline Vec random_member(const GreenOrderSpec& s, SeededRng& rng) {
  const i64 q = s.modulus(), g = s.glue_modulus();
  Vec v(s.raw_dim(), 0);
  if (s.leading_scalar) v[s.idx_d0()] = rng.below(q);
  for (int j = 1; j <= s.m; ++j) {
    v[s.idx_a(j)] = rng.below(q);
    v[s.idx_b(j)] = rng.below(q);
    v[s.idx_c(j)] = nrm(g * rng.below(q / g), q);
    if (j == 1 && !s.leading_scalar) {
      v[s.idx_d(j)] = rng.below(q);
    } else {
      i64 prev = j == 1 ? v[s.idx_d0()] : v[s.idx_a(j - 1)];
      v[s.idx_d(j)] = nrm(prev + g * rng.below(q / g), q);
    }
  }
  v[s.idx_trailing()] = nrm(v[s.idx_a(s.m)] + g * rng.below(q / g), q);
  return v;
}

// Number of product pairs (out of `trials`) whose product violates membership.
inline int closure_failures(const GreenOrderSpec& s, int trials, unsigned long long seed) {
  SeededRng rng(seed);
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    Vec a = random_member(s, rng);
    Vec b = random_member(s, rng);
    if (!member(s, mul_raw(s, a, b)).ok) ++bad;
  }
  return bad;
}

// Central idempotents of the ambient product ring, one per rational component.
inline std::vector<Vec> component_idempotents(const GreenOrderSpec& s) {
  std::vector<Vec> eps;
  if (s.leading_scalar) {
    Vec v(s.raw_dim(), 0);
    v[s.idx_d0()] = 1;
    eps.push_back(std::move(v));
  }
  for (int j = 1; j <= s.m; ++j) {
    Vec v(s.raw_dim(), 0);
    v[s.idx_a(j)] = v[s.idx_d(j)] = 1;
    eps.push_back(std::move(v));
  }
  Vec v(s.raw_dim(), 0);
  v[s.idx_trailing()] = 1;
  eps.push_back(std::move(v));
  return eps;
}

// Parameter basis of the order as raw vectors: the chain idempotents E_i
// (diagonal pairs glued by the congruences), then the b_j units, the scaled
// c_j and d_j units, and the scaled trailing unit. These span the order and
// lift the basis of its reduction mod p.
inline std::vector<Vec> order_basis(const GreenOrderSpec& s) {
  if (!s.leading_scalar) throw std::invalid_argument("order_basis: leading scalar required");
  const i64 g = s.glue_modulus();
  std::vector<Vec> basis;
  {  // E_1 = d_0 with its partner d_1
    Vec v(s.raw_dim(), 0);
    v[s.idx_d0()] = 1;
    v[s.idx_d(1)] = 1;
    basis.push_back(std::move(v));
  }
  for (int j = 1; j <= s.m; ++j) {  // E_{j+1} = a_j with partner d_{j+1} (or the trailing scalar)
    Vec v(s.raw_dim(), 0);
    v[s.idx_a(j)] = 1;
    if (j < s.m)
      v[s.idx_d(j + 1)] = 1;
    else
      v[s.idx_trailing()] = 1;
    basis.push_back(std::move(v));
  }
  for (int j = 1; j <= s.m; ++j) {
    Vec v(s.raw_dim(), 0);
    v[s.idx_b(j)] = 1;
    basis.push_back(std::move(v));
  }
  for (int j = 1; j <= s.m; ++j) {
    Vec v(s.raw_dim(), 0);
    v[s.idx_c(j)] = g;
    basis.push_back(std::move(v));
  }
  for (int j = 1; j <= s.m; ++j) {
    Vec v(s.raw_dim(), 0);
    v[s.idx_d(j)] = g;
    basis.push_back(std::move(v));
  }
  {
    Vec v(s.raw_dim(), 0);
    v[s.idx_trailing()] = g;
    basis.push_back(std::move(v));
  }
  return basis;  // 1 + m (idempotents) + 3m + 1 = raw_dim vectors
}

// Coordinates of a member in the parameter basis; exact (the divisions by the
// glue modulus are exact for members).
inline Vec order_coords(const GreenOrderSpec& s, const Vec& v) {
  MemberReport r = member(s, v);
  if (!r.ok) throw std::invalid_argument("order_coords: not a member: " + r.violations.front());
  const i64 q = s.modulus(), g = s.glue_modulus();
  Vec t(s.raw_dim(), 0);
  int pos = 0;
  t[pos++] = nrm(v[s.idx_d0()], q);
  for (int j = 1; j <= s.m; ++j) t[pos++] = nrm(v[s.idx_a(j)], q);
  for (int j = 1; j <= s.m; ++j) t[pos++] = nrm(v[s.idx_b(j)], q);
  for (int j = 1; j <= s.m; ++j) t[pos++] = nrm(v[s.idx_c(j)], q) / g;
  for (int j = 1; j <= s.m; ++j) {
    i64 prev = j == 1 ? v[s.idx_d0()] : v[s.idx_a(j - 1)];
    t[pos++] = nrm(v[s.idx_d(j)] - prev, q) / g;
  }
  t[pos++] = nrm(v[s.idx_trailing()] - v[s.idx_a(s.m)], q) / g;
  return t;
}

// Count of rational components, verified: the component idempotents must be
// orthogonal, idempotent, central against the order basis, and sum to 1.
inline int rational_components(const GreenOrderSpec& s) {
  std::vector<Vec> eps = component_idempotents(s);
  Vec sum = zero_element(s);
  for (const auto& e : eps) sum = add_raw(s, sum, e);
  if (sum != one_element(s)) throw std::runtime_error("rational_components: idempotents do not sum to 1");
  std::vector<Vec> probes;
  if (s.leading_scalar) probes = order_basis(s);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    for (std::size_t j = 0; j < eps.size(); ++j) {
      Vec prod = mul_raw(s, eps[i], eps[j]);
      Vec expect = i == j ? eps[i] : zero_element(s);
      if (prod != expect) throw std::runtime_error("rational_components: idempotents not orthogonal");
    }
    for (const auto& b : probes)
      if (mul_raw(s, eps[i], b) != mul_raw(s, b, eps[i]))
        throw std::runtime_error("rational_components: idempotent fails centrality");
  }
  return int(eps.size());
}

// F_p-algebra on the order's parameter basis. Structure constants are
// computed from products of lifted basis elements at a guard precision of 2
// (one extra digit to resolve the exact divisions), then reduced mod p.
inline BasisAlgebra reduce_mod_p(const GreenOrderSpec& s) {
  if (!s.leading_scalar || s.x != 1)
    throw std::invalid_argument("reduce_mod_p: defined for the leading-scalar form with exponent 1");
  GreenOrderSpec lift = s;
  lift.prec = 2;
  std::vector<Vec> basis = order_basis(lift);
  const int dim = int(basis.size());

  BasisAlgebra a;
  a.ring = Ring::fp(s.p);
  a.dim = dim;
  a.table.assign(dim, std::vector<Vec>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Vec coords = order_coords(lift, mul_raw(lift, basis[i], basis[j]));
      for (auto& c : coords) c = nrm(c, s.p);
      a.table[i][j] = std::move(coords);
    }
  a.unit = order_coords(lift, one_element(lift));
  for (auto& c : a.unit) c = nrm(c, s.p);
  const int nv = s.m + 1;  // chain idempotents E_1..E_{m+1}
  for (int v = 0; v < nv; ++v) a.vertices.push_back(unit_vec(dim, v));
  for (int k = nv; k < dim; ++k) a.radical_gens.push_back(unit_vec(dim, k));

  CheckReport rep = check_algebra(a);
  if (!rep.ok) {
    std::string msg = "reduce_mod_p: reduced algebra fails its structural checks:";
    for (const auto& f : rep.failures) msg += "\n  " + f;
    throw std::runtime_error(msg);
  }
  return a;
}

// ----- lattices -----

// A left lattice inside the order's raw coordinate space, carried with its
// census invariants: the rational components it touches, its rank, and the
// multiplicities of the reduced simples in its top.
struct ColumnLattice {
  std::string label;
  Mat rows;  // lattice basis over Z/p^N, ambient raw coordinates
  std::vector<int> components;
  int rank = 0;
  std::vector<i64> top;
};

namespace detail {

// Action matrices of the order basis lifts on a lattice, in its basis rows
// (column convention), over Z/p^N.
inline std::vector<Mat> lattice_action(const GreenOrderSpec& s, const std::vector<Vec>& lifts,
                                       const Mat& rows) {
  std::vector<Mat> action;
  const int r = rows.rows();
  for (const auto& l : lifts) {
    Mat img(rows.ring(), r, s.raw_dim());
    for (int t = 0; t < r; ++t) img.set_row(t, mul_raw(s, l, rows.row(t)));
    Mat coords = solve_left(rows, img);  // coords * rows = img
    action.push_back(coords.transpose());
  }
  return action;
}

inline ColumnLattice make_lattice(const GreenOrderSpec& s, const BasisAlgebra& reduced,
                                  std::string label, const Mat& span_rows) {
  ColumnLattice lat;
  lat.label = std::move(label);
  lat.rows = row_lattice_basis(span_rows);
  lat.rank = lat.rows.rows();
  std::vector<bool> seen(s.m + 2, false);
  for (int t = 0; t < lat.rows.rows(); ++t)
    for (int c = 0; c < s.raw_dim(); ++c)
      if (lat.rows(t, c) != 0) seen[s.component_of(c)] = true;
  for (int k = 0; k < int(seen.size()); ++k)
    if (seen[k]) lat.components.push_back(k);

  // reduction mod p as a module over the reduced algebra; its first radical
  // layer is the top
  LeftModule mod;
  mod.ring = Ring::fp(s.p);
  mod.dim = lat.rank;
  for (const auto& act : lattice_action(s, order_basis(s), lat.rows)) mod.action.push_back(act.to_fp());
  CheckReport rep = check_module(reduced, mod);
  if (!rep.ok)
    throw std::runtime_error("make_lattice: reduction is not a module: " + rep.failures.front());
  lat.top = radical_series(reduced, mod).layers.at(0);
  return lat;
}

}  // namespace detail

// The m+1 projective column lattices: left ideals generated by the chain
// idempotents. Ranks are 3 at the two ends and 4 in the middle.
inline std::vector<ColumnLattice> projective_lattices(const GreenOrderSpec& s) {
  if (!s.leading_scalar || s.x != 1)
    throw std::invalid_argument("projective_lattices: leading-scalar form with exponent 1");
  BasisAlgebra reduced = reduce_mod_p(s);
  std::vector<Vec> basis = order_basis(s);
  std::vector<ColumnLattice> out;
  for (int v = 0; v <= s.m; ++v) {
    Mat span(s.ring(), int(basis.size()), s.raw_dim());
    for (std::size_t k = 0; k < basis.size(); ++k) span.set_row(int(k), mul_raw(s, basis[k], basis[v]));
    out.push_back(detail::make_lattice(s, reduced, "P_" + std::to_string(v + 1), span));
  }
  return out;
}

// Kernels of the nonzero maps P_i -> P_{i+1} (right multiplication by the
// scaled c_i unit) and P_{i+1} -> P_i (right multiplication by the b_i unit),
// 2m lattices in total.
inline std::vector<ColumnLattice> kernel_lattices(const GreenOrderSpec& s) {
  if (!s.leading_scalar || s.x != 1)
    throw std::invalid_argument("kernel_lattices: leading-scalar form with exponent 1");
  BasisAlgebra reduced = reduce_mod_p(s);
  std::vector<ColumnLattice> projs = projective_lattices(s);
  std::vector<ColumnLattice> out;
  auto kernel_of = [&](const ColumnLattice& dom, const Vec& u, const std::string& label) {
    Mat img(s.ring(), dom.rows.rows(), s.raw_dim());
    for (int t = 0; t < dom.rows.rows(); ++t) img.set_row(t, mul_raw(s, dom.rows.row(t), u));
    Mat combos = left_kernel(img);  // rows: coefficient vectors over the domain basis
    Mat span = combos * dom.rows;
    out.push_back(detail::make_lattice(s, reduced, label, span));
  };
  for (int i = 1; i <= s.m; ++i) {
    Vec up(s.raw_dim(), 0);
    up[s.idx_c(i)] = s.glue_modulus();
    kernel_of(projs[i - 1], up, "ker(P_" + std::to_string(i) + "->P_" + std::to_string(i + 1) + ")");
  }
  for (int i = 1; i <= s.m; ++i) {
    Vec down(s.raw_dim(), 0);
    down[s.idx_b(i)] = 1;
    kernel_of(projs[i], down, "ker(P_" + std::to_string(i + 1) + "->P_" + std::to_string(i) + ")");
  }
  return out;
}

// Locality of the lattice's endomorphism ring reduced mod p: solve the
// intertwiner system over Z/p^N exactly, reduce the solution basis mod p, and
// exhaustively verify every element is invertible or nilpotent. Enumeration
// budget p^s <= 10^5.
inline bool endomorphism_ring_local(const GreenOrderSpec& s, const ColumnLattice& lat) {
  const int r = lat.rank;
  if (r == 0) throw std::invalid_argument("endomorphism_ring_local: zero lattice");
  std::vector<Mat> acts = detail::lattice_action(s, order_basis(s), lat.rows);
  const int unknowns = r * r;
  Mat sys(s.ring(), unknowns, int(acts.size()) * unknowns);
  for (std::size_t k = 0; k < acts.size(); ++k) {
    const Mat& a = acts[k];
    // constraint (k, i, j): sum_l T(i,l) a(l,j) - a(i,l) T(l,j) = 0
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        int col = int(k) * unknowns + i * r + j;
        for (int l = 0; l < r; ++l) {
          sys.add_at(i * r + l, col, a(l, j));
          sys.add_at(l * r + j, col, -a(i, l));
        }
      }
  }
  Mat endo = left_kernel(sys);  // basis of the endomorphism lattice
  const int sdim = endo.rows();
  i64 count = 1;
  for (int i = 0; i < sdim; ++i) {
    count *= s.p;
    if (count > 100000) throw std::runtime_error("endomorphism_ring_local: enumeration budget exceeded");
  }
  Mat endo_fp = endo.to_fp();
  Vec coeff(sdim, 0);
  for (i64 code = 0; code < count; ++code) {
    i64 t = code;
    for (int i = 0; i < sdim; ++i) {
      coeff[i] = t % s.p;
      t /= s.p;
    }
    Mat m(Ring::fp(s.p), r, r);
    for (int i = 0; i < sdim; ++i)
      if (coeff[i] != 0)
        for (int rr = 0; rr < r; ++rr)
          for (int cc = 0; cc < r; ++cc) m.add_at(rr, cc, coeff[i] * endo_fp(i, rr * r + cc));
    if (rank_fp(m) == r) continue;  // unit
    Mat pow = m;
    bool nil = false;
    for (int e = 1; e <= r; ++e) {
      if (pow.is_zero()) {
        nil = true;
        break;
      }
      pow = pow * m;
    }
    if (!nil && !pow.is_zero()) return false;
  }
  return true;
}

// ----- counting -----

struct LatticeCount {
  i64 total = 0;
  i64 projective = 0;
  i64 nonprojective = 0;
};

// Indecomposable-lattice census over the full group-algebra order: the chain
// part contributes 3p-2 (p projectives plus 2(p-1) kernels), and each
// commutative factor of degree k in 2..p-1 contributes rho(k) simple
// projective lattices.
inline LatticeCount lattice_count(i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("lattice_count: p must be prime");
  i64 small = 0;
  for (i64 k = 2; k <= p - 1; ++k) small += partition_count(int(k));
  LatticeCount c;
  c.total = 3 * p - 2 + small;
  c.projective = p + small;
  c.nonprojective = 2 * (p - 1);
  if (c.total != c.projective + c.nonprojective)
    throw std::runtime_error("lattice_count: breakdown does not add up");
  return c;
}

struct CommutativeFactorCount {
  i64 total = 0;
  i64 small_degrees = 0;  // sum of rho(k), k = 2..p-1
  i64 non_hooks = 0;      // partitions of p that are not hooks
};

// Number of one-dimensional rational factors of the group-algebra order
// beyond the chain: one per partition of k for 2 <= k <= p-1 (equivalently
// sum of p-regular partition counts below p, minus one), plus one per
// non-hook partition of p. Both readings of the first summand are computed
// and must agree; the hook count of p must be exactly p.
inline CommutativeFactorCount commutative_factor_count(i64 p) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("commutative_factor_count: prime p >= 5");
  CommutativeFactorCount c;
  for (i64 k = 2; k <= p - 1; ++k) c.small_degrees += partition_count(int(k));
  i64 regular = 0;
  for (i64 k = 1; k <= p - 1; ++k) regular += p_regular_partition_count(int(k), p);
  if (c.small_degrees != regular - 1)
    throw std::runtime_error("commutative_factor_count: the two readings disagree");
  i64 hooks = hook_count(int(p));
  if (hooks != p) throw std::runtime_error("commutative_factor_count: hook count of p must be p");
  c.non_hooks = partition_count(int(p)) - hooks;
  c.total = c.small_degrees + c.non_hooks;
  return c;
}

}  // namespace gol
