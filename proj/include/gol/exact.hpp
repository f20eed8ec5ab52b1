#pragma once

// Exact linear algebra over F_p and over the truncated local rings Z/p^N.
//
// Conventions used throughout the library:
//   - matrices are dense, row-major; vectors are rows unless stated otherwise;
//   - entries are kept normalized into [0, modulus);
//   - pivot choices are deterministic: smallest valuation first, ties broken
//     by lowest row index, then lowest column index;
//   - precision N is part of a ring's identity; mixing precisions is an error.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace gol {

using i64 = std::int64_t;

inline bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// p^e for e >= 0; refuses to overflow past 2^62.
inline i64 ipow(i64 p, int e) {
  if (e < 0) throw std::invalid_argument("ipow: negative exponent");
  i64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (i64(1) << 62) / p) throw std::overflow_error("ipow: result too large");
    r *= p;
  }
  return r;
}

inline i64 nrm(i64 x, i64 m) {
  x %= m;
  return x < 0 ? x + m : x;
}

// Inverse of a unit modulo m (extended Euclid); throws if gcd(x, m) != 1.
inline i64 inv_mod(i64 x, i64 m) {
  i64 a = nrm(x, m), b = m;
  i64 u = 1, v = 0;
  while (b != 0) {
    i64 q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) throw std::invalid_argument("inv_mod: not a unit");
  return nrm(u, m);
}

enum class RingKind { Fp, Zp };

// Coefficient ring descriptor: the field F_p, or Z/p^N with N explicit.
struct Ring {
  RingKind kind = RingKind::Fp;
  i64 p = 2;
  int prec = 1;  // N; always 1 for F_p

  static Ring fp(i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("Ring::fp: p must be prime");
    return Ring{RingKind::Fp, p, 1};
  }
  static Ring zp(i64 p, int n) {
    if (!is_prime(p)) throw std::invalid_argument("Ring::zp: p must be prime");
    if (n < 1) throw std::invalid_argument("Ring::zp: precision must be >= 1");
    Ring r{RingKind::Zp, p, n};
    r.modulus();  // force the overflow guard now
    return r;
  }
  i64 modulus() const { return ipow(p, prec); }
  bool is_field() const { return kind == RingKind::Fp; }
  bool operator==(const Ring& o) const { return kind == o.kind && p == o.p && prec == o.prec; }
  bool operator!=(const Ring& o) const { return !(*this == o); }
  std::string str() const {
    return is_field() ? "F_" + std::to_string(p)
                      : "Z/" + std::to_string(p) + "^" + std::to_string(prec);
  }
};

inline void require_same(const Ring& a, const Ring& b, const char* where) {
  if (a != b)
    throw std::invalid_argument(std::string(where) + ": ring mismatch (" + a.str() + " vs " +
                                b.str() + ")");
}

// Valuation of x in Z/p^N, in {0, ..., N}; the value N means ">= N" (x == 0).
// Zero never reports infinity: at precision N nothing below p^N is observable.
inline int valuation(i64 x, const Ring& r) {
  x = nrm(x, r.modulus());
  if (x == 0) return r.prec;
  int v = 0;
  while (x % r.p == 0) {
    x /= r.p;
    ++v;
  }
  return v;
}

inline std::string valuation_str(i64 x, const Ring& r) {
  int v = valuation(x, r);
  return v >= r.prec ? ">=" + std::to_string(r.prec) : std::to_string(v);
}

// Scalar in F_p.
struct FpScalar {
  i64 p;
  i64 v;
  FpScalar(i64 p_, i64 x) : p(p_) {
    if (!is_prime(p)) throw std::invalid_argument("FpScalar: p must be prime");
    v = nrm(x, p);
  }
  void match(const FpScalar& o) const {
    if (p != o.p) throw std::invalid_argument("FpScalar: modulus mismatch");
  }
  friend FpScalar operator+(FpScalar a, const FpScalar& b) { a.match(b); a.v = nrm(a.v + b.v, a.p); return a; }
  friend FpScalar operator-(FpScalar a, const FpScalar& b) { a.match(b); a.v = nrm(a.v - b.v, a.p); return a; }
  friend FpScalar operator*(FpScalar a, const FpScalar& b) { a.match(b); a.v = nrm(a.v * b.v, a.p); return a; }
  FpScalar inv() const {
    if (v == 0) throw std::invalid_argument("FpScalar::inv: zero");
    return FpScalar(p, inv_mod(v, p));
  }
  bool operator==(const FpScalar& o) const { return p == o.p && v == o.v; }
};

// Scalar in Z/p^N. Precision is part of the identity; operations on mixed
// precisions throw rather than coerce.
struct PadicScalar {
  Ring ring;
  i64 v;
  PadicScalar(i64 p, int n, i64 x) : ring(Ring::zp(p, n)), v(nrm(x, ring.modulus())) {}
  PadicScalar(Ring r, i64 x) : ring(r), v(nrm(x, r.modulus())) {
    if (r.is_field()) throw std::invalid_argument("PadicScalar: ring must be Z/p^N");
  }
  void match(const PadicScalar& o) const { require_same(ring, o.ring, "PadicScalar"); }
  friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { a.match(b); a.v = nrm(a.v + b.v, a.ring.modulus()); return a; }
  friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { a.match(b); a.v = nrm(a.v - b.v, a.ring.modulus()); return a; }
  friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { a.match(b); a.v = nrm(a.v * b.v, a.ring.modulus()); return a; }
  int val() const { return valuation(v, ring); }
  std::string val_str() const { return valuation_str(v, ring); }
  bool unit() const { return val() == 0; }
  PadicScalar inv() const {
    if (!unit()) throw std::invalid_argument("PadicScalar::inv: not a unit");
    return PadicScalar(ring, inv_mod(v, ring.modulus()));
  }
  bool operator==(const PadicScalar& o) const { return ring == o.ring && v == o.v; }
};

// Dense matrix over F_p or Z/p^N.
class Mat {
 public:
  Mat() : ring_(Ring::fp(2)), rows_(0), cols_(0) {}
  Mat(Ring r, int rows, int cols) : ring_(r), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative dimensions");
    a_.assign(std::size_t(rows) * std::size_t(cols), 0);
  }
  static Mat identity(Ring r, int n) {
    Mat m(r, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }
  static Mat from_rows(Ring r, const std::vector<std::vector<i64>>& rows) {
    int nr = int(rows.size());
    int nc = nr == 0 ? 0 : int(rows[0].size());
    Mat m(r, nr, nc);
    for (int i = 0; i < nr; ++i) {
      if (int(rows[i].size()) != nc) throw std::invalid_argument("Mat::from_rows: ragged rows");
      for (int j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }

  const Ring& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  i64 operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, i64 x) { a_[idx(i, j)] = nrm(x, ring_.modulus()); }
  void add_at(int i, int j, i64 x) { a_[idx(i, j)] = nrm(a_[idx(i, j)] + x, ring_.modulus()); }

  std::vector<i64> row(int i) const {
    check_row(i);
    return std::vector<i64>(a_.begin() + std::size_t(i) * cols_,
                            a_.begin() + std::size_t(i + 1) * cols_);
  }
  void set_row(int i, const std::vector<i64>& v) {
    check_row(i);
    if (int(v.size()) != cols_) throw std::invalid_argument("Mat::set_row: length mismatch");
    for (int j = 0; j < cols_; ++j) set(i, j, v[j]);
  }

  Mat operator+(const Mat& o) const { return zip(o, +1); }
  Mat operator-(const Mat& o) const { return zip(o, -1); }
  Mat operator*(const Mat& o) const {
    require_same(ring_, o.ring_, "Mat::mul");
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: dimension mismatch");
    Mat r(ring_, rows_, o.cols_);
    const i64 m = ring_.modulus();
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        i64 x = a_[idx(i, k)];
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.a_[r.idx(i, j)] = (r.a_[r.idx(i, j)] + x * o.a_[o.idx(k, j)]) % m;
      }
    return r;
  }
  Mat scaled(i64 c) const {
    Mat r = *this;
    const i64 m = ring_.modulus();
    c = nrm(c, m);
    for (auto& x : r.a_) x = (x * c) % m;
    return r;
  }
  Mat transpose() const {
    Mat r(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.a_[r.idx(j, i)] = a_[idx(i, j)];
    return r;
  }
  bool operator==(const Mat& o) const {
    return ring_ == o.ring_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](i64 x) { return x == 0; });
  }

  // Entries mod p, as an F_p matrix.
  Mat to_fp() const {
    Mat r(Ring::fp(ring_.p), rows_, cols_);
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] % ring_.p;
    return r;
  }
  // Entries reinterpreted in Z/p^n (truncate or lift representatives).
  Mat to_zp(int n) const {
    Mat r(Ring::zp(ring_.p, n), rows_, cols_);
    const i64 m = r.ring_.modulus();
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] % m;
    return r;
  }

  std::string str() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " ";
      for (int j = 0; j < cols_; ++j) s += std::to_string((*this)(i, j)) + (j + 1 < cols_ ? " " : "");
      s += i + 1 < rows_ ? "\n" : "]";
    }
    return s;
  }

 private:
  std::size_t idx(int i, int j) const {
    check_row(i);
    if (j < 0 || j >= cols_) throw std::out_of_range("Mat: column index");
    return std::size_t(i) * cols_ + j;
  }
  void check_row(int i) const {
    if (i < 0 || i >= rows_) throw std::out_of_range("Mat: row index");
  }
  Mat zip(const Mat& o, i64 sign) const {
    require_same(ring_, o.ring_, "Mat::add");
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::add: shape mismatch");
    Mat r(ring_, rows_, cols_);
    const i64 m = ring_.modulus();
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = nrm(a_[t] + sign * o.a_[t], m);
    return r;
  }

  Ring ring_;
  int rows_, cols_;
  std::vector<i64> a_;
};

inline Mat vstack(const Mat& a, const Mat& b) {
  require_same(a.ring(), b.ring(), "vstack");
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Mat r(a.ring(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) r.set_row(i, a.row(i));
  for (int i = 0; i < b.rows(); ++i) r.set_row(a.rows() + i, b.row(i));
  return r;
}

// v * A for a row vector v.
inline std::vector<i64> apply_row(const std::vector<i64>& v, const Mat& a) {
  if (int(v.size()) != a.rows()) throw std::invalid_argument("apply_row: length mismatch");
  const i64 m = a.ring().modulus();
  std::vector<i64> r(a.cols(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    if (v[i] == 0) continue;
    i64 x = nrm(v[i], m);
    for (int j = 0; j < a.cols(); ++j) r[j] = (r[j] + x * a(i, j)) % m;
  }
  return r;
}

// ----- Row spans over F_p (incremental reduced echelon form) -----

class RowSpan {
 public:
  RowSpan(Ring r, int ncols) : ring_(r), ncols_(ncols) {
    if (!r.is_field()) throw std::invalid_argument("RowSpan: field ring required");
    if (ncols < 0) throw std::invalid_argument("RowSpan: negative width");
  }
  int dim() const { return int(rows_.size()); }
  int ncols() const { return ncols_; }
  const Ring& ring() const { return ring_; }

  // Residue of v after reduction against the span; empty span returns v.
  std::vector<i64> reduce(std::vector<i64> v) const {
    if (int(v.size()) != ncols_) throw std::invalid_argument("RowSpan::reduce: length mismatch");
    const i64 p = ring_.p;
    for (auto& x : v) x = nrm(x, p);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      i64 c = v[pivots_[k]];
      if (c == 0) continue;
      for (int j = 0; j < ncols_; ++j) v[j] = nrm(v[j] - c * rows_[k][j], p);
    }
    return v;
  }
  bool contains(const std::vector<i64>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](i64 x) { return x == 0; });
  }
  // Inserts v; returns true if the dimension grew.
  bool insert(const std::vector<i64>& v) {
    auto r = reduce(v);
    int piv = -1;
    for (int j = 0; j < ncols_; ++j)
      if (r[j] != 0) { piv = j; break; }
    if (piv < 0) return false;
    const i64 p = ring_.p;
    i64 inv = inv_mod(r[piv], p);
    for (auto& x : r) x = (x * inv) % p;
    // Back-reduce existing rows, then keep rows ordered by pivot column.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      i64 c = rows_[k][piv];
      if (c == 0) continue;
      for (int j = 0; j < ncols_; ++j) rows_[k][j] = nrm(rows_[k][j] - c * r[j], p);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(r));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }
  const std::vector<std::vector<i64>>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  Mat to_mat() const {
    Mat m(ring_, dim(), ncols_);
    for (int i = 0; i < dim(); ++i) m.set_row(i, rows_[i]);
    return m;
  }

 private:
  Ring ring_;
  int ncols_;
  std::vector<std::vector<i64>> rows_;
  std::vector<int> pivots_;
};

// ----- Elimination over F_p -----

// In-place reduced row echelon form; returns rank, records pivot columns.
// Pivots: leftmost column first, lowest row index among candidates.
inline int rref_fp(Mat& m, std::vector<int>* pivot_cols = nullptr) {
  if (!m.ring().is_field()) throw std::invalid_argument("rref_fp: field ring required");
  const i64 p = m.ring().p;
  int rank = 0;
  if (pivot_cols) pivot_cols->clear();
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank) {
      auto a = m.row(piv), b = m.row(rank);
      m.set_row(piv, b);
      m.set_row(rank, a);
    }
    i64 inv = inv_mod(m(rank, col), p);
    for (int j = 0; j < m.cols(); ++j) m.set(rank, j, m(rank, j) * inv % p);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank) continue;
      i64 c = m(i, col);
      if (c == 0) continue;
      for (int j = 0; j < m.cols(); ++j) m.set(i, j, m(i, j) - c * m(rank, j));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

inline int rank_fp(Mat m) { return rref_fp(m); }

// Basis (as rows) of { x : m x^T = 0 } over F_p.
inline Mat right_kernel_fp(const Mat& m0) {
  Mat m = m0;
  std::vector<int> piv;
  int rank = rref_fp(m, &piv);
  std::vector<int> free_cols;
  for (int j = 0, k = 0; j < m.cols(); ++j) {
    if (k < int(piv.size()) && piv[k] == j) { ++k; continue; }
    free_cols.push_back(j);
  }
  Mat ker(m.ring(), int(free_cols.size()), m.cols());
  for (int t = 0; t < int(free_cols.size()); ++t) {
    int f = free_cols[t];
    ker.set(t, f, 1);
    for (int r = 0; r < rank; ++r) ker.set(t, piv[r], -m(r, f));
  }
  return ker;
}

inline Mat left_kernel_fp(const Mat& m) { return right_kernel_fp(m.transpose()); }

// ----- Smith form over Z/p^N (also valid over F_p with exponents in {0, N}) -----

// P * M * Q = D with P, Q invertible and D diagonal with entries p^{exps[k]};
// exps is ascending by construction (global minimal-valuation pivoting) and
// exps[k] == prec encodes a zero diagonal entry (">= N").
struct SmithLocal {
  Mat P, Pinv, Q, Qinv;
  std::vector<int> exps;
};

inline SmithLocal smith_local(Mat m) {
  const Ring r = m.ring();
  const i64 mod = r.modulus();
  const int n = std::min(m.rows(), m.cols());
  SmithLocal s;
  s.P = Mat::identity(r, m.rows());
  s.Pinv = Mat::identity(r, m.rows());
  s.Q = Mat::identity(r, m.cols());
  s.Qinv = Mat::identity(r, m.cols());
  auto row_addmul = [&](Mat& a, int dst, int src, i64 c) {  // row dst += c * row src
    if (c == 0) return;
    for (int j = 0; j < a.cols(); ++j) a.set(dst, j, a(dst, j) + nrm(c, mod) * a(src, j));
  };
  auto col_addmul = [&](Mat& a, int dst, int src, i64 c) {
    if (c == 0) return;
    for (int i = 0; i < a.rows(); ++i) a.set(i, dst, a(i, dst) + nrm(c, mod) * a(i, src));
  };
  auto row_swap = [&](Mat& a, int x, int y) {
    if (x == y) return;
    auto t = a.row(x);
    a.set_row(x, a.row(y));
    a.set_row(y, t);
  };
  auto col_swap = [&](Mat& a, int x, int y) {
    if (x == y) return;
    for (int i = 0; i < a.rows(); ++i) {
      i64 t = a(i, x);
      a.set(i, x, a(i, y));
      a.set(i, y, t);
    }
  };
  auto row_scale = [&](Mat& a, int i, i64 c) {
    for (int j = 0; j < a.cols(); ++j) a.set(i, j, a(i, j) * nrm(c, mod));
  };

  for (int k = 0; k < n; ++k) {
    // Global pivot: minimal valuation in the trailing block, lowest row then column.
    int bi = -1, bj = -1, bv = r.prec;
    for (int i = k; i < m.rows(); ++i)
      for (int j = k; j < m.cols(); ++j) {
        int v = valuation(m(i, j), r);
        if (v < bv) { bv = v; bi = i; bj = j; }
      }
    if (bi < 0) {
      for (int t = k; t < n; ++t) s.exps.push_back(r.prec);
      break;
    }
    if (bi != k) { row_swap(m, k, bi); row_swap(s.P, k, bi); col_swap(s.Pinv, k, bi); }
    if (bj != k) { col_swap(m, k, bj); col_swap(s.Q, k, bj); row_swap(s.Qinv, k, bj); }
    // Normalize pivot to exactly p^bv.
    i64 u = m(k, k) / ipow(r.p, bv);  // unit (representative is divisible exactly)
    i64 ui = inv_mod(u, mod);
    row_scale(m, k, ui);
    row_scale(s.P, k, ui);
    col_addmul(s.Pinv, k, k, u - 1);  // scale column k of Pinv by u
    const i64 piv = ipow(r.p, bv);
    for (int i = k + 1; i < m.rows(); ++i) {
      i64 x = m(i, k);
      if (x == 0) continue;
      i64 c = x / piv;  // exact: val(x) >= bv
      row_addmul(m, i, k, -c);
      row_addmul(s.P, i, k, -c);
      col_addmul(s.Pinv, k, i, c);
    }
    for (int j = k + 1; j < m.cols(); ++j) {
      i64 x = m(k, j);
      if (x == 0) continue;
      i64 c = x / piv;
      col_addmul(m, j, k, -c);
      col_addmul(s.Q, j, k, -c);
      row_addmul(s.Qinv, k, j, c);
    }
    s.exps.push_back(bv);
  }
  return s;
}

// Elementary divisor exponents of m over Z/p^N, ascending; the value N means
// the divisor is 0 at this precision (">= N").
inline std::vector<int> padic_elementary_divisors(const Mat& m) {
  return smith_local(m).exps;
}

// Number of diagonal exponents < N: the rank of the spanned lattice.
inline int lattice_rank(const Mat& m) {
  auto e = padic_elementary_divisors(m);
  return int(std::count_if(e.begin(), e.end(), [&](int v) { return v < m.ring().prec; }));
}

// Basis rows of { x : x * m = 0 }, treating valuation >= N as exact zero.
// Exact over Z_p whenever every true elementary divisor exponent is < N.
inline Mat left_kernel(const Mat& m) {
  SmithLocal s = smith_local(m);
  std::vector<int> keep;
  for (int i = 0; i < m.rows(); ++i) {
    bool zero_row = i >= int(s.exps.size()) || s.exps[i] >= m.ring().prec;
    if (zero_row) keep.push_back(i);
  }
  Mat k(m.ring(), int(keep.size()), m.rows());
  for (int t = 0; t < int(keep.size()); ++t) k.set_row(t, s.P.row(keep[t]));
  return k;
}

inline Mat right_kernel(const Mat& m) { return left_kernel(m.transpose()); }

// Minimal generating rows for the row lattice of m: p^{e_i} * row_i(Q^{-1}).
inline Mat row_lattice_basis(const Mat& m) {
  SmithLocal s = smith_local(m);
  std::vector<std::vector<i64>> rows;
  for (int i = 0; i < int(s.exps.size()); ++i) {
    if (s.exps[i] >= m.ring().prec) continue;
    auto v = s.Qinv.row(i);
    i64 c = ipow(m.ring().p, s.exps[i]);
    for (auto& x : v) x = x * c % m.ring().modulus();
    rows.push_back(std::move(v));
  }
  return Mat::from_rows(m.ring(), rows);
}

// Solves x * a = b (rows of b solved independently); throws std::runtime_error
// if no solution exists at this precision.
inline Mat solve_left(const Mat& a, const Mat& b) {
  require_same(a.ring(), b.ring(), "solve_left");
  if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: shape mismatch");
  SmithLocal s = smith_local(a);
  const Ring r = a.ring();
  Mat bq = b * s.Q;
  Mat x(r, b.rows(), a.rows());
  for (int t = 0; t < b.rows(); ++t) {
    std::vector<i64> y(a.rows(), 0);
    for (int j = 0; j < a.cols(); ++j) {
      i64 rhs = bq(t, j);
      if (j >= int(s.exps.size()) || s.exps[j] >= r.prec) {
        if (rhs != 0) throw std::runtime_error("solve_left: inconsistent system");
        continue;
      }
      i64 piv = ipow(r.p, s.exps[j]);
      if (rhs % piv != 0) throw std::runtime_error("solve_left: inconsistent system");
      y[j] = rhs / piv;
    }
    x.set_row(t, apply_row(y, s.P));
  }
  return x;
}

inline Mat solve_right(const Mat& a, const Mat& b) {
  return solve_left(a.transpose(), b.transpose()).transpose();
}

// Inverse via Gauss-Jordan with unit pivots; throws if not invertible.
inline Mat inverse(const Mat& m0) {
  if (m0.rows() != m0.cols()) throw std::invalid_argument("inverse: square matrix required");
  Mat m = m0;
  Mat inv = Mat::identity(m.ring(), m.rows());
  const i64 mod = m.ring().modulus();
  for (int k = 0; k < m.rows(); ++k) {
    int piv = -1;
    for (int i = k; i < m.rows(); ++i)
      if (valuation(m(i, k), m.ring()) == 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("inverse: matrix not invertible");
    if (piv != k) {
      auto a = m.row(piv), b = m.row(k);
      m.set_row(piv, b); m.set_row(k, a);
      auto c = inv.row(piv), d = inv.row(k);
      inv.set_row(piv, d); inv.set_row(k, c);
    }
    i64 u = inv_mod(m(k, k), mod);
    for (int j = 0; j < m.cols(); ++j) m.set(k, j, m(k, j) * u);
    for (int j = 0; j < m.cols(); ++j) inv.set(k, j, inv(k, j) * u);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == k) continue;
      i64 c = m(i, k);
      if (c == 0) continue;
      for (int j = 0; j < m.cols(); ++j) m.set(i, j, m(i, j) - c * m(k, j));
      for (int j = 0; j < m.cols(); ++j) inv.set(i, j, inv(i, j) - c * inv(k, j));
    }
  }
  return inv;
}

}  // namespace gol
