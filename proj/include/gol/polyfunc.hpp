#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gol/algebra.hpp"
#include "gol/partitions.hpp"

namespace gol {

// Evaluable model of a polynomial functor on free abelian groups. Dimensions,
// cross effects, and (for the power constructors) explicit matrix actions are
// all computed on standard monomial bases. modulus = 0 means integer
// coefficients; a prime means coefficients reduced into [0, p).
struct PolyFunctorSpec {
  enum class Kind { Identity, Constant, TensorPower, SymPower, ExtPower, Linearization, DirectSum };
  Kind kind = Kind::Identity;
  int n = 0;  // power degree / truncation degree
  int m = 1;  // source rank of a linearization
  std::vector<PolyFunctorSpec> summands;
  i64 modulus = 0;

  static PolyFunctorSpec identity() { return PolyFunctorSpec{}; }
  static PolyFunctorSpec constant() {
    PolyFunctorSpec f;
    f.kind = Kind::Constant;
    return f;
  }
  static PolyFunctorSpec tensor_power(int n) { return power(Kind::TensorPower, n); }
  static PolyFunctorSpec sym_power(int n) { return power(Kind::SymPower, n); }
  static PolyFunctorSpec ext_power(int n) { return power(Kind::ExtPower, n); }
  static PolyFunctorSpec linearization(int m, int n) {
    PolyFunctorSpec f;
    f.kind = Kind::Linearization;
    f.m = m;
    f.n = n;
    f.check();
    return f;
  }
  static PolyFunctorSpec direct_sum(std::vector<PolyFunctorSpec> parts) {
    PolyFunctorSpec f;
    f.kind = Kind::DirectSum;
    f.summands = std::move(parts);
    f.check();
    return f;
  }

  void check() const {
    if (n < 0) throw std::invalid_argument("PolyFunctorSpec: power degree must be >= 0");
    if (kind == Kind::Linearization && m < 1)
      throw std::invalid_argument("PolyFunctorSpec: linearization source rank must be >= 1");
    if (kind == Kind::DirectSum && summands.empty())
      throw std::invalid_argument("PolyFunctorSpec: empty direct sum");
    for (const auto& s : summands) s.check();
  }

 private:
  static PolyFunctorSpec power(Kind k, int n) {
    PolyFunctorSpec f;
    f.kind = k;
    f.n = n;
    f.check();
    return f;
  }
};

// Syntactic degree bound: the actual polynomial degree except for degenerate
// summands, and always an upper bound.
inline int degree_bound(const PolyFunctorSpec& f) {
  switch (f.kind) {
    case PolyFunctorSpec::Kind::Identity: return 1;
    case PolyFunctorSpec::Kind::Constant: return 0;
    case PolyFunctorSpec::Kind::DirectSum: {
      int d = 0;
      for (const auto& s : f.summands) d = std::max(d, degree_bound(s));
      return d;
    }
    default: return f.n;
  }
}

// dim F(Z^k); closed forms per constructor, additive over direct sums.
inline i64 dim_at(const PolyFunctorSpec& f, i64 k) {
  if (k < 0) throw std::invalid_argument("dim_at: negative rank");
  switch (f.kind) {
    case PolyFunctorSpec::Kind::Identity: return k;
    case PolyFunctorSpec::Kind::Constant: return 1;
    case PolyFunctorSpec::Kind::TensorPower: {
      i64 d = 1;
      for (int i = 0; i < f.n; ++i) d *= k;
      return d;
    }
    case PolyFunctorSpec::Kind::SymPower: return binomial(k + f.n - 1, f.n);
    case PolyFunctorSpec::Kind::ExtPower: return binomial(k, f.n);
    case PolyFunctorSpec::Kind::Linearization: return binomial(i64(f.m) * k + f.n, f.n);
    case PolyFunctorSpec::Kind::DirectSum: {
      i64 d = 0;
      for (const auto& s : f.summands) d += dim_at(s, k);
      return d;
    }
  }
  throw std::invalid_argument("dim_at: unknown constructor");
}

// ----- functor grammar: id | const | tensor:n | sym:n | ext:n | lin:m:n | sum(...) -----

namespace detail {

inline int parse_uint(const std::string& s, std::size_t& at) {
  if (at >= s.size() || !std::isdigit(static_cast<unsigned char>(s[at])))
    throw std::invalid_argument("functor spec: expected a number at position " + std::to_string(at));
  i64 v = 0;
  while (at < s.size() && std::isdigit(static_cast<unsigned char>(s[at]))) {
    v = v * 10 + (s[at] - '0');
    if (v > 1000000) throw std::invalid_argument("functor spec: number too large");
    ++at;
  }
  return int(v);
}

inline void expect(const std::string& s, std::size_t& at, char c) {
  if (at >= s.size() || s[at] != c)
    throw std::invalid_argument(std::string("functor spec: expected '") + c + "' at position " +
                                std::to_string(at));
  ++at;
}

inline PolyFunctorSpec parse_spec(const std::string& s, std::size_t& at) {
  auto word = [&](const char* w) {
    std::size_t len = std::string(w).size();
    if (s.compare(at, len, w) == 0) {
      at += len;
      return true;
    }
    return false;
  };
  if (word("id")) return PolyFunctorSpec::identity();
  if (word("const")) return PolyFunctorSpec::constant();
  if (word("tensor:")) return PolyFunctorSpec::tensor_power(parse_uint(s, at));
  if (word("sym:")) return PolyFunctorSpec::sym_power(parse_uint(s, at));
  if (word("ext:")) return PolyFunctorSpec::ext_power(parse_uint(s, at));
  if (word("lin:")) {
    int m = parse_uint(s, at);
    expect(s, at, ':');
    int n = parse_uint(s, at);
    return PolyFunctorSpec::linearization(m, n);
  }
  if (word("sum(")) {
    std::vector<PolyFunctorSpec> parts;
    parts.push_back(parse_spec(s, at));
    while (at < s.size() && s[at] == ',') {
      ++at;
      parts.push_back(parse_spec(s, at));
    }
    expect(s, at, ')');
    return PolyFunctorSpec::direct_sum(std::move(parts));
  }
  throw std::invalid_argument("functor spec: unknown constructor at position " + std::to_string(at));
}

}  // namespace detail

inline PolyFunctorSpec parse_functor(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::size_t at = 0;
  PolyFunctorSpec f = detail::parse_spec(s, at);
  if (at != s.size())
    throw std::invalid_argument("functor spec: trailing input at position " + std::to_string(at));
  return f;
}

inline std::string to_string(const PolyFunctorSpec& f) {
  switch (f.kind) {
    case PolyFunctorSpec::Kind::Identity: return "id";
    case PolyFunctorSpec::Kind::Constant: return "const";
    case PolyFunctorSpec::Kind::TensorPower: return "tensor:" + std::to_string(f.n);
    case PolyFunctorSpec::Kind::SymPower: return "sym:" + std::to_string(f.n);
    case PolyFunctorSpec::Kind::ExtPower: return "ext:" + std::to_string(f.n);
    case PolyFunctorSpec::Kind::Linearization:
      return "lin:" + std::to_string(f.m) + ":" + std::to_string(f.n);
    case PolyFunctorSpec::Kind::DirectSum: {
      std::string s = "sum(";
      for (std::size_t i = 0; i < f.summands.size(); ++i) {
        if (i) s += ",";
        s += to_string(f.summands[i]);
      }
      return s + ")";
    }
  }
  throw std::invalid_argument("to_string: unknown constructor");
}

// ----- cross effects -----

// Dimensions of the cross effects of F at all-Z slots: c_j is the dimension of
// the j-slot cross effect, and offset the dimension of F(0). They satisfy
// dim F(Z^k) = offset + sum_j C(k, j) c_j.
struct CrossEffectTable {
  PolyFunctorSpec spec;
  i64 offset = 0;
  std::vector<i64> c;  // c[j-1] = j-slot dimension, j = 1..J

  i64 at(int j) const {
    if (j < 1 || j > int(c.size())) throw std::invalid_argument("CrossEffectTable: slot out of range");
    return c[j - 1];
  }
};

// Binomial inversion of k -> dim F(Z^k). The consistency identity is
// re-verified for every k <= J before returning.
inline CrossEffectTable cross_effect_dims(const PolyFunctorSpec& f, int J) {
  if (J < 1) throw std::invalid_argument("cross_effect_dims: need at least one slot");
  CrossEffectTable t;
  t.spec = f;
  t.offset = dim_at(f, 0);
  for (int j = 1; j <= J; ++j) {
    i64 cj = 0;
    for (int i = 0; i <= j; ++i) {
      i64 term = binomial(j, i) * dim_at(f, i);
      cj += (j - i) % 2 == 0 ? term : -term;
    }
    if (cj < 0) throw std::runtime_error("cross_effect_dims: negative cross effect");
    t.c.push_back(cj);
  }
  for (int k = 0; k <= J; ++k) {
    i64 total = t.offset;
    for (int j = 1; j <= J; ++j) total += binomial(k, j) * t.c[j - 1];
    if (total != dim_at(f, k)) throw std::runtime_error("cross_effect_dims: inversion inconsistency");
  }
  return t;
}

// Largest j <= bound with a nonvanishing j-slot cross effect; 0 when they all
// vanish. Purely empirical: the caller supplies the scan bound.
inline int degree_of(const PolyFunctorSpec& f, int bound) {
  CrossEffectTable t = cross_effect_dims(f, bound);
  for (int j = bound; j >= 1; --j)
    if (t.c[j - 1] != 0) return j;
  return 0;
}

// ----- matrix actions -----

namespace detail {

// words of length n over {0..k-1}: all / nondecreasing / strictly increasing
inline void gen_words(int k, int n, int mode, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (int(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  int lo = 0;
  if (!cur.empty() && mode == 1) lo = cur.back();
  if (!cur.empty() && mode == 2) lo = cur.back() + 1;
  if (cur.empty() && mode == 2) lo = 0;
  for (int a = lo; a < k; ++a) {
    cur.push_back(a);
    gen_words(k, n, mode, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> words(int k, int n, int mode) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  gen_words(k, n, mode, cur, out);
  return out;
}

inline i64 int_det(const IntMat& a, std::vector<int>& rows, const std::vector<int>& cols, int at) {
  if (at == int(cols.size())) return 1;
  i64 det = 0, sign = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int r = rows[i];
    rows.erase(rows.begin() + i);
    det += sign * a[r][cols[at]] * int_det(a, rows, cols, at + 1);
    rows.insert(rows.begin() + i, r);
    sign = -sign;
  }
  return det;
}

// minor of a on the given row and column index sets (both strictly increasing)
inline i64 minor_det(const IntMat& a, const std::vector<int>& rows, const std::vector<int>& cols) {
  std::vector<int> r = rows;
  return int_det(a, r, cols, 0);
}

}  // namespace detail

// The induced matrix of F on the standard monomial basis of F(Z^k): words for
// tensor powers, sorted monomials for symmetric powers (no denominators:
// coefficients are multinomial sums), minors for exterior powers. Entries are
// plain integers, reduced into [0, p) when the spec carries a modulus.
inline IntMat matrix_action(const PolyFunctorSpec& f, const IntMat& a) {
  const int k = int(a.size());
  for (const auto& row : a)
    if (int(row.size()) != k) throw std::invalid_argument("matrix_action: matrix must be square");

  IntMat r;
  switch (f.kind) {
    case PolyFunctorSpec::Kind::Identity: r = a; break;
    case PolyFunctorSpec::Kind::Constant: r = {{1}}; break;
    case PolyFunctorSpec::Kind::TensorPower: {
      auto w = detail::words(k, f.n, 0);
      const int d = int(w.size());
      r.assign(d, std::vector<i64>(d, 0));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          i64 prod = 1;
          for (int t = 0; t < f.n; ++t) prod *= a[w[i][t]][w[j][t]];
          r[i][j] = prod;
        }
      break;
    }
    case PolyFunctorSpec::Kind::SymPower: {
      auto mono = detail::words(k, f.n, 1);
      std::map<std::vector<int>, int> index;
      for (std::size_t i = 0; i < mono.size(); ++i) index[mono[i]] = int(i);
      const int d = int(mono.size());
      r.assign(d, std::vector<i64>(d, 0));
      auto all = detail::words(k, f.n, 0);
      for (int j = 0; j < d; ++j)
        for (const auto& pick : all) {  // expand prod_t (A e_{mono[j][t]})
          i64 coeff = 1;
          for (int t = 0; t < f.n; ++t) coeff *= a[pick[t]][mono[j][t]];
          if (coeff == 0) continue;
          std::vector<int> key = pick;
          std::sort(key.begin(), key.end());
          r[index.at(key)][j] += coeff;
        }
      break;
    }
    case PolyFunctorSpec::Kind::ExtPower: {
      auto sets = detail::words(k, f.n, 2);
      const int d = int(sets.size());
      r.assign(d, std::vector<i64>(d, 0));
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r[i][j] = detail::minor_det(a, sets[i], sets[j]);
      break;
    }
    case PolyFunctorSpec::Kind::DirectSum: {
      std::vector<IntMat> blocks;
      i64 total = 0;
      for (const auto& s : f.summands) {
        blocks.push_back(matrix_action(s, a));
        total += i64(blocks.back().size());
      }
      r.assign(total, std::vector<i64>(total, 0));
      i64 off = 0;
      for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
          for (std::size_t j = 0; j < b.size(); ++j) r[off + i][off + j] = b[i][j];
        off += i64(b.size());
      }
      break;
    }
    case PolyFunctorSpec::Kind::Linearization:
      throw std::invalid_argument("matrix_action: linearization actions are not implemented");
  }
  if (f.modulus > 0)
    for (auto& row : r)
      for (auto& x : row) x = nrm(x, f.modulus);
  return r;
}

// F(p*A) vanishes mod p for reduced functors of degree < p: every term of
// the expansion carries at least one factor p per degree. Guarded by both
// hypotheses the statement needs; a constant summand survives scaling, so
// functors with F(0) != 0 are rejected rather than reported as failures.
inline bool check_p_alpha_vanishes(const PolyFunctorSpec& f, const IntMat& a, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("check_p_alpha_vanishes: p must be prime");
  if (degree_bound(f) > int(p) - 1)
    throw std::invalid_argument("check_p_alpha_vanishes: hypothesis violated: degree >= p");
  if (dim_at(f, 0) != 0)
    throw std::invalid_argument("check_p_alpha_vanishes: hypothesis violated: functor has a constant term");
  PolyFunctorSpec g = f;
  g.modulus = 0;
  IntMat scaled = a;
  for (auto& row : scaled)
    for (auto& x : row) x *= p;
  for (const auto& row : matrix_action(g, scaled))
    for (i64 x : row)
      if (nrm(x, p) != 0) return false;
  return true;
}

// F(A + p*G) = F(A) mod p under the same degree hypothesis.
inline bool check_mod_p_invariance(const PolyFunctorSpec& f, const IntMat& a, const IntMat& g, i64 p) {
  if (!is_prime(p)) throw std::invalid_argument("check_mod_p_invariance: p must be prime");
  if (degree_bound(f) > int(p) - 1)
    throw std::invalid_argument("check_mod_p_invariance: hypothesis violated: degree >= p");
  if (a.size() != g.size()) throw std::invalid_argument("check_mod_p_invariance: size mismatch");
  PolyFunctorSpec h = f;
  h.modulus = 0;
  IntMat shifted = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != g[i].size()) throw std::invalid_argument("check_mod_p_invariance: size mismatch");
    for (std::size_t j = 0; j < a[i].size(); ++j) shifted[i][j] += p * g[i][j];
  }
  IntMat lhs = matrix_action(h, shifted);
  IntMat rhs = matrix_action(h, a);
  for (std::size_t i = 0; i < lhs.size(); ++i)
    for (std::size_t j = 0; j < lhs[i].size(); ++j)
      if (nrm(lhs[i][j] - rhs[i][j], p) != 0) return false;
  return true;
}

// Decategorified representability: evaluating F at Z^m equals the cross-effect
// bookkeeping sum offset + sum_j C(m, j) c_j, taken over j <= n.
inline bool hom_dim_projectivity_identity(int n, int m, const PolyFunctorSpec& f) {
  if (n < 1 || m < 0) throw std::invalid_argument("hom_dim_projectivity_identity: bad arguments");
  if (degree_bound(f) > n)
    throw std::invalid_argument("hom_dim_projectivity_identity: degree exceeds the representing degree");
  CrossEffectTable t = cross_effect_dims(f, n);
  i64 rhs = t.offset;
  for (int j = 1; j <= n; ++j) rhs += binomial(m, j) * t.c[j - 1];
  return dim_at(f, m) == rhs;
}

namespace detail {

inline i64 factorial(int n) {
  i64 r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// The n-slot cross effect of G has a declared dimension when G is built from
// constructors with known multilinearization: n! for the n-th tensor power,
// 1 for the n-th symmetric or exterior power, 0 below degree n, additive over
// sums.
inline i64 declared_cross_effect(int n, const PolyFunctorSpec& g) {
  if (degree_bound(g) < n) return 0;
  switch (g.kind) {
    case PolyFunctorSpec::Kind::Identity: return 1;  // n == 1 here
    case PolyFunctorSpec::Kind::TensorPower: return factorial(n);
    case PolyFunctorSpec::Kind::SymPower: return 1;
    case PolyFunctorSpec::Kind::ExtPower: return 1;
    case PolyFunctorSpec::Kind::DirectSum: {
      i64 total = 0;
      for (const auto& s : g.summands) total += declared_cross_effect(n, s);
      return total;
    }
    default:
      throw std::invalid_argument("cross_effect_hom_identity: no declared target for this constructor");
  }
}

}  // namespace detail

// The top cross effect c_n(G) computed by inversion must match the declared
// Hom-dimension target of the n-fold tensor probe.
inline bool cross_effect_hom_identity(int n, const PolyFunctorSpec& g) {
  if (n < 1) throw std::invalid_argument("cross_effect_hom_identity: need n >= 1");
  if (degree_bound(g) > n)
    throw std::invalid_argument("cross_effect_hom_identity: degree exceeds the probe");
  return cross_effect_dims(g, n).at(n) == detail::declared_cross_effect(n, g);
}

// Dimension bookkeeping for the degree-p linearization of a line: it splits
// off a constant and one simple summand of each degree 2..p-1, leaving a
// summand M(Z^k) of dimension C(k+p, p) - 1 - sum_i C(k+i-1, i); M is
// uniserial with a copy of the identity functor at top and socle, so its
// heart L has dimension dimM - 2k. Both must be nonnegative.
struct SummandDims {
  i64 dimM = 0;
  i64 dimL = 0;
};

inline SummandDims structureofP0_bookkeeping(i64 p, i64 k) {
  if (!is_prime(p)) throw std::invalid_argument("structureofP0_bookkeeping: p must be prime");
  if (k < 0) throw std::invalid_argument("structureofP0_bookkeeping: negative rank");
  i64 dim_m = binomial(k + p, p) - 1;
  for (i64 i = 2; i <= p - 1; ++i) dim_m -= binomial(k + i - 1, i);
  i64 dim_l = dim_m - 2 * k;
  if (dim_m < 0 || dim_l < 0) throw std::runtime_error("structureofP0_bookkeeping: inconsistent dimensions");
  return {dim_m, dim_l};
}

// Dimension over F_p of the joint commutant of the n-th tensor powers of a
// family of integer matrices that pins the endomorphism ring of the functor:
// 0/1 diagonal projections and coordinate permutations are imposed
// analytically (support matching and orbit constancy), then matrix units and
// transvections cut the rest. In the stable range k >= n the expected answer
// is n!: the span of the place permutations.
inline i64 tensor_end_dim(int n, int k, i64 p) {
  if (n < 1 || k < 1) throw std::invalid_argument("tensor_end_dim: need n >= 1 and k >= 1");
  if (k < n) throw std::invalid_argument("tensor_end_dim: pre-stable range (k < n)");
  if (!is_prime(p)) throw std::invalid_argument("tensor_end_dim: p must be prime");
  i64 nwords = 1;
  for (int i = 0; i < n; ++i) {
    nwords *= k;
    if (nwords > 256) throw std::invalid_argument("tensor_end_dim: search budget exceeded");
  }
  const int N = int(nwords);

  auto letters = detail::words(k, n, 0);  // word w = letters[w], lex order
  std::vector<int> support(N, 0);
  for (int w = 0; w < N; ++w)
    for (int t = 0; t < n; ++t) support[w] |= 1 << letters[w][t];
  std::map<std::vector<int>, int> word_index;
  for (int w = 0; w < N; ++w) word_index[letters[w]] = w;

  // cells: the support-matched pairs, i.e. the commutant of all 0/1 diagonal
  // projections P_S^{(tensor n)}
  std::vector<std::pair<int, int>> cells;
  std::map<std::pair<int, int>, int> cell_index;
  for (int w = 0; w < N; ++w)
    for (int v = 0; v < N; ++v)
      if (support[w] == support[v]) {
        cell_index[{w, v}] = int(cells.size());
        cells.emplace_back(w, v);
      }

  // orbit constancy under coordinate permutations g^{(tensor n)}, g in S_k
  std::vector<int> orbit(cells.size(), -1);
  int norbits = 0;
  std::vector<int> perm(k);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (orbit[c] != -1) continue;
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
      std::vector<int> w2(n), v2(n);
      for (int t = 0; t < n; ++t) {
        w2[t] = perm[letters[cells[c].first][t]];
        v2[t] = perm[letters[cells[c].second][t]];
      }
      orbit[cell_index.at({word_index.at(w2), word_index.at(v2)})] = norbits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    ++norbits;
  }

  Mat basis(Ring::fp(p), norbits, N * N);
  for (std::size_t c = 0; c < cells.size(); ++c)
    basis.set(orbit[c], cells[c].first * N + cells[c].second, 1);

  PolyFunctorSpec tens = PolyFunctorSpec::tensor_power(n);
  tens.modulus = p;
  auto refine = [&](const IntMat& a) {
    if (basis.rows() == 0) return;
    IntMat fa = matrix_action(tens, a);
    Mat cons(Ring::fp(p), basis.rows(), N * N);
    for (int b = 0; b < basis.rows(); ++b)
      for (int w = 0; w < N; ++w)
        for (int v = 0; v < N; ++v) {
          i64 x = basis(b, w * N + v);
          if (x == 0) continue;
          // commutator of the basis matrix with fa, spread entrywise
          for (int j = 0; j < N; ++j) {
            cons.add_at(b, w * N + j, x * fa[v][j]);
            cons.add_at(b, j * N + v, -x * fa[j][w]);
          }
        }
    Mat combos = left_kernel_fp(cons);
    basis = combos * basis;
  };

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      IntMat unit(k, std::vector<i64>(k, 0));
      unit[i][j] = 1;
      refine(unit);
      if (i != j) {
        IntMat transvection(k, std::vector<i64>(k, 0));
        for (int d = 0; d < k; ++d) transvection[d][d] = 1;
        transvection[i][j] = 1;
        refine(transvection);
      }
    }
  IntMat ramp(k, std::vector<i64>(k, 0));
  for (int d = 0; d < k; ++d) ramp[d][d] = d + 1;
  refine(ramp);
  IntMat ones(k, std::vector<i64>(k, 1));
  refine(ones);

  return basis.rows();
}

}  // namespace gol
