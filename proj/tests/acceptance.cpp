// Acceptance gate: ten structural criteria, one line of output each, exact
// (tolerance-zero) checks throughout. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "gol/algebra.hpp"
#include "gol/brauer.hpp"
#include "gol/green.hpp"
#include "gol/groups.hpp"
#include "gol/partitions.hpp"
#include "gol/polyfunc.hpp"
#include "gol/recollement.hpp"
#include "gol/report.hpp"

using gol::BasisAlgebra;
using gol::GreenOrderSpec;
using gol::i64;
using gol::IntMat;
using gol::Vec;

namespace {

constexpr std::uint64_t kSeed = 2026;

IntMat tridiagonal(int n) {
  IntMat c(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = 1;
  }
  return c;
}

struct Gate {
  int failures = 0;

  // Runs one criterion; the body returns an empty string on success and a
  // short diagnosis on failure. Exceptions count as failures.
  void criterion(const char* id, const char* text, const std::function<std::string()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (detail.empty()) {
      std::printf("%s PASS  %s  (%.0f ms)\n", id, text, ms);
    } else {
      ++failures;
      std::printf("%s FAIL  %s  (%.0f ms): %s\n", id, text, ms, detail.c_str());
    }
  }
};

std::string fail_at(const std::string& where) { return where; }

}  // namespace

int main() {
  Gate gate;

  gate.criterion("A1", "path-tree algebras have tridiagonal cartan matrices, 1..7 edges", [] {
    for (int n = 1; n <= 7; ++n) {
      IntMat got = gol::cartan_matrix(gol::to_algebra(gol::stem(n), 5));
      if (got != tridiagonal(n)) return fail_at("cartan mismatch at " + std::to_string(n) + " edges");
      if (got != gol::predicted_cartan(gol::stem(n)))
        return fail_at("prediction mismatch at " + std::to_string(n) + " edges");
    }
    return std::string();
  });

  gate.criterion("A2", "congruence order closed under products: 1000 random member pairs, p in {2,3,5,7}, N=6", [] {
    for (i64 p : {2, 3, 5, 7}) {
      const GreenOrderSpec s = GreenOrderSpec::lambda0(p, 6);
      gol::SeededRng rng(kSeed + std::uint64_t(p));
      for (int t = 0; t < 1000; ++t) {
        Vec x = gol::detail::random_green_member(s, rng);
        Vec y = gol::detail::random_green_member(s, rng);
        gol::MemberReport rep = gol::member(s, gol::mul_raw(s, x, y));
        if (!rep.ok)
          return fail_at("product left the order at p=" + std::to_string(p) + ", trial " +
                         std::to_string(t) + ": " + rep.violations.front());
      }
    }
    return std::string();
  });

  gate.criterion("A3", "reduction mod p is the p-edge path-tree block: dim 4p-2, p simples, matching cartan, p in {5,7}", [] {
    for (i64 p : {5, 7}) {
      BasisAlgebra red = gol::reduce_mod_p(GreenOrderSpec::lambda0(p));
      if (!gol::check_algebra(red).ok) return fail_at("structural checks failed at p=" + std::to_string(p));
      if (red.dim != int(4 * p - 2)) return fail_at("dim " + std::to_string(red.dim) + " at p=" + std::to_string(p));
      if (red.vertex_count() != int(p)) return fail_at("simple count at p=" + std::to_string(p));
      if (gol::cartan_matrix(red) != gol::predicted_cartan(gol::stem(int(p))))
        return fail_at("cartan mismatch at p=" + std::to_string(p));
    }
    return std::string();
  });

  gate.criterion("A4", "p+1 rational components and p reduced simples, p in {5,7}", [] {
    for (i64 p : {5, 7}) {
      if (gol::rational_components(GreenOrderSpec::lambda0(p)) != int(p) + 1)
        return fail_at("component count at p=" + std::to_string(p));
      if (gol::reduce_mod_p(GreenOrderSpec::lambda0(p)).vertex_count() != int(p))
        return fail_at("reduced simple count at p=" + std::to_string(p));
    }
    return std::string();
  });

  gate.criterion("A5", "lattice census: ranks (3,4,...,4,3), 2(p-1) local kernels, 23 = 15 + 8 at p=5, p in {3,5}", [] {
    for (i64 p : {3, 5}) {
      const GreenOrderSpec s = GreenOrderSpec::lambda0(p, 6);
      auto projs = gol::projective_lattices(s);
      if (int(projs.size()) != int(p)) return fail_at("projective count at p=" + std::to_string(p));
      for (int i = 0; i < int(p); ++i) {
        int want = (i == 0 || i + 1 == int(p)) ? 3 : 4;
        if (projs[i].rank != want || projs[i].components != std::vector<int>{i, i + 1})
          return fail_at("projective shape " + projs[i].label + " at p=" + std::to_string(p));
      }
      auto kers = gol::kernel_lattices(s);
      if (i64(kers.size()) != 2 * (p - 1)) return fail_at("kernel count at p=" + std::to_string(p));
      for (const auto& lat : kers)
        if (!gol::endomorphism_ring_local(s, lat))
          return fail_at("non-local endomorphism ring for " + lat.label + " at p=" + std::to_string(p));
      i64 small = 0;
      for (i64 k = 2; k <= p - 1; ++k) small += gol::partition_count(k);
      gol::LatticeCount lc = gol::lattice_count(p);
      if (lc.total != 3 * p - 2 + small || lc.projective != p + small || lc.nonprojective != 2 * (p - 1))
        return fail_at("census breakdown at p=" + std::to_string(p));
    }
    gol::LatticeCount lc5 = gol::lattice_count(5);
    if (lc5.total != 23 || lc5.projective != 15 || lc5.nonprojective != 8)
      return fail_at("census at p=5 is not 23 = 15 + 8");
    return std::string();
  });

  gate.criterion("A6", "independent oracle: brute-force mod-3 symmetric-group algebra matches the 2-edge path block", [] {
    BasisAlgebra g = gol::group_algebra_from_table(gol::symmetric_group_table(3), 3);
    BasisAlgebra t = gol::to_algebra(gol::stem(2), 3);
    if (g.dim != 6 || t.dim != 6) return fail_at("dimension");
    if (gol::radical_ideal(g).dim() != 4 || gol::radical_ideal(t).dim() != 4) return fail_at("radical dimension");
    IntMat want{{2, 1}, {1, 2}};
    if (gol::cartan_matrix(g) != want || gol::cartan_matrix(t) != want) return fail_at("cartan matrix");
    if (gol::loewy_length(g) != 3 || gol::loewy_length(t) != 3) return fail_at("loewy length");
    for (int v = 0; v < 2; ++v)
      if (gol::omega_orbit_period(g, v) != 4 || gol::omega_orbit_period(t, v) != 4)
        return fail_at("syzygy period of simple " + std::to_string(v));
    return std::string();
  });

  gate.criterion("A7", "syzygy periods over stems divide 2n: 2n generically, n on the middle edge of odd paths, n in 2..6", [] {
    for (int n = 2; n <= 6; ++n) {
      BasisAlgebra a = gol::to_algebra(gol::stem(n), 3);
      for (int v = 0; v < n; ++v) {
        int got = gol::omega_orbit_period(a, v);
        int want = (n % 2 == 1 && v == n / 2) ? n : 2 * n;
        if (got != want || (2 * n) % got != 0)
          return fail_at("period " + std::to_string(got) + " at n=" + std::to_string(n) + ", edge " +
                         std::to_string(v) + " (expected " + std::to_string(want) + ")");
      }
    }
    return std::string();
  });

  gate.criterion("A8", "recollement bookkeeping: corner is the shorter path block, quotient is one-dimensional, p in {3,5,7}", [] {
    for (int p : {3, 5, 7}) {
      BasisAlgebra a = gol::to_algebra(gol::stem(p), i64(p));
      std::vector<int> keep;
      for (int e = 1; e < p; ++e) keep.push_back(e);
      gol::IdempotentSelection sel(keep);
      BasisAlgebra corner = gol::corner_algebra(a, sel);
      if (gol::cartan_matrix(corner) != gol::predicted_cartan(gol::stem(p - 1)))
        return fail_at("corner cartan at p=" + std::to_string(p));
      BasisAlgebra quot = gol::quotient_by_trace_ideal(a, sel);
      if (quot.dim != 1) return fail_at("quotient dimension at p=" + std::to_string(p));
      gol::RecollementReport rep = gol::recollement_check(a, sel);
      if (rep.corner_vertices + rep.quotient_vertices != rep.total_vertices)
        return fail_at("vertex bookkeeping at p=" + std::to_string(p));
    }
    return std::string();
  });

  gate.criterion("A9", "functor identities: line linearizations n+1, top cross effects n! and 1, 200 mod-p trials per lemma, p in {3,5,7}", [] {
    for (int n = 1; n <= 10; ++n)
      if (gol::dim_at(gol::PolyFunctorSpec::linearization(1, n), 1) != n + 1)
        return fail_at("linearization dimension at n=" + std::to_string(n));
    for (int n = 1; n <= 5; ++n) {
      if (gol::cross_effect_dims(gol::PolyFunctorSpec::tensor_power(n), n).at(n) != gol::detail::factorial(n))
        return fail_at("tensor cross effect at n=" + std::to_string(n));
      if (gol::cross_effect_dims(gol::PolyFunctorSpec::sym_power(n), n).at(n) != 1)
        return fail_at("symmetric cross effect at n=" + std::to_string(n));
    }
    for (i64 p : {3, 5, 7})
      for (const char* lemma : {"welldefined", "modpwelldefined"}) {
        gol::TrialBattery b = gol::run_deviation_trials(lemma, p, 200, kSeed);
        if (b.failures != 0)
          return fail_at(std::string(lemma) + " failed " + std::to_string(b.failures) + "/200 at p=" +
                         std::to_string(p));
      }
    return std::string();
  });

  gate.criterion("A10", "counting reconciliation: 12 commutative factors at p=5 and 17 = 12 + 5 simple lattices in total", [] {
    gol::CommutativeFactorCount cf = gol::commutative_factor_count(5);
    if (cf.total != 12) return fail_at("commutative factor count " + std::to_string(cf.total));
    i64 regular = 0;
    for (i64 n = 1; n <= 5; ++n) regular += gol::p_regular_partition_count(n, 5);
    if (regular != 17) return fail_at("regular partition sum " + std::to_string(regular));
    if (cf.total + 5 != regular) return fail_at("totals do not reconcile");
    return std::string();
  });

  if (gate.failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", gate.failures);
  return 1;
}
