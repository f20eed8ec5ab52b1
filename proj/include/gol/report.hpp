#pragma once

// Verification suites and their machine-readable reports. Each suite runs a
// battery of structural checks against the library and returns one report per
// claim; reports serialize to the "gol-1" JSON schema. The canonical form is
// deterministic for fixed parameters and seed: reports are sorted by suite
// then claim, object keys are emitted in sorted order, and wall-clock timings
// stay out of the JSON (they are for human display only).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gol/algebra.hpp"
#include "gol/brauer.hpp"
#include "gol/green.hpp"
#include "gol/groups.hpp"
#include "gol/json_io.hpp"
#include "gol/partitions.hpp"
#include "gol/polyfunc.hpp"
#include "gol/recollement.hpp"

namespace gol {

struct SuiteParams {
  i64 p = 5;
  int precision = 6;
  int trials = 1000;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string suite;
  std::string claim;
  std::string status;  // "pass" | "fail" | "skipped"
  Json metrics = Json::object();
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;  // human display only; excluded from canonical JSON
  Json witness;             // non-null exactly when status == "fail"
};

// Canonical object form. runtime_ms is excluded so identical parameters and
// seed reproduce byte-identical output.
inline Json report_to_json(const VerificationReport& r) {
  Json j;
  j["schema"] = "gol-1";
  j["suite"] = r.suite;
  j["claim"] = r.claim;
  j["status"] = r.status;
  j["metrics"] = r.metrics;
  j["seed"] = r.seed;
  if (r.status == "fail") j["witness"] = r.witness.is_null() ? Json{{"error", "unspecified"}} : r.witness;
  return j;
}

inline Json reports_to_json(std::vector<VerificationReport> reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.suite, a.claim) < std::tie(b.suite, b.claim);
  });
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  return arr;
}

inline void emit_json(const std::vector<VerificationReport>& reports, const std::string& path) {
  save_json(path, reports_to_json(reports));
}

inline bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const VerificationReport& r) { return r.status == "fail"; });
}

namespace detail {

inline IntMat tridiagonal_cartan(int n) {
  IntMat c(n, std::vector<i64>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = 1;
  }
  return c;
}

// Runs one claim body under a timer; exceptions become failures with the
// message as witness. A body may downgrade its report to "skipped".
struct SuiteBuilder {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationReport> out;

  template <class F>
  void check(const std::string& claim, F&& body) {
    if (claim.empty()) throw std::invalid_argument("SuiteBuilder: empty claim");
    VerificationReport r;
    r.suite = suite;
    r.claim = claim;
    r.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = body(r);
    } catch (const std::exception& e) {
      r.witness = Json{{"error", e.what()}};
      ok = false;
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!ok) {
      r.status = "fail";
      if (r.witness.is_null()) r.witness = Json{{"error", "check returned false"}};
    } else if (r.status != "skipped") {
      r.status = "pass";
      r.witness = Json();
    }
    out.push_back(std::move(r));
  }
};

// A member of the congruence order with every free slot random and every
// constrained slot offset from its anchor by a random multiple of p^x.
inline Vec random_green_member(const GreenOrderSpec& s, SeededRng& rng) {
  const i64 q = s.modulus(), g = s.glue_modulus();
  Vec v(s.raw_dim(), 0);
  if (s.leading_scalar) v[s.idx_d0()] = rng.below(q);
  for (int j = 1; j <= s.m; ++j) {
    v[s.idx_a(j)] = rng.below(q);
    v[s.idx_b(j)] = rng.below(q);
    v[s.idx_c(j)] = nrm(g * rng.below(q / g), q);
    i64 anchor;
    if (j > 1)
      anchor = v[s.idx_a(j - 1)];
    else if (s.leading_scalar)
      anchor = v[s.idx_d0()];
    else
      anchor = rng.below(q);  // first diagonal slot is unconstrained
    v[s.idx_d(j)] = nrm(anchor + g * rng.below(q / g), q);
  }
  v[s.idx_trailing()] = nrm(v[s.idx_a(s.m)] + g * rng.below(q / g), q);
  MemberReport rep = member(s, v);
  if (!rep.ok) throw std::runtime_error("random_green_member: generated a non-member");
  return v;
}

inline IntMat random_int_matrix(int k, i64 bound, SeededRng& rng) {
  IntMat a(k, std::vector<i64>(k, 0));
  for (auto& row : a)
    for (auto& x : row) x = rng.below(2 * bound + 1) - bound;
  return a;
}

}  // namespace detail

// ----- randomized functor batteries -----

struct TrialBattery {
  int trials = 0;
  int failures = 0;
  Json first_failure;
};

// The two randomized deviation statements, keyed by their CLI lemma names:
// "welldefined"      — F(p*A) == 0 mod p for every reduced functor of degree < p;
// "modpwelldefined"  — F(A + p*G) == F(A) mod p, constant terms allowed.
// Functors are drawn from a fixed pool filtered to each statement's
// hypotheses; matrices are k x k with k in 1..3 and entries in [-p, p].
inline TrialBattery run_deviation_trials(const std::string& lemma, i64 p, int trials, std::uint64_t seed) {
  bool scaled;
  if (lemma == "welldefined")
    scaled = true;
  else if (lemma == "modpwelldefined")
    scaled = false;
  else
    throw std::invalid_argument("run_deviation_trials: unknown lemma \"" + lemma +
                                "\" (expected welldefined or modpwelldefined)");
  if (!is_prime(p)) throw std::invalid_argument("run_deviation_trials: p must be prime");
  if (trials < 0) throw std::invalid_argument("run_deviation_trials: negative trial count");

  std::vector<PolyFunctorSpec> pool;
  for (const char* text : {"id", "sum(id,const)", "tensor:2", "tensor:3", "sym:2", "sym:3", "sym:4",
                           "ext:2", "ext:3", "sum(sym:2,ext:2)"}) {
    PolyFunctorSpec f = parse_functor(text);
    if (degree_bound(f) > int(p) - 1) continue;
    if (scaled && dim_at(f, 0) != 0) continue;  // the scaled statement needs reduced functors
    pool.push_back(f);
  }

  SeededRng rng(seed);
  TrialBattery out;
  out.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const PolyFunctorSpec& f = pool[std::size_t(rng.below(i64(pool.size())))];
    const int k = 1 + int(rng.below(3));
    IntMat a = detail::random_int_matrix(k, p, rng);
    bool ok;
    if (scaled) {
      ok = check_p_alpha_vanishes(f, a, p);
    } else {
      IntMat g = detail::random_int_matrix(k, 1, rng);
      ok = check_mod_p_invariance(f, a, g, p);
    }
    if (!ok) {
      ++out.failures;
      if (out.first_failure.is_null())
        out.first_failure = Json{{"trial", t}, {"functor", to_string(f)}, {"matrix", a}};
    }
  }
  return out;
}

// ----- suites -----

namespace detail {

inline std::vector<VerificationReport> suite_brauer(const SuiteParams& prm) {
  SuiteBuilder b{"brauer", prm.seed, {}};

  b.check("path-tree algebras have tridiagonal cartan matrices, 1..7 edges", [&](VerificationReport& r) {
    for (int n = 1; n <= 7; ++n) {
      BasisAlgebra a = to_algebra(stem(n), prm.p);
      IntMat got = cartan_matrix(a);
      if (got != tridiagonal_cartan(n) || got != predicted_cartan(stem(n))) {
        r.witness = Json{{"edges", n}, {"cartan", got}};
        return false;
      }
    }
    r.metrics["max_edges"] = 7;
    return true;
  });

  b.check("path-tree algebras have loewy length 3 (2 for a single edge)", [&](VerificationReport& r) {
    for (int n = 1; n <= 6; ++n) {
      int got = loewy_length(to_algebra(stem(n), prm.p));
      int want = n == 1 ? 2 : 3;
      if (got != want) {
        r.witness = Json{{"edges", n}, {"loewy_length", got}};
        return false;
      }
    }
    r.metrics["max_edges"] = 6;
    return true;
  });

  b.check("star-tree algebras match their predicted projective shapes", [&](VerificationReport& r) {
    for (const BrauerTree& t : {star(3), star(4), star(1, 4), star(2, 2)}) {
      BasisAlgebra a = to_algebra(t, prm.p);
      if (cartan_matrix(a) != predicted_cartan(t)) {
        r.witness = Json{{"tree", tree_to_json(t)}, {"cartan", cartan_matrix(a)}};
        return false;
      }
    }
    r.metrics["trees"] = 4;
    return true;
  });

  b.check("syzygy periods over path trees: 2n, except n for the middle edge of an odd path",
          [&](VerificationReport& r) {
            Json table = Json::object();
            for (int n = 2; n <= 5; ++n) {
              BasisAlgebra a = to_algebra(stem(n), prm.p);
              std::vector<int> periods;
              for (int v = 0; v < n; ++v) {
                int got = omega_orbit_period(a, v);
                int want = (n % 2 == 1 && v == n / 2) ? n : 2 * n;
                if (got != want) {
                  r.witness = Json{{"edges", n}, {"edge", v}, {"period", got}, {"expected", want}};
                  return false;
                }
                periods.push_back(got);
              }
              table[std::to_string(n)] = periods;
            }
            r.metrics["periods"] = table;
            return true;
          });

  return std::move(b.out);
}

inline std::vector<VerificationReport> suite_green(const SuiteParams& prm) {
  SuiteBuilder b{"green", prm.seed, {}};
  const i64 p = prm.p;

  b.check("order summary: rank, components, reduction, census, closure", [&](VerificationReport& r) {
    const GreenOrderSpec s = GreenOrderSpec::lambda0(p, prm.precision);
    r.metrics["p"] = p;
    r.metrics["rank"] = s.rank();
    const int comps = rational_components(s);
    r.metrics["rational_components"] = comps;
    BasisAlgebra red = reduce_mod_p(s);
    r.metrics["reduced_dim"] = red.dim;
    IntMat cart = cartan_matrix(red);
    r.metrics["cartan"] = cart;
    LatticeCount lc = lattice_count(p);
    r.metrics["lattice_count"] =
        Json{{"total", lc.total}, {"projective", lc.projective}, {"nonprojective", lc.nonprojective}};
    if (p >= 5)
      r.metrics["commutative_factors"] = commutative_factor_count(p).total;
    else
      r.metrics["commutative_factors"] = nullptr;  // the count is defined from p = 5 up

    SeededRng rng(prm.seed);
    int failures = 0;
    for (int t = 0; t < prm.trials; ++t) {
      Vec x = random_green_member(s, rng);
      Vec y = random_green_member(s, rng);
      MemberReport mr = member(s, mul_raw(s, x, y));
      if (!mr.ok) {
        ++failures;
        if (r.witness.is_null())
          r.witness = Json{{"trial", t}, {"violations", mr.violations}, {"x", x}, {"y", y}};
      }
    }
    r.metrics["closure_trials"] = prm.trials;
    r.metrics["closure_failures"] = failures;

    bool ok = s.rank() == int(4 * p - 2) && comps == int(p + 1) && red.dim == int(4 * p - 2) &&
              red.vertex_count() == int(p) && cart == tridiagonal_cartan(int(p)) &&
              cart == predicted_cartan(stem(int(p))) && failures == 0;
    if (!ok && r.witness.is_null()) r.witness = Json{{"error", "summary invariants disagree"}, {"metrics", r.metrics}};
    return ok;
  });

  b.check("reduction mod p is a path-tree block: dimension 4p-2, p simples, loewy length 3",
          [&](VerificationReport& r) {
            BasisAlgebra red = reduce_mod_p(GreenOrderSpec::lambda0(p, prm.precision));
            r.metrics["dim"] = red.dim;
            r.metrics["simples"] = red.vertex_count();
            int ll = loewy_length(red);
            r.metrics["loewy_length"] = ll;
            return red.dim == int(4 * p - 2) && red.vertex_count() == int(p) && ll == 3;
          });

  b.check("projective lattices: p of them, ranks (3,4,...,4,3), spanning adjacent components",
          [&](VerificationReport& r) {
            const GreenOrderSpec s = GreenOrderSpec::lambda0(p, prm.precision);
            auto projs = projective_lattices(s);
            r.metrics["count"] = projs.size();
            if (int(projs.size()) != int(p)) return false;
            int total_rank = 0;
            for (int i = 0; i < int(p); ++i) {
              const auto& lat = projs[i];
              total_rank += lat.rank;
              int want = (i == 0 || i + 1 == int(p)) ? 3 : 4;
              if (lat.rank != want || lat.components != std::vector<int>{i, i + 1}) {
                r.witness = Json{{"label", lat.label}, {"rank", lat.rank}, {"components", lat.components}};
                return false;
              }
            }
            r.metrics["total_rank"] = total_rank;
            return total_rank == s.rank();
          });

  b.check("syzygy-kernel lattices: 2(p-1) of them, all with local endomorphism rings",
          [&](VerificationReport& r) {
            const GreenOrderSpec s = GreenOrderSpec::lambda0(p, prm.precision);
            auto kers = kernel_lattices(s);
            r.metrics["count"] = kers.size();
            if (i64(kers.size()) != 2 * (p - 1)) return false;
            for (const auto& lat : kers)
              if (lat.rank < 1 || !endomorphism_ring_local(s, lat)) {
                r.witness = Json{{"label", lat.label}, {"rank", lat.rank}};
                return false;
              }
            return true;
          });

  b.check("lattice census identities against partition counts", [&](VerificationReport& r) {
    LatticeCount lc = lattice_count(p);
    i64 small = 0;
    for (i64 k = 2; k <= p - 1; ++k) small += partition_count(k);
    r.metrics["total"] = lc.total;
    r.metrics["projective"] = lc.projective;
    r.metrics["nonprojective"] = lc.nonprojective;
    bool ok = lc.total == 3 * p - 2 + small && lc.projective == p + small && lc.nonprojective == 2 * (p - 1);
    if (p >= 5) {
      CommutativeFactorCount cf = commutative_factor_count(p);
      i64 independent = small + (partition_count(p) - hook_count(p));
      r.metrics["commutative_factors"] = cf.total;
      ok = ok && cf.total == independent;
    } else {
      r.status = "skipped";  // commutative factor bookkeeping starts at p = 5
      r.metrics["note"] = "commutative factor count requires p >= 5";
    }
    return ok;
  });

  return std::move(b.out);
}

inline std::vector<VerificationReport> suite_recollement(const SuiteParams& prm) {
  SuiteBuilder b{"recollement", prm.seed, {}};
  const int p = int(prm.p);

  b.check("cutting the first edge off a path block leaves the shorter path's cartan matrix",
          [&](VerificationReport& r) {
            BasisAlgebra a = to_algebra(stem(p), prm.p);
            std::vector<int> keep;
            for (int e = 1; e < p; ++e) keep.push_back(e);
            IdempotentSelection sel(keep);
            BasisAlgebra corner = corner_algebra(a, sel);
            r.metrics["corner_dim"] = corner.dim;
            r.metrics["corner_simples"] = corner.vertex_count();
            IntMat cart = cartan_matrix(corner);
            r.metrics["cartan"] = cart;
            return corner.vertex_count() == p - 1 && cart == predicted_cartan(stem(p - 1)) &&
                   cart == tridiagonal_cartan(p - 1);
          });

  b.check("the matching trace-ideal quotient is one-dimensional", [&](VerificationReport& r) {
    BasisAlgebra a = to_algebra(stem(p), prm.p);
    std::vector<int> keep;
    for (int e = 1; e < p; ++e) keep.push_back(e);
    BasisAlgebra quot = quotient_by_trace_ideal(a, IdempotentSelection(keep));
    r.metrics["quotient_dim"] = quot.dim;
    r.metrics["quotient_simples"] = quot.vertex_count();
    return quot.dim == 1 && quot.vertex_count() == 1 && cartan_matrix(quot) == IntMat{{1}};
  });

  b.check("corner and quotient simples partition the block's simples", [&](VerificationReport& r) {
    BasisAlgebra a = to_algebra(stem(p), prm.p);
    Json cuts = Json::array();
    for (int lone = 0; lone < p; ++lone) {  // keep a single edge; quotient sees the rest
      RecollementReport rep = recollement_check(a, IdempotentSelection({lone}));
      if (rep.corner_vertices != 1 || rep.quotient_vertices != p - 1 ||
          rep.corner_vertices + rep.quotient_vertices != rep.total_vertices) {
        r.witness = Json{{"kept_edge", lone},
                         {"corner_vertices", rep.corner_vertices},
                         {"quotient_vertices", rep.quotient_vertices}};
        return false;
      }
      cuts.push_back(Json{{"kept_edge", lone}, {"corner_dim", rep.corner_dim}, {"quotient_dim", rep.quotient_dim}});
    }
    r.metrics["cuts"] = cuts;
    return true;
  });

  return std::move(b.out);
}

inline std::vector<VerificationReport> suite_polyfunc(const SuiteParams& prm) {
  SuiteBuilder b{"polyfunc", prm.seed, {}};

  b.check("group-ring linearizations of a line have dimension n+1 in degree n, n <= 10",
          [&](VerificationReport& r) {
            for (int n = 1; n <= 10; ++n) {
              i64 got = dim_at(PolyFunctorSpec::linearization(1, n), 1);
              if (got != n + 1) {
                r.witness = Json{{"n", n}, {"dim", got}};
                return false;
              }
            }
            r.metrics["max_degree"] = 10;
            return true;
          });

  b.check("top cross effects: n! for tensor powers, 1 for symmetric and exterior powers, n <= 5",
          [&](VerificationReport& r) {
            for (int n = 1; n <= 5; ++n) {
              i64 ct = cross_effect_dims(PolyFunctorSpec::tensor_power(n), n).at(n);
              i64 cs = cross_effect_dims(PolyFunctorSpec::sym_power(n), n).at(n);
              i64 ce = cross_effect_dims(PolyFunctorSpec::ext_power(n), n).at(n);
              if (ct != factorial(n) || cs != 1 || ce != 1) {
                r.witness = Json{{"n", n}, {"tensor", ct}, {"sym", cs}, {"ext", ce}};
                return false;
              }
            }
            r.metrics["max_degree"] = 5;
            return true;
          });

  b.check("evaluation dimensions match the cross-effect bookkeeping on free probes",
          [&](VerificationReport& r) {
            std::vector<PolyFunctorSpec> fs = {
                PolyFunctorSpec::identity(), PolyFunctorSpec::sym_power(2), PolyFunctorSpec::ext_power(2),
                PolyFunctorSpec::direct_sum({PolyFunctorSpec::sym_power(2), PolyFunctorSpec::ext_power(2)}),
                PolyFunctorSpec::tensor_power(3)};
            int checked = 0;
            for (const auto& f : fs)
              for (int n = degree_bound(f); n <= degree_bound(f) + 2; ++n)
                for (int m = 0; m <= 4; ++m, ++checked)
                  if (!hom_dim_projectivity_identity(n, m, f)) {
                    r.witness = Json{{"functor", to_string(f)}, {"slots", n}, {"rank", m}};
                    return false;
                  }
            for (int n = 1; n <= 4; ++n)
              for (const auto& g : {PolyFunctorSpec::tensor_power(n), PolyFunctorSpec::sym_power(n),
                                    PolyFunctorSpec::ext_power(n)})
                if (!cross_effect_hom_identity(n, g)) {
                  r.witness = Json{{"functor", to_string(g)}, {"slots", n}};
                  return false;
                }
            r.metrics["identities"] = checked;
            return true;
          });

  b.check("scaled evaluations vanish mod p over seeded trials", [&](VerificationReport& r) {
    TrialBattery t = run_deviation_trials("welldefined", prm.p, prm.trials, prm.seed);
    r.metrics["trials"] = t.trials;
    r.metrics["failures"] = t.failures;
    r.witness = t.first_failure;
    return t.failures == 0;
  });

  b.check("evaluations are insensitive to mod-p perturbation over seeded trials", [&](VerificationReport& r) {
    TrialBattery t = run_deviation_trials("modpwelldefined", prm.p, prm.trials, prm.seed);
    r.metrics["trials"] = t.trials;
    r.metrics["failures"] = t.failures;
    r.witness = t.first_failure;
    return t.failures == 0;
  });

  b.check("endomorphism dimension of small tensor powers is n! in the stable range",
          [&](VerificationReport& r) {
            for (int n = 2; n <= 3; ++n) {
              i64 got = tensor_end_dim(n, 3, prm.p);
              if (got != factorial(n)) {
                r.witness = Json{{"n", n}, {"dim", got}};
                return false;
              }
            }
            r.metrics["max_power"] = 3;
            return true;
          });

  return std::move(b.out);
}

inline std::vector<VerificationReport> suite_oracle_s3(const SuiteParams& prm) {
  SuiteBuilder b{"oracle-s3", prm.seed, {}};

  b.check("brute-force mod-3 symmetric-group block matches the two-edge path algebra",
          [&](VerificationReport& r) {
            BasisAlgebra g = group_algebra_from_table(symmetric_group_table(3), 3);
            BasisAlgebra t = to_algebra(stem(2), 3);
            r.metrics["group_dim"] = g.dim;
            r.metrics["tree_dim"] = t.dim;
            const int grad = radical_ideal(g).dim();
            const int trad = radical_ideal(t).dim();
            r.metrics["radical_dim"] = grad;
            IntMat gc = cartan_matrix(g), tc = cartan_matrix(t);
            r.metrics["cartan"] = gc;
            const int gl = loewy_length(g), tl = loewy_length(t);
            r.metrics["loewy_length"] = gl;
            std::vector<int> gper, tper;
            for (int v = 0; v < 2; ++v) {
              gper.push_back(omega_orbit_period(g, v));
              tper.push_back(omega_orbit_period(t, v));
            }
            r.metrics["syzygy_periods"] = gper;
            bool ok = g.dim == 6 && t.dim == 6 && grad == 4 && trad == 4 &&
                      gc == IntMat{{2, 1}, {1, 2}} && tc == gc && gl == 3 && tl == 3 &&
                      gper == std::vector<int>{4, 4} && tper == gper;
            if (!ok) r.witness = Json{{"error", "group block and tree algebra disagree"}, {"metrics", r.metrics}};
            return ok;
          });

  return std::move(b.out);
}

}  // namespace detail

// Runs one named verification suite (or "all") and returns its reports.
inline std::vector<VerificationReport> run_suite(const std::string& name, const SuiteParams& prm = {}) {
  if (!is_prime(prm.p)) throw std::invalid_argument("run_suite: p must be prime");
  if (prm.precision < 2 || prm.precision > 9)
    throw std::invalid_argument("run_suite: precision must lie in [2, 9]");
  try {
    ipow(prm.p, 2 * prm.precision);  // residue products must stay inside i64
  } catch (const std::overflow_error&) {
    throw std::invalid_argument("run_suite: p^(2*precision) exceeds the exact arithmetic range");
  }
  if (prm.trials < 0) throw std::invalid_argument("run_suite: negative trial count");
  if (name == "brauer") return detail::suite_brauer(prm);
  if (name == "green") return detail::suite_green(prm);
  if (name == "recollement") return detail::suite_recollement(prm);
  if (name == "polyfunc") return detail::suite_polyfunc(prm);
  if (name == "oracle-s3") return detail::suite_oracle_s3(prm);
  if (name == "all") {
    std::vector<VerificationReport> out;
    for (const char* part : {"brauer", "green", "recollement", "polyfunc", "oracle-s3"}) {
      auto reports = run_suite(part, prm);
      out.insert(out.end(), std::make_move_iterator(reports.begin()), std::make_move_iterator(reports.end()));
    }
    return out;
  }
  throw std::invalid_argument("run_suite: unknown suite \"" + name +
                              "\" (expected brauer, green, recollement, polyfunc, oracle-s3, or all)");
}

}  // namespace gol
