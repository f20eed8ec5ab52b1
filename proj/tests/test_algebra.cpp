#include <catch2/catch_amalgamated.hpp>

#include <gol/algebra.hpp>
#include <gol/groups.hpp>

using gol::BasisAlgebra;
using gol::i64;
using gol::LeftModule;
using gol::Vec;

namespace {

// F_p as a one-dimensional algebra.
BasisAlgebra field_algebra(i64 p) {
  BasisAlgebra a;
  a.ring = gol::Ring::fp(p);
  a.dim = 1;
  a.table = {{{1}}};
  a.unit = {1};
  a.vertices = {{1}};
  return a;
}

// F_p[t]/t^k on the basis 1, t, ..., t^{k-1}.
BasisAlgebra truncated_poly(i64 p, int k) {
  BasisAlgebra a;
  a.ring = gol::Ring::fp(p);
  a.dim = k;
  a.table.assign(k, std::vector<Vec>(k, Vec(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i + j < k) a.table[i][j][i + j] = 1;
  a.unit = gol::unit_vec(k, 0);
  a.vertices = {a.unit};
  a.radical_gens = {gol::unit_vec(k, 1)};
  return a;
}

// Upper triangular 2x2 matrices over F_p on the basis e11, e22, e12.
BasisAlgebra upper_triangular2(i64 p) {
  BasisAlgebra a;
  a.ring = gol::Ring::fp(p);
  a.dim = 3;
  a.table.assign(3, std::vector<Vec>(3, Vec(3, 0)));
  a.table[0][0][0] = 1;  // e11 e11 = e11
  a.table[1][1][1] = 1;  // e22 e22 = e22
  a.table[0][2][2] = 1;  // e11 e12 = e12
  a.table[2][1][2] = 1;  // e12 e22 = e12
  a.unit = {1, 1, 0};
  a.vertices = {{1, 0, 0}, {0, 1, 0}};
  a.radical_gens = {{0, 0, 1}};
  return a;
}

}  // namespace

TEST_CASE("one-dimensional field algebra", "[algebra]") {
  BasisAlgebra a = field_algebra(5);
  auto rep = gol::check_algebra(a);
  CAPTURE(rep.failures);
  REQUIRE(rep.ok);
  REQUIRE(gol::radical_ideal(a).dim() == 0);
  REQUIRE(gol::cartan_matrix(a) == gol::IntMat{{1}});
  REQUIRE(gol::loewy_length(a) == 1);
  REQUIRE(gol::omega_orbit_period(a, 0) == 0);  // S is projective
}

TEST_CASE("truncated polynomial algebras", "[algebra]") {
  for (i64 p : {2, 3, 5}) {
    for (int k : {2, 3, 4}) {
      BasisAlgebra a = truncated_poly(p, k);
      auto rep = gol::check_algebra(a);
      CAPTURE(p, k, rep.failures);
      REQUIRE(rep.ok);
      auto rs = gol::radical_series(a, gol::regular_module(a));
      REQUIRE(int(rs.dims.size()) == k + 1);
      for (int i = 0; i <= k; ++i) REQUIRE(rs.dims[i] == k - i);
      REQUIRE(gol::cartan_matrix(a) == gol::IntMat{{k}});
      REQUIRE(gol::loewy_length(a) == k);
      REQUIRE(gol::ext1_dim(a, 0, 0) == 1);
    }
    // Omega(S) = rad^1 has dim k-1; the orbit returns to S after k-1 steps
    // down the uniserial chain... in fact after 2 steps for k=3 and 1 for k=2.
    REQUIRE(gol::omega_orbit_period(truncated_poly(p, 2), 0) == 1);
    REQUIRE(gol::omega_orbit_period(truncated_poly(p, 3), 0) == 2);
  }
}

TEST_CASE("upper triangular 2x2 algebra", "[algebra]") {
  BasisAlgebra a = upper_triangular2(3);
  auto rep = gol::check_algebra(a);
  CAPTURE(rep.failures);
  REQUIRE(rep.ok);

  SECTION("projectives and Cartan data") {
    auto p1 = gol::projective_module(a, a.vertices[0]);
    auto p2 = gol::projective_module(a, a.vertices[1]);
    REQUIRE(p1.module.dim == 1);
    REQUIRE(p2.module.dim == 2);
    REQUIRE(gol::cartan_matrix(a) == gol::IntMat{{1, 0}, {1, 1}});
    REQUIRE(gol::loewy_length(a) == 2);
    REQUIRE(gol::ext1_dim(a, 0, 0) == 0);
    REQUIRE(gol::ext1_dim(a, 0, 1) == 0);
    REQUIRE(gol::ext1_dim(a, 1, 0) == 1);
    REQUIRE(gol::ext1_dim(a, 1, 1) == 0);
  }

  SECTION("radical series of the regular module") {
    auto rs = gol::radical_series(a, gol::regular_module(a));
    REQUIRE(rs.dims == std::vector<int>{3, 1, 0});
    REQUIRE(rs.layers == std::vector<std::vector<i64>>{{1, 1}, {1, 0}});
  }

  SECTION("syzygies") {
    // S_1 = P_1 is projective; Omega kills it.
    REQUIRE(gol::omega_orbit_period(a, 0) == 0);
    // Omega(S_2) = rad P_2 = S_1, then 0: the orbit never returns.
    REQUIRE(gol::omega_orbit_period(a, 1) == 0);
    LeftModule o = gol::syzygy(a, gol::simple_module(a, 1));
    REQUIRE(o.dim == 1);
    REQUIRE(gol::module_isomorphic(a, o, gol::simple_module(a, 0)));
  }

  SECTION("module isomorphism invariants") {
    LeftModule s1 = gol::simple_module(a, 0);
    LeftModule s2 = gol::simple_module(a, 1);
    REQUIRE(gol::module_isomorphic(a, s1, s1));
    REQUIRE_FALSE(gol::module_isomorphic(a, s1, s2));
    // conjugating the action by an invertible matrix preserves the class
    auto p2 = gol::projective_module(a, a.vertices[1]);
    gol::Mat t(a.ring, 2, 2);
    t.set(0, 0, 1);
    t.set(0, 1, 1);
    t.set(1, 1, 1);
    LeftModule twisted;
    twisted.ring = a.ring;
    twisted.dim = 2;
    for (const auto& m : p2.module.action) twisted.action.push_back(t * m * gol::inverse(t));
    REQUIRE(gol::module_isomorphic(a, p2.module, twisted));
    REQUIRE_FALSE(gol::module_isomorphic(a, p2.module, gol::regular_module(a)));
  }

  SECTION("act agrees with act_matrix") {
    LeftModule reg = gol::regular_module(a);
    Vec x = {2, 1, 2};
    gol::Mat xm = reg.act_matrix(x);
    for (int u = 0; u < 3; ++u) {
      Vec v = gol::unit_vec(3, u);
      Vec w = reg.act(x, v);
      for (int i = 0; i < 3; ++i) REQUIRE(w[i] == xm(i, u));
    }
    // the regular action is left multiplication
    Vec y = {1, 2, 1};
    gol::Mat ym(a.ring, 3, 1);
    for (int i = 0; i < 3; ++i) ym.set(i, 0, y[i]);
    Vec lhs = reg.act(x, y);
    REQUIRE(lhs == a.mul(x, y));
  }
}

TEST_CASE("structural checks flag broken inputs", "[algebra]") {
  SECTION("associativity") {
    BasisAlgebra a = upper_triangular2(3);
    a.table[2][2] = gol::unit_vec(3, 1);  // e12 e12 = e22 breaks (e11 e12) e12
    REQUIRE_FALSE(gol::check_algebra(a).ok);
  }
  SECTION("unit") {
    BasisAlgebra a = upper_triangular2(3);
    a.unit = gol::unit_vec(3, 0);
    REQUIRE_FALSE(gol::check_algebra(a).ok);
  }
  SECTION("radical generators that are not nilpotent") {
    BasisAlgebra a = upper_triangular2(3);
    a.radical_gens = {gol::unit_vec(3, 1)};  // e22 is idempotent
    REQUIRE_FALSE(gol::check_algebra(a).ok);
  }
  SECTION("idempotents not summing to the unit") {
    BasisAlgebra a = upper_triangular2(3);
    a.vertices = {{1, 0, 0}};
    REQUIRE_FALSE(gol::check_algebra(a).ok);
  }
}

TEST_CASE("group algebra from multiplication table", "[algebra][group]") {
  SECTION("C2 over F_2") {
    BasisAlgebra a = gol::group_algebra_from_table(gol::cyclic_group_table(2), 2);
    auto rep = gol::check_algebra(a);
    CAPTURE(rep.failures);
    REQUIRE(rep.ok);
    REQUIRE(a.dim == 2);
    REQUIRE(a.vertex_count() == 1);
    REQUIRE(gol::radical_ideal(a).dim() == 1);
    REQUIRE(gol::cartan_matrix(a) == gol::IntMat{{2}});
    REQUIRE(gol::loewy_length(a) == 2);
    REQUIRE(gol::omega_orbit_period(a, 0) == 1);
  }
  SECTION("C3 over F_3") {
    BasisAlgebra a = gol::group_algebra_from_table(gol::cyclic_group_table(3), 3);
    auto rep = gol::check_algebra(a);
    CAPTURE(rep.failures);
    REQUIRE(rep.ok);
    REQUIRE(a.vertex_count() == 1);
    REQUIRE(gol::radical_ideal(a).dim() == 2);
    REQUIRE(gol::cartan_matrix(a) == gol::IntMat{{3}});
    REQUIRE(gol::loewy_length(a) == 3);
    REQUIRE(gol::omega_orbit_period(a, 0) == 2);
  }
  SECTION("C3 over F_2 is semisimple but not split") {
    BasisAlgebra a = gol::group_algebra_from_table(gol::cyclic_group_table(3), 2);
    REQUIRE(gol::radical_ideal(a).dim() == 0);
    REQUIRE(a.vertex_count() == 2);  // F_2 x F_4: the F_4 factor is not split
    REQUIRE_FALSE(gol::check_algebra(a).ok);
  }
  SECTION("search budget guard") {
    REQUIRE_THROWS_AS(gol::group_algebra_from_table(gol::cyclic_group_table(21), 2),
                      std::invalid_argument);
  }
}

TEST_CASE("symmetric group algebra over F_3", "[algebra][group]") {
  BasisAlgebra a = gol::group_algebra_from_table(gol::symmetric_group_table(3), 3);
  auto rep = gol::check_algebra(a);
  CAPTURE(rep.failures);
  REQUIRE(rep.ok);
  REQUIRE(a.dim == 6);
  REQUIRE(a.vertex_count() == 2);
  REQUIRE(gol::radical_ideal(a).dim() == 4);
  auto c = gol::cartan_matrix(a);
  REQUIRE(c[0][0] == 2);
  REQUIRE(c[1][1] == 2);
  REQUIRE(c[0][1] == 1);
  REQUIRE(c[1][0] == 1);
  REQUIRE(gol::loewy_length(a) == 3);
  REQUIRE(gol::omega_orbit_period(a, 0) == 4);
  REQUIRE(gol::omega_orbit_period(a, 1) == 4);
}
