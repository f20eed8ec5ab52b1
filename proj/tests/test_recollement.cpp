#include <catch2/catch_amalgamated.hpp>

#include <gol/brauer.hpp>
#include <gol/groups.hpp>
#include <gol/recollement.hpp>

using gol::BasisAlgebra;
using gol::i64;
using gol::IdempotentSelection;
using gol::IntMat;

namespace {

IdempotentSelection sel(std::vector<int> v) { return IdempotentSelection(std::move(v)); }

}  // namespace

TEST_CASE("selection validation", "[recollement]") {
  BasisAlgebra a = gol::to_algebra(gol::stem(3), 3);
  REQUIRE_THROWS_AS(gol::corner_algebra(a, sel({})), std::invalid_argument);
  REQUIRE_THROWS_AS(gol::corner_algebra(a, sel({0, 1, 2})), std::invalid_argument);
  REQUIRE_THROWS_AS(gol::corner_algebra(a, sel({5})), std::invalid_argument);
  REQUIRE(sel({1, 1}).chosen == std::vector<int>{1});
  REQUIRE(sel({2, 0}).chosen == std::vector<int>{0, 2});
  REQUIRE(sel({1}).complement(a).chosen == std::vector<int>{0, 2});
}

TEST_CASE("single-edge corner is a dual-number algebra", "[recollement]") {
  // keeping one end of the two-edge path leaves its idempotent and its socle
  BasisAlgebra a = gol::to_algebra(gol::stem(2), 3);
  BasisAlgebra c = gol::corner_algebra(a, sel({0}));
  REQUIRE(c.dim == 2);
  REQUIRE(c.vertex_count() == 1);
  REQUIRE(gol::cartan_matrix(c) == IntMat{{2}});
  REQUIRE(gol::loewy_length(c) == 2);
}

TEST_CASE("cut-leaf corner matches the shorter path", "[recollement]") {
  for (i64 p : {3, 5, 7}) {
    CAPTURE(p);
    BasisAlgebra a = gol::to_algebra(gol::stem(int(p)), p);
    std::vector<int> rest;
    for (int v = 1; v < int(p); ++v) rest.push_back(v);
    BasisAlgebra c = gol::corner_algebra(a, sel(rest));
    REQUIRE(c.dim == 4 * (int(p) - 1) - 2);
    REQUIRE(c.vertex_count() == int(p) - 1);
    REQUIRE(gol::cartan_matrix(c) == gol::predicted_cartan(gol::stem(int(p) - 1)));
    REQUIRE(gol::loewy_length(c) == 3);

    BasisAlgebra q = gol::quotient_by_trace_ideal(a, sel(rest));
    REQUIRE(q.dim == 1);
    REQUIRE(q.vertex_count() == 1);
    REQUIRE(gol::cartan_matrix(q) == IntMat{{1}});
  }
}

TEST_CASE("two-edge path quotients are one-dimensional either way", "[recollement]") {
  BasisAlgebra a = gol::to_algebra(gol::stem(2), 5);
  for (int keep : {0, 1}) {
    BasisAlgebra q = gol::quotient_by_trace_ideal(a, sel({keep}));
    REQUIRE(q.dim == 1);
    REQUIRE(q.vertex_count() == 1);
  }
}

TEST_CASE("middle-edge cut of the three-edge path", "[recollement]") {
  BasisAlgebra a = gol::to_algebra(gol::stem(3), 3);
  BasisAlgebra c = gol::corner_algebra(a, sel({1}));
  REQUIRE(c.dim == 2);
  REQUIRE(gol::cartan_matrix(c) == IntMat{{2}});
  // every proper walk passes the middle edge, so the quotient is semisimple
  BasisAlgebra q = gol::quotient_by_trace_ideal(a, sel({1}));
  REQUIRE(q.dim == 2);
  REQUIRE(q.vertex_count() == 2);
  REQUIRE(gol::cartan_matrix(q) == IntMat{{1, 0}, {0, 1}});
  REQUIRE(gol::loewy_length(q) == 1);
}

TEST_CASE("star cut keeps one arrow in the quotient", "[recollement]") {
  BasisAlgebra a = gol::to_algebra(gol::star(3), 3);
  BasisAlgebra c = gol::corner_algebra(a, sel({0}));
  REQUIRE(c.dim == 2);
  REQUIRE(gol::cartan_matrix(c) == IntMat{{2}});
  // of the cyclic walks around the hub only edge 1 -> edge 2 avoids edge 0
  BasisAlgebra q = gol::quotient_by_trace_ideal(a, sel({0}));
  REQUIRE(q.dim == 3);
  REQUIRE(q.vertex_count() == 2);
  REQUIRE(gol::cartan_matrix(q) == IntMat{{1, 1}, {0, 1}});
  REQUIRE(gol::loewy_length(q) == 2);
}

TEST_CASE("vertex counts add across random cuts", "[recollement]") {
  gol::SeededRng rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + int(rng.below(4));
    BasisAlgebra a = gol::to_algebra(gol::stem(n), 3);
    i64 mask = 1 + rng.below((i64(1) << n) - 2);
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) verts.push_back(v);
    CAPTURE(n, mask);
    gol::RecollementReport r = gol::recollement_check(a, sel(verts));
    REQUIRE(r.corner_vertices + r.quotient_vertices == r.total_vertices);
    REQUIRE(r.corner_vertices == int(verts.size()));
  }
}

TEST_CASE("group block corner needs the projection basis", "[recollement]") {
  // group-element bases are not fixed by the corner projection, so this walks
  // the image-basis path
  BasisAlgebra s3 = gol::group_algebra_from_table(gol::symmetric_group_table(3), 3);
  for (int v : {0, 1}) {
    CAPTURE(v);
    BasisAlgebra c = gol::corner_algebra(s3, sel({v}));
    REQUIRE(c.dim == 2);
    REQUIRE(c.vertex_count() == 1);
    REQUIRE(gol::cartan_matrix(c) == IntMat{{2}});
    REQUIRE(gol::loewy_length(c) == 2);
  }
  gol::RecollementReport r = gol::recollement_check(s3, sel({0}));
  REQUIRE(r.quotient_dim == 1);
  REQUIRE(r.total_vertices == 2);
  REQUIRE(r.corner_vertices == 1);
  REQUIRE(r.quotient_vertices == 1);
}
