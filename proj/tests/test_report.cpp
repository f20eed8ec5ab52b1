#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <string>

#include "gol/json_io.hpp"
#include "gol/report.hpp"

using gol::BasisAlgebra;
using gol::BrauerTree;
using gol::Json;
using gol::SuiteParams;
using gol::VerificationReport;

namespace {

// Message of the exception thrown by f; empty when nothing throws.
template <class F>
std::string message_of(F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

bool mentions(const std::string& msg, const std::string& needle) {
  return msg.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("algebra documents round-trip", "[report]") {
  BasisAlgebra a = gol::to_algebra(gol::stem(2), 3);
  Json j = gol::algebra_to_json(a);

  REQUIRE(j.size() == 6);
  REQUIRE(j["p"] == 3);
  REQUIRE(j["dim"] == 6);
  REQUIRE(j.contains("unit"));
  REQUIRE(j.contains("vertices"));
  REQUIRE(j.contains("radical_generators"));
  REQUIRE(j.contains("table"));

  BasisAlgebra b = gol::algebra_from_json(j);
  REQUIRE(b.ring == a.ring);
  REQUIRE(b.dim == a.dim);
  REQUIRE(b.unit == a.unit);
  REQUIRE(b.vertices == a.vertices);
  REQUIRE(b.radical_gens == a.radical_gens);
  REQUIRE(b.table == a.table);
  REQUIRE(gol::cartan_matrix(b) == gol::cartan_matrix(a));
}

TEST_CASE("algebra documents are validated field by field", "[report]") {
  Json good = gol::algebra_to_json(gol::to_algebra(gol::stem(2), 3));

  Json no_table = good;
  no_table.erase("table");
  REQUIRE(mentions(message_of([&] { gol::algebra_from_json(no_table); }), "missing field \"table\""));

  Json bad_p = good;
  bad_p["p"] = 6;
  REQUIRE(mentions(message_of([&] { gol::algebra_from_json(bad_p); }), "expected a prime"));

  Json bad_unit = good;
  bad_unit["unit"] = Json::array({1, 0});
  REQUIRE(mentions(message_of([&] { gol::algebra_from_json(bad_unit); }), "algebra.unit"));

  Json bad_entry = good;
  bad_entry["table"][0][1] = Json::array({1, 2});
  REQUIRE(mentions(message_of([&] { gol::algebra_from_json(bad_entry); }), "algebra.table[0][1]"));

  Json frac = good;
  frac["dim"] = 2.5;
  REQUIRE(mentions(message_of([&] { gol::algebra_from_json(frac); }), "algebra.dim"));

  // shape-valid but not an algebra: an empty radical leaves dim != #vertices
  Json no_rad = good;
  no_rad["radical_generators"] = Json::array();
  REQUIRE(mentions(message_of([&] { gol::algebra_from_json(no_rad); }), "structural checks"));
}

TEST_CASE("tree documents round-trip", "[report]") {
  SECTION("star with multiplicity") {
    BrauerTree t = gol::star(3, 2);
    Json j = gol::tree_to_json(t);
    REQUIRE(j["vertices"] == 4);
    REQUIRE(j["edges"].size() == 3);
    REQUIRE(j["cyclic"]["0"].size() == 3);
    REQUIRE(j["exceptional"]["vertex"] == 0);
    REQUIRE(j["exceptional"]["mu"] == 2);

    BrauerTree back = gol::tree_from_json(j);
    REQUIRE(back.vertices == t.vertices);
    REQUIRE(back.edges == t.edges);
    REQUIRE(back.cyclic == t.cyclic);
    REQUIRE(back.exceptional_vertex == t.exceptional_vertex);
    REQUIRE(back.multiplicity == t.multiplicity);
  }

  SECTION("path tree has a null exceptional slot") {
    Json j = gol::tree_to_json(gol::stem(2));
    REQUIRE(j["exceptional"].is_null());
    BrauerTree back = gol::tree_from_json(j);
    REQUIRE(back.exceptional_vertex == -1);
    REQUIRE(back.multiplicity == 1);
  }

  SECTION("mu = 1 normalizes to no exceptional vertex") {
    Json j = gol::tree_to_json(gol::stem(2));
    j["exceptional"] = Json{{"vertex", 1}, {"mu", 1}};
    BrauerTree back = gol::tree_from_json(j);
    REQUIRE(back.exceptional_vertex == -1);
    REQUIRE(back.multiplicity == 1);
  }
}

TEST_CASE("tree documents are validated", "[report]") {
  Json good = gol::tree_to_json(gol::stem(2));

  Json bad_edge = good;
  bad_edge["edges"][1][1] = 9;
  REQUIRE(mentions(message_of([&] { gol::tree_from_json(bad_edge); }), "tree.edges[1]"));

  Json missing_key = good;
  missing_key["cyclic"].erase("1");
  missing_key["cyclic"]["7"] = Json::array();
  REQUIRE(mentions(message_of([&] { gol::tree_from_json(missing_key); }), "missing key \"1\""));

  Json bad_mu = good;
  bad_mu["exceptional"] = Json{{"vertex", 0}, {"mu", 0}};
  REQUIRE(mentions(message_of([&] { gol::tree_from_json(bad_mu); }), "tree.exceptional.mu"));

  // structurally broken: vertex 1 lists the wrong incident edge
  Json wrong_cycle = good;
  wrong_cycle["cyclic"]["0"] = Json::array({1});
  REQUIRE_THROWS_AS(gol::tree_from_json(wrong_cycle), std::invalid_argument);
}

TEST_CASE("report canonical form is deterministic and sorted", "[report]") {
  VerificationReport pass;
  pass.suite = "green";
  pass.claim = "closure holds";
  pass.status = "pass";
  pass.metrics = Json{{"trials", 10}};
  pass.seed = 7;
  pass.runtime_ms = 123.4;  // must never reach the JSON

  VerificationReport fail;
  fail.suite = "brauer";
  fail.claim = "cartan matches";
  fail.status = "fail";
  fail.witness = Json{{"edges", 3}};
  fail.seed = 7;

  Json arr = gol::reports_to_json({pass, fail});
  REQUIRE(arr.size() == 2);
  REQUIRE(arr[0]["suite"] == "brauer");  // sorted by suite
  REQUIRE(arr[1]["suite"] == "green");
  for (const auto& r : arr) {
    REQUIRE(r["schema"] == "gol-1");
    REQUIRE(!r.contains("runtime_ms"));
    REQUIRE(r.contains("seed"));
  }
  REQUIRE(arr[0]["witness"] == Json{{"edges", 3}});
  REQUIRE(!arr[1].contains("witness"));

  // byte-identical regardless of input order
  REQUIRE(gol::reports_to_json({pass, fail}).dump(2) == gol::reports_to_json({fail, pass}).dump(2));

  auto path = (std::filesystem::temp_directory_path() / "gol_report_roundtrip.json").string();
  gol::emit_json({pass, fail}, path);
  REQUIRE(gol::load_json(path) == arr);
  gol::emit_json({}, path);
  REQUIRE(gol::load_json(path) == Json::array());
  std::filesystem::remove(path);
}

TEST_CASE("verification suites pass and carry their metrics", "[report]") {
  SECTION("oracle-s3") {
    auto reports = gol::run_suite("oracle-s3");
    REQUIRE(reports.size() == 1);
    REQUIRE(reports[0].status == "pass");
    REQUIRE(reports[0].metrics["group_dim"] == 6);
    REQUIRE(reports[0].metrics["syzygy_periods"] == Json::array({4, 4}));
  }

  SECTION("recollement at p = 3") {
    SuiteParams prm;
    prm.p = 3;
    auto reports = gol::run_suite("recollement", prm);
    REQUIRE(reports.size() == 3);
    REQUIRE(gol::all_passed(reports));
  }

  SECTION("green at p = 3 with a short closure battery") {
    SuiteParams prm;
    prm.p = 3;
    prm.precision = 4;
    prm.trials = 25;
    prm.seed = 7;
    auto reports = gol::run_suite("green", prm);
    REQUIRE(gol::all_passed(reports));
    const auto& summary = reports.at(0);
    REQUIRE(summary.metrics["p"] == 3);
    REQUIRE(summary.metrics["rank"] == 10);
    REQUIRE(summary.metrics["rational_components"] == 4);
    REQUIRE(summary.metrics["reduced_dim"] == 10);
    REQUIRE(summary.metrics["closure_trials"] == 25);
    REQUIRE(summary.metrics["closure_failures"] == 0);
    REQUIRE(summary.metrics["commutative_factors"].is_null());
    REQUIRE(summary.metrics["lattice_count"] == Json{{"total", 9}, {"projective", 5}, {"nonprojective", 4}});
    // the commutative-factor census is only defined from p = 5 up
    REQUIRE(reports.back().status == "skipped");
  }

  SECTION("polyfunc with a short battery") {
    SuiteParams prm;
    prm.p = 3;
    prm.trials = 20;
    prm.seed = 1;
    auto reports = gol::run_suite("polyfunc", prm);
    REQUIRE(gol::all_passed(reports));
  }

  SECTION("suite output is deterministic for fixed parameters") {
    SuiteParams prm;
    prm.p = 3;
    prm.precision = 4;
    prm.trials = 10;
    prm.seed = 42;
    std::string once = gol::reports_to_json(gol::run_suite("green", prm)).dump(2);
    std::string twice = gol::reports_to_json(gol::run_suite("green", prm)).dump(2);
    REQUIRE(once == twice);
  }

  SECTION("parameter validation") {
    REQUIRE_THROWS_AS(gol::run_suite("bogus"), std::invalid_argument);
    SuiteParams bad;
    bad.p = 4;
    REQUIRE_THROWS_AS(gol::run_suite("green", bad), std::invalid_argument);
    bad.p = 5;
    bad.precision = 1;
    REQUIRE_THROWS_AS(gol::run_suite("green", bad), std::invalid_argument);
    bad.precision = 6;
    bad.trials = -1;
    REQUIRE_THROWS_AS(gol::run_suite("green", bad), std::invalid_argument);
  }
}

TEST_CASE("deviation trial batteries", "[report]") {
  gol::TrialBattery a = gol::run_deviation_trials("welldefined", 5, 30, 9);
  REQUIRE(a.trials == 30);
  REQUIRE(a.failures == 0);
  REQUIRE(a.first_failure.is_null());

  gol::TrialBattery b = gol::run_deviation_trials("modpwelldefined", 5, 30, 9);
  REQUIRE(b.failures == 0);

  REQUIRE_THROWS_AS(gol::run_deviation_trials("nonsense", 5, 10, 0), std::invalid_argument);
  REQUIRE_THROWS_AS(gol::run_deviation_trials("welldefined", 6, 10, 0), std::invalid_argument);
}
