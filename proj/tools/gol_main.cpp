// Command-line front end over the verification suites: runs one named suite
// (or all of them), prints a human-readable line per claim, optionally writes
// the canonical JSON report array, and exits nonzero when anything failed.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "gol/report.hpp"

namespace {

const char* tag(const std::string& status) {
  if (status == "pass") return "PASS";
  if (status == "fail") return "FAIL";
  return "SKIP";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure checks for block orders, tree algebras, and polynomial functors"};
  std::string suite = "all";
  std::string json_path;
  gol::SuiteParams prm;
  app.add_option("--suite", suite, "brauer, green, recollement, polyfunc, oracle-s3, or all")
      ->capture_default_str();
  app.add_option("--p", prm.p, "prime parameter for the parameterized suites")->capture_default_str();
  app.add_option("--precision", prm.precision, "working precision N for arithmetic mod p^N")
      ->capture_default_str();
  app.add_option("--trials", prm.trials, "number of seeded random trials per randomized claim")
      ->capture_default_str();
  app.add_option("--seed", prm.seed, "seed for every randomized claim")->capture_default_str();
  app.add_option("--json", json_path, "write the canonical report array to this path");
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<gol::VerificationReport> reports = gol::run_suite(suite, prm);
    int failed = 0, skipped = 0;
    for (const auto& r : reports) {
      if (r.status == "fail") ++failed;
      if (r.status == "skipped") ++skipped;
      std::printf("%s  [%s] %s  (%.1f ms)\n", tag(r.status), r.suite.c_str(), r.claim.c_str(),
                  r.runtime_ms);
      if (r.status == "fail") std::printf("      witness: %s\n", r.witness.dump().c_str());
    }
    std::printf("\n%zu checks: %zu passed, %d failed, %d skipped\n", reports.size(),
                reports.size() - std::size_t(failed) - std::size_t(skipped), failed, skipped);
    if (!json_path.empty()) {
      gol::emit_json(reports, json_path);
      std::printf("report written to %s\n", json_path.c_str());
    }
    return failed == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "gol: %s\n", e.what());
    return 2;
  }
}
