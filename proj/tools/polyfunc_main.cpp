// Polynomial functor calculator. Functor grammar:
//   id | const | tensor:n | sym:n | ext:n | lin:m:n | sum(spec,spec,...)
// Subcommands:
//   dims    --functor F --k K       dimension of F(Z^K) and the degree bound
//   cross   --functor F --slots J   cross-effect dimensions c_1..c_J
//   verify  --lemma L --p P --trials T --seed S
//           randomized check of a mod-p statement; L is "welldefined"
//           (scaled evaluations vanish mod p) or "modpwelldefined"
//           (evaluations are insensitive to mod-p perturbation).

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "gol/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"polynomial functor calculator"};
  app.require_subcommand(1);

  std::string functor;
  int k = 1;
  CLI::App* dims = app.add_subcommand("dims", "dimension of F(Z^k)");
  dims->add_option("--functor", functor, "functor spec, e.g. sym:3 or sum(sym:2,ext:2)")->required();
  dims->add_option("--k", k, "rank of the free module argument")->capture_default_str();

  std::string cross_functor;
  int slots = 1;
  CLI::App* cross = app.add_subcommand("cross", "cross-effect dimensions c_1..c_J");
  cross->add_option("--functor", cross_functor, "functor spec")->required();
  cross->add_option("--slots", slots, "number of cross-effect slots J")->capture_default_str();

  std::string lemma;
  long long p = 5;
  int trials = 200;
  unsigned long long seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "randomized mod-p statement checks");
  verify->add_option("--lemma", lemma, "welldefined or modpwelldefined")->required();
  verify->add_option("--p", p, "prime")->capture_default_str();
  verify->add_option("--trials", trials, "trial count")->capture_default_str();
  verify->add_option("--seed", seed, "random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (dims->parsed()) {
      gol::PolyFunctorSpec f = gol::parse_functor(functor);
      if (k < 0) throw std::invalid_argument("dims: k must be >= 0");
      std::printf("%s: dim at k=%d is %lld (degree bound %d)\n", gol::to_string(f).c_str(), k,
                  (long long)gol::dim_at(f, k), gol::degree_bound(f));
      return 0;
    }
    if (cross->parsed()) {
      gol::PolyFunctorSpec f = gol::parse_functor(cross_functor);
      gol::CrossEffectTable t = gol::cross_effect_dims(f, slots);
      std::printf("%s: constant term %lld\n", gol::to_string(f).c_str(), (long long)t.offset);
      for (int j = 1; j <= slots; ++j) std::printf("c_%d = %lld\n", j, (long long)t.at(j));
      return 0;
    }
    gol::TrialBattery b = gol::run_deviation_trials(lemma, p, trials, seed);
    std::printf("lemma %s at p=%lld: %d/%d trials passed (seed %llu)\n", lemma.c_str(), p,
                b.trials - b.failures, b.trials, seed);
    if (b.failures > 0) {
      std::printf("first failure: %s\n", b.first_failure.dump().c_str());
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "polyfunc: %s\n", e.what());
    return 2;
  }
}
