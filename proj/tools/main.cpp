#include <iostream>

#include <CLI11.hpp>

#include "cohera/field.hpp"
#include "scenario.hpp"
#include "selftest.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cohera: stability laboratory for coherent functors on graded families"};
  app.require_subcommand(1);

  cohera::runner::RunOptions run_opts;
  std::string scenario;
  std::uint32_t characteristic = 0;
  auto* run = app.add_subcommand("run", "execute a scenario file and write reports");
  run->add_option("scenario", scenario, "scenario file (scn/1)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_opts.out, "report directory")->capture_default_str();
  auto* char_opt = run->add_option("--char", characteristic, "coefficient characteristic (0 or a prime)");
  run->add_option("--jobs", run_opts.jobs, "worker threads for grid points")->check(CLI::Range(1, 256));
  bool no_cache = false;
  run->add_flag("--no-cache", no_cache, "disable the Groebner cache");

  cohera::selftest::Options self_opts;
  auto* self = app.add_subcommand("selftest", "run the invariant suites");
  self->add_option("--seed", self_opts.seed, "corpus seed")->capture_default_str();
  self->add_flag("--inject-fault", self_opts.flip_lambda, "flip one lambda in the route-equivalence suite");

  auto* builtins = app.add_subcommand("list-builtins", "print functor builders, observables, strategies, defaults");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) {
      if (*char_opt) {
        if (characteristic != 0 && !cohera::is_prime(characteristic)) {
          std::cerr << "error: --char " << characteristic << " is neither 0 nor a prime\n";
          return 2;
        }
        run_opts.characteristic = characteristic;
      }
      run_opts.use_cache = !no_cache;
      return cohera::runner::run_scenario_file(scenario, run_opts, std::cout, std::cerr);
    }
    if (*self) return cohera::selftest::run_selftest(self_opts, std::cout, std::cerr);
    if (*builtins) {
      cohera::runner::print_builtins(std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
