#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cohera/functor.hpp"

namespace cohera::selftest {

struct SuiteResult {
  std::string name;
  bool passed = true;
  int checks = 0;
  std::string first_failure;
  double millis = 0;
};

struct Options {
  std::uint32_t seed = 20261014;
  /// Test hook: adds one to the direct-route lambda of the first corpus pair.
  bool flip_lambda = false;
  int route_pairs = 40;
};

/// One seeded (functor, module) pair of the route-equivalence corpus; F(X) is never zero.
struct RoutePair {
  CoherentFunctor functor;
  FPModule module;
  std::string description;
};
std::vector<RoutePair> random_route_corpus(std::uint32_t seed, int count);

SuiteResult buchberger_suite(const Options& o);
SuiteResult syzygy_suite(const Options& o);
SuiteResult euler_suite(const Options& o);
SuiteResult tor_balance_suite(const Options& o);
SuiteResult route_equivalence_suite(const Options& o);
SuiteResult artin_rees_suite(const Options& o);
SuiteResult fit_suite(const Options& o);
SuiteResult cache_suite(const Options& o);

struct NamedSuite {
  std::string name;
  std::function<SuiteResult(const Options&)> run;
};
const std::vector<NamedSuite>& all_suites();

/// Runs every suite, prints the matrix; 0 when all pass, 1 otherwise.
int run_selftest(const Options& o, std::ostream& out, std::ostream& err);

}  // namespace cohera::selftest
