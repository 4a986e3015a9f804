#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bil/cli/report.hpp"

namespace bil::cli {

struct SuiteResult {
  int criterion = 0;
  std::string title;
  std::vector<Assertion> assertions;
  Json outputs = Json::object();
  bool ok() const;
  void check(const std::string& name, bool ok, Json details = Json::object());
};

SuiteResult suite_resolution_shape(std::uint64_t seed);
SuiteResult suite_rao(std::uint64_t seed);
SuiteResult suite_bdl_shift(std::uint64_t seed, int count = 50, int iso_every = 4);
SuiteResult suite_descent(std::uint64_t seed);
SuiteResult suite_extraverti(std::uint64_t seed, int count = 20);
SuiteResult suite_psi(std::uint64_t seed, int count = 20);
SuiteResult suite_second_syzygy(std::uint64_t seed);
SuiteResult suite_separation(std::uint64_t seed);
SuiteResult suite_equivalence(std::uint64_t seed);
SuiteResult suite_engine_oracles(std::uint64_t seed, int count = 100);

/// quick: engine oracles only; full: every suite.
std::vector<SuiteResult> run_suites(const std::string& level, std::uint64_t seed);

}  // namespace bil::cli
