#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "bil/cli/commands.hpp"
#include "bil/cli/suites.hpp"

using namespace bil::cli;

namespace {

struct Criterion {
  int id;
  double limit_s;
  std::function<SuiteResult()> run;
};

std::string first_failure(const SuiteResult& s) {
  for (const auto& a : s.assertions)
    if (!a.ok) return a.name + " " + a.details.dump();
  return s.assertions.empty() ? "no assertions" : "";
}

}  // namespace

int main() {
  const std::uint64_t seed = 42;
  std::vector<Criterion> cs{
      {1, 1, [&] { return suite_resolution_shape(seed); }},
      {2, 5, [&] { return suite_rao(seed); }},
      {3, 120, [&] { return suite_bdl_shift(seed); }},
      {4, 300, [&] { return suite_descent(seed); }},
      {5, 300, [&] { return suite_extraverti(seed); }},
      {6, 60, [&] { return suite_psi(seed); }},
      {7, 60, [&] { return suite_second_syzygy(seed); }},
      {8, 300, [&] { return suite_separation(seed); }},
      {9, 60, [&] { return suite_equivalence(seed); }},
      {10, 300, [&] { return suite_engine_oracles(seed); }},
  };
  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult s;
    std::string why;
    try {
      s = c.run();
      why = first_failure(s);
    } catch (const std::exception& e) {
      why = e.what();
    }
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && t > c.limit_s) why = "over the time limit";
    std::printf("criterion %2d: %s  %-40s %7.2fs / %.0fs  %d assertions%s%s\n", c.id, why.empty() ? "PASS" : "FAIL",
                s.title.c_str(), t, c.limit_s, static_cast<int>(s.assertions.size()), why.empty() ? "" : "  ",
                why.c_str());
    if (!why.empty()) ++failed;
  }
  {
    auto t0 = std::chrono::steady_clock::now();
    Report a = cmd_selftest("full", seed), b = cmd_selftest("full", seed);
    double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool same = a.dump() == b.dump();
    bool ok = same && a.exit_code == 0;
    std::printf("criterion 11: %s  %-40s %7.2fs  %zu bytes%s\n", ok ? "PASS" : "FAIL", "selftest full is byte-identical", t,
                a.dump().size(), same ? (ok ? "" : "  selftest failed") : "  reports differ");
    if (!ok) ++failed;
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
