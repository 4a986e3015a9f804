#include <chrono>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "bil/cli/commands.hpp"
#include "bil/modgb/groebner.hpp"

using namespace bil::cli;

namespace {

Report failed_load(const std::string& command, std::uint64_t seed, const bil::Error& e) {
  Report r;
  r.command = command;
  r.seed = seed;
  record_error(r, e);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bilw: biliaison workbench for curves in P^3 over GF(p)"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  bool timings = false, mutate = false;
  app.add_option("--seed", seed, "seed for every random choice")->capture_default_str();
  app.add_flag("--timings", timings, "add wall-clock timings (breaks byte-identical output)");
  app.add_flag("--mutate-reduction", mutate)->group("");

  std::string file, file_b, f_spec = "0", level = "quick";
  int h = 1;
  std::function<Report()> run;

  auto one = [&](const char* name, const char* help, auto cmd) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", file, "ideal file")->required();
    sc->callback([&, name, cmd] {
      run = [&, name, cmd] {
        try {
          return cmd(load_ideal_file(file), seed);
        } catch (const bil::Error& e) {
          return failed_load(name, seed, e);
        }
      };
    });
    return sc;
  };
  auto two = [&](const char* name, const char* help, auto cmd) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file_a", file, "first ideal file")->required();
    sc->add_option("file_b", file_b, "second ideal file")->required();
    sc->callback([&, name, cmd] {
      run = [&, name, cmd] {
        try {
          return cmd(load_ideal_file(file), load_ideal_file(file_b), seed);
        } catch (const bil::Error& e) {
          return failed_load(name, seed, e);
        }
      };
    });
  };

  one("info", "curve invariants", [](const IdealFile& f, std::uint64_t s) { return cmd_info(f, s); });
  auto* bdl = one("bdl", "basic double link", [&](const IdealFile& f, std::uint64_t s) {
    return cmd_bdl(f, f_spec, h, s);
  });
  bdl->set_help_flag("--help", "print this help");
  bdl->add_option("--f", f_spec, "generator index (0-based) or a polynomial")->capture_default_str();
  bdl->add_option("--h", h, "height")->capture_default_str();
  one("descend", "descend to a minimal curve", [](const IdealFile& f, std::uint64_t s) { return cmd_descend(f, s); });
  two("equiv", "decide biliaison equivalence", [](const IdealFile& a, const IdealFile& b, std::uint64_t s) {
    return cmd_equiv(a, b, s);
  });
  one("ntype", "N-type resolution", [](const IdealFile& f, std::uint64_t s) { return cmd_ntype(f, s); });
  one("triple", "Gorenstein triple over a hypersurface ring",
      [](const IdealFile& f, std::uint64_t s) { return cmd_triple(f, s); });
  two("connect-minimal", "height zero chain between minimal curves",
      [](const IdealFile& a, const IdealFile& b, std::uint64_t s) { return cmd_connect_minimal(a, b, s); });
  auto* st = app.add_subcommand("selftest", "acceptance suites");
  st->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
  st->callback([&] { run = [&] { return cmd_selftest(level, seed); }; });

  CLI11_PARSE(app, argc, argv);
  if (mutate) bil::modgb::set_reduction_fault(true);

  auto t0 = std::chrono::steady_clock::now();
  Report r = run();
  auto j = r.to_json();
  if (timings) {
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    j["timings"] = Json{{"wall_ms", ms}};
  }
  std::cout << j.dump(2) << "\n";
  return r.exit_code;
}
