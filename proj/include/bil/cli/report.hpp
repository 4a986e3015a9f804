#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bil/error.hpp"
#include "json.hpp"

namespace bil::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kFailedAssertion = 1,
  kParseError = 2,
  kInvalid = 3,
  kGenericity = 4,
  kInconclusive = 5,
};

struct Assertion {
  std::string name;
  bool ok = false;
  Json details;
};

/// Report schema version; bump with any incompatible change to the layout.
inline constexpr const char* kReportFormat = "bil-report/1";

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  Json inputs = Json::array();
  std::vector<Assertion> assertions;
  Json outputs = Json::object();
  int exit_code = kOk;

  void check(const std::string& name, bool ok, Json details = Json::object());
  bool all_ok() const;
  /// Failed assertions turn an ok exit code into kFailedAssertion.
  void settle();
  Json to_json() const;
  std::string dump() const { return to_json().dump(2) + "\n"; }
};

int exit_code_for(Errc code);
/// Records the error in outputs.error and sets the matching exit code.
void record_error(Report& r, const Error& e);

}  // namespace bil::cli
