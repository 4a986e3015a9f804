#include "bil/cli/report.hpp"

namespace bil::cli {

void Report::check(const std::string& name, bool ok, Json details) {
  assertions.push_back({name, ok, std::move(details)});
}

bool Report::all_ok() const {
  for (const auto& a : assertions)
    if (!a.ok) return false;
  return true;
}

void Report::settle() {
  if (exit_code == kOk && !all_ok()) exit_code = kFailedAssertion;
}

Json Report::to_json() const {
  Json j;
  j["format"] = kReportFormat;
  j["command"] = command;
  j["seed"] = seed;
  j["inputs"] = inputs;
  Json as = Json::array();
  for (const auto& a : assertions) {
    Json x;
    x["name"] = a.name;
    x["ok"] = a.ok;
    x["details"] = a.details.is_null() ? Json::object() : a.details;
    as.push_back(std::move(x));
  }
  j["assertions"] = std::move(as);
  j["outputs"] = outputs;
  j["exit_code"] = exit_code;
  return j;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::SyntaxError:
    case Errc::UnknownVariable:
    case Errc::NonHomogeneous:
      return kParseError;
    case Errc::GenericityFailure:
      return kGenericity;
    default:
      return kInvalid;
  }
}

void record_error(Report& r, const Error& e) {
  r.outputs["error"] = Json{{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
  r.exit_code = exit_code_for(e.code());
}

}  // namespace bil::cli
