#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bil/modgb/submodule.hpp"

namespace bil::cli {

/// Text format:
///   ring p=<prime> vars=<n> [v=1] [rel=<polynomial>]
///   <generator>
///   ...
/// '#' starts a comment; blank lines are skipped.
struct IdealFile {
  std::string name;
  int version = 1;
  std::uint32_t p = 0;
  int vars = 0;
  std::optional<std::string> relation;
  ring::RingPtr ring;
  std::vector<ring::Polynomial> generators;
  modgb::Ideal ideal;
  /// Hex SHA-256 of the raw text.
  std::string sha256;
};

/// Throws SyntaxError, UnknownVariable or NonHomogeneous.
IdealFile parse_ideal_file(const std::string& text, const std::string& name = "<memory>");
IdealFile load_ideal_file(const std::string& path);

std::string sha256_hex(const std::string& data);

}  // namespace bil::cli
