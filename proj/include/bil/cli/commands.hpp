#pragma once

#include <cstdint>
#include <string>

#include "bil/cli/ideal_file.hpp"
#include "bil/cli/report.hpp"

namespace bil::cli {

Report cmd_info(const IdealFile& file, std::uint64_t seed = 1);
/// f_spec is a 0-based index into the file's generators or a polynomial.
Report cmd_bdl(const IdealFile& file, const std::string& f_spec, int h, std::uint64_t seed = 1);
Report cmd_descend(const IdealFile& file, std::uint64_t seed = 1);
Report cmd_equiv(const IdealFile& a, const IdealFile& b, std::uint64_t seed = 1);
Report cmd_ntype(const IdealFile& file, std::uint64_t seed = 1);
Report cmd_triple(const IdealFile& file, std::uint64_t seed = 1);
Report cmd_connect_minimal(const IdealFile& a, const IdealFile& b, std::uint64_t seed = 1);
/// level is "quick" or "full".
Report cmd_selftest(const std::string& level, std::uint64_t seed = 42);

/// Ideal file text for a curve, one minimal generator per line.
std::string ideal_file_text(const modgb::Ideal& I, const std::string& comment = "");

}  // namespace bil::cli
