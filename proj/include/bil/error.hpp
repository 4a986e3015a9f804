#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bil {

enum class Errc {
  SyntaxError,
  UnknownVariable,
  NonHomogeneous,
  DegreeMismatch,
  InvalidArgument,
  CapExceeded,
  NotMinimal,
  NotFiniteLength,
  NotACocycle,
  NotRankOne,
  NotRankTwo,
  ConditionTFailed,
  QuotientNotT,
  WrongHeight,
  RankTooSmall,
  GenericityFailure,
  BadSurface,
  TwistsNotComparable,
  KernelNotDissocie,
  UnsupportedRing,
  NotExtraverti,
  AlphaNotSurjective,
  NotMCM,
  InvalidCurve,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bil
