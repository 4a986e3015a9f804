#include "bil/ring/field.hpp"

#include <string>

#include "bil/error.hpp"

namespace bil {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotMinimal: return "NotMinimal";
    case Errc::NotFiniteLength: return "NotFiniteLength";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotRankOne: return "NotRankOne";
    case Errc::NotRankTwo: return "NotRankTwo";
    case Errc::ConditionTFailed: return "ConditionTFailed";
    case Errc::QuotientNotT: return "QuotientNotT";
    case Errc::WrongHeight: return "WrongHeight";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::GenericityFailure: return "GenericityFailure";
    case Errc::BadSurface: return "BadSurface";
    case Errc::TwistsNotComparable: return "TwistsNotComparable";
    case Errc::KernelNotDissocie: return "KernelNotDissocie";
    case Errc::UnsupportedRing: return "UnsupportedRing";
    case Errc::NotExtraverti: return "NotExtraverti";
    case Errc::AlphaNotSurjective: return "AlphaNotSurjective";
    case Errc::NotMCM: return "NotMCM";
    case Errc::InvalidCurve: return "InvalidCurve";
  }
  return "Unknown";
}

}  // namespace bil

namespace bil::ring {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p <= 2 || p >= (1u << 31) || !is_prime(p))
    throw Error(Errc::InvalidArgument, "field characteristic must be a prime in (2, 2^31), got " +
                                           std::to_string(p));
  barrett_ = static_cast<std::uint64_t>((static_cast<u128>(1) << 64) / p);
}

Scalar Field::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
  // extended Euclid
  std::int64_t t = 0, newt = 1, r = p_, newr = a;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Scalar>(t);
}

Scalar Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

}  // namespace bil::ring
