#include "bil/ring/monomial.hpp"

#include <string>

#include "bil/error.hpp"

namespace bil::ring {

namespace {

int byte_sum(std::uint64_t x) {
  int s = 0;
  for (int i = 0; i < Monomial::kMaxVars; ++i) s += static_cast<int>((x >> (8 * i)) & 0xFF);
  return s;
}

}  // namespace

Monomial Monomial::from_packed(std::uint64_t exp) noexcept {
  Monomial m;
  m.exp_ = exp;
  m.key_ = (static_cast<std::uint64_t>(byte_sum(exp)) << 56) | (kComplement - exp);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (static_cast<int>(exps.size()) > kMaxVars)
    throw Error(Errc::InvalidArgument, "too many variables");
  std::uint64_t e = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > kMaxExponent)
      throw Error(Errc::InvalidArgument, "exponent out of range: " + std::to_string(exps[i]));
    e |= static_cast<std::uint64_t>(exps[i]) << (8 * i);
    deg += exps[i];
  }
  if (deg > 255) throw Error(Errc::InvalidArgument, "monomial degree exceeds 255");
  return from_packed(e);
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars) throw Error(Errc::InvalidArgument, "variable index out of range");
  if (power < 0 || power > kMaxExponent) throw Error(Errc::InvalidArgument, "exponent out of range");
  return from_packed(static_cast<std::uint64_t>(power) << (8 * index));
}

Monomial Monomial::operator*(const Monomial& o) const {
  std::uint64_t s = exp_ + o.exp_;
  if (s & kGuard) throw Error(Errc::InvalidArgument, "exponent overflow in monomial product");
  if (degree() + o.degree() > 255) throw Error(Errc::InvalidArgument, "monomial degree exceeds 255");
  return from_packed(s);
}

Monomial Monomial::lcm(const Monomial& o) const noexcept {
  std::uint64_t r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint64_t a = (exp_ >> (8 * i)) & 0xFF, b = (o.exp_ >> (8 * i)) & 0xFF;
    r |= (a > b ? a : b) << (8 * i);
  }
  return from_packed(r);
}

Monomial Monomial::gcd(const Monomial& o) const noexcept {
  std::uint64_t r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint64_t a = (exp_ >> (8 * i)) & 0xFF, b = (o.exp_ >> (8 * i)) & 0xFF;
    r |= (a < b ? a : b) << (8 * i);
  }
  return from_packed(r);
}

}  // namespace bil::ring
