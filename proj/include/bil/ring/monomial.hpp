#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>

namespace bil::ring {

/// Exponent vector packed one byte per variable (at most kMaxVars variables,
/// exponents below 128). A comparison key is cached next to the exponents so
/// that degrevlex reduces to a single integer comparison: total degree in the
/// top byte, then (127 - e_i) with the last variable most significant.
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxExponent = 127;

  Monomial() noexcept : exp_(0), key_(kComplement) {}

  static Monomial from_exponents(std::span<const int> exps);
  static Monomial variable(int index, int power = 1);

  int exponent(int var) const noexcept { return static_cast<int>((exp_ >> (8 * var)) & 0xFF); }
  int degree() const noexcept { return static_cast<int>(key_ >> 56); }
  std::uint64_t packed() const noexcept { return exp_; }
  std::uint64_t key() const noexcept { return key_; }

  bool divides(const Monomial& other) const noexcept {
    return (((other.exp_ | kGuard) - exp_) & kGuard) == kGuard;
  }
  bool is_one() const noexcept { return exp_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Requires this->divides(o) to be false-free: o must divide *this.
  Monomial operator/(const Monomial& o) const noexcept { return from_packed(exp_ - o.exp_); }
  Monomial lcm(const Monomial& o) const noexcept;
  Monomial gcd(const Monomial& o) const noexcept;
  bool coprime(const Monomial& o) const noexcept { return gcd(o).is_one(); }

  /// degrevlex: degree first, ties broken by the smaller exponent of the last
  /// differing variable being larger.
  std::strong_ordering operator<=>(const Monomial& o) const noexcept { return key_ <=> o.key_; }
  bool operator==(const Monomial& o) const noexcept { return exp_ == o.exp_; }

  static Monomial from_packed(std::uint64_t exp) noexcept;

 private:
  static constexpr std::uint64_t kGuard = 0x0080808080808080ULL;
  static constexpr std::uint64_t kComplement = 0x007F7F7F7F7F7F7FULL;
  std::uint64_t exp_;
  std::uint64_t key_;
};

inline std::strong_ordering monomial_compare(const Monomial& a, const Monomial& b) noexcept {
  return a <=> b;
}

}  // namespace bil::ring

template <>
struct std::hash<bil::ring::Monomial> {
  std::size_t operator()(const bil::ring::Monomial& m) const noexcept {
    return std::hash<std::uint64_t>{}(m.packed());
  }
};
