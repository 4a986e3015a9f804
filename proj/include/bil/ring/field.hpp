#pragma once

#include <cstdint>

namespace bil::ring {

using Scalar = std::uint32_t;
__extension__ typedef unsigned __int128 u128;

/// Prime field GF(p) with 2 < p < 2^31. Scalars are stored reduced to [0, p).
class Field {
 public:
  explicit Field(std::uint32_t p = 32003);

  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }

  // Barrett reduction of a product below 2^62.
  Scalar mul(Scalar a, Scalar b) const noexcept {
    std::uint64_t x = static_cast<std::uint64_t>(a) * b;
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<u128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return static_cast<Scalar>(r);
  }

  Scalar inv(Scalar a) const;
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  Scalar from_int(std::int64_t v) const noexcept;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Scalar a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  bool operator==(const Field& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::uint64_t barrett_;
};

bool is_prime(std::uint64_t n);

}  // namespace bil::ring
