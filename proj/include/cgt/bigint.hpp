#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cgt {

/// Unsigned arbitrary-precision integer, base 2^32 limbs, little-endian.
///
/// Group orders are kept exact even where they would fit in 64 bits; the
/// central-quotient construction squares them, which does not.
class BigUint {
public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: deliberately implicit, orders mix with small ints

  static BigUint from_decimal(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // throws std::overflow_error if too large

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator-=(const BigUint& rhs);  // requires *this >= rhs
  BigUint& operator*=(std::uint64_t rhs);
  BigUint operator*(const BigUint& rhs) const;
  BigUint operator+(const BigUint& rhs) const;
  BigUint operator-(const BigUint& rhs) const;

  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const BigUint& num, const BigUint& den, BigUint& quot, BigUint& rem);
  BigUint operator/(const BigUint& rhs) const;
  BigUint operator%(const BigUint& rhs) const;

  bool operator==(const BigUint& rhs) const { return limbs_ == rhs.limbs_; }
  std::strong_ordering operator<=>(const BigUint& rhs) const;

  std::string to_string() const;

private:
  void trim();
  static int compare(const BigUint& a, const BigUint& b);
  std::uint32_t divmod_small(std::uint32_t den);  // in place, returns remainder

  std::vector<std::uint32_t> limbs_;  // empty == zero
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

}  // namespace cgt
