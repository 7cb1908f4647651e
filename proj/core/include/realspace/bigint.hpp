#ifndef REALSPACE_BIGINT_HPP
#define REALSPACE_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace realspace {

/// Arbitrary-precision unsigned integer, little-endian 64-bit limbs.
///
/// This is the plain value type used at API boundaries (parsing, results,
/// machine descriptions).  Algorithms that are subject to space accounting
/// do not use it directly; they go through MeteredInt, which stores one of
/// these on a metered binary tape.
class BigUint {
public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v);

  static BigUint from_decimal(const std::string& text);
  /// Digits most-significant first, each in [0, base).
  static BigUint from_digits(unsigned base, const std::vector<std::uint8_t>& digits);
  static BigUint power(std::uint64_t base, std::uint64_t exp);

  bool is_zero() const { return limbs_.empty(); }
  std::size_t bit_length() const;
  bool bit(std::size_t i) const;
  /// Number of limbs (for tests / size estimates).
  std::size_t limb_count() const { return limbs_.size(); }

  int compare(const BigUint& o) const;
  bool operator==(const BigUint& o) const { return compare(o) == 0; }
  bool operator<(const BigUint& o) const { return compare(o) < 0; }
  bool operator<=(const BigUint& o) const { return compare(o) <= 0; }

  BigUint& add(const BigUint& o);
  /// Requires *this >= o.
  BigUint& sub(const BigUint& o);
  BigUint& shl(std::size_t bits);
  BigUint& shr(std::size_t bits);
  BigUint& add_u64(std::uint64_t v);
  BigUint& mul_u64(std::uint64_t v);
  /// Returns the remainder, leaves the quotient in *this.
  std::uint64_t divmod_u64(std::uint64_t divisor);
  /// Remainder only, no mutation and no allocation.
  std::uint64_t mod_u64(std::uint64_t divisor) const;

  static BigUint mul(const BigUint& a, const BigUint& b);

  /// Throws Error if the value does not fit.
  std::uint64_t to_u64() const;
  bool fits_u64() const { return limbs_.size() <= 1; }
  std::string to_decimal() const;
  /// Digits most-significant first; empty for zero.
  std::vector<std::uint8_t> to_digits(unsigned base) const;

private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

}  // namespace realspace

#endif
