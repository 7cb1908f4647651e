#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

namespace {

std::string join(const std::vector<std::uint8_t>& digits) {
  std::string out;
  for (auto d : digits) out += static_cast<char>('0' + d);
  return out;
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("certified root digits match frozen prefixes") {
  oracles::AlgebraicOracle sqrt2({-2, 0, 1}, 1, 2);
  CHECK(sqrt2.digits(32) == "1.01101010000010011110011001100111");
  oracles::AlgebraicOracle golden({-1, -1, 1}, 1, 2);
  CHECK(golden.digits(32) == "1.10011110001101110111100110111001");
  oracles::AlgebraicOracle cbrt2({-2, 0, 0, 1}, 1, 2);
  CHECK(cbrt2.digits(32) == "1.01000010100010100010111110011000");

  CHECK(sqrt2.fraction(4) == std::vector<std::uint8_t>{0, 1, 1, 0});
  // Truncations nest: digits(n) is a prefix of digits(n+1).
  for (std::size_t n = 1; n < 200; ++n)
    CHECK(sqrt2.digits(n + 1).substr(0, n + 2) == sqrt2.digits(n));
}

TEST_CASE("the oracle rejects intervals that do not straddle a root") {
  CHECK_THROWS_AS(oracles::AlgebraicOracle({-2, 0, 1}, 2, 3), std::logic_error);
  CHECK_THROWS_AS(oracles::AlgebraicOracle({-2, 0, 1}, 1, 2).digits(419), std::logic_error);
}

TEST_CASE("long division digits match frozen prefixes") {
  CHECK(oracles::rational_digits(1, 3, 2, 16) == "0.0101010101010101");
  CHECK(oracles::rational_digits(22, 7, 10, 18) == "3.142857142857142857");
  CHECK(oracles::rational_digits(355, 113, 10, 12) == "3.141592920353");
  CHECK(oracles::rational_digits(5, 1, 10, 0) == "5");
  CHECK(oracles::rational_digits(10, 2, 16, 2) == "5.00");
}

TEST_CASE("sparse and automatic digit vectors match frozen prefixes") {
  CHECK(join(oracles::mu_square_digits(30)) == "100100001000000100000000100000");
  CHECK(join(oracles::mu_cube_digits(30)) == "100000010000000000000000001000");
  CHECK(join(oracles::mu_factorial_digits(30)) == "110001000000000000000001000000");
  CHECK(join(oracles::prime_indicator_digits(30)) == "011010100010100010100010000010");
  CHECK(join(oracles::thue_morse_digits(32)) == "11010011001011010010110011010011");
  CHECK(join(oracles::period_doubling_digits(32)) == "10111010101110111011101010111010");
}

TEST_CASE("gcd and square root helpers behave") {
  CHECK(oracles::gcd_ref(oracles::Big(84), oracles::Big(36)) == 12);
  CHECK(oracles::gcd_ref(oracles::Big(17), oracles::Big(5)) == 1);
  CHECK(oracles::isqrt_ref(oracles::Big(122)) == 11);
  CHECK(oracles::to_decimal(oracles::from_decimal("123456789012345678901")) ==
        "123456789012345678901");
}

}
