#include <cstdint>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "realspace/bigint.hpp"
#include "realspace/errors.hpp"

using namespace realspace;
using oracles::Big;

namespace {

BigUint random_big(std::mt19937_64& rng, int limbs) {
  BigUint v;
  for (int i = 0; i < limbs; ++i) {
    v.shl(64);
    v.add_u64(rng());
  }
  return v;
}

Big to_ref(const BigUint& v) { return Big(v.to_decimal()); }

}  // namespace

TEST_SUITE("bigint") {

TEST_CASE("decimal round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    BigUint v = random_big(rng, 1 + t % 4);
    CHECK(BigUint::from_decimal(v.to_decimal()) == v);
  }
  CHECK(BigUint().to_decimal() == "0");
  CHECK(BigUint::from_decimal("0").is_zero());
}

TEST_CASE("add sub mul against the reference stack") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    BigUint a = random_big(rng, 1 + t % 3);
    BigUint b = random_big(rng, 1 + (t / 2) % 3);
    Big ra = to_ref(a), rb = to_ref(b);

    BigUint sum = a;
    sum.add(b);
    CHECK(to_ref(sum) == ra + rb);

    BigUint prod = BigUint::mul(a, b);
    CHECK(to_ref(prod) == ra * rb);

    if (b <= a) {
      BigUint diff = a;
      diff.sub(b);
      CHECK(to_ref(diff) == ra - rb);
    }
  }
}

TEST_CASE("shifts and small division against the reference stack") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    BigUint a = random_big(rng, 2);
    Big ra = to_ref(a);
    std::size_t s = rng() % 130;

    BigUint left = a;
    left.shl(s);
    CHECK(to_ref(left) == ra << s);

    BigUint right = a;
    right.shr(s);
    CHECK(to_ref(right) == ra >> s);

    std::uint64_t d = rng() | 1;
    BigUint q = a;
    std::uint64_t r = q.divmod_u64(d);
    CHECK(to_ref(q) == ra / d);
    CHECK(Big(r) == ra % d);
    CHECK(a.mod_u64(d) == r);
  }
}

TEST_CASE("bit accessors") {
  BigUint v(0);
  CHECK(v.bit_length() == 0);
  v = BigUint(1);
  v.shl(100);
  CHECK(v.bit_length() == 101);
  CHECK(v.bit(100));
  CHECK_FALSE(v.bit(99));
  CHECK_FALSE(v.bit(101));
  v.add_u64(5);
  CHECK(v.bit(0));
  CHECK(v.bit(2));
}

TEST_CASE("powers and digit conversion") {
  CHECK(BigUint::power(2, 10).to_u64() == 1024);
  CHECK(BigUint::power(10, 0).to_u64() == 1);
  CHECK(BigUint::power(7, 5).to_u64() == 16807);

  BigUint v = BigUint::from_digits(10, {1, 2, 3, 4});
  CHECK(v.to_u64() == 1234);
  std::vector<std::uint8_t> back = v.to_digits(10);
  CHECK(back == std::vector<std::uint8_t>{1, 2, 3, 4});
  CHECK(BigUint().to_digits(10).empty());

  std::mt19937_64 rng(17);
  for (unsigned base : {2u, 3u, 10u, 16u}) {
    BigUint w = random_big(rng, 2);
    CHECK(BigUint::from_digits(base, w.to_digits(base)) == w);
  }
}

TEST_CASE("comparisons and u64 narrowing") {
  BigUint small(42);
  CHECK(small.fits_u64());
  CHECK(small.to_u64() == 42);
  BigUint big = BigUint::power(2, 70);
  CHECK_FALSE(big.fits_u64());
  CHECK_THROWS_AS(big.to_u64(), Error);
  CHECK(small < big);
  CHECK(small <= small);
  CHECK(small == BigUint(42));
}

}
