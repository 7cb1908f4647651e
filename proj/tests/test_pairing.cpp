#include <cstdint>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "realspace/pairing.hpp"

using namespace realspace;

TEST_SUITE("pairing") {

TEST_CASE("the diagonal enumeration starts as expected") {
  CHECK(pair(0, 0) == 0);
  CHECK(pair(1, 0) == 1);
  CHECK(pair(0, 1) == 2);
  CHECK(pair(2, 0) == 3);
  CHECK(pair(1, 1) == 4);
  CHECK(pair(0, 2) == 5);
  CHECK(pair(3, 0) == 6);
}

TEST_CASE("pair and unpair invert each other") {
  for (std::uint64_t h = 0; h <= 5000; ++h) {
    std::uint64_t i, j;
    unpair(h, i, j);
    CHECK(pair(i, j) == h);
  }
  for (std::uint64_t i = 0; i <= 70; ++i)
    for (std::uint64_t j = 0; j <= 70; ++j) {
      std::uint64_t a, b;
      unpair(pair(i, j), a, b);
      CHECK(a == i);
      CHECK(b == j);
    }
}

TEST_CASE("metered pairing agrees with the plain form") {
  SpaceMeter meter;
  MeteredInt mi(meter), mj(meter), mh(meter), oi(meter), oj(meter);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t i = rng() % 3000, j = rng() % 3000;
    mi.set_u64(i);
    mj.set_u64(j);
    pair(mi, mj, mh, meter);
    CHECK(mh.to_u64() == pair(i, j));
    unpair(mh, oi, oj, meter);
    CHECK(oi.to_u64() == i);
    CHECK(oj.to_u64() == j);
  }
}

TEST_CASE("triple codes round trip and validate") {
  CHECK(pair3(3, 2, 1) == 172);
  CHECK(pair3(8, 5, 0) == 4656);
  CHECK(pair3(1, 1, 1) == 16);

  for (std::uint64_t n = 1; n <= 16; ++n)
    for (std::uint64_t i = 1; i <= n; ++i)
      for (int b = 0; b <= 1; ++b) {
        TallyTriple t = unpair3(pair3(n, i, b));
        CHECK(t.n == n);
        CHECK(t.i == i);
        CHECK(t.b == b);
      }

  TallyTriple out;
  CHECK_FALSE(try_unpair3(3, out));             // decodes with i > n
  CHECK_FALSE(try_unpair3(23, out));            // decodes with b = 2
  CHECK_THROWS_AS(unpair3(3), InvalidTriple);
  CHECK_THROWS_AS(unpair3(23), InvalidTriple);
  CHECK(try_unpair3(172, out));
  CHECK(out.n == 3);
}

TEST_CASE("raw triple decode reports the fields it saw") {
  std::uint64_t n, i, b;
  unpair3_raw(23, n, i, b);
  CHECK(b == 2);
  unpair3_raw(172, n, i, b);
  CHECK(n == 3);
  CHECK(i == 2);
  CHECK(b == 1);
}

TEST_CASE("both square root paths agree") {
  for (std::uint64_t v = 0; v <= 2000; ++v) CHECK(isqrt_incremental(v) == isqrt_fast(v));
  for (std::uint64_t k = 1; k <= 1000; ++k) {
    std::uint64_t sq = k * k;
    CHECK(isqrt_incremental(sq) == k);
    CHECK(isqrt_incremental(sq - 1) == k - 1);
    CHECK(isqrt_fast(sq) == k);
    CHECK(isqrt_fast(sq - 1) == k - 1);
  }
}

TEST_CASE("fast square root holds its bracket on wide values") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 500; ++t) {
    BigUint v;
    v.add_u64(rng());
    v.shl(64);
    v.add_u64(rng());
    BigUint r = isqrt_fast(v);
    BigUint sq = BigUint::mul(r, r);
    CHECK(sq <= v);
    BigUint r1 = r;
    r1.add_u64(1);
    BigUint sq1 = BigUint::mul(r1, r1);
    CHECK(v < sq1);
    CHECK(oracles::isqrt_ref(oracles::Big(v.to_decimal())) == oracles::Big(r.to_decimal()));
  }
}

TEST_CASE("the incremental walk runs on metered registers") {
  SpaceMeter meter;
  MeteredInt v(meter), r(meter);
  for (std::uint64_t x : {0ull, 1ull, 2ull, 3ull, 4ull, 99ull, 100ull, 101ull, 5329ull}) {
    v.set_u64(x);
    isqrt_incremental(v, r, meter);
    CHECK(r.to_u64() == isqrt_fast(x));
  }
  CHECK(meter.peak_cells() > 0);
}

}
