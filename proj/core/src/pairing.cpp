#include "realspace/pairing.hpp"

#include <cmath>

#include "realspace/errors.hpp"

namespace realspace {

void isqrt_incremental(const MeteredInt& number, MeteredInt& root, SpaceMeter& meter) {
  MeteredInt floor(meter, 0);
  MeteredInt ceiling(meter, 1);
  MeteredInt lower_bound(meter);
  MeteredInt upper_bound(meter);
  for (;;) {
    lower_bound.assign_product(floor, floor);
    upper_bound.assign_product(ceiling, ceiling);
    if (lower_bound.cmp(number) <= 0 && number.cmp(upper_bound) < 0) {
      root.set_copy(floor);
      return;
    }
    floor.increment();
    ceiling.increment();
  }
}

void isqrt_fast(const MeteredInt& number, MeteredInt& root, SpaceMeter& meter) {
  root.set_zero();
  if (number.is_zero()) return;
  MeteredInt candidate(meter);
  MeteredInt square(meter);
  std::size_t top = (number.bit_length() + 1) / 2;
  for (std::size_t i = top + 1; i-- > 0;) {
    candidate.set_copy(root);
    MeteredInt bit(meter, 1);
    bit.shl(i);
    candidate.add(bit);
    square.assign_product(candidate, candidate);
    if (square.cmp(number) <= 0) root.set_copy(candidate);
  }
}

std::uint64_t isqrt_incremental(std::uint64_t v) {
  SpaceMeter meter;
  MeteredInt number(meter, v);
  MeteredInt root(meter);
  isqrt_incremental(number, root, meter);
  return root.to_u64();
}

std::uint64_t isqrt_fast(std::uint64_t v) {
  SpaceMeter meter;
  MeteredInt number(meter, v);
  MeteredInt root(meter);
  isqrt_fast(number, root, meter);
  return root.to_u64();
}

BigUint isqrt_fast(const BigUint& v) {
  SpaceMeter meter;
  MeteredInt number(meter);
  number.set_value(v);
  MeteredInt root(meter);
  isqrt_fast(number, root, meter);
  return root.value();
}

void pair(const MeteredInt& i, const MeteredInt& j, MeteredInt& out, SpaceMeter& meter) {
  MeteredInt sum(meter);
  sum.set_copy(i);
  sum.add(j);
  MeteredInt sum1(meter);
  sum1.set_copy(sum);
  sum1.increment();
  out.assign_product(sum, sum1);
  // (i+j)(i+j+1) is even; halve by dropping the low bit.
  out.shr_one();
  out.add(j);
}

void unpair(const MeteredInt& h, MeteredInt& i, MeteredInt& j, SpaceMeter& meter) {
  // Diagonal index c = floor((sqrt(8h+1) - 1) / 2).
  MeteredInt scaled(meter);
  scaled.set_copy(h);
  scaled.shl(3);
  scaled.increment();
  MeteredInt s(meter);
  isqrt_fast(scaled, s, meter);
  s.decrement();
  s.shr_one();  // s = c
  MeteredInt tri(meter);
  MeteredInt c1(meter);
  c1.set_copy(s);
  c1.increment();
  tri.assign_product(s, c1);
  tri.shr_one();  // c(c+1)/2
  j.set_copy(h);
  j.sub(tri);
  i.set_copy(s);
  i.sub(j);
}

namespace {

std::uint64_t host_isqrt(std::uint64_t v) {
  auto sq = [](std::uint64_t x) { return static_cast<unsigned __int128>(x) * x; };
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && sq(r) > v) --r;
  while (sq(r + 1) <= v) ++r;
  return r;
}

}  // namespace

// Host-word fast paths; the metered forms above are the accountable ones
// and the two are cross-checked in tests.
std::uint64_t pair(std::uint64_t i, std::uint64_t j) {
  std::uint64_t s = i + j;
  return s * (s + 1) / 2 + j;
}

void unpair(std::uint64_t h, std::uint64_t& i, std::uint64_t& j) {
  std::uint64_t s = host_isqrt(8 * h + 1);
  std::uint64_t c = (s - 1) / 2;
  std::uint64_t tri = c * (c + 1) / 2;
  j = h - tri;
  i = c - j;
}

std::uint64_t pair3(std::uint64_t n, std::uint64_t i, int b) {
  return pair(pair(n, i), static_cast<std::uint64_t>(b));
}

void unpair3_raw(std::uint64_t h, std::uint64_t& n, std::uint64_t& i, std::uint64_t& b) {
  std::uint64_t inner;
  unpair(h, inner, b);
  unpair(inner, n, i);
}

bool try_unpair3(std::uint64_t h, TallyTriple& out) {
  std::uint64_t n, i, b;
  unpair3_raw(h, n, i, b);
  if (b > 1 || i < 1 || i > n) return false;
  out = TallyTriple{n, i, static_cast<int>(b)};
  return true;
}

TallyTriple unpair3(std::uint64_t h) {
  TallyTriple t;
  if (!try_unpair3(h, t))
    throw InvalidTriple("value " + std::to_string(h) + " does not encode a valid triple");
  return t;
}

}  // namespace realspace
