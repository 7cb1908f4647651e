#ifndef REALSPACE_PAIRING_HPP
#define REALSPACE_PAIRING_HPP

#include <cstdint>

#include "realspace/meter.hpp"

namespace realspace {

struct TallyTriple {
  std::uint64_t n;
  std::uint64_t i;  // 1 <= i <= n
  int b;            // 0 or 1
};

/// floor(sqrt(v)) by the incremental floor/ceiling walk: keeps tapes
/// floor, ceiling, lower_bound, upper_bound alongside the input tape
/// number, and raises the window one step at a time until it brackets v.
/// Theta(sqrt(v)) steps, so hold it to small inputs; space is O(log v).
void isqrt_incremental(const MeteredInt& number, MeteredInt& root, SpaceMeter& meter);

/// floor(sqrt(v)) by binary search on the bit length; the fast path used
/// inside larger computations.  Space O(log v), time O(log^2 v) products.
void isqrt_fast(const MeteredInt& number, MeteredInt& root, SpaceMeter& meter);

/// Convenience wrappers on a scratch meter.
std::uint64_t isqrt_incremental(std::uint64_t v);
std::uint64_t isqrt_fast(std::uint64_t v);
BigUint isqrt_fast(const BigUint& v);

/// Diagonal pairing (i+j)(i+j+1)/2 + j on metered tapes.
void pair(const MeteredInt& i, const MeteredInt& j, MeteredInt& out, SpaceMeter& meter);
void unpair(const MeteredInt& h, MeteredInt& i, MeteredInt& j, SpaceMeter& meter);

std::uint64_t pair(std::uint64_t i, std::uint64_t j);
void unpair(std::uint64_t h, std::uint64_t& i, std::uint64_t& j);

/// Nested triple code <<n,i>,b>.
std::uint64_t pair3(std::uint64_t n, std::uint64_t i, int b);
/// Decode without validation.
void unpair3_raw(std::uint64_t h, std::uint64_t& n, std::uint64_t& i, std::uint64_t& b);
/// Decode and validate 1 <= i <= n, b in {0,1}; throws InvalidTriple.
TallyTriple unpair3(std::uint64_t h);
/// Decode and report validity instead of throwing.
bool try_unpair3(std::uint64_t h, TallyTriple& out);

}  // namespace realspace

#endif
