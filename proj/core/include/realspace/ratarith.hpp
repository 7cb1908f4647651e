#ifndef REALSPACE_RATARITH_HPP
#define REALSPACE_RATARITH_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "realspace/bigint.hpp"
#include "realspace/dyadic.hpp"
#include "realspace/meter.hpp"

namespace realspace {

/// Exact fraction num/den with an explicit sign; den > 0, not necessarily
/// reduced.  Value semantics throughout.
struct Rational {
  bool negative = false;
  BigUint num;
  BigUint den = BigUint(1);
};

/// Build from machine integers; normalizes the sign of zero.
Rational make_rational(std::int64_t num, std::int64_t den);
/// Accepts "p/q" or a bare integer "p", optional leading sign on p.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

bool rat_is_zero(const Rational& r);
Rational rat_neg(Rational r);
Rational rat_abs(Rational r);
/// Sign of a - b: -1, 0 or 1.
int rat_cmp(const Rational& a, const Rational& b);

/// Exact sum/difference/product over the common denominator, unreduced.
Rational rat_add(const Rational& a, const Rational& b);
Rational rat_sub(const Rational& a, const Rational& b);
Rational rat_mul(const Rational& a, const Rational& b);

/// Restoring long division, bit by bit on metered tapes: a = q*b + r with
/// 0 <= r < b.  Output tapes q and r must be distinct from the inputs.
void int_div(const MeteredInt& a, const MeteredInt& b, MeteredInt& q, MeteredInt& r);
void int_div(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r);
/// Returns {quotient, remainder}.
std::pair<std::uint64_t, std::uint64_t> int_div(std::uint64_t a, std::uint64_t b);

/// Reduce to lowest terms with Euclid's algorithm on metered registers:
/// the remainder chain never outgrows the operands, so the charged
/// high-water stays within the input size.  0/d reduces to 0/1.
Rational rat_lowest_terms(const Rational& r, SpaceMeter& meter);
Rational rat_lowest_terms(const Rational& r);

/// The exact value digits/base^prec represented by a dyadic numeral.
Rational rational_of_dyadic(const Dyadic& d);

}  // namespace realspace

#endif
