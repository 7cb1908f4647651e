#include "realspace/ratarith.hpp"

#include <cctype>

#include "realspace/errors.hpp"

namespace realspace {

namespace {

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

BigUint parse_natural(const std::string& text, const std::string& whole) {
  if (text.empty()) throw MalformedNumeral("empty integer in '" + whole + "'");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw MalformedNumeral("bad digit '" + std::string(1, c) + "' in '" + whole + "'");
  }
  return BigUint::from_decimal(text);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  Rational r;
  r.num = BigUint(magnitude(num));
  r.den = BigUint(magnitude(den));
  r.negative = (num < 0) != (den < 0) && num != 0;
  return r;
}

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body.erase(0, 1);
  }
  Rational r;
  auto slash = body.find('/');
  if (slash == std::string::npos) {
    r.num = parse_natural(body, text);
  } else {
    r.num = parse_natural(body.substr(0, slash), text);
    r.den = parse_natural(body.substr(slash + 1), text);
    if (r.den.is_zero()) throw DivisionByZero();
  }
  r.negative = neg && !r.num.is_zero();
  return r;
}

std::string to_string(const Rational& r) {
  std::string out;
  if (r.negative) out += '-';
  out += r.num.to_decimal();
  out += '/';
  out += r.den.to_decimal();
  return out;
}

bool rat_is_zero(const Rational& r) { return r.num.is_zero(); }

Rational rat_neg(Rational r) {
  r.negative = !r.negative && !r.num.is_zero();
  return r;
}

Rational rat_abs(Rational r) {
  r.negative = false;
  return r;
}

int rat_cmp(const Rational& a, const Rational& b) {
  if (a.negative != b.negative) return a.negative ? -1 : 1;
  BigUint left = BigUint::mul(a.num, b.den);
  BigUint right = BigUint::mul(b.num, a.den);
  int c = left.compare(right);
  return a.negative ? -c : c;
}

Rational rat_add(const Rational& a, const Rational& b) {
  BigUint left = BigUint::mul(a.num, b.den);
  BigUint right = BigUint::mul(b.num, a.den);
  Rational out;
  out.den = BigUint::mul(a.den, b.den);
  if (a.negative == b.negative) {
    out.num = left;
    out.num.add(right);
    out.negative = a.negative;
  } else if (right <= left) {
    out.num = left;
    out.num.sub(right);
    out.negative = a.negative;
  } else {
    out.num = right;
    out.num.sub(left);
    out.negative = b.negative;
  }
  if (out.num.is_zero()) out.negative = false;
  return out;
}

Rational rat_sub(const Rational& a, const Rational& b) { return rat_add(a, rat_neg(b)); }

Rational rat_mul(const Rational& a, const Rational& b) {
  Rational out;
  out.num = BigUint::mul(a.num, b.num);
  out.den = BigUint::mul(a.den, b.den);
  out.negative = a.negative != b.negative && !out.num.is_zero();
  return out;
}

void int_div(const MeteredInt& a, const MeteredInt& b, MeteredInt& q, MeteredInt& r) {
  if (b.is_zero()) throw DivisionByZero();
  q.set_zero();
  r.set_zero();
  for (std::size_t k = a.bit_length(); k-- > 0;) {
    r.shl(1);
    if (a.bit(k)) r.increment();
    q.shl(1);
    if (r.cmp(b) >= 0) {
      r.sub(b);
      q.increment();
    }
  }
}

void int_div(const BigUint& a, const BigUint& b, BigUint& q, BigUint& r) {
  if (b.is_zero()) throw DivisionByZero();
  if (b.fits_u64()) {
    q = a;
    r = BigUint(q.divmod_u64(b.to_u64()));
    return;
  }
  q = BigUint();
  r = BigUint();
  for (std::size_t k = a.bit_length(); k-- > 0;) {
    r.shl(1);
    if (a.bit(k)) r.add_u64(1);
    q.shl(1);
    if (b <= r) {
      r.sub(b);
      q.add_u64(1);
    }
  }
}

std::pair<std::uint64_t, std::uint64_t> int_div(std::uint64_t a, std::uint64_t b) {
  if (b == 0) throw DivisionByZero();
  return {a / b, a % b};
}

Rational rat_lowest_terms(const Rational& r, SpaceMeter& meter) {
  if (r.den.is_zero()) throw DivisionByZero();
  MeteredInt a(meter);
  MeteredInt b(meter);
  MeteredInt q(meter);
  MeteredInt rem(meter);
  a.set_value(r.num);
  b.set_value(r.den);
  while (!b.is_zero()) {
    int_div(a, b, q, rem);
    a.set_copy(b);
    b.set_copy(rem);
  }
  // a = gcd(num, den); gcd(0, den) = den turns 0/d into 0/1.
  MeteredInt num(meter);
  MeteredInt den(meter);
  num.set_value(r.num);
  den.set_value(r.den);
  int_div(num, a, q, rem);
  num.set_copy(q);
  int_div(den, a, q, rem);
  den.set_copy(q);
  Rational out;
  out.num = num.value();
  out.den = den.value();
  out.negative = r.negative && !out.num.is_zero();
  return out;
}

Rational rat_lowest_terms(const Rational& r) {
  SpaceMeter meter;
  return rat_lowest_terms(r, meter);
}

Rational rational_of_dyadic(const Dyadic& d) {
  std::vector<std::uint8_t> digits = d.int_digits();
  digits.insert(digits.end(), d.frac_digits().begin(), d.frac_digits().end());
  Rational out;
  out.num = BigUint::from_digits(static_cast<unsigned>(d.base()), digits);
  out.den = BigUint::power(static_cast<std::uint64_t>(d.base()),
                           static_cast<std::uint64_t>(d.prec()));
  out.negative = d.negative() && !out.num.is_zero();
  return out;
}

}  // namespace realspace
