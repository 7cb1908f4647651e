#ifndef REALSPACE_TESTS_ORACLES_HPP
#define REALSPACE_TESTS_ORACLES_HPP

// Reference values computed on an arithmetic stack (boost cpp_int) that
// shares no code with the library under test.  Digits handed out are
// certified exact, so comparisons in the tests use zero tolerance.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracles {

using Big = boost::multiprecision::cpp_int;

/// floor(x * 2^scale) for the root x of sum a_j y^j inside [lo, hi]:
/// Newton iteration on exact dyadic rationals, then the candidate is nudged
/// until f(N/2^s) <= 0 < f((N+1)/2^s) holds exactly.  That inequality pins
/// N = floor(x * 2^s) with no floating point anywhere.
class AlgebraicOracle {
public:
  AlgebraicOracle(std::vector<long long> coeffs, int lo, int hi, unsigned scale = 420)
      : coeffs_(std::move(coeffs)), scale_(scale) {
    if (sign_at(Big(lo) << scale_) > 0) flipped_ = true;
    if (!(sign_at(Big(lo) << scale_) <= 0 && sign_at(Big(hi) << scale_) > 0))
      throw std::logic_error("oracle bracket does not straddle the root");
    // Newton from the right endpoint, truncating each iterate to the scale;
    // for these convex increasing polynomials that converges monotonically.
    Big x = Big(hi) << scale_;
    for (int iter = 0; iter < 200; ++iter) {
      Big num = 0, den = 0;  // f and f' numerators over the common power
      Big pw = 1;
      std::vector<Big> powers;
      for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        powers.push_back(pw);
        pw *= x;
      }
      Big unit = Big(1) << scale_;
      Big upow = 1;
      std::vector<Big> upowers(coeffs_.size());
      for (std::size_t j = coeffs_.size(); j-- > 0;) {
        upowers[j] = upow;
        upow *= unit;
      }
      for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        Big term = coeffs_[j] * powers[j] * upowers[j];
        num += term;
        if (j >= 1) den += Big(coeffs_[j]) * j * powers[j - 1] * upowers[j];
      }
      if (flipped_) {
        num = -num;
        den = -den;
      }
      if (den == 0) throw std::logic_error("oracle derivative vanished");
      // x' = x - f/f' at the fixed scale, rounding the quotient toward zero.
      Big step = num / den;
      if (step == 0) break;
      x -= step;
    }
    // Certification: exact sign conditions locate the floor.
    int guard = 0;
    while (sign_at(x) > 0) {
      --x;
      if (++guard > 64) throw std::logic_error("oracle certification ran away");
    }
    while (sign_at(x + 1) <= 0) {
      ++x;
      if (++guard > 64) throw std::logic_error("oracle certification ran away");
    }
    scaled_floor_ = x;
  }

  /// Base-2 truncation to n fractional digits, as canonical text "I.F".
  std::string digits(std::size_t n) const {
    if (n > scale_ - 8) throw std::logic_error("oracle asked beyond its precision");
    Big f = scaled_floor_ >> (scale_ - n);
    Big intpart = f >> n;
    std::string text = intpart.str(0, std::ios_base::dec);
    if (n > 0) {
      text += '.';
      for (std::size_t i = n; i-- > 0;)
        text += static_cast<bool>((f >> i) & 1) ? '1' : '0';
    }
    return text;
  }

  std::vector<std::uint8_t> fraction(std::size_t n) const {
    std::vector<std::uint8_t> out;
    Big f = scaled_floor_ >> (scale_ - n);
    for (std::size_t i = n; i-- > 0;) out.push_back(static_cast<std::uint8_t>((f >> i) & 1));
    return out;
  }

private:
  int sign_at(const Big& num) const {
    // sign of f(num / 2^scale_), cleared of denominators
    Big acc = 0;
    Big pw = 1;
    std::vector<Big> powers;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
      powers.push_back(pw);
      pw *= num;
    }
    Big unit = Big(1) << scale_;
    Big upow = 1;
    std::vector<Big> upowers(coeffs_.size());
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
      upowers[j] = upow;
      upow *= unit;
    }
    for (std::size_t j = 0; j < coeffs_.size(); ++j) acc += coeffs_[j] * powers[j] * upowers[j];
    int s = acc == 0 ? 0 : acc > 0 ? 1 : -1;
    return flipped_ ? -s : s;
  }

  std::vector<long long> coeffs_;
  unsigned scale_;
  bool flipped_ = false;
  Big scaled_floor_;
};

/// Fractional digits of sum_base b^-f(i): digit p is 1 exactly when p is a
/// value of f.  Valid in any base >= 2 because the digits never carry.
inline std::vector<std::uint8_t> mu_digits(const std::function<std::uint64_t(std::uint64_t)>& f,
                                           std::size_t n) {
  std::vector<std::uint8_t> d(n, 0);
  for (std::uint64_t i = 1;; ++i) {
    std::uint64_t v = f(i);
    if (v > n) break;
    d[v - 1] = 1;
  }
  return d;
}

inline std::vector<std::uint8_t> mu_square_digits(std::size_t n) {
  return mu_digits([](std::uint64_t k) { return k * k; }, n);
}

inline std::vector<std::uint8_t> mu_cube_digits(std::size_t n) {
  return mu_digits([](std::uint64_t k) { return k * k * k; }, n);
}

inline std::vector<std::uint8_t> mu_factorial_digits(std::size_t n) {
  return mu_digits(
      [](std::uint64_t k) {
        std::uint64_t v = 1;
        for (std::uint64_t i = 2; i <= k; ++i) v *= i;  // callers stay far below overflow
        return v;
      },
      n);
}

/// Digit p is 1 when p is prime, by sieve.
inline std::vector<std::uint8_t> prime_indicator_digits(std::size_t n) {
  std::vector<std::uint8_t> is_prime(n + 1, 1);
  is_prime[0] = 0;
  if (n >= 1) is_prime[1] = 0;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (is_prime[p])
      for (std::size_t q = p * p; q <= n; q += p) is_prime[q] = 0;
  return {is_prime.begin() + 1, is_prime.end()};
}

/// Digit p is the parity of the count of ones in binary p.
inline std::vector<std::uint8_t> thue_morse_digits(std::size_t n) {
  std::vector<std::uint8_t> d;
  for (std::size_t p = 1; p <= n; ++p)
    d.push_back(static_cast<std::uint8_t>(__builtin_popcountll(p) & 1));
  return d;
}

/// Digit p is 1 when the number of trailing zero bits of p is even.
inline std::vector<std::uint8_t> period_doubling_digits(std::size_t n) {
  std::vector<std::uint8_t> d;
  for (std::size_t p = 1; p <= n; ++p)
    d.push_back(static_cast<std::uint8_t>(__builtin_ctzll(p) % 2 == 0));
  return d;
}

/// Canonical text of p/q in the base, truncated to n fractional digits,
/// by long division.
inline std::string rational_digits(std::uint64_t p, std::uint64_t q, int base, std::size_t n) {
  if (q == 0) throw std::logic_error("oracle division by zero");
  Big ip = Big(p) / q;
  Big rem = Big(p) % q;
  std::string text = ip.str(0, std::ios_base::dec);
  if (base != 10) {
    text.clear();
    Big v = ip;
    if (v == 0) text = "0";
    while (v > 0) {
      int digit = static_cast<int>(v % base);
      text.insert(text.begin(),
                  static_cast<char>(digit < 10 ? '0' + digit : 'a' + digit - 10));
      v /= base;
    }
  }
  if (n > 0) {
    text += '.';
    for (std::size_t i = 0; i < n; ++i) {
      rem *= base;
      int digit = static_cast<int>(rem / q);
      rem %= q;
      text += static_cast<char>(digit < 10 ? '0' + digit : 'a' + digit - 10);
    }
  }
  return text;
}

inline Big gcd_ref(const Big& a, const Big& b) { return boost::multiprecision::gcd(a, b); }

inline Big isqrt_ref(const Big& v) { return boost::multiprecision::sqrt(v); }

inline Big from_decimal(const std::string& text) { return Big(text); }

inline std::string to_decimal(const Big& v) { return v.str(0, std::ios_base::dec); }

}  // namespace oracles

#endif
