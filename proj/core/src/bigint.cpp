#include "realspace/bigint.hpp"

#include <algorithm>
#include <bit>

#include "realspace/errors.hpp"

namespace realspace {

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) limbs_.push_back(v);
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

std::size_t BigUint::bit_length() const {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + (64 - std::countl_zero(limbs_.back()));
}

bool BigUint::bit(std::size_t i) const {
  std::size_t limb = i / 64;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 64)) & 1u;
}

int BigUint::compare(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() < o.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
  }
  return 0;
}

BigUint& BigUint::add(const BigUint& o) {
  limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    unsigned __int128 s = carry + limbs_[i];
    if (i < o.limbs_.size()) s += o.limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(s);
    carry = s >> 64;
  }
  if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
  return *this;
}

BigUint& BigUint::sub(const BigUint& o) {
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t rhs = i < o.limbs_.size() ? o.limbs_[i] : 0;
    std::uint64_t before = limbs_[i];
    std::uint64_t after = before - rhs - borrow;
    borrow = (before < rhs || (borrow && before == rhs)) ? 1 : 0;
    limbs_[i] = after;
  }
  if (borrow) throw Error("BigUint::sub underflow");
  trim();
  return *this;
}

BigUint& BigUint::shl(std::size_t bits) {
  if (is_zero() || bits == 0) return *this;
  std::size_t limb_shift = bits / 64, bit_shift = bits % 64;
  std::size_t old = limbs_.size();
  limbs_.resize(old + limb_shift + 1, 0);
  for (std::size_t i = old; i-- > 0;) {
    std::uint64_t v = limbs_[i];
    limbs_[i] = 0;
    if (bit_shift == 0) {
      limbs_[i + limb_shift] |= v;
    } else {
      limbs_[i + limb_shift] |= v << bit_shift;
      limbs_[i + limb_shift + 1] |= v >> (64 - bit_shift);
    }
  }
  trim();
  return *this;
}

BigUint& BigUint::shr(std::size_t bits) {
  std::size_t limb_shift = bits / 64, bit_shift = bits % 64;
  if (limb_shift >= limbs_.size()) {
    limbs_.clear();
    return *this;
  }
  limbs_.erase(limbs_.begin(), limbs_.begin() + static_cast<std::ptrdiff_t>(limb_shift));
  if (bit_shift) {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      limbs_[i] >>= bit_shift;
      if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << (64 - bit_shift);
    }
  }
  trim();
  return *this;
}

BigUint& BigUint::add_u64(std::uint64_t v) {
  BigUint t(v);
  return add(t);
}

BigUint& BigUint::mul_u64(std::uint64_t v) {
  if (v == 0 || is_zero()) {
    limbs_.clear();
    return *this;
  }
  unsigned __int128 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    unsigned __int128 p = static_cast<unsigned __int128>(limbs_[i]) * v + carry;
    limbs_[i] = static_cast<std::uint64_t>(p);
    carry = p >> 64;
  }
  if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
  return *this;
}

std::uint64_t BigUint::divmod_u64(std::uint64_t divisor) {
  if (divisor == 0) throw DivisionByZero();
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    unsigned __int128 cur = (rem << 64) | limbs_[i];
    limbs_[i] = static_cast<std::uint64_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint64_t>(rem);
}

std::uint64_t BigUint::mod_u64(std::uint64_t divisor) const {
  if (divisor == 0) throw DivisionByZero();
  unsigned __int128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    rem = ((rem << 64) | limbs_[i]) % divisor;
  }
  return static_cast<std::uint64_t>(rem);
}

BigUint BigUint::mul(const BigUint& a, const BigUint& b) {
  BigUint out;
  if (a.is_zero() || b.is_zero()) return out;
  out.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    unsigned __int128 carry = 0;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      unsigned __int128 cur = static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
                              out.limbs_[i + j] + carry;
      out.limbs_[i + j] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
    }
    std::size_t k = i + b.limbs_.size();
    while (carry) {
      unsigned __int128 cur = carry + out.limbs_[k];
      out.limbs_[k] = static_cast<std::uint64_t>(cur);
      carry = cur >> 64;
      ++k;
    }
  }
  out.trim();
  return out;
}

BigUint BigUint::from_decimal(const std::string& text) {
  if (text.empty()) throw MalformedNumeral("empty integer literal");
  BigUint out;
  for (char c : text) {
    if (c < '0' || c > '9') throw MalformedNumeral("bad digit in integer literal: " + text);
    out.mul_u64(10);
    out.add_u64(static_cast<std::uint64_t>(c - '0'));
  }
  return out;
}

BigUint BigUint::from_digits(unsigned base, const std::vector<std::uint8_t>& digits) {
  BigUint out;
  for (auto d : digits) {
    out.mul_u64(base);
    out.add_u64(d);
  }
  return out;
}

BigUint BigUint::power(std::uint64_t base, std::uint64_t exp) {
  BigUint out(1);
  for (std::uint64_t i = 0; i < exp; ++i) out.mul_u64(base);
  return out;
}

std::uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 1) throw Error("BigUint does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BigUint::to_decimal() const {
  if (is_zero()) return "0";
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    out.push_back(static_cast<char>('0' + tmp.divmod_u64(10)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::uint8_t> BigUint::to_digits(unsigned base) const {
  std::vector<std::uint8_t> out;
  BigUint tmp = *this;
  while (!tmp.is_zero()) {
    out.push_back(static_cast<std::uint8_t>(tmp.divmod_u64(base)));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace realspace
