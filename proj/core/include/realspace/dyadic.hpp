#ifndef REALSPACE_DYADIC_HPP
#define REALSPACE_DYADIC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "realspace/meter.hpp"

namespace realspace {

enum class Ordering { Less, Equal, Greater };

/// Fixed-point numeral in a fixed base: sign, integer digits, fractional
/// digits.  prec() is the number of fractional digits; digits are stored
/// most-significant first and kept canonical (no leading integer zeros
/// except a single 0, no negative zero).  Trailing fractional zeros are
/// significant: 0.10 has prec 2 and is distinct from 0.1 as a numeral even
/// though the values are equal.
class Dyadic {
public:
  Dyadic() : base_(2), int_digits_{0} {}

  static Dyadic parse(std::string_view text, int base = 2);
  static Dyadic from_digits(int base, bool negative, std::vector<std::uint8_t> int_digits,
                            std::vector<std::uint8_t> frac_digits);

  int base() const { return base_; }
  bool negative() const { return negative_; }
  const std::vector<std::uint8_t>& int_digits() const { return int_digits_; }
  const std::vector<std::uint8_t>& frac_digits() const { return frac_digits_; }
  std::size_t prec() const { return frac_digits_.size(); }
  /// Total written digits, integer plus fractional.
  std::size_t length() const { return int_digits_.size() + frac_digits_.size(); }
  bool is_zero() const;

  /// 1-indexed fractional digit; digits past prec() read as 0.
  int fraction_digit(std::size_t i) const {
    return i >= 1 && i <= frac_digits_.size() ? frac_digits_[i - 1] : 0;
  }

  /// Canonical text: [-]I.F, or just [-]I when prec() == 0.
  std::string str() const;

private:
  int base_;
  bool negative_ = false;
  std::vector<std::uint8_t> int_digits_;
  std::vector<std::uint8_t> frac_digits_;
};

/// Value comparison; throws BaseMismatch when the bases differ.
Ordering compare(const Dyadic& a, const Dyadic& b);

/// Keep the first n fractional digits, pad with zeros up to n.  Digits are
/// cut, never rounded, so for non-negative inputs the result is <= the
/// input and within base^-n of it.
Dyadic truncate(const Dyadic& d, std::size_t n);

/// How a digit consumer reacts to each emission.
enum class SinkState {
  Running,    // keep emitting
  Saturated,  // no further digits are of interest, computing may continue
  Stopped,    // abandon the computation
};

/// Receives the digits of one evaluation, integer part first.
class DigitSink {
public:
  virtual ~DigitSink() = default;
  virtual void integer_digit(int d) = 0;
  virtual void fraction_point() = 0;
  virtual void fraction_digit(int d) = 0;
  virtual SinkState state() const = 0;
};

/// Accumulates emitted digits into a Dyadic with exactly `target` fractional
/// digits; saturates once the target is reached.
class CollectingSink final : public DigitSink {
public:
  CollectingSink(int base, std::size_t target) : base_(base), target_(target) {}
  void integer_digit(int d) override { int_digits_.push_back(static_cast<std::uint8_t>(d)); }
  void fraction_point() override {}
  void fraction_digit(int d) override {
    if (frac_digits_.size() < target_) frac_digits_.push_back(static_cast<std::uint8_t>(d));
  }
  SinkState state() const override {
    return frac_digits_.size() >= target_ ? SinkState::Saturated : SinkState::Running;
  }
  Dyadic take(bool negative = false) const;
  std::size_t fraction_count() const { return frac_digits_.size(); }

private:
  int base_;
  std::size_t target_;
  std::vector<std::uint8_t> int_digits_;
  std::vector<std::uint8_t> frac_digits_;
};

/// A digit stream for one real number x: eval(n) returns a numeral with
/// exactly n fractional digits within base^-n of x.  Evaluations run on the
/// caller's meter; the input length is presented as a unary input surface
/// so that algorithms needing no position counter charge none.
class DigitGenerator {
public:
  virtual ~DigitGenerator() = default;
  virtual const std::string& label() const = 0;
  virtual int base() const = 0;

  Dyadic eval(std::size_t n, SpaceMeter& meter) const;
  /// Same computation run through the simulated unary input (the binary
  /// position-counter adapter).
  Dyadic eval_fake_input(std::size_t n, SpaceMeter& meter) const;
  /// Run a length-n evaluation into an arbitrary sink.
  void run_digits(std::size_t n, SpaceMeter& meter, DigitSink& sink) const;

  /// Emit digits until the unary input is exhausted or the sink stops.
  virtual void generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const = 0;
  virtual bool produces_negative() const { return false; }
};

/// The i-th fractional digit of a length-n evaluation, extracted without
/// keeping the earlier digits: a charged binary counter is compared against
/// the charged copy of i and the run is abandoned at the match.
int digit_in_run(const DigitGenerator& g, std::size_t i, std::size_t n, SpaceMeter& meter);
/// digit_in_run at i = n.
int nth_digit(const DigitGenerator& g, std::size_t n, SpaceMeter& meter);

}  // namespace realspace

#endif
