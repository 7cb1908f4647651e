#include "realspace/dyadic.hpp"

#include <algorithm>

#include "realspace/errors.hpp"

namespace realspace {

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  return -1;
}

char digit_char(int d) {
  return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10);
}

}  // namespace

Dyadic Dyadic::parse(std::string_view text, int base) {
  if (base < 2 || base > 36) throw MalformedNumeral("unsupported base");
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && rest.front() == '-') {
    negative = true;
    rest.remove_prefix(1);
  }
  if (rest.empty()) throw MalformedNumeral("empty numeral");
  std::vector<std::uint8_t> int_digits, frac_digits;
  bool seen_point = false, seen_digit = false;
  for (char c : rest) {
    if (c == '.') {
      if (seen_point) throw MalformedNumeral("two points in numeral");
      seen_point = true;
      continue;
    }
    int d = digit_value(c);
    if (d < 0 || d >= base) throw MalformedNumeral(std::string("bad digit '") + c + "'");
    seen_digit = true;
    (seen_point ? frac_digits : int_digits).push_back(static_cast<std::uint8_t>(d));
  }
  if (!seen_digit) throw MalformedNumeral("numeral without digits");
  return from_digits(base, negative, std::move(int_digits), std::move(frac_digits));
}

Dyadic Dyadic::from_digits(int base, bool negative, std::vector<std::uint8_t> int_digits,
                           std::vector<std::uint8_t> frac_digits) {
  if (base < 2 || base > 36) throw MalformedNumeral("unsupported base");
  for (auto d : int_digits)
    if (d >= base) throw MalformedNumeral("integer digit out of range");
  for (auto d : frac_digits)
    if (d >= base) throw MalformedNumeral("fractional digit out of range");
  while (int_digits.size() > 1 && int_digits.front() == 0)
    int_digits.erase(int_digits.begin());
  if (int_digits.empty()) int_digits.push_back(0);
  Dyadic out;
  out.base_ = base;
  out.int_digits_ = std::move(int_digits);
  out.frac_digits_ = std::move(frac_digits);
  out.negative_ = negative && !out.is_zero();
  return out;
}

bool Dyadic::is_zero() const {
  auto all0 = [](const std::vector<std::uint8_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint8_t d) { return d == 0; });
  };
  return all0(int_digits_) && all0(frac_digits_);
}

std::string Dyadic::str() const {
  std::string out;
  if (negative_) out.push_back('-');
  for (auto d : int_digits_) out.push_back(digit_char(d));
  if (!frac_digits_.empty()) {
    out.push_back('.');
    for (auto d : frac_digits_) out.push_back(digit_char(d));
  }
  return out;
}

namespace {

/// Magnitude comparison ignoring sign.
Ordering compare_magnitude(const Dyadic& a, const Dyadic& b) {
  const auto& ai = a.int_digits();
  const auto& bi = b.int_digits();
  if (ai.size() != bi.size())
    return ai.size() < bi.size() ? Ordering::Less : Ordering::Greater;
  for (std::size_t i = 0; i < ai.size(); ++i)
    if (ai[i] != bi[i]) return ai[i] < bi[i] ? Ordering::Less : Ordering::Greater;
  std::size_t n = std::max(a.prec(), b.prec());
  for (std::size_t i = 1; i <= n; ++i) {
    int da = a.fraction_digit(i), db = b.fraction_digit(i);
    if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
  }
  return Ordering::Equal;
}

}  // namespace

Ordering compare(const Dyadic& a, const Dyadic& b) {
  if (a.base() != b.base()) throw BaseMismatch("comparing numerals of different bases");
  if (a.negative() != b.negative())
    return a.negative() ? Ordering::Less : Ordering::Greater;
  Ordering mag = compare_magnitude(a, b);
  if (!a.negative() || mag == Ordering::Equal) return mag;
  return mag == Ordering::Less ? Ordering::Greater : Ordering::Less;
}

Dyadic truncate(const Dyadic& d, std::size_t n) {
  std::vector<std::uint8_t> frac = d.frac_digits();
  frac.resize(n, 0);
  return Dyadic::from_digits(d.base(), d.negative(), d.int_digits(), std::move(frac));
}

Dyadic CollectingSink::take(bool negative) const {
  std::vector<std::uint8_t> frac = frac_digits_;
  frac.resize(target_, 0);
  return Dyadic::from_digits(base_, negative, int_digits_, std::move(frac));
}

Dyadic DigitGenerator::eval(std::size_t n, SpaceMeter& meter) const {
  CollectingSink sink(base(), n);
  DirectUnaryInput input(n);
  generate(input, sink, meter);
  if (sink.fraction_count() != n)
    throw Error(label() + ": evaluation produced " + std::to_string(sink.fraction_count()) +
                " of " + std::to_string(n) + " digits");
  return sink.take(produces_negative());
}

Dyadic DigitGenerator::eval_fake_input(std::size_t n, SpaceMeter& meter) const {
  CollectingSink sink(base(), n);
  FakeUnaryInput input(meter, n);
  generate(input, sink, meter);
  if (sink.fraction_count() != n)
    throw Error(label() + ": evaluation produced " + std::to_string(sink.fraction_count()) +
                " of " + std::to_string(n) + " digits");
  return sink.take(produces_negative());
}

void DigitGenerator::run_digits(std::size_t n, SpaceMeter& meter, DigitSink& sink) const {
  DirectUnaryInput input(n);
  generate(input, sink, meter);
}

namespace {

/// Counts fractional digits on a charged binary counter until it matches the
/// charged copy of the wanted index, then stops the run.
class CaptureSink final : public DigitSink {
public:
  CaptureSink(SpaceMeter& meter, std::size_t index)
      : counter_(meter), max_(meter) {
    max_.set_u64(index);
  }
  void integer_digit(int) override {}
  void fraction_point() override {}
  void fraction_digit(int d) override {
    if (done_) return;
    counter_.increment();
    if (counter_.cmp(max_) == 0) {
      digit_ = d;
      done_ = true;
    }
  }
  SinkState state() const override { return done_ ? SinkState::Stopped : SinkState::Running; }
  bool done() const { return done_; }
  int digit() const { return digit_; }

private:
  MeteredInt counter_;
  MeteredInt max_;
  bool done_ = false;
  int digit_ = 0;
};

}  // namespace

int digit_in_run(const DigitGenerator& g, std::size_t i, std::size_t n, SpaceMeter& meter) {
  if (i == 0 || i > n) throw Error("digit index out of range");
  CaptureSink sink(meter, i);
  DirectUnaryInput input(n);
  g.generate(input, sink, meter);
  if (!sink.done()) throw Error(g.label() + ": run ended before digit was produced");
  return sink.digit();
}

int nth_digit(const DigitGenerator& g, std::size_t n, SpaceMeter& meter) {
  return digit_in_run(g, n, n, meter);
}

}  // namespace realspace
