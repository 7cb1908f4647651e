#ifndef REALSPACE_GENERATORS_HPP
#define REALSPACE_GENERATORS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "realspace/bigint.hpp"
#include "realspace/dyadic.hpp"
#include "realspace/meter.hpp"
#include "realspace/ratarith.hpp"

namespace realspace {

/// Digit stream of p/q by long division: integer part first, then one
/// division step per input symbol.  The working values never exceed
/// base * q, so the metered peak does not depend on n.
class RationalGen final : public DigitGenerator {
public:
  RationalGen(const Rational& value, int base);
  RationalGen(std::int64_t p, std::int64_t q, int base);

  const std::string& label() const override { return label_; }
  int base() const override { return base_; }
  bool produces_negative() const override { return negative_; }
  void generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const override;

private:
  std::string label_;
  int base_;
  bool negative_;
  BigUint num_;
  BigUint den_;
};

/// A root bracket for a polynomial with integer coefficients: the first k
/// fractional bits of the root, with f(seed) <= 0 < f(seed + 2^-k) after
/// an optional global sign flip of f.
struct AlgebraicSpec {
  std::vector<std::int64_t> coeffs;  // a_0 .. a_r
  Dyadic seed;                       // base 2, non-negative
  std::size_t k = 0;                 // must equal seed.prec()
  bool sign_flipped = false;         // discovered at validation, not an input
};

/// Reads {"coeffs":[a0,...,ar],"seed":"bits","k":uint}; throws SpecLoadError.
AlgebraicSpec load_algebraic_spec(std::istream& in);

/// Bit-by-bit root refinement: each emitted bit halves the bracket, with
/// the polynomial sign evaluated exactly on scaled integers.  Base 2 only.
class AlgebraicGen final : public DigitGenerator {
public:
  /// Validates the bracket; throws SeedInvalid when neither f nor -f fits.
  AlgebraicGen(std::string label, AlgebraicSpec spec);

  const std::string& label() const override { return label_; }
  int base() const override { return 2; }
  const AlgebraicSpec& spec() const { return spec_; }
  void generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const override;

private:
  int scaled_sign(const BigUint& m, std::size_t scale, SpaceMeter& meter) const;
  bool bracket_holds(const BigUint& numerator, std::size_t scale) const;

  std::string label_;
  AlgebraicSpec spec_;
  BigUint seed_numerator_;  // seed digits as an integer at scale k
};

/// Strictly increasing exponent map f over the positive naturals.
struct ExponentFunction {
  enum class Kind { Power, Factorial, Table };
  Kind kind = Kind::Power;
  unsigned power = 1;
  std::vector<std::uint64_t> table;  // f(1), f(2), ...

  static ExponentFunction power_fn(unsigned d);
  static ExponentFunction factorial();
  /// Throws NotIncreasing unless the table is strictly increasing from >= 1.
  static ExponentFunction custom(std::vector<std::uint64_t> table);
};

/// The number with digit 1 exactly at positions f(1), f(2), ...: a pair of
/// binary position registers tracks the input and output heads while a
/// result register carries f of the input position; zeros are streamed
/// until the output position catches the result.  Factorials grow the
/// result register incrementally, one multiplication per input symbol.
class MuGen final : public DigitGenerator {
public:
  MuGen(std::string label, ExponentFunction f, int base = 10);

  const std::string& label() const override { return label_; }
  int base() const override { return base_; }
  void generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const override;

private:
  void apply_f(MeteredInt& res, const MeteredInt& pos_in, std::uint64_t step,
               SpaceMeter& meter) const;

  std::string label_;
  ExponentFunction f_;
  int base_;
};

/// Deterministic automaton over radix-k digits with a per-state output
/// digit in radix b.
struct AutomatonSpec {
  int k = 2;
  int b = 2;
  std::vector<std::string> states;
  int start = 0;
  std::vector<std::vector<int>> transition;  // [state][digit] -> state
  std::vector<int> output;                   // [state] -> digit in [0,b)
};

/// Reads {"k":2,"b":2,"start":name,"transitions":{...},"output":{...}};
/// throws SpecLoadError.
AutomatonSpec load_automaton_spec(std::istream& in);

/// Digit i is the automaton's output after reading the radix-k digits of
/// i, most significant first.  The only unbounded storage is the radix-k
/// counter tape, incremented once per input symbol and rescanned in full.
class AutomaticGen final : public DigitGenerator {
public:
  /// Validates totality, digit ranges and that the start state ignores
  /// leading zeros; throws SpecLoadError.
  AutomaticGen(std::string label, AutomatonSpec spec);

  const std::string& label() const override { return label_; }
  int base() const override { return spec_.b; }
  const AutomatonSpec& spec() const { return spec_; }
  void generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const override;

private:
  std::string label_;
  AutomatonSpec spec_;
};

/// Decision procedure over the positive naturals, run on the caller's
/// meter so its scratch space is charged to the computation.
using MembershipFn = std::function<bool(const MeteredInt& value, SpaceMeter& meter)>;

/// Digit i is 1 iff i belongs to the set: a binary register walks the
/// positions and the membership test runs per position.
class IndicatorGen final : public DigitGenerator {
public:
  IndicatorGen(std::string label, MembershipFn member, int base = 10);

  const std::string& label() const override { return label_; }
  int base() const override { return base_; }
  void generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const override;

private:
  std::string label_;
  MembershipFn member_;
  int base_;
};

/// Trial division up to the square root, all registers metered.
bool prime_member(const MeteredInt& p, SpaceMeter& meter);

}  // namespace realspace

#endif
