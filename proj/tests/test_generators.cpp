#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "realspace/builtins.hpp"
#include "realspace/errors.hpp"
#include "realspace/generators.hpp"
#include "realspace/ratarith.hpp"

using namespace realspace;

namespace {

std::string eval_str(const DigitGenerator& g, std::size_t n) {
  SpaceMeter meter;
  return g.eval(n, meter).str();
}

std::string indicator_text(const std::vector<std::uint8_t>& digits) {
  std::string out = "0.";
  for (auto d : digits) out += static_cast<char>('0' + d);
  return out;
}

std::string fixture(const char* name) {
  return std::string(REALSPACE_FIXTURES) + "/" + name;
}

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("rational digit streams match long division") {
  RationalGen third(1, 3, 2);
  CHECK(eval_str(third, 16) == "0.0101010101010101");
  RationalGen pi_ish(22, 7, 10);
  CHECK(eval_str(pi_ish, 18) == "3.142857142857142857");
  for (std::size_t n : {1u, 7u, 40u})
    CHECK(eval_str(pi_ish, n) == oracles::rational_digits(22, 7, 10, n));
  RationalGen milu(355, 113, 10);
  CHECK(eval_str(milu, 12) == "3.141592920353");
}

TEST_CASE("negative rationals truncate toward zero") {
  RationalGen neg(-22, 7, 10);
  CHECK(neg.produces_negative());
  CHECK(eval_str(neg, 6) == "-3.142857");
}

TEST_CASE("a rational stream uses constant space") {
  RationalGen third(1, 3, 2);
  SpaceMeter small, large;
  third.eval(16, small);
  third.eval(1024, large);
  CHECK(small.peak_cells() == large.peak_cells());
}

TEST_CASE("root refinement emits the floor bits") {
  auto sqrt2 = make_builtin("sqrt2");
  CHECK(eval_str(*sqrt2, 32) == "1.01101010000010011110011001100111");
  auto golden = make_builtin("golden");
  CHECK(eval_str(*golden, 32) == "1.10011110001101110111100110111001");
  auto cbrt2 = make_builtin("cbrt2");
  CHECK(eval_str(*cbrt2, 32) == "1.01000010100010100010111110011000");

  oracles::AlgebraicOracle ref({-2, 0, 1}, 1, 2);
  for (std::size_t n : {1u, 2u, 17u, 64u, 100u}) CHECK(eval_str(*sqrt2, n) == ref.digits(n));
}

TEST_CASE("a seed that does not bracket a root is rejected") {
  AlgebraicSpec spec;
  spec.coeffs = {-2, 0, 1};
  spec.seed = Dyadic::parse("0", 2);  // f(0) and f(1) are both negative
  spec.k = 0;
  CHECK_THROWS_AS(AlgebraicGen("bad", spec), SeedInvalid);

  AlgebraicSpec wrong_k;
  wrong_k.coeffs = {-2, 0, 1};
  wrong_k.seed = Dyadic::parse("1", 2);
  wrong_k.k = 3;
  CHECK_THROWS_AS(AlgebraicGen("bad", wrong_k), SeedInvalid);
}

TEST_CASE("sparse exponent streams place ones exactly at f values") {
  auto mu2 = make_builtin("mu-square");
  CHECK(eval_str(*mu2, 30) == indicator_text(oracles::mu_square_digits(30)));
  auto mu3 = make_builtin("mu-cube");
  CHECK(eval_str(*mu3, 30) == indicator_text(oracles::mu_cube_digits(30)));
  auto liou = make_builtin("liouville");
  CHECK(eval_str(*liou, 30) == indicator_text(oracles::mu_factorial_digits(30)));
  CHECK(eval_str(*liou, 30) == "0.110001000000000000000001000000");

  // The digits do not depend on the base: no position ever carries.
  MuGen ternary("mu2-b3", ExponentFunction::power_fn(2), 3);
  std::string b3 = eval_str(ternary, 30);
  CHECK(b3 == indicator_text(oracles::mu_square_digits(30)));
}

TEST_CASE("custom exponent tables must increase strictly") {
  CHECK_THROWS_AS(ExponentFunction::custom({3, 3, 5}), NotIncreasing);
  CHECK_THROWS_AS(ExponentFunction::custom({0, 1, 2}), NotIncreasing);
  // The generator walks all n input cells, consuming one table entry per
  // cell, so an n-digit request needs at least n entries.
  ExponentFunction ok =
      ExponentFunction::custom({2, 5, 11, 17, 18, 19, 20, 21, 22, 23, 24, 25});
  MuGen g("table", ok, 10);
  CHECK(eval_str(g, 12) == "0.010010000010");

  MuGen short_table("short", ExponentFunction::custom({2, 5, 11}), 10);
  CHECK(eval_str(short_table, 3) == "0.010");
  CHECK_THROWS_AS(eval_str(short_table, 4), Error);
}

TEST_CASE("automatic streams run the automaton on each position") {
  auto tm = make_builtin("thue-morse");
  CHECK(eval_str(*tm, 32) == indicator_text(oracles::thue_morse_digits(32)));

  AutomaticGen pd("period-doubling", period_doubling_spec());
  CHECK(eval_str(pd, 32) == indicator_text(oracles::period_doubling_digits(32)));
}

TEST_CASE("automaton descriptions are validated") {
  AutomatonSpec spec = thue_morse_spec();
  spec.transition[0][1] = 5;  // state out of range
  CHECK_THROWS_AS(AutomaticGen("bad", spec), SpecLoadError);

  AutomatonSpec bad_out = thue_morse_spec();
  bad_out.output[1] = 7;  // not a digit in base b
  CHECK_THROWS_AS(AutomaticGen("bad", bad_out), SpecLoadError);

  AutomatonSpec stray = thue_morse_spec();
  stray.transition[stray.start][0] = 1;  // start must ignore leading zeros
  CHECK_THROWS_AS(AutomaticGen("bad", stray), SpecLoadError);
}

TEST_CASE("indicator streams consult the membership test per position") {
  auto primes = make_builtin("primes");
  CHECK(eval_str(*primes, 30) == indicator_text(oracles::prime_indicator_digits(30)));
  auto primes2 = make_builtin("primes", 2);
  CHECK(primes2->base() == 2);
  CHECK(eval_str(*primes2, 30) == indicator_text(oracles::prime_indicator_digits(30)));

  IndicatorGen odd("odd", [](const MeteredInt& v, SpaceMeter&) { return v.bit(0); }, 10);
  CHECK(eval_str(odd, 8) == "0.10101010");
}

TEST_CASE("each refinement stays within the advertised distance") {
  for (const std::string& name : builtin_names()) {
    auto g = make_builtin(name);
    for (std::size_t n : {5u, 17u, 33u}) {
      SpaceMeter m1, m2;
      Rational coarse = rational_of_dyadic(g->eval(n, m1));
      Rational fine = rational_of_dyadic(g->eval(n + 8, m2));
      Rational tol;
      tol.num = BigUint(1);
      tol.den = BigUint::power(static_cast<std::uint64_t>(g->base()), n);
      CHECK(rat_cmp(rat_abs(rat_sub(coarse, fine)), tol) <= 0);
    }
  }
}

TEST_CASE("builtin lookup and base overrides") {
  CHECK(builtin_names().size() == 8);
  CHECK_THROWS_AS(make_builtin("nonsense"), Error);
  CHECK_THROWS_AS(make_builtin("sqrt2", 10), BaseMismatch);
  CHECK_THROWS_AS(make_builtin("thue-morse", 10), BaseMismatch);
  CHECK(make_builtin("mu-square", 2)->base() == 2);
}

TEST_CASE("generator descriptions load from JSON") {
  std::ifstream root_file(fixture("sqrt3.json"));
  REQUIRE(root_file.good());
  AlgebraicSpec spec = load_algebraic_spec(root_file);
  AlgebraicGen sqrt3("sqrt3", spec);
  // sqrt(3) = 1.7320508... = 1.1011101101100111...
  CHECK(eval_str(sqrt3, 16) == "1.1011101101100111");

  std::ifstream parity_file(fixture("parity.json"));
  REQUIRE(parity_file.good());
  AutomatonSpec autom = load_automaton_spec(parity_file);
  AutomaticGen tm("tm", autom);
  CHECK(eval_str(tm, 32) == indicator_text(oracles::thue_morse_digits(32)));

  auto via_file = load_generator_file(fixture("sqrt3.json"));
  CHECK(eval_str(*via_file, 16) == "1.1011101101100111");
  CHECK_THROWS_AS(load_generator_file(fixture("neither.json")), SpecLoadError);
  CHECK_THROWS_AS(load_generator_file(fixture("missing.json")), SpecLoadError);

  std::istringstream broken("{\"coeffs\": [1, 2");
  CHECK_THROWS_AS(load_algebraic_spec(broken), SpecLoadError);
  std::istringstream not_total("{\"transitions\": {\"a\": {\"0\": \"a\"}}, \"output\": {\"a\": 0}}");
  CHECK_THROWS_AS(load_automaton_spec(not_total), SpecLoadError);
}

TEST_CASE("digit extraction without digit storage") {
  auto golden = make_builtin("golden");
  SpaceMeter ref;
  Dyadic full = golden->eval(20, ref);
  for (std::size_t i = 1; i <= 20; ++i) {
    SpaceMeter m;
    CHECK(digit_in_run(*golden, i, 20, m) == full.fraction_digit(i));
  }
  SpaceMeter m;
  CHECK(nth_digit(*golden, 20, m) == full.fraction_digit(20));
}

}
