#include <string>

#include "doctest.h"
#include "realspace/dyadic.hpp"
#include "realspace/errors.hpp"

using namespace realspace;

TEST_SUITE("dyadic") {

TEST_CASE("parse and print round trip") {
  for (const char* text : {"0", "1", "0.0", "0.0110", "1.101", "-1.101", "-0.001", "10.01"}) {
    Dyadic d = Dyadic::parse(text, 2);
    CHECK(d.str() == text);
  }
  Dyadic dec = Dyadic::parse("3.142857", 10);
  CHECK(dec.str() == "3.142857");
  CHECK(dec.prec() == 6);
  CHECK(dec.length() == 7);
}

TEST_CASE("parsing canonicalizes leading zeros and negative zero") {
  CHECK(Dyadic::parse("007.50", 10).str() == "7.50");
  CHECK(Dyadic::parse("000", 10).str() == "0");
  CHECK(Dyadic::parse("-0.00", 2).str() == "0.00");  // no negative zero
  CHECK(Dyadic::parse("-0", 2).negative() == false);
  CHECK(Dyadic::parse("-0.00", 2).is_zero());
}

TEST_CASE("malformed numerals are rejected") {
  CHECK_THROWS_AS(Dyadic::parse("1.2", 2), MalformedNumeral);
  CHECK_THROWS_AS(Dyadic::parse("", 2), MalformedNumeral);
  CHECK_THROWS_AS(Dyadic::parse(".", 2), MalformedNumeral);
  CHECK_THROWS_AS(Dyadic::parse("1..0", 2), MalformedNumeral);
  CHECK_THROWS_AS(Dyadic::parse("abc", 10), MalformedNumeral);
  CHECK_THROWS_AS(Dyadic::parse("1.0 ", 2), MalformedNumeral);
  CHECK_THROWS_AS(Dyadic::parse("+1.0", 2), MalformedNumeral);
}

TEST_CASE("trailing fractional zeros are significant for prec, not value") {
  Dyadic a = Dyadic::parse("0.1", 2);
  Dyadic b = Dyadic::parse("0.10", 2);
  CHECK(a.prec() == 1);
  CHECK(b.prec() == 2);
  CHECK(compare(a, b) == Ordering::Equal);
}

TEST_CASE("comparison follows value, sign included") {
  auto lt = [](const char* x, const char* y) {
    return compare(Dyadic::parse(x, 2), Dyadic::parse(y, 2)) == Ordering::Less;
  };
  CHECK(lt("0.01", "0.1"));
  CHECK(lt("0.111", "1"));
  CHECK(lt("-1.1", "-0.1"));
  CHECK(lt("-0.1", "0.01"));
  CHECK(lt("1.0111", "1.1"));
  CHECK(compare(Dyadic::parse("-0.0", 2), Dyadic::parse("0", 2)) == Ordering::Equal);
  CHECK_THROWS_AS(compare(Dyadic::parse("1", 2), Dyadic::parse("1", 10)), BaseMismatch);
}

TEST_CASE("truncation cuts digits, never rounds") {
  CHECK(truncate(Dyadic::parse("0.1111", 2), 2).str() == "0.11");
  CHECK(truncate(Dyadic::parse("0.1", 2), 3).str() == "0.100");
  CHECK(truncate(Dyadic::parse("1.999", 10), 1).str() == "1.9");
  CHECK(truncate(Dyadic::parse("5", 10), 2).str() == "5.00");
  CHECK(truncate(Dyadic::parse("-0.1111", 2), 2).str() == "-0.11");
}

TEST_CASE("fraction digits are 1-indexed and zero past prec") {
  Dyadic d = Dyadic::parse("0.0110", 2);
  CHECK(d.fraction_digit(1) == 0);
  CHECK(d.fraction_digit(2) == 1);
  CHECK(d.fraction_digit(3) == 1);
  CHECK(d.fraction_digit(4) == 0);
  CHECK(d.fraction_digit(5) == 0);
  CHECK(d.fraction_digit(0) == 0);
}

TEST_CASE("from_digits keeps the declared digits") {
  Dyadic d = Dyadic::from_digits(2, false, {1, 0}, {0, 1, 1});
  CHECK(d.str() == "10.011");
  Dyadic neg = Dyadic::from_digits(10, true, {3}, {5});
  CHECK(neg.str() == "-3.5");
}

TEST_CASE("collecting sink saturates at its target") {
  CollectingSink sink(2, 3);
  sink.integer_digit(1);
  CHECK(sink.state() == SinkState::Running);
  sink.fraction_point();
  sink.fraction_digit(0);
  sink.fraction_digit(1);
  CHECK(sink.state() == SinkState::Running);
  sink.fraction_digit(1);
  CHECK(sink.state() == SinkState::Saturated);
  sink.fraction_digit(0);  // ignored past the target
  Dyadic d = sink.take();
  CHECK(d.str() == "1.011");
  CHECK(sink.fraction_count() == 3);
}

}
