// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "plconj/errors.hpp"
#include "plconj/rational.hpp"

using plconj::Rational;

TEST_CASE("parse and print") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("2/4").to_string() == "1/2");
  CHECK(Rational::parse("-3/6").to_string() == "-1/2");
  CHECK(Rational::parse("7").to_string() == "7");
  CHECK(Rational::parse("0/5").to_string() == "0");
  CHECK(Rational(6, -4).to_string() == "-3/2");
}

TEST_CASE("malformed text is rejected") {
  for (const char* bad : {"", "1/", "/2", "1/0", "0.5", "a", "1//2", "1/2/3", " 1/2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), plconj::DomainError);
  }
}

TEST_CASE("arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 5) == Rational(-1, 5));
  CHECK(Rational(-2, 7).abs() == Rational(2, 7));
  CHECK_THROWS_AS(Rational(1) / Rational(0), plconj::DomainError);
}

TEST_CASE("ordering and helpers") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(plconj::min(Rational(1, 3), Rational(1, 4)) == Rational(1, 4));
  CHECK(plconj::max(Rational(1, 3), Rational(1, 4)) == Rational(1, 3));
  CHECK(plconj::midpoint(Rational(1, 4), Rational(1, 2)) == Rational(3, 8));
  CHECK(Rational::pow2_inverse(10) == Rational(1, 1024));
  CHECK(Rational(3, 7).sign() == 1);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(3, 7).numerator_string() == "3");
  CHECK(Rational(3, 7).denominator_string() == "7");
}

TEST_CASE("round trip over a grid") {
  for (int p = -12; p <= 12; ++p) {
    for (int d = 1; d <= 12; ++d) {
      const Rational r(p, d);
      CHECK(Rational::parse(r.to_string()) == r);
    }
  }
}
