#include <doctest.h>

#include <cmath>
#include <limits>

#include "morrey/ext_scalar.hpp"

using morrey::ExtScalar;

TEST_CASE("rational arithmetic is exact and reduced") {
  const ExtScalar a(1, 2), b(1, 3);
  CHECK((a + b) == ExtScalar(5, 6));
  CHECK((a - b) == ExtScalar(1, 6));
  CHECK((a * b) == ExtScalar(1, 6));
  CHECK((a / b) == ExtScalar(3, 2));
  CHECK(ExtScalar(2, 4) == ExtScalar(1, 2));
  CHECK((-ExtScalar(3, 4)).str() == "-3/4");
}

TEST_CASE("infinity conventions") {
  const ExtScalar inf = ExtScalar::inf();
  CHECK(inf.is_inf());
  CHECK(inf.reciprocal() == ExtScalar(0));
  CHECK(ExtScalar(0).reciprocal() == inf);
  CHECK((inf + ExtScalar(5)) == inf);
  CHECK((inf - ExtScalar(5)) == inf);
  CHECK((inf * ExtScalar(1, 3)) == inf);
  CHECK((ExtScalar(7) / inf) == ExtScalar(0));
  CHECK_THROWS_AS(ExtScalar(1) - inf, std::domain_error);
  CHECK_THROWS_AS(inf * ExtScalar(0), std::domain_error);
  CHECK_THROWS_AS(inf / inf, std::domain_error);
}

TEST_CASE("total order with infinity on top") {
  CHECK(ExtScalar(1, 2) < ExtScalar(2, 3));
  CHECK(ExtScalar(-1) < ExtScalar(0));
  CHECK(ExtScalar(100) < ExtScalar::inf());
  CHECK(ExtScalar::inf() == ExtScalar::inf());
  CHECK(morrey::max(ExtScalar(1), ExtScalar(3, 2)) == ExtScalar(3, 2));
  CHECK(morrey::min(ExtScalar::inf(), ExtScalar(4)) == ExtScalar(4));
}

TEST_CASE("positive part") {
  CHECK(ExtScalar(-3, 4).positive_part() == ExtScalar(0));
  CHECK(ExtScalar(3, 4).positive_part() == ExtScalar(3, 4));
  CHECK(ExtScalar::inf().positive_part().is_inf());
}

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"0", "5", "-3", "1/2", "-7/3", "11/10", "inf"}) {
    CHECK(ExtScalar::parse(text).str() == text);
  }
  CHECK(ExtScalar::parse("4/2") == ExtScalar(2));
  CHECK_THROWS_AS(ExtScalar::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(ExtScalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExtScalar::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(ExtScalar::parse("1.5"), std::invalid_argument);
}

TEST_CASE("to_double") {
  CHECK(ExtScalar(1, 2).to_double() == 0.5);
  CHECK(std::isinf(ExtScalar::inf().to_double()));
  CHECK(ExtScalar::inf().to_double() > 0);
}
