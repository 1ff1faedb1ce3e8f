#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moflow/rational.hpp"

using namespace moflow;

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(rational_from_string("5") == make_rational(5));
  CHECK(rational_from_string("-3") == make_rational(-3));
  CHECK(rational_from_string("5/2") == make_rational(5, 2));
  CHECK(rational_from_string("4/8") == make_rational(1, 2));
  CHECK(rational_from_string("-6/4") == make_rational(-3, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("a"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/2/3"), std::invalid_argument);
}

TEST_CASE("rational printing is canonical") {
  CHECK(rational_to_string(make_rational(10, 4)) == "5/2");
  CHECK(rational_to_string(make_rational(8, 4)) == "2");
  CHECK(rational_to_string(make_rational(0)) == "0");
  CHECK(rational_to_string(make_rational(-10, 4)) == "-5/2");
  CHECK(rationals_to_string({make_rational(1, 2), make_rational(3)}) ==
        "1/2,3");
}

TEST_CASE("round trip parse and print") {
  for (long num = -12; num <= 12; ++num) {
    for (long den = 1; den <= 9; ++den) {
      const Rational r = make_rational(num, den);
      CHECK(rational_from_string(rational_to_string(r)) == r);
    }
  }
}

TEST_CASE("coprime integer scaling") {
  const auto scaled = scale_to_coprime_integers(
      {make_rational(1, 2), make_rational(1, 2), make_rational(0)});
  CHECK(scaled == std::vector<Rational>{1, 1, 0});

  const auto scaled2 = scale_to_coprime_integers(
      {make_rational(4), make_rational(6), make_rational(2)});
  CHECK(scaled2 == std::vector<Rational>{2, 3, 1});

  const auto zero = scale_to_coprime_integers({make_rational(0)});
  CHECK(zero == std::vector<Rational>{0});

  const auto thirds = scale_to_coprime_integers(
      {make_rational(1, 3), make_rational(2, 5)});
  CHECK(thirds == std::vector<Rational>{5, 6});
}
