#include <doctest.h>

#include "gspec/errors.hpp"
#include "gspec/textio.hpp"

using namespace gspec;

TEST_CASE("matrix text round-trip") {
  const IntMatrix m{{1, -2, 3}, {0, 12345678, -1}};
  const std::string text = format_matrix(m);
  CHECK(text == "2 3\n1 -2 3\n0 12345678 -1\n");
  CHECK(parse_matrix(text) == m);
  CHECK(parse_matrix("# comment\n2 2\n  1 0 # trailing\n\n0 1\n") == IntMatrix::identity(2));
  CHECK(parse_matrix("1 1\n123456789012345678901234567890\n")(0, 0) == Integer("123456789012345678901234567890"));
}

TEST_CASE("matrix parse errors carry offsets") {
  CHECK_THROWS_AS(parse_matrix(""), ParseError);
  CHECK_THROWS_AS(parse_matrix("2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("2 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("0 2\n"), ParseError);
  try {
    parse_matrix("2 2\n1 2\n3 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 10);
  }
}

TEST_CASE("rational matrix text") {
  const auto q = parse_rational_matrix("2 2\n3/5 4/5\n-4/5 6/10\n");
  CHECK(q(1, 1) == Rational(3, 5));
  CHECK(q(1, 0) == Rational(-4, 5));
  CHECK(format_rational_matrix(q) == "2 2\n3/5 4/5\n-4/5 3/5\n");
  CHECK_THROWS_AS(parse_rational_matrix("1 1\n1/0\n"), ParseError);
  CHECK_THROWS_AS(parse_rational_matrix("1 1\n1/\n"), ParseError);
}

TEST_CASE("polynomial text") {
  const IntPoly f = parse_poly("-1 0 1\n");
  CHECK(f == IntPoly{-1, 0, 1});
  CHECK(format_poly(f) == "-1 0 1");
  CHECK(pretty_poly(f) == "x^2 - 1");
  CHECK(pretty_poly(IntPoly{0, -3, 0, 1}) == "x^3 - 3x");
  CHECK(pretty_poly(IntPoly{}) == "0");
  CHECK(parse_poly("0 0").is_zero());
  CHECK_THROWS_AS(parse_poly(""), ParseError);
  CHECK_THROWS_AS(parse_poly("1 a"), ParseError);
}

TEST_CASE("graph input in either format") {
  const auto gs = parse_graphs("A_\n@\n\nD?{\n");
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].order() == 2);
  CHECK(gs[1].order() == 1);
  CHECK(gs[2].edge_count() == 4);

  const auto from_matrix = parse_graphs("3 3\n0 1 0\n1 0 1\n0 1 0\n");
  REQUIRE(from_matrix.size() == 1);
  CHECK(from_matrix[0].edge_count() == 2);

  try {
    parse_graphs("A_\nD?\x01\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
  }
  CHECK_THROWS_AS(parse_graphs("3 3\n0 1 0\n1 0 1\n0 0 0\n"), std::invalid_argument);
}
