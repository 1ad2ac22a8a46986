#include "doctest.h"

#include "gha/errors.hpp"
#include "gha/exprparse.hpp"

using namespace gha;
using namespace gha::expr;

TEST_CASE("parse and evaluate basic expressions") {
  CHECK(eval(*parse("2*x"), Rational(3)) == 6);
  CHECK(eval(*parse("x^2 + 1"), Rational(2)) == 5);
  CHECK(eval(*parse("7"), Rational(123)) == 7);
  CHECK(eval(*parse("x"), Rational(5, 3)) == Rational(5, 3));
  CHECK(eval(*parse("x^2 + 1"), 2.0) == doctest::Approx(5.0));
}

TEST_CASE("syntax errors report offset and expected tokens") {
  try {
    parse("x +");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 3);
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("2*(x+1"), SyntaxError);
  CHECK_THROWS_AS(parse("x^y"), SyntaxError);
  CHECK_THROWS_AS(parse("x^-1"), SyntaxError);
  CHECK_THROWS_AS(parse("sin(x)"), SyntaxError);
  CHECK_THROWS_AS(parse("x x"), SyntaxError);
}

TEST_CASE("division by zero names the subtree") {
  CHECK_THROWS_AS(eval(*parse("(x-1)/(x-1)"), Rational(1)), DivisionByZero);
  CHECK_THROWS_AS(eval(*parse("(x-1)/(x-1)"), 1.0), DivisionByZero);
  CHECK_THROWS_AS(eval(*parse("3/0"), Rational(0)), DivisionByZero);
  CHECK(eval(*parse("(x-1)/(x-1)"), Rational(2)) == 1);
}

TEST_CASE("exact evaluation corpus") {
  struct Case {
    const char* text;
    Rational x;
    Rational expected;
  };
  const Case corpus[] = {
      {"2*x", 3, 6},
      {"x^2 + 1", 2, 5},
      {"3*x + 1/2", Rational(1, 3), Rational(3, 2)},
      {"x/3", 1, Rational(1, 3)},
      {"-x", Rational(2, 7), Rational(-2, 7)},
      {"-(x - 1)", 4, -3},
      {"(x + 1)^3", Rational(1, 2), Rational(27, 8)},
      {"x^0", 0, 1},
      {"1/(x + 1)", Rational(1, 2), Rational(2, 3)},
      {"2/3*x - 5/7", 3, Rational(9, 7)},
      {"x*x*x - x", -2, -6},
      {"(2*x - 1)/(x + 2)", Rational(1, 4), Rational(-2, 9)},
      {"0.25*x", 8, 2},
      {"2.50*x - 0.05", 2, Rational(99, 20)},
      {"x^2/(x^2 + 1)", 3, Rational(9, 10)},
      {"-(-x)", Rational(-5, 2), Rational(-5, 2)},
      {"((x))", 11, 11},
      {"x - x", Rational(13, 17), 0},
      {"4 - 2 - 1", 0, 1},
      {"12 / 4 / 3", 0, 1},
  };
  for (const auto& c : corpus) {
    CAPTURE(c.text);
    CHECK(eval(*parse(c.text), c.x) == c.expected);
  }
}

TEST_CASE("round trip through the printer") {
  const char* inputs[] = {"2*x",         "x^2 + 1",     "3*x + 1/2",   "-(x - 1)",      "(x + 1)^3 - x/4",
                          "1/(x + 1)",   "x - -x",      "-x^2",        "2/3*x - 5/7",   "((x))",
                          "x*x*x - x",   "4 - 2 - 1",   "12 / 4 / 3",  "0.125*x^3",     "-(-(x))",
                          "(x - 1)/(x - 1)", "x^10 - 3/2", "7"};
  for (const char* text : inputs) {
    CAPTURE(text);
    const auto ast = parse(text);
    const auto printed = to_string(*ast);
    const auto again = parse(printed);
    CHECK(structurally_equal(*ast, *again));
    CHECK(to_string(*again) == printed);
  }
}

TEST_CASE("as_affine recognizes affine forms") {
  auto affine = as_affine(*parse("2*x"));
  REQUIRE(affine);
  CHECK(affine->slope == 2);
  CHECK(affine->intercept == 0);
  affine = as_affine(*parse("3*x + 1/2"));
  REQUIRE(affine);
  CHECK(affine->slope == 3);
  CHECK(affine->intercept == Rational(1, 2));
  CHECK_FALSE(as_affine(*parse("x^2")));
  CHECK_FALSE(as_affine(*parse("1/x")));
  affine = as_affine(*parse("(x + 1)/2 - 3*(x - 1)"));
  REQUIRE(affine);
  CHECK(affine->slope == Rational(-5, 2));
  CHECK(affine->intercept == Rational(7, 2));
}

TEST_CASE("as_affine agrees with eval at probe points") {
  const char* inputs[] = {"2*x",        "x/4 - 1",     "-(x - 1)", "(x + 1)^1",  "x^0 * 3",
                          "(2*x + 6)/2", "x - x + 5",  "7",        "1/2*(x - 3)", "-x + x/3"};
  for (const char* text : inputs) {
    CAPTURE(text);
    const auto ast = parse(text);
    const auto affine = as_affine(*ast);
    REQUIRE(affine);
    for (int probe : {0, 1}) CHECK(eval(*ast, Rational(probe)) == affine->slope * probe + affine->intercept);
  }
}
