#include "surfcalc/divisor_class.hpp"
#include "surfcalc/errors.hpp"
#include "surfcalc/linalg.hpp"
#include "surfcalc/rational.hpp"

#include <gtest/gtest.h>

using namespace surfcalc;

TEST(Rational, FloorCeilOfNegatives) {
  EXPECT_EQ(floor_of(Rational(-3, 2)), -2);
  EXPECT_EQ(ceil_of(Rational(-3, 2)), -1);
  EXPECT_EQ(floor_of(Rational(7, 3)), 2);
  EXPECT_EQ(ceil_of(Rational(7, 3)), 3);
  EXPECT_EQ(floor_of(Rational(4)), 4);
  EXPECT_EQ(ceil_of(Rational(-4)), -4);
}

TEST(Rational, TextRoundTrip) {
  for (const char* text : {"0", "-7", "3/4", "-5/12", "1000000000000000000000/7"}) {
    EXPECT_EQ(to_string(parse_rational(text)), text);
  }
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
}

TEST(DivisorClass, ArithmeticAndParsing) {
  const DivisorClass a = parse_class("1, -3/2");
  const DivisorClass b{Rational(2), Rational(1, 2)};
  EXPECT_EQ((a + b).str(), "3,-1");
  EXPECT_EQ((Rational(2) * a).str(), "2,-3");
  EXPECT_FALSE(a.is_integral());
  EXPECT_TRUE((a + b).is_integral());
  EXPECT_THROW(a + DivisorClass(3), InputError);
  EXPECT_THROW(parse_class("1,,2"), InputError);
  EXPECT_TRUE(DivisorClass(2) < DivisorClass::basis(2, 1));
}

TEST(Linalg, SignatureOfHyperbolicPlane) {
  const linalg::Matrix u{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}};
  const auto d = linalg::diagonalize_symmetric(u);
  EXPECT_EQ(d.positives(), 1);
  EXPECT_EQ(d.negatives(), 1);
  EXPECT_EQ(d.zeros(), 0);
}

TEST(Linalg, NegativeDefiniteA2) {
  const linalg::Matrix a2{{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}};
  EXPECT_TRUE(linalg::is_negative_definite(a2));
  const linalg::Matrix degenerate{{Rational(-1), Rational(1)}, {Rational(1), Rational(-1)}};
  EXPECT_FALSE(linalg::is_negative_definite(degenerate));
}

TEST(Linalg, SolveExact) {
  const linalg::Matrix a2{{Rational(-2), Rational(1)}, {Rational(1), Rational(-2)}};
  const auto x = linalg::solve(a2, {Rational(-1), Rational(0)});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], Rational(2, 3));
  EXPECT_EQ((*x)[1], Rational(1, 3));
  const linalg::Matrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  EXPECT_FALSE(linalg::solve(singular, {Rational(1), Rational(1)}));
}
