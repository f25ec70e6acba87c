#include <gtest/gtest.h>

#include "gtm/exactnum.hpp"

using gtm::Rational;
using gtm::Scalar;

TEST(Rational, ParseAndReduce) {
  EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
  EXPECT_EQ(Rational::parse("-10/5").str(), "-2");
  EXPECT_THROW(Rational::parse("1/0"), gtm::Error);
  EXPECT_THROW(Rational::parse("abc"), gtm::ParseError);
}

TEST(Scalar, SurdProductAndInverse) {
  Scalar p = Scalar::parse("12+3*sqrt(19)");
  Scalar q = Scalar::parse("12-3*sqrt(19)");
  EXPECT_EQ(p * q, Scalar(-27));
  Scalar inv = p.inverse();
  EXPECT_EQ(inv, Scalar::parse("-4/9+1/9*sqrt(19)"));
  EXPECT_EQ(inv * p, Scalar(1));
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_THROW(Scalar::sqrt_of(2) + Scalar::sqrt_of(3), gtm::IncompatibleField);
  EXPECT_THROW(Scalar(0).inverse(), gtm::DivisionByZero);
}

TEST(Scalar, StringRoundTrip) {
  for (const char* s : {"3/4", "12+3*sqrt(19)", "-2/5*sqrt(19)", "0", "-7"}) {
    Scalar x = Scalar::parse(s);
    EXPECT_EQ(Scalar::parse(x.str()), x) << s;
  }
  EXPECT_EQ(Scalar::parse("-2/5*sqrt(19)").str(), "-2/5*sqrt(19)");
}

TEST(Scalar, Ordering) {
  EXPECT_LT(Scalar::parse("4-sqrt(19)"), Scalar(0));
  EXPECT_GT(Scalar::parse("5-sqrt(19)"), Scalar(0));
  EXPECT_EQ(Scalar(4).try_sqrt().value(), Scalar(2));
  EXPECT_EQ(Scalar(76).try_sqrt().value(), Scalar::parse("2*sqrt(19)"));
  EXPECT_FALSE(Scalar(-1).try_sqrt().has_value());
}
