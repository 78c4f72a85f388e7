#include <gtest/gtest.h>

#include <random>

#include "twosig/scalar.hpp"

namespace twosig {
namespace {

static_assert(Semiring<Boolean> && !Ring<Boolean>);
static_assert(Domain<Integer> && Domain<Rational>);

TEST(Scalar, PowSmallCases) {
  EXPECT_EQ(pow(Integer(2), 3), Integer(8));
  EXPECT_EQ(pow(Integer(0), 0), Integer(1));
  EXPECT_EQ(pow(Integer(0), 3), Integer(0));
  EXPECT_EQ(pow(Boolean(true), 2), Boolean(true));
  EXPECT_EQ(pow(Boolean(false), 0), Boolean(true));
  EXPECT_EQ(pow(Rational(2, 3), 2), Rational(4, 9));
}

TEST(Scalar, PowIsAdditiveInExponent) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> xd(-6, 6);
  std::uniform_int_distribution<unsigned> ed(0, 8);
  for (int k = 0; k < 500; ++k) {
    Integer x = xd(rng);
    unsigned e = ed(rng), f = ed(rng);
    EXPECT_EQ(pow(x, e + f), pow(x, e) * pow(x, f));
  }
}

TEST(Scalar, BooleanTruthTables) {
  for (bool a : {false, true}) {
    for (bool b : {false, true}) {
      EXPECT_EQ((Boolean(a) + Boolean(b)).value, a || b);
      EXPECT_EQ((Boolean(a) * Boolean(b)).value, a && b);
    }
  }
}

template <class T>
void check_ring_axioms(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-20, 20), den(1, 9);
  auto draw = [&] {
    if constexpr (std::is_same_v<T, Rational>) return Rational(d(rng), den(rng));
    else return T(d(rng));
  };
  for (int k = 0; k < 2000; ++k) {
    T a = draw(), b = draw(), c = draw();
    ASSERT_EQ(T((a + b) + c), T(a + (b + c)));
    ASSERT_EQ(T(a * b), T(b * a));
    ASSERT_EQ(T(a * (b + c)), T(a * b + a * c));
    ASSERT_EQ(T(a * zero<T>()), zero<T>());
  }
}

TEST(Scalar, IntegerAndRationalAxioms) {
  std::mt19937_64 rng(2);
  check_ring_axioms<Integer>(rng);
  check_ring_axioms<Rational>(rng);
}

TEST(Scalar, IntegerText) {
  EXPECT_EQ(parse_scalar<Integer>("-42"), Integer(-42));
  EXPECT_EQ(parse_scalar<Integer>("+7"), Integer(7));
  EXPECT_EQ(parse_scalar<Integer>("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(parse_scalar<Integer>("1.5"), ParseError);
  EXPECT_THROW(parse_scalar<Integer>(""), ParseError);
}

TEST(Scalar, RationalTextIsCanonical) {
  EXPECT_EQ(format_scalar(parse_scalar<Rational>("6/4")), "3/2");
  EXPECT_EQ(format_scalar(parse_scalar<Rational>("-6/4")), "-3/2");
  EXPECT_EQ(format_scalar(parse_scalar<Rational>("5")), "5/1");
  EXPECT_EQ(format_scalar(parse_scalar<Rational>("0/7")), "0/1");
  EXPECT_THROW(parse_scalar<Rational>("6/-4"), ParseError);
  EXPECT_THROW(parse_scalar<Rational>("1/0"), ParseError);
}

TEST(Scalar, BooleanText) {
  EXPECT_EQ(parse_scalar<Boolean>("1"), Boolean(true));
  EXPECT_EQ(parse_scalar<Boolean>("0"), Boolean(false));
  EXPECT_EQ(format_scalar(Boolean(true)), "1");
  EXPECT_THROW(parse_scalar<Boolean>("2"), ParseError);
}

}  // namespace
}  // namespace twosig
