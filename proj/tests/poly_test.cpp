#include <gtest/gtest.h>

#include <random>

#include "ffirred/companion.hpp"
#include "ffirred/error.hpp"
#include "ffirred/poly.hpp"
#include "support/helpers.hpp"
#include "support/naive.hpp"

namespace {

using ffirred::divrem;
using ffirred::ErrorCode;
using ffirred::Field;
using ffirred::Mat;
using ffirred::Poly;
using testing_support::poly;

TEST(PolyTest, Multiplication) {
  const Field f2 = Field::prime(2);
  EXPECT_EQ(poly(f2, "t+1") * poly(f2, "t^2+t+1"), poly(f2, "t^3+1"));
  EXPECT_EQ(poly(f2, "t^3+1") * poly(f2, "t^3+t+1"), poly(f2, "t^6+t^4+t+1"));
  const Poly f = poly(f2, "t^5+t^2+1");
  EXPECT_EQ(f * Poly::one(f2), f);
  EXPECT_TRUE((f * Poly::zero(f2)).is_zero());
}

TEST(PolyTest, AdditionCancels) {
  const Field f3 = Field::prime(3);
  const Poly a = poly(f3, "2*t^3 + t + 1");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a + a + a).degree(), 0u);
  EXPECT_EQ(a + poly(f3, "t^3"), poly(f3, "t+1"));
}

TEST(PolyTest, DivRemExamples) {
  const Field f2 = Field::prime(2);
  auto [q1, r1] = divrem(poly(f2, "t^2+1"), poly(f2, "t+1"));
  EXPECT_EQ(q1, poly(f2, "t+1"));
  EXPECT_TRUE(r1.is_zero());

  const Poly f = poly(f2, "t^4+t+1");
  auto [q2, r2] = divrem(f, Poly::one(f2));
  EXPECT_EQ(q2, f);
  EXPECT_TRUE(r2.is_zero());

  const Field f3 = Field::prime(3);
  auto [q3, r3] = divrem(poly(f3, "t^2+1"), poly(f3, "t+1"));
  EXPECT_EQ(q3, poly(f3, "t+2"));
  EXPECT_EQ(r3, poly(f3, "2"));

  auto [q4, r4] = divrem(poly(f3, "t+1"), poly(f3, "t^2"));
  EXPECT_TRUE(q4.is_zero());
  EXPECT_EQ(r4, poly(f3, "t+1"));
}

TEST(PolyTest, DivRemByZeroAndMismatch) {
  const Field f2 = Field::prime(2);
  try {
    divrem(poly(f2, "t"), Poly::zero(f2));
    FAIL();
  } catch (const ffirred::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  try {
    (void)(poly(f2, "t") * poly(Field::prime(3), "t"));
    FAIL();
  } catch (const ffirred::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
}

TEST(PolyTest, DivRemRecombines) {
  std::mt19937_64 rng(7);
  for (const Field& field : {Field::prime(2), Field::prime(3), Field::prime(7), Field::extension(2, 2),
                             Field::extension(3, 2)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Poly a = testing_support::random_poly(field, 9, rng);
      Poly b = testing_support::random_poly(field, 5, rng);
      if (b.is_zero()) continue;
      const auto [q, r] = divrem(a, b);
      ASSERT_EQ(q * b + r, a);
      ASSERT_TRUE(r.is_zero() || r.degree() < b.degree());
    }
  }
}

TEST(PolyTest, MultiplicationMatchesReference) {
  std::mt19937_64 rng(11);
  const Field f5 = Field::prime(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Poly a = testing_support::random_poly(f5, 6, rng);
    const Poly b = testing_support::random_poly(f5, 6, rng);
    naive::Vec va(a.coeffs().begin(), a.coeffs().end()), vb(b.coeffs().begin(), b.coeffs().end());
    const naive::Vec expected = naive::poly_mul(va, vb, 5);
    const Poly got = a * b;
    ASSERT_EQ(naive::Vec(got.coeffs().begin(), got.coeffs().end()), expected);
  }
}

TEST(PolyTest, ParseExamples) {
  const Field f2 = Field::prime(2);
  EXPECT_EQ(poly(f2, "1,1,0,1"), poly(f2, "t^3 + t + 1"));
  EXPECT_EQ(poly(f2, "t^2+t+1"), poly(f2, "1,1,1"));
  EXPECT_EQ(poly(f2, "1,1"), Poly(f2, {1, 1}));
  EXPECT_EQ(ffirred::format_poly(poly(f2, "1,1,0,1")), "t^3 + t + 1");
  EXPECT_EQ(ffirred::format_poly_list(poly(f2, "t^3+t+1")), "1,1,0,1");

  // Symbolic coefficients are reduced mod p; like terms combine.
  const Field f3 = Field::prime(3);
  EXPECT_EQ(poly(f3, "t - 2"), poly(f3, "t + 1"));
  EXPECT_EQ(poly(f3, "4*t^2 + t + t"), poly(f3, "t^2 + 2*t"));
  EXPECT_EQ(poly(f3, " 2 t ^ 2 - 1 "), poly(f3, "2,0,2"));
  EXPECT_TRUE(poly(f3, "0").is_zero());

  const Field f4 = Field::extension(2, 2);
  const Poly g = poly(f4, "[1 0],[0 1],[1 0]");
  EXPECT_EQ(g, poly(f4, "t^2 + [0 1]*t + 1"));
  EXPECT_EQ(ffirred::format_poly_list(g), "[1 0],[0 1],[1 0]");
}

TEST(PolyTest, ParseErrors) {
  const Field f2 = Field::prime(2);
  const Field f4 = Field::extension(2, 2);
  auto code_of = [](const std::string& text, const Field& field) {
    try {
      ffirred::parse_poly(text, field);
    } catch (const ffirred::Error& e) {
      return e.code();
    }
    return ErrorCode::NotPrime;  // sentinel: no error
  };
  EXPECT_EQ(code_of("1,2,1", f2), ErrorCode::CoefficientOutOfRange);
  EXPECT_EQ(code_of("1,,1", f2), ErrorCode::ParseError);
  EXPECT_EQ(code_of("", f2), ErrorCode::ParseError);
  EXPECT_EQ(code_of("t^", f2), ErrorCode::ParseError);
  EXPECT_EQ(code_of("t t", f2), ErrorCode::ParseError);
  EXPECT_EQ(code_of("x^2", f2), ErrorCode::ParseError);
  EXPECT_EQ(code_of("1,1", f4), ErrorCode::ParseError);
  EXPECT_EQ(code_of("[1 2]", f4), ErrorCode::CoefficientOutOfRange);
  EXPECT_EQ(code_of("[1 0 1]", f4), ErrorCode::ParseError);
  EXPECT_EQ(code_of("[1", f4), ErrorCode::ParseError);

  try {
    ffirred::parse_poly("1,1,x", f2);
    FAIL();
  } catch (const ffirred::ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(PolyTest, FormatParseRoundTrip) {
  std::mt19937_64 rng(3);
  for (const Field& field : {Field::prime(2), Field::prime(3), Field::prime(11), Field::extension(2, 2),
                             Field::extension(3, 2), Field::extension(2, 3)}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Poly p = testing_support::random_poly(field, 8, rng);
      ASSERT_EQ(ffirred::parse_poly(ffirred::format_poly(p), field), p) << ffirred::format_poly(p);
      ASSERT_EQ(ffirred::parse_poly(ffirred::format_poly_list(p), field), p) << ffirred::format_poly_list(p);
    }
  }
}

TEST(PolyTest, CompanionMatrixExamples) {
  const Field f2 = Field::prime(2);
  EXPECT_EQ(ffirred::companion_matrix(poly(f2, "t^2+t+1")), Mat::from_rows(f2, {{0, 1}, {1, 1}}));
  const Field f3 = Field::prime(3);
  EXPECT_EQ(ffirred::companion_matrix(poly(f3, "t - 2")), Mat::from_rows(f3, {{2}}));
  EXPECT_EQ(ffirred::companion_matrix(poly(f2, "t^4+t^3+t^2+t+1")),
            Mat::from_rows(f2, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}}));
}

TEST(PolyTest, CompanionMatrixErrors) {
  const Field f3 = Field::prime(3);
  try {
    ffirred::companion_matrix(poly(f3, "2*t^2+1"));
    FAIL();
  } catch (const ffirred::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotMonic);
  }
  try {
    ffirred::companion_matrix(poly(f3, "1"));
    FAIL();
  } catch (const ffirred::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeZero);
  }
}

TEST(PolyTest, PowerMatchesRepeatedProduct) {
  const Field f3 = Field::prime(3);
  const Poly g = poly(f3, "t^2+t+2");
  Poly acc = Poly::one(f3);
  for (std::uint64_t k = 0; k < 7; ++k) {
    EXPECT_EQ(g.pow(k), acc);
    acc = acc * g;
  }
}

}  // namespace
