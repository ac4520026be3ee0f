#include <gtest/gtest.h>

#include <numeric>

#include "ffirred/error.hpp"
#include "ffirred/numth.hpp"

namespace {

using namespace ffirred::numth;

TEST(NumthTest, Factorize) {
  EXPECT_EQ(factorize(12), (Factorization{{2, 2}, {3, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(21), (Factorization{{3, 1}, {7, 1}}));
  EXPECT_EQ(factorize(65535), (Factorization{{3, 1}, {5, 1}, {17, 1}, {257, 1}}));
  EXPECT_EQ(factorize(1000000007ull * 3), (Factorization{{3, 1}, {1000000007ull, 1}}));
}

TEST(NumthTest, Divisors) {
  EXPECT_EQ(divisors(21), (std::vector<std::uint64_t>{1, 3, 7, 21}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(15), (std::vector<std::uint64_t>{1, 3, 5, 15}));
}

TEST(NumthTest, EulerPhiAndMoebius) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(15), 8u);
  EXPECT_EQ(euler_phi(8), 4u);
  EXPECT_EQ(moebius(1), 1);
  EXPECT_EQ(moebius(4), 0);
  EXPECT_EQ(moebius(6), 1);
  EXPECT_EQ(moebius(30), -1);
}

TEST(NumthTest, MultOrderMod) {
  EXPECT_EQ(mult_order_mod(2, 5), 4u);
  EXPECT_EQ(mult_order_mod(2, 21), 6u);
  EXPECT_EQ(mult_order_mod(12345, 1), 1u);
  EXPECT_EQ(mult_order_mod(0, 1), 1u);
  try {
    mult_order_mod(2, 6);
    FAIL();
  } catch (const ffirred::Error& e) {
    EXPECT_EQ(e.code(), ffirred::ErrorCode::NotCoprime);
  }
}

TEST(NumthTest, PhiSumsToM) {
  for (std::uint64_t m = 1; m <= 10000; ++m) {
    std::uint64_t sum = 0;
    for (auto d : divisors(m)) sum += euler_phi(d);
    ASSERT_EQ(sum, m) << m;
  }
}

TEST(NumthTest, PhiMatchesGcdCount) {
  for (std::uint64_t m = 1; m <= 300; ++m) {
    std::uint64_t count = 0;
    for (std::uint64_t l = 1; l <= m; ++l) count += std::gcd(l, m) == 1;
    ASSERT_EQ(euler_phi(m), count) << m;
  }
}

TEST(NumthTest, OrderDividesPhiAndIsMinimal) {
  for (std::uint64_t m = 1; m <= 500; ++m) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u, 25u}) {
      if (std::gcd(q, m) != 1) continue;
      const auto e = mult_order_mod(q, m);
      ASSERT_EQ(euler_phi(m) % e, 0u);
      ASSERT_EQ(pow_mod(q, e, m), 1 % m);
      for (std::uint64_t k = 1; k < e; ++k) ASSERT_NE(pow_mod(q, k, m), 1u);
    }
  }
}

TEST(NumthTest, DivisorCountMatchesFactorization) {
  for (std::uint64_t m = 1; m <= 5000; ++m) {
    std::size_t expected = 1;
    for (const auto& pp : factorize(m)) expected *= pp.exponent + 1;
    ASSERT_EQ(divisors(m).size(), expected);
    std::uint64_t product = 1;
    for (const auto& pp : factorize(m)) {
      ASSERT_TRUE(is_prime(pp.prime));
      for (unsigned i = 0; i < pp.exponent; ++i) product *= pp.prime;
    }
    ASSERT_EQ(product, m);
  }
}

TEST(NumthTest, CheckedArithmetic) {
  EXPECT_EQ(checked_pow(2, 62), std::uint64_t{1} << 62);
  EXPECT_EQ(checked_pow(2, 63), std::uint64_t{1} << 63);
  EXPECT_FALSE(checked_pow(2, 64));
  EXPECT_EQ(group_order(2, 4), 15u);
  EXPECT_THROW(group_order(2, 64), ffirred::Error);
  EXPECT_EQ(checked_lcm(4, 6), 12u);
  EXPECT_FALSE(checked_lcm(std::uint64_t{1} << 62, 3));
}

}  // namespace
