#include "sunexp/twoadic.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <compare>
#include <random>

namespace {

using sunexp::Int;
using sunexp::Residue2;
using sunexp::Val2;

TEST(Val2, FactoriesAndText) {
  EXPECT_TRUE(Val2::exact(3).is_exact());
  EXPECT_FALSE(Val2::at_least(9).is_exact());
  EXPECT_EQ(sunexp::to_string(Val2::exact(3)), "3");
  EXPECT_EQ(sunexp::to_string(Val2::at_least(24)), ">=24");
  EXPECT_NE(Val2::exact(5), Val2::at_least(5));
}

TEST(Val2, CompareIsPartial) {
  using std::partial_ordering;
  EXPECT_EQ(sunexp::compare(Val2::exact(2), Val2::exact(5)), partial_ordering::less);
  EXPECT_EQ(sunexp::compare(Val2::exact(5), Val2::exact(5)), partial_ordering::equivalent);
  EXPECT_EQ(sunexp::compare(Val2::exact(3), Val2::at_least(4)), partial_ordering::less);
  EXPECT_EQ(sunexp::compare(Val2::at_least(4), Val2::exact(3)), partial_ordering::greater);
  // Indeterminate: the bound does not decide the order.
  EXPECT_EQ(sunexp::compare(Val2::exact(6), Val2::at_least(4)), partial_ordering::unordered);
  EXPECT_EQ(sunexp::compare(Val2::at_least(4), Val2::exact(4)), partial_ordering::unordered);
  EXPECT_EQ(sunexp::compare(Val2::at_least(4), Val2::at_least(9)), partial_ordering::unordered);
}

TEST(Val2, Certification) {
  EXPECT_TRUE(sunexp::satisfies_at_least(Val2::at_least(24), 24));
  EXPECT_FALSE(sunexp::satisfies_at_least(Val2::at_least(23), 24));
  EXPECT_TRUE(sunexp::certifies_exactly(Val2::exact(7), 7));
  EXPECT_FALSE(sunexp::certifies_exactly(Val2::at_least(7), 7));
}

TEST(Residue2, NormalizesAndArithmetic) {
  const Residue2 a(-1, 8);
  EXPECT_EQ(a.value(), 255);
  const Residue2 b(3, 5);
  EXPECT_EQ((a + b).precision(), 5u);
  EXPECT_EQ((a + b).value(), 2);
  EXPECT_EQ((a * b).value(), 29);
  EXPECT_EQ((-b).value(), 29);
  EXPECT_THROW(Residue2(1, 0), std::invalid_argument);
  EXPECT_THROW(b.truncated(6), std::invalid_argument);
  EXPECT_EQ(Residue2(300, 16).truncated(8).value(), 44);
}

TEST(Valuation, ZeroIsAtLeast) {
  EXPECT_EQ(sunexp::nu(0, 40), Val2::at_least(40));
  EXPECT_EQ(sunexp::nu(-48), Val2::exact(4));
  EXPECT_EQ(sunexp::val2_of_residue(Residue2(64, 6)), Val2::at_least(6));
  EXPECT_EQ(sunexp::val2_of_residue(Residue2(96, 8)), Val2::exact(5));
}

TEST(Valuation, FactorialMatchesBruteForce) {
  EXPECT_EQ(sunexp::nu_factorial(7), 4u);
  std::uint64_t running = 0;
  for (std::uint64_t n = 1; n <= (1u << 16); ++n) {
    std::uint64_t m = n;
    while (m % 2 == 0) {
      m /= 2;
      ++running;
    }
    ASSERT_EQ(sunexp::nu_factorial(n), running) << "n=" << n;
  }
  EXPECT_EQ(sunexp::nu_factorial(40), oracle::nu_factorial(40));
}

TEST(Valuation, AlphaOverloadsAgree) {
  std::mt19937_64 rng(20260419);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t n = rng();
    EXPECT_EQ(sunexp::alpha(n), sunexp::alpha(Int(n)));
  }
  EXPECT_EQ(sunexp::alpha(Int(1) << 200), 1u);
}

TEST(Binomial, ParityAndResiduesAgreeWithPascal) {
  const auto pascal = oracle::pascal(512);
  for (std::uint64_t m = 0; m <= 512; ++m) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      const bool odd = pascal[m][n] % 2 == 1;
      ASSERT_EQ(sunexp::binom_is_odd(m, n), odd) << m << " choose " << n;
      ASSERT_EQ(sunexp::binom_residue(m, n, 1).value(), odd ? 1 : 0);
    }
  }
  for (std::uint64_t m = 0; m <= 96; m += 7) {
    for (std::uint64_t n = 0; n <= m; ++n) {
      ASSERT_EQ(sunexp::binom_residue(m, n, 100).value(), oracle::mod_pow2(pascal[m][n], 100));
    }
  }
  EXPECT_EQ(sunexp::binom_residue(19, 9, 6).value(), 26);
  EXPECT_THROW(sunexp::binom_residue(3, 5, 8), std::invalid_argument);
}

TEST(Power, OddBaseAndNegativeExponents) {
  EXPECT_EQ(sunexp::pow_residue(5, 7, 20).value(), 78125);
  for (unsigned bits : {3u, 17u, 64u, 65u, 130u}) {
    for (int base : {3, 5, 7, 11, -3}) {
      const Residue2 forward = sunexp::pow_residue(base, 13, bits);
      const Residue2 backward = sunexp::pow_residue(base, -13, bits);
      EXPECT_EQ((forward * backward).value(), 1) << base << " bits=" << bits;
      EXPECT_EQ(forward.value(), oracle::mod_pow2(oracle::ipow(base, 13), bits));
    }
  }
  // Huge exponents reduce by the unit-group period.
  const Int huge = (Int(1) << 300) + 5;
  EXPECT_EQ(sunexp::pow_residue(3, huge, 40), sunexp::pow_residue(3, 5, 40));
}

TEST(Power, EvenBase) {
  EXPECT_EQ(sunexp::pow_residue(0, 0, 8).value(), 1);
  EXPECT_EQ(sunexp::pow_residue(2, 7, 8).value(), 128);
  EXPECT_EQ(sunexp::pow_residue(2, 8, 8).value(), 0);
  EXPECT_EQ(sunexp::pow_residue(6, 3, 100).value(), 216);
  EXPECT_THROW(sunexp::pow_residue(2, -1, 8), std::domain_error);
}

TEST(Inverse, Units) {
  for (unsigned bits : {1u, 2u, 9u, 64u, 200u}) {
    for (int x : {1, 3, 5, 101, 12345}) {
      const Residue2 r(x, bits);
      EXPECT_EQ((r * sunexp::inverse(r)).value(), 1);
    }
  }
  EXPECT_THROW(sunexp::inverse(Residue2(4, 8)), std::domain_error);
}

TEST(Policy, PrecisionGrowsUntilNonzero) {
  // Residue of 2^150 is zero below 151 bits.
  std::vector<unsigned> asked;
  const auto at = [&](unsigned bits) {
    asked.push_back(bits);
    return Residue2(Int(1) << 150, bits);
  };
  EXPECT_EQ(sunexp::valuation_with_policy(at, {64, 4096}), Val2::exact(150));
  EXPECT_EQ(asked, (std::vector<unsigned>{64, 128, 256}));
  EXPECT_EQ(sunexp::valuation_with_policy(at, {16, 100}), Val2::at_least(100));
}

TEST(Policy, MonotoneInPrecision) {
  // A nonzero value keeps the same valuation once certified; at_least bounds
  // only grow with precision.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Int x = Int(rng()) << (rng() % 90);
    Val2 previous = Val2::at_least(0);
    for (unsigned bits = 1; bits <= 160; bits += 13) {
      const Val2 v = sunexp::val2_of_residue(Residue2(x, bits));
      ASSERT_TRUE(v.value() >= previous.value() || previous.is_exact());
      if (previous.is_exact()) ASSERT_EQ(v, previous);
      previous = v;
    }
  }
}

}  // namespace
