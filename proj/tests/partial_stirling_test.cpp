#include "sunexp/partial_stirling.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

namespace {

using sunexp::Int;
using sunexp::Residue2;
using sunexp::Val2;

TEST(TSum, MatchesNaiveBigIntegerEvaluation) {
  for (std::uint64_t j = 0; j <= 12; ++j) {
    for (std::uint64_t k = 0; k <= 20; ++k) {
      const oracle::Big naive = oracle::mod_pow2(oracle::t_exact(j, k), 128);
      ASSERT_EQ(sunexp::t_sum(j, k, 128).value().str(), naive.str()) << j << "," << k;
      ASSERT_EQ(sunexp::t_sum(j, k, 40).value().str(), oracle::mod_pow2(naive, 40).str());
    }
  }
  EXPECT_EQ(sunexp::t_sum(12, 20, 128).value(), Int("10810957346863905094656"));
}

TEST(TSum, FastPathAgreesWithWidePath) {
  for (std::uint64_t j = 1; j <= 60; j += 3) {
    for (int k : {0, 1, 7, 33, 200, -1, -9}) {
      const Residue2 wide = sunexp::t_sum(j, k, 200);
      EXPECT_EQ(sunexp::t_sum(j, k, 64), wide.truncated(64));
      EXPECT_EQ(sunexp::t_sum(j, k, 63), wide.truncated(63));
    }
  }
}

TEST(TSum, NegativeExponentIsPeriodic) {
  // Odd bases: i^k depends only on k mod 2^{N-2}.
  const unsigned bits = 30;
  const Int period = Int(1) << (bits - 2);
  for (std::uint64_t j = 3; j <= 20; ++j) {
    EXPECT_EQ(sunexp::t_sum(j, -5, bits), sunexp::t_sum(j, period - 5, bits));
  }
}

TEST(NuT, FrozenValues) {
  EXPECT_EQ(sunexp::nu_t(16, 143), Val2::exact(24));
  EXPECT_EQ(sunexp::nu_t(17, 272), Val2::exact(20));
  EXPECT_EQ(sunexp::nu_t(8, 7), Val2::exact(11));
  EXPECT_EQ(sunexp::nu_t(17, 15), Val2::exact(23));
}

TEST(NuT, TinyCapGivesBound) {
  const Val2 v = sunexp::nu_t(16, 143, {.initial = 8, .cap = 20});
  EXPECT_EQ(v, Val2::at_least(20));
}

TEST(HalfSum, MatchesOracle) {
  EXPECT_EQ(sunexp::half_sum(5, 1, 3, 16).value(), 18);
  EXPECT_EQ(sunexp::even_sum(4, 2, 16).value(), 40);
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (unsigned b : {0u, 1u}) {
      for (std::uint64_t k = 0; k <= 25; ++k) {
        ASSERT_EQ(sunexp::half_sum(n, b, k, 90).value().str(),
                  oracle::mod_pow2(oracle::half_sum_exact(n, b, k), 90).str())
            << n << "," << b << "," << k;
      }
    }
  }
  const auto v = sunexp::valuation_with_policy(
      [](unsigned bits) { return sunexp::half_sum(12, 1, 7, bits); }, {});
  EXPECT_EQ(v, Val2::exact(8));
  EXPECT_THROW(sunexp::half_sum(5, 1, -1, 16), std::domain_error);
  EXPECT_THROW(sunexp::half_sum(5, 2, 1, 16), std::invalid_argument);
}

TEST(HalfSum, EvenSumScalesByPowerOfTwo) {
  for (std::uint64_t n = 0; n <= 24; ++n) {
    for (std::uint64_t k = 0; k <= 30; ++k) {
      const Residue2 scaled = sunexp::pow_residue(2, k, 80) * sunexp::half_sum(n, 0, k, 80);
      ASSERT_EQ(sunexp::even_sum(n, k, 80), scaled) << n << "," << k;
    }
  }
}

TEST(HalfSum, FactorialDivisibilityBound) {
  // ν(Σ C(n,2i+1) i^k) >= ν(⌊n/2⌋!), and the consequence for T_j(k).
  for (std::uint64_t n = 0; n <= 40; ++n) {
    const unsigned bound = static_cast<unsigned>(oracle::nu_factorial(n / 2));
    for (std::uint64_t k = 0; k <= 128; ++k) {
      const Val2 v = sunexp::val2_of_residue(sunexp::half_sum(n, 1, k, 64));
      ASSERT_TRUE(sunexp::satisfies_at_least(v, bound)) << n << "," << k;
      if (n >= 1) {
        const Val2 t = sunexp::val2_of_residue(sunexp::t_sum(n, k, 64));
        ASSERT_TRUE(sunexp::satisfies_at_least(t, bound)) << "T " << n << "," << k;
      }
    }
  }
}

TEST(MixedSum, MatchesOracleAndValidates) {
  EXPECT_EQ(sunexp::mixed_sum(6, 1, 1, 20).value(), 120);
  for (std::uint64_t n = 3; n <= 16; ++n) {
    for (std::uint64_t p = 0; p <= 9; ++p) {
      for (std::uint64_t j = 1; j <= 6; ++j) {
        ASSERT_EQ(sunexp::mixed_sum(n, p, j, 70).value().str(),
                  oracle::mod_pow2(oracle::mixed_sum_exact(n, p, j), 70).str());
      }
    }
  }
  // Negative powers act through inverses of the odd factors.
  const auto pascal = oracle::pascal(11);
  Residue2 expected = Residue2::zero(50);
  for (std::uint64_t top = 1; top <= 11; top += 2) {
    const Residue2 odd_cube(oracle::ipow(top, 3).convert_to<Int>(), 50);
    const Residue2 weight = sunexp::inverse(odd_cube) * Residue2(Int((top - 1) / 2 * ((top - 1) / 2)), 50);
    expected = expected + Residue2(pascal[11][top].convert_to<Int>(), 50) * weight;
  }
  EXPECT_EQ(sunexp::mixed_sum(11, -3, 2, 50), expected);
  EXPECT_THROW(sunexp::mixed_sum(2, 1, 1, 20), std::invalid_argument);
  EXPECT_THROW(sunexp::mixed_sum(6, 1, 0, 20), std::invalid_argument);
}

TEST(Stirling, RecurrenceMatchesPartitionCount) {
  EXPECT_EQ(sunexp::stirling2_residue(4, 2, 16).value(), 7);
  for (unsigned k = 0; k <= 9; ++k) {
    for (unsigned n = 0; n <= 9; ++n) {
      ASSERT_EQ(sunexp::stirling2_residue(k, n, 64).value(), oracle::stirling_by_partitions(k, n))
          << k << "," << n;
      ASSERT_EQ(sunexp::stirling2_residue(k, n, 100).value(),
                oracle::stirling_by_partitions(k, n));
    }
  }
}

TEST(Stirling, ParityIdentityAgreesWithRecurrence) {
  for (std::uint64_t k = 1; k <= 64; ++k) {
    for (std::uint64_t target = 0; target <= 128; ++target) {
      ASSERT_EQ(sunexp::stirling_parity(target, k),
                sunexp::stirling2_residue(target, k, 1).value() == 1)
          << target << "," << k;
    }
  }
  EXPECT_THROW(sunexp::stirling_parity(3, 0), std::invalid_argument);
}

TEST(Identity, SignedStirlingEqualsDifferenceOfSums) {
  for (std::uint64_t j = 0; j <= 24; ++j) {
    for (std::uint64_t k = 0; k <= 64; ++k) {
      const auto check = sunexp::sa_identity(j, k, 64);
      ASSERT_TRUE(check.holds()) << j << "," << k;
    }
  }
  EXPECT_THROW(sunexp::sa_identity(8, 3, 7), std::invalid_argument);
}

TEST(Decomposition, TermsSumToTelescopedValue) {
  const unsigned bits = 40;
  const Residue2 direct = sunexp::telescoped_sum(9, 8, 128, bits);
  EXPECT_EQ(direct.value(), Int("780758167552") % (Int(1) << bits));
  EXPECT_EQ(sunexp::val2_of_residue(direct), Val2::exact(12));
  Residue2 total = Residue2::zero(bits);
  for (std::uint64_t j = 1; j <= 128; ++j) total = total + sunexp::proof_term(9, 8, 128, j, bits);
  EXPECT_EQ(total, direct);
  EXPECT_TRUE(sunexp::proof_term(9, 8, 3, 4, bits).is_zero());
  EXPECT_THROW(sunexp::proof_term(9, 8, 3, 0, bits), std::invalid_argument);
}

TEST(Factorial, Residue) {
  EXPECT_EQ(sunexp::factorial_residue(10, 32).value(), 3628800);
  EXPECT_EQ(sunexp::val2_of_residue(sunexp::factorial_residue(7, 16)), Val2::exact(4));
}

}  // namespace
