// Restricted binomial sums (partial Stirling numbers), Stirling numbers of
// the second kind modulo 2^N, and the identities linking them.
#pragma once

#include "sunexp/twoadic.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunexp {

/// Shape of the weight multiplying C(n, 2i+b) in a restricted sum.
enum class Weight : std::uint8_t {
  index,     ///< i^exponent
  argument,  ///< (2i+b)^exponent
  mixed,     ///< (2i+1)^power * i^exponent, with b = 1
};

/// One restricted sum  Σ_{0 <= 2i+b <= n} C(n, 2i+b) * weight(i).
struct SumSpec {
  std::uint64_t n = 0;
  unsigned b = 1;
  Weight weight = Weight::argument;
  Int exponent = 0;
  Int power = 0;  // mixed only
};

namespace detail {

template <class Word>
Residue2 evaluate_sum(const SumSpec& spec, unsigned precision) {
  const ModPow2<Word> ring(precision);
  const std::vector<Word> row = binomial_row(ring, spec.n);
  Word total = 0;
  for (std::uint64_t top = spec.b; top <= spec.n; top += 2) {
    const Word& coeff = row[top];
    if (ring.is_zero(coeff)) continue;
    const std::uint64_t i = (top - spec.b) / 2;
    Word weight{};
    switch (spec.weight) {
      case Weight::index:
        weight = power(ring, ring.from_u64(i), spec.exponent);
        break;
      case Weight::argument:
        weight = power(ring, ring.from_u64(top), spec.exponent);
        break;
      case Weight::mixed:
        weight = ring.mul(power(ring, ring.from_u64(2 * i + 1), spec.power),
                          power(ring, ring.from_u64(i), spec.exponent));
        break;
    }
    total = ring.add(total, ring.mul(coeff, weight));
  }
  return Residue2(ring.to_int(total), precision);
}

}  // namespace detail

/// Evaluate a restricted sum modulo 2^precision. Terms are reduced as they
/// are accumulated; the result is exact modulo 2^precision.
inline Residue2 evaluate(const SumSpec& spec, unsigned precision) {
  if (precision == 0) throw std::invalid_argument("evaluate: precision must be >= 1");
  if (spec.b > 1) throw std::invalid_argument("evaluate: parity offset must be 0 or 1");
  if (spec.weight == Weight::mixed && spec.b != 1) {
    throw std::invalid_argument("evaluate: mixed weight requires b = 1");
  }
  if (precision <= 64) return detail::evaluate_sum<std::uint64_t>(spec, precision);
  return detail::evaluate_sum<Int>(spec, precision);
}

/// T_j(k) = Σ_{i odd} C(j,i) i^k modulo 2^precision. Negative k is allowed
/// since every base is odd.
inline Residue2 t_sum(std::uint64_t j, const Int& k, unsigned precision) {
  return evaluate({.n = j, .b = 1, .weight = Weight::argument, .exponent = k}, precision);
}

/// ν(T_j(k)), raising precision until the residue is nonzero.
inline Val2 nu_t(std::uint64_t j, const Int& k, const PrecisionPolicy& policy = {}) {
  return valuation_with_policy([&](unsigned bits) { return t_sum(j, k, bits); }, policy);
}

/// Σ_i C(n, 2i+b) i^k with 0^0 = 1.
inline Residue2 half_sum(std::uint64_t n, unsigned b, const Int& k, unsigned precision) {
  if (k < 0) throw std::domain_error("half_sum: exponent must be nonnegative");
  return evaluate({.n = n, .b = b, .weight = Weight::index, .exponent = k}, precision);
}

/// Σ_i C(n, 2i) (2i)^k.
inline Residue2 even_sum(std::uint64_t n, const Int& k, unsigned precision) {
  if (k < 0) throw std::domain_error("even_sum: exponent must be nonnegative");
  return evaluate({.n = n, .b = 0, .weight = Weight::argument, .exponent = k}, precision);
}

/// Σ_i C(n, 2i+1) (2i+1)^p i^j for j > 0; p may be negative.
inline Residue2 mixed_sum(std::uint64_t n, const Int& p, const Int& j, unsigned precision) {
  if (n < 3) throw std::invalid_argument("mixed_sum: requires n >= 3");
  if (j <= 0) throw std::invalid_argument("mixed_sum: requires j > 0");
  return evaluate({.n = n, .b = 1, .weight = Weight::mixed, .exponent = j, .power = p}, precision);
}

/// S(k, n) modulo 2^precision from S(k,n) = n S(k-1,n) + S(k-1,n-1).
inline Residue2 stirling2_residue(std::uint64_t k, std::uint64_t n, unsigned precision) {
  if (n > k) return Residue2::zero(precision);
  if (precision <= 64) {
    const detail::ModPow2<std::uint64_t> ring(precision);
    // column[c] holds S(row, c) for the current row, c <= n.
    std::vector<std::uint64_t> column(n + 1, 0);
    column[0] = 1;
    for (std::uint64_t row = 1; row <= k; ++row) {
      const std::uint64_t upto = std::min(row, n);
      for (std::uint64_t c = upto; c >= 1; --c) {
        column[c] = ring.add(ring.mul(c, column[c]), column[c - 1]);
      }
      column[0] = 0;
    }
    return Residue2(ring.to_int(column[n]), precision);
  }
  const detail::ModPow2<Int> ring(precision);
  std::vector<Int> column(n + 1, 0);
  column[0] = 1;
  for (std::uint64_t row = 1; row <= k; ++row) {
    const std::uint64_t upto = std::min(row, n);
    for (std::uint64_t c = upto; c >= 1; --c) {
      column[c] = ring.add(ring.mul(Int(c), column[c]), column[c - 1]);
    }
    column[0] = 0;
  }
  return Residue2(column[n], precision);
}

/// Parity of S(target, lower) via S(k+i, k) == C(k+2i-1, k-1) mod 2.
inline bool stirling_parity(std::uint64_t target, std::uint64_t lower) {
  if (lower == 0) throw std::invalid_argument("stirling_parity: requires lower >= 1");
  if (target < lower) return false;
  const std::uint64_t i = target - lower;
  return binom_is_odd(lower + 2 * i - 1, lower - 1);
}

/// n! modulo 2^precision.
inline Residue2 factorial_residue(std::uint64_t n, unsigned precision) {
  Int value = 1;
  const Int modulus = Int(1) << precision;
  for (std::uint64_t f = 2; f <= n; ++f) value = (value * f) % modulus;
  return Residue2(value, precision);
}

/// Outcome of checking one instance of an identity between two residues.
struct IdentityCheck {
  Residue2 lhs;
  Residue2 rhs;
  bool holds() const { return lhs == rhs; }
};

/// Both sides of (-1)^j j! S(k,j) = Σ C(j,2i)(2i)^k - T_j(k) modulo 2^N.
/// The left side uses the Stirling recurrence, the right side the sums.
inline IdentityCheck sa_identity(std::uint64_t j, std::uint64_t k, unsigned precision) {
  if (precision <= nu_factorial(j)) {
    throw std::invalid_argument("sa_identity: precision must exceed nu(j!)");
  }
  Residue2 lhs = factorial_residue(j, precision) * stirling2_residue(k, j, precision);
  if (j % 2 == 1) lhs = -lhs;
  const Residue2 rhs = even_sum(j, k, precision) - t_sum(j, k, precision);
  return {lhs, rhs};
}

/// 2^j C(m,j) Σ_i C(n,2i+1)(2i+1)^p i^j, the j-th piece of
/// Σ C(n,2i+1)(2i+1)^p((2i+1)^m - 1) after expanding (1+2i)^m.
inline Residue2 proof_term(std::uint64_t n, const Int& p, const Int& m, std::uint64_t j,
                           unsigned precision) {
  if (j == 0) throw std::invalid_argument("proof_term: requires j >= 1");
  if (m < 0) throw std::invalid_argument("proof_term: requires m >= 0");
  if (Int(j) > m || j >= precision) return Residue2::zero(precision);
  return pow_residue(2, j, precision) * binom_residue(m, j, precision) *
         mixed_sum(n, p, j, precision);
}

/// Σ_i C(n,2i+1)(2i+1)^p((2i+1)^m - 1) evaluated directly.
inline Residue2 telescoped_sum(std::uint64_t n, const Int& p, const Int& m, unsigned precision) {
  Residue2 total = Residue2::zero(precision);
  for (std::uint64_t top = 1; top <= n; top += 2) {
    const Residue2 odd_power = pow_residue(top, p, precision);
    const Residue2 bracket = pow_residue(top, m, precision) - Residue2(1, precision);
    total = total + binom_residue(n, top, precision) * odd_power * bracket;
  }
  return total;
}

}  // namespace sunexp
