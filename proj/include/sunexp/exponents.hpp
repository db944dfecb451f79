// β(k,n), s(n), ē(n), the 2-adic integers x_{i,n}, and the SU(n) exponent
// statements that follow from them.
#pragma once

#include "sunexp/detail/parallel.hpp"
#include "sunexp/partial_stirling.hpp"
#include "sunexp/twoadic.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sunexp {

/// Raised when ē(n) changes between modulus 2^M and 2^{M+1}.
class unstable_modulus : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// s(n) = n - 1 + ν(⌊n/2⌋!).
inline std::uint64_t s_lower(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("s_lower: requires n >= 1");
  return n - 1 + nu_factorial(n / 2);
}

/// β(k,n) = min_{j >= n} ν(T_j(k)) together with how it was certified.
struct BetaResult {
  Int k;
  std::uint64_t n = 0;
  Val2 value = Val2::at_least(0);
  std::optional<std::uint64_t> witness_j{};// smallest j attaining the minimum
  std::uint64_t cutoff_j = 0;              // largest j examined
  bool certified = false;                  // ν(⌊(cutoff_j+1)/2⌋!) >= value
};

/// Scan j = n, n+1, ... keeping the running minimum of ν(T_j(k)). Since
/// ν(T_j(k)) >= ν(⌊j/2⌋!), the scan stops at the first j with
/// ν(⌊(j+1)/2⌋!) >= minimum; no later j can go lower.
inline BetaResult beta(const Int& k, std::uint64_t n, const PrecisionPolicy& policy = {}) {
  if (n == 0) throw std::invalid_argument("beta: requires n >= 1");
  BetaResult result{.k = k, .n = n};
  std::optional<Val2> best;
  for (std::uint64_t j = n;; ++j) {
    const Val2 v = nu_t(j, k, policy);
    result.cutoff_j = j;
    if (!best) {
      best = v;
      result.witness_j = j;
    } else {
      const auto order = compare(v, *best);
      if (order == std::partial_ordering::unordered) {
        result.value = *best;
        return result;
      }
      if (order == std::partial_ordering::less) {
        best = v;
        result.witness_j = j;
      }
    }
    result.value = *best;
    if (!best->is_exact()) {
      result.witness_j.reset();
      return result;
    }
    if (nu_factorial((j + 1) / 2) >= best->value()) {
      result.certified = true;
      return result;
    }
  }
}

/// β(k,n) for k = 0, 1, ..., count-1.
inline std::vector<BetaResult> beta_sweep(std::uint64_t n, std::uint64_t count,
                                          const PrecisionPolicy& policy = {}, unsigned jobs = 1) {
  return detail::parallel_map<BetaResult>(
      count, jobs, [&](std::size_t k) { return beta(Int(k), n, policy); });
}

/// Default modulus exponent for the ē(n) search: 2^{e-1} + e with
/// e = ⌊log2 n⌋.
inline unsigned default_modulus_exp(std::uint64_t n) {
  if (n < 2) return 1;
  const unsigned e = static_cast<unsigned>(std::bit_width(n)) - 1;
  return (1U << (e - 1)) + e;
}

struct ExponentReport {
  std::uint64_t n = 0;
  std::uint64_t s_n = 0;
  BetaResult beta_at_n_minus_1{};
  Val2 ebar = Val2::at_least(0);
  std::vector<std::uint64_t> argmax{};// residues k mod 2^modulus_exp
  unsigned modulus_exp = 0;
};

namespace detail {

/// One ē(n) search at modulus 2^m; nullopt if the answer moves when lifted
/// to 2^{m+1}.
inline std::optional<ExponentReport> ebar_at(std::uint64_t n, unsigned m,
                                             const PrecisionPolicy& policy, unsigned jobs) {
  const std::uint64_t size = std::uint64_t{1} << m;
  const std::vector<BetaResult> betas = beta_sweep(n, 2 * size, policy, jobs);
  for (const auto& b : betas) {
    if (!b.certified) {
      throw precision_exhausted("ebar: beta(" + b.k.str() + "," + std::to_string(n) +
                                ") could not be certified");
    }
  }
  auto maximum = [&](std::uint64_t upto) {
    unsigned best = 0;
    for (std::uint64_t k = 0; k < upto; ++k) best = std::max(best, betas[k].value.value());
    return best;
  };
  const unsigned best = maximum(size);
  if (maximum(2 * size) != best) return std::nullopt;
  for (std::uint64_t k = 0; k < 2 * size; ++k) {
    const bool in_lift = betas[k % size].value.value() == best;
    if ((betas[k].value.value() == best) != in_lift) return std::nullopt;
  }
  ExponentReport report{.n = n, .s_n = s_lower(n), .ebar = Val2::exact(best), .modulus_exp = m};
  for (std::uint64_t k = 0; k < size; ++k) {
    if (betas[k].value.value() == best) report.argmax.push_back(k);
  }
  return report;
}

}  // namespace detail

/// ē(n) = max_k β(k,n), searched over k mod 2^M and confirmed at 2^{M+1}:
/// the maximum must agree and the maximizing set must be the lift of the
/// one found at 2^M. An explicit M that fails this throws; without one the
/// search starts at `default_modulus_exp(n)` and doubles the modulus until
/// it is stable (M <= 24).
inline ExponentReport ebar(std::uint64_t n, std::optional<unsigned> modulus_exp = std::nullopt,
                           const PrecisionPolicy& policy = {}, unsigned jobs = 1) {
  if (n == 0) throw std::invalid_argument("ebar: requires n >= 1");
  unsigned m = modulus_exp.value_or(default_modulus_exp(n));
  if (m == 0 || m > 24) throw std::invalid_argument("ebar: modulus exponent must be in 1..24");
  for (;;) {
    if (auto report = detail::ebar_at(n, m, policy, jobs)) {
      report->beta_at_n_minus_1 = beta(Int(n - 1), n, policy);
      return *report;
    }
    if (modulus_exp || m == 24) {
      throw unstable_modulus("ebar(" + std::to_string(n) + "): maximum changes between 2^" +
                             std::to_string(m) + " and 2^" + std::to_string(m + 1));
    }
    ++m;
  }
}

/// The low `precision` binary digits of x_{i,n}.
struct TruncatedTwoAdic {
  Int digits;
  unsigned precision = 0;
  std::uint64_t i = 0;
  std::uint64_t n = 0;
  unsigned e = 0;

  /// ν(x_{i,n}) as far as the known digits determine it.
  Val2 valuation() const { return nu(digits, precision); }
};

/// Recognize n = 2^e + 1 or 2^e + 2 with e >= 2; returns e.
inline std::optional<unsigned> thm0_exponent(std::uint64_t n) {
  for (std::uint64_t offset : {1, 2}) {
    if (n < offset + 4) continue;
    const std::uint64_t p = n - offset;
    if (std::has_single_bit(p)) return static_cast<unsigned>(std::countr_zero(p));
  }
  return std::nullopt;
}

/// Argument 2^{e-1} x + 2^{e-1} + i at which T_n is evaluated.
inline Int thm0_argument(unsigned e, std::uint64_t i, const Int& x) {
  const Int half = Int(1) << (e - 1);
  return half * x + half + i;
}

/// Digits of the 2-adic integer x_{i,n} with
/// ν(T_n(2^{e-1}x + 2^{e-1} + i)) = ν(x - x_{i,n}) + n - 2.
///
/// Given x_{i,n} mod 2^s, exactly one of the two lifts c mod 2^{s+1} makes
/// ν(T_n(...)) >= s + 1 + n - 2 at x = c; both c and c + 2^{s+1} are tested.
inline TruncatedTwoAdic x_approx(std::uint64_t i, std::uint64_t n, unsigned t,
                                 const PrecisionPolicy& policy = {}) {
  const auto e = thm0_exponent(n);
  if (!e) throw std::invalid_argument("x_approx: n must be 2^e+1 or 2^e+2 with e >= 2");
  if (i < 1 || i > (std::uint64_t{1} << (*e - 1))) {
    throw std::invalid_argument("x_approx: requires 1 <= i <= 2^(e-1)");
  }
  if (t == 0) throw std::invalid_argument("x_approx: requires t >= 1");

  Int digits = 0;
  for (unsigned s = 0; s < t; ++s) {
    const unsigned threshold = static_cast<unsigned>(s + 1 + n - 2);
    const Int step = Int(1) << s;
    const Int candidates[2] = {digits, digits + step};
    bool passes[2] = {true, true};
    for (int c = 0; c < 2; ++c) {
      for (const Int& x : {candidates[c], candidates[c] + 2 * step}) {
        const Val2 v = nu_t(n, thm0_argument(*e, i, x), policy);
        if (!v.is_exact() && v.value() < threshold) {
          throw precision_exhausted("x_approx: precision cap below required valuation");
        }
        passes[c] = passes[c] && satisfies_at_least(v, threshold);
      }
    }
    if (passes[0] == passes[1]) {
      std::ostringstream msg;
      msg << "x_approx(i=" << i << ", n=" << n << "): digit " << s << " is "
          << (passes[0] ? "ambiguous" : "unsatisfiable");
      throw theorem_contradiction(msg.str());
    }
    if (passes[1]) digits = candidates[1];
  }
  return {.digits = digits, .precision = t, .i = i, .n = n, .e = *e};
}

/// Lower bound 2^e + 2^{e-1} - 1 + ε for exp_2(SU(2^e + ε)), ε ∈ {0, 1}.
inline std::uint64_t su_exponent_bound(std::uint64_t n) {
  if (n < 5) throw std::invalid_argument("su_exponent_bound: requires n >= 5");
  const std::uint64_t eps = std::has_single_bit(n) ? 0 : 1;
  if (eps == 1 && !std::has_single_bit(n - 1)) {
    throw std::invalid_argument("su_exponent_bound: n must be 2^e or 2^e+1");
  }
  const std::uint64_t power = n - eps;
  return power + power / 2 - 1 + eps;
}

/// Order of the cyclic summand Z/2^{β(k,n)-ε} of v1^{-1}π_{2k}(SU(n)).
/// ε is known to vanish when n is odd or k ≡ n-1 mod 4; otherwise the order
/// is reported as the interval [2^{β-1}, 2^β].
struct SummandOrder {
  BetaResult beta;
  bool exact = false;
  unsigned low_log2 = 0;
  unsigned high_log2 = 0;
};

inline SummandOrder su_summand_order(const Int& k, std::uint64_t n,
                                     const PrecisionPolicy& policy = {}) {
  if (n < 5) throw std::invalid_argument("su_summand_order: requires n >= 5");
  SummandOrder order{.beta = beta(k, n, policy)};
  if (!order.beta.certified) {
    throw precision_exhausted("su_summand_order: beta could not be certified");
  }
  const unsigned b = order.beta.value.value();
  Int shifted = (k - Int(n - 1)) % 4;
  order.exact = (n % 2 == 1) || shifted == 0;
  order.high_log2 = b;
  order.low_log2 = order.exact || b == 0 ? b : b - 1;
  return order;
}

}  // namespace sunexp
