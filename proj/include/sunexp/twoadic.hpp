// Exact arithmetic in Z/2^N and 2-adic valuation bookkeeping.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sunexp {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                         boost::multiprecision::et_off>;

/// Raised when a computation needs more bits than the precision policy allows.
class precision_exhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed quantity contradicts a structural claim the
/// algorithm relies on (e.g. two admissible 2-adic digits).
class theorem_contradiction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Working precision for valuation searches: start at `initial` bits and
/// double until the residue is nonzero or `cap` is reached.
struct PrecisionPolicy {
  unsigned initial = 64;
  unsigned cap = 4096;
};

/// A 2-adic valuation that is either known exactly or only bounded below.
///
/// `at_least(N)` arises from a residue that vanished modulo 2^N. Such values
/// are data, not errors: comparisons involving them may be undecidable and
/// `compare` reports that as `std::partial_ordering::unordered`.
class Val2 {
 public:
  enum class Kind : std::uint8_t { exact, at_least };

  static constexpr Val2 exact(unsigned v) { return Val2(Kind::exact, v); }
  static constexpr Val2 at_least(unsigned n) { return Val2(Kind::at_least, n); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_exact() const { return kind_ == Kind::exact; }
  /// The exact value, or the lower bound for `at_least`.
  constexpr unsigned value() const { return value_; }

  /// Structural equality (same kind, same number); not a 2-adic statement.
  friend constexpr bool operator==(const Val2&, const Val2&) = default;

 private:
  constexpr Val2(Kind k, unsigned v) : kind_(k), value_(v) {}
  Kind kind_;
  unsigned value_;
};

/// Order two valuations, returning `unordered` whenever the answer depends on
/// digits that were never computed.
constexpr std::partial_ordering compare(const Val2& a, const Val2& b) {
  if (a.is_exact() && b.is_exact()) return a.value() <=> b.value();
  if (a.is_exact()) {
    return a.value() < b.value() ? std::partial_ordering::less
                                 : std::partial_ordering::unordered;
  }
  if (b.is_exact()) {
    return b.value() < a.value() ? std::partial_ordering::greater
                                 : std::partial_ordering::unordered;
  }
  return std::partial_ordering::unordered;
}

/// True iff `v` certifies "valuation >= bound".
constexpr bool satisfies_at_least(const Val2& v, unsigned bound) {
  return v.value() >= bound;
}

/// True iff `v` certifies "valuation == target".
constexpr bool certifies_exactly(const Val2& v, unsigned target) {
  return v.is_exact() && v.value() == target;
}

inline std::string to_string(const Val2& v) {
  return v.is_exact() ? std::to_string(v.value())
                      : ">=" + std::to_string(v.value());
}

/// An integer known modulo 2^precision.
class Residue2 {
 public:
  Residue2(const Int& value, unsigned precision) : precision_(precision) {
    if (precision == 0) throw std::invalid_argument("Residue2: precision must be >= 1");
    const Int modulus = Int(1) << precision;
    value_ = value % modulus;
    if (value_ < 0) value_ += modulus;
  }

  static Residue2 zero(unsigned precision) { return Residue2(0, precision); }

  const Int& value() const { return value_; }
  unsigned precision() const { return precision_; }
  bool is_zero() const { return value_.is_zero(); }

  /// Forget all but the low `bits` digits.
  Residue2 truncated(unsigned bits) const {
    if (bits > precision_) {
      throw std::invalid_argument("Residue2::truncated: cannot add precision");
    }
    return Residue2(value_, bits);
  }

  friend Residue2 operator+(const Residue2& a, const Residue2& b) {
    return Residue2(a.value_ + b.value_, std::min(a.precision_, b.precision_));
  }
  friend Residue2 operator-(const Residue2& a, const Residue2& b) {
    return Residue2(a.value_ - b.value_, std::min(a.precision_, b.precision_));
  }
  friend Residue2 operator*(const Residue2& a, const Residue2& b) {
    return Residue2(a.value_ * b.value_, std::min(a.precision_, b.precision_));
  }
  Residue2 operator-() const { return Residue2(-value_, precision_); }

  friend bool operator==(const Residue2&, const Residue2&) = default;

 private:
  Int value_;
  unsigned precision_;
};

inline Val2 val2_of_residue(const Residue2& r) {
  if (r.is_zero()) return Val2::at_least(r.precision());
  return Val2::exact(static_cast<unsigned>(boost::multiprecision::lsb(r.value())));
}

/// ν of an integer; the sign is ignored and zero maps to `at_least(precision)`.
inline Val2 nu(const Int& x, unsigned precision = 64) {
  if (x.is_zero()) return Val2::at_least(precision);
  return Val2::exact(static_cast<unsigned>(boost::multiprecision::lsb(abs(x))));
}

/// Binary digit sum.
constexpr unsigned alpha(std::uint64_t n) { return static_cast<unsigned>(std::popcount(n)); }

inline unsigned alpha(const Int& n) {
  unsigned count = 0;
  if (n <= 0) return 0;
  const unsigned top = static_cast<unsigned>(boost::multiprecision::msb(n));
  for (unsigned bit = 0; bit <= top; ++bit) count += bit_test(n, bit) ? 1 : 0;
  return count;
}

/// ν(n!) by Legendre's formula at p = 2.
constexpr std::uint64_t nu_factorial(std::uint64_t n) { return n - alpha(n); }

/// Lucas at p = 2: C(m, n) is odd iff the bits of n are a subset of those of m.
constexpr bool binom_is_odd(std::uint64_t m, std::uint64_t n) { return (m & n) == n; }

namespace detail {

/// Arithmetic modulo 2^bits over a machine word or a big integer.
///
/// With `std::uint64_t` the hardware already works modulo 2^64, so only the
/// final mask matters; with `Int` every product is masked to bound growth.
template <class Word>
class ModPow2;

template <>
class ModPow2<std::uint64_t> {
 public:
  using word = std::uint64_t;

  explicit ModPow2(unsigned bits)
      : bits_(bits), mask_(bits >= 64 ? ~word{0} : (word{1} << bits) - 1) {}

  unsigned bits() const { return bits_; }
  word reduce(word x) const { return x & mask_; }
  word add(word a, word b) const { return a + b; }
  word sub(word a, word b) const { return a - b; }
  word mul(word a, word b) const { return a * b; }
  word one() const { return 1; }
  word from(const Int& v) const {
    Int r = v % (Int(1) << 64);
    if (r < 0) r += Int(1) << 64;
    return static_cast<word>(r) & mask_;
  }
  word from_u64(std::uint64_t v) const { return v; }
  Int to_int(word x) const { return Int(reduce(x)); }
  bool is_odd(word x) const { return (x & 1U) != 0; }
  bool is_zero(word x) const { return reduce(x) == 0; }
  word shift_left(word x, unsigned s) const { return s >= 64 ? 0 : x << s; }

 private:
  unsigned bits_;
  word mask_;
};

template <>
class ModPow2<Int> {
 public:
  using word = Int;

  explicit ModPow2(unsigned bits) : bits_(bits), mask_((Int(1) << bits) - 1) {}

  unsigned bits() const { return bits_; }
  word reduce(const word& x) const { return x & mask_; }
  word add(const word& a, const word& b) const { return (a + b) & mask_; }
  word sub(const word& a, const word& b) const { return (a + (mask_ + 1) - b) & mask_; }
  word mul(const word& a, const word& b) const { return (a * b) & mask_; }
  word one() const { return 1; }
  word from(const Int& v) const {
    Int r = v % (mask_ + 1);
    if (r < 0) r += mask_ + 1;
    return r;
  }
  word from_u64(std::uint64_t v) const { return Int(v) & mask_; }
  Int to_int(const word& x) const { return x & mask_; }
  bool is_odd(const word& x) const { return bit_test(x, 0); }
  bool is_zero(const word& x) const { return (x & mask_).is_zero(); }
  word shift_left(const word& x, unsigned s) const { return (x << s) & mask_; }

 private:
  unsigned bits_;
  Int mask_;
};

template <class Ring>
typename Ring::word pow_u64(const Ring& ring, typename Ring::word base, std::uint64_t exp) {
  typename Ring::word result = ring.one();
  while (exp != 0) {
    if (exp & 1U) result = ring.mul(result, base);
    exp >>= 1;
    if (exp != 0) base = ring.mul(base, base);
  }
  return result;
}

template <class Ring>
typename Ring::word pow_int(const Ring& ring, typename Ring::word base, const Int& exp) {
  if (exp <= std::numeric_limits<std::uint64_t>::max()) {
    return pow_u64(ring, std::move(base), static_cast<std::uint64_t>(exp));
  }
  typename Ring::word result = ring.one();
  const unsigned top = static_cast<unsigned>(boost::multiprecision::msb(exp));
  for (unsigned bit = 0; bit <= top; ++bit) {
    if (bit_test(exp, bit)) result = ring.mul(result, base);
    if (bit != top) base = ring.mul(base, base);
  }
  return result;
}

/// Inverse of an odd element by Newton iteration; each step doubles the
/// number of correct low bits (a*a == 1 mod 8 gives three to start).
template <class Ring>
typename Ring::word inverse_odd(const Ring& ring, const typename Ring::word& a) {
  if (!ring.is_odd(a)) throw std::domain_error("inverse_odd: even element has no inverse mod 2^N");
  typename Ring::word x = ring.reduce(a);
  const typename Ring::word two = ring.from_u64(2);
  for (unsigned correct = 3; correct < ring.bits(); correct *= 2) {
    x = ring.mul(x, ring.sub(two, ring.mul(a, x)));
  }
  return ring.reduce(x);
}

/// Exponent of the unit group (Z/2^N)^*, a valid period for odd bases.
inline Int unit_period(unsigned bits) { return Int(1) << (bits > 2 ? bits - 2 : 1); }

/// base^exp in the ring; odd bases accept any integer exponent (negative
/// exponents act through the inverse), even bases need exp >= 0 and 0^0 = 1.
template <class Ring>
typename Ring::word power(const Ring& ring, const typename Ring::word& base, const Int& exp) {
  if (ring.is_odd(base)) {
    const Int period = unit_period(ring.bits());
    Int e = exp % period;
    if (e < 0) e += period;
    return pow_int(ring, base, e);
  }
  if (exp < 0) throw std::domain_error("power: negative exponent of an even base");
  if (exp.is_zero()) return ring.one();
  if (exp >= ring.bits()) return typename Ring::word(0);
  return ring.reduce(pow_u64(ring, base, static_cast<std::uint64_t>(exp)));
}

/// Row n of Pascal's triangle modulo 2^N, built multiplicatively by tracking
/// the 2-power and the odd part of C(n, i) separately.
template <class Ring>
std::vector<typename Ring::word> binomial_row(const Ring& ring, std::uint64_t n) {
  using word = typename Ring::word;
  std::vector<word> row;
  row.reserve(n + 1);
  word unit = ring.one();
  std::uint64_t twos = 0;
  row.push_back(ring.one());
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t up = n - i;
    const std::uint64_t down = i + 1;
    const unsigned up_twos = static_cast<unsigned>(std::countr_zero(up));
    const unsigned down_twos = static_cast<unsigned>(std::countr_zero(down));
    unit = ring.mul(unit, ring.from_u64(up >> up_twos));
    unit = ring.mul(unit, inverse_odd(ring, ring.from_u64(down >> down_twos)));
    twos = twos + up_twos - down_twos;
    row.push_back(twos >= ring.bits() ? word(0) : ring.shift_left(unit, static_cast<unsigned>(twos)));
  }
  return row;
}

}  // namespace detail

/// C(m, n) mod 2^N from the exact integer value.
inline Residue2 binom_residue(const Int& m, const Int& n, unsigned precision) {
  if (n < 0 || m < 0) throw std::invalid_argument("binom_residue: arguments must be nonnegative");
  if (n > m) throw std::invalid_argument("binom_residue: requires n <= m");
  Int lower = n;
  if (lower > m - n) lower = m - n;
  Int value = 1;
  for (Int i = 0; i < lower; ++i) value = value * (m - i) / (i + 1);
  return Residue2(value, precision);
}

/// base^k mod 2^N by square-and-multiply; 0^0 = 1. Odd bases accept
/// negative exponents.
inline Residue2 pow_residue(const Int& base, const Int& k, unsigned precision) {
  if (precision == 0) throw std::invalid_argument("pow_residue: precision must be >= 1");
  const detail::ModPow2<Int> ring(precision);
  return Residue2(detail::power(ring, ring.from(base), k), precision);
}

/// Inverse of an odd residue.
inline Residue2 inverse(const Residue2& r) {
  const detail::ModPow2<Int> ring(r.precision());
  return Residue2(detail::inverse_odd(ring, r.value()), r.precision());
}

/// Evaluate `residue_at(N)` at increasing precision until the result is
/// nonzero; an all-zero search ends as `at_least(cap)`.
template <class ResidueAt>
Val2 valuation_with_policy(ResidueAt&& residue_at, const PrecisionPolicy& policy) {
  unsigned bits = std::max(1U, std::min(policy.initial, policy.cap));
  for (;;) {
    const Residue2 r = residue_at(bits);
    if (!r.is_zero()) return val2_of_residue(r);
    if (bits >= policy.cap) return Val2::at_least(bits);
    bits = std::min(bits * 2, policy.cap);
  }
}

}  // namespace sunexp
