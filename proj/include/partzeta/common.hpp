#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pz {

namespace bmp = boost::multiprecision;

/// Arbitrary-precision binary float. The mantissa width is taken from the
/// active WorkingPrecision at construction time.
using HPReal = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;
using BigInt = bmp::number<bmp::gmp_int, bmp::et_off>;
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;

inline constexpr unsigned kDefaultPrecisionBits = 256;

// Precondition violated by the caller (bad parameters, divergent spec, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numeric procedure could not reach the requested accuracy.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two computation paths that must agree did not; always a bug.
class InternalDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Scoped override of the precision used for every HPReal created while the
/// guard is alive. Guards nest; the destructor restores the previous setting.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned bits);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  /// Mantissa bits a freshly constructed HPReal receives right now.
  static unsigned current_bits();
  /// Bits requested by the innermost guard (kDefaultPrecisionBits if none).
  static unsigned requested_bits();

 private:
  unsigned saved_digits10_;
  unsigned saved_requested_;
};

inline unsigned precision_of(const HPReal& x) {
  return static_cast<unsigned>(mpfr_get_prec(x.backend().data()));
}

/// Copy of x carried at the current default precision (rounds or widens).
HPReal rounded(const HPReal& x);

HPReal to_hp(const Rational& q);
HPReal to_hp(const BigInt& z);
HPReal pi_hp();
HPReal euler_gamma_hp();
/// 2^-e at the current precision.
HPReal pow2_neg(long e);

/// Decimal rendering with a fixed count of significant digits.
std::string format_decimal(const HPReal& x, unsigned significant_digits);
/// Significant digits implied by a binary precision: ceil(bits * 0.301).
unsigned decimal_digits_for_bits(unsigned bits);

std::string to_string(const Rational& q);

HPReal parse_hp(const std::string& text);
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

}  // namespace pz
