#include "partzeta/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pz {

namespace {

unsigned& requested_slot() {
  static unsigned bits = kDefaultPrecisionBits;
  return bits;
}

// Smallest digits10 setting whose mantissa covers `bits`.
unsigned digits10_covering(unsigned bits) {
  unsigned d = std::max(2u, static_cast<unsigned>(std::floor(bits * 0.30103)) - 2u);
  for (;; ++d) {
    HPReal::default_precision(d);
    HPReal probe;
    if (precision_of(probe) >= bits) return d;
  }
}

struct DefaultPrecisionInit {
  DefaultPrecisionInit() { HPReal::default_precision(digits10_covering(kDefaultPrecisionBits)); }
};
const DefaultPrecisionInit default_precision_init;

}  // namespace

WorkingPrecision::WorkingPrecision(unsigned bits)
    : saved_digits10_(HPReal::default_precision()), saved_requested_(requested_slot()) {
  if (bits < 16) throw DomainError("working precision must be at least 16 bits");
  HPReal::default_precision(digits10_covering(bits));
  requested_slot() = bits;
}

WorkingPrecision::~WorkingPrecision() {
  HPReal::default_precision(saved_digits10_);
  requested_slot() = saved_requested_;
}

unsigned WorkingPrecision::current_bits() {
  HPReal probe;
  return precision_of(probe);
}

unsigned WorkingPrecision::requested_bits() { return requested_slot(); }

HPReal rounded(const HPReal& x) {
  HPReal r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

HPReal to_hp(const Rational& q) {
  HPReal x;
  mpfr_set_q(x.backend().data(), q.backend().data(), MPFR_RNDN);
  return x;
}

HPReal to_hp(const BigInt& z) {
  HPReal x;
  mpfr_set_z(x.backend().data(), z.backend().data(), MPFR_RNDN);
  return x;
}

HPReal pi_hp() {
  HPReal x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

HPReal euler_gamma_hp() {
  HPReal x;
  mpfr_const_euler(x.backend().data(), MPFR_RNDN);
  return x;
}

HPReal pow2_neg(long e) {
  HPReal x = 1;
  mpfr_div_2si(x.backend().data(), x.backend().data(), e, MPFR_RNDN);
  return x;
}

unsigned decimal_digits_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.301));
}

std::string format_decimal(const HPReal& x, unsigned significant_digits) {
  // In scientific mode the stream precision counts digits after the point.
  const unsigned after_point = significant_digits > 0 ? significant_digits - 1 : 0;
  return x.str(static_cast<std::streamsize>(after_point), std::ios_base::scientific);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

HPReal parse_hp(const std::string& text) {
  HPReal x;
  if (mpfr_set_str(x.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("not a decimal number: '" + text + "'");
  return x;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw DomainError("not a rational number: '" + text + "'");
  }
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    if (k > n) return 0;
    mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
  }
  // C(n, k) for negative n: (-1)^k C(k - n - 1, k)
  mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
  return (k % 2 == 0) ? r : BigInt(-r);
}

}  // namespace pz
