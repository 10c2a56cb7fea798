#include "partzeta/padic.hpp"

#include <string>

#include "partzeta/hessenberg.hpp"
#include "partzeta/special.hpp"
#include "partzeta/tables.hpp"

namespace pz {

namespace {

BigInt ipow(unsigned long p, unsigned long e) { return bmp::pow(BigInt(p), static_cast<unsigned>(e)); }

long count_factor(BigInt v, unsigned long p) {
  long c = 0;
  const BigInt bp = p;
  while (v % bp == 0) {
    v /= bp;
    ++c;
  }
  return c;
}

// zeta*(1 - n) for any n >= 1; zero for odd n (trivial zeros, and n = 1 via the Euler factor).
Rational zeta_star_any(unsigned long p, unsigned long n) {
  if (n % 2 == 1) return 0;
  return zeta_star_neg(p, n);
}

void require_odd_prime(unsigned long p) {
  if (p <= 2 || !is_prime(p)) throw DomainError("p must be an odd prime, got " + std::to_string(p));
}

}  // namespace

void PadicContext::validate() const {
  require_odd_prime(p);
  if (k < 1) throw DomainError("length k must be at least 1");
  if (p < k + 3) throw DomainError("p >= k + 3 is required (p = " + std::to_string(p) + ", k = " + std::to_string(k) + ")");
}

std::optional<long> padic_valuation(const Rational& q, unsigned long p) {
  if (q == 0) return std::nullopt;
  if (p < 2 || !is_prime(p)) throw DomainError("padic_valuation needs a prime");
  return count_factor(bmp::numerator(q), p) - count_factor(bmp::denominator(q), p);
}

Rational zeta_star_neg(unsigned long p, unsigned long n) {
  if (n < 2 || n % 2) throw DomainError("zeta_star_neg requires an even n >= 2");
  return Rational(1 - ipow(p, n - 1)) * zeta_nonpositive(static_cast<long>(n) - 1);
}

bool kummer_check(unsigned long p, unsigned a, unsigned long k1, unsigned long k2) {
  require_odd_prime(p);
  if (k1 == 0 || k2 == 0 || k1 % 2 || k2 % 2) throw DomainError("k1 and k2 must be positive and even");
  if (k1 % (p - 1) == 0) throw DomainError("(p-1) must not divide k1");
  if (k2 % (p - 1) == 0) throw DomainError("(p-1) must not divide k2");
  const BigInt modulus = ipow(p, a + 1) - ipow(p, a);
  const BigInt diff_k = BigInt(k1) - BigInt(k2);
  if (diff_k % modulus != 0) throw DomainError("k1 = k2 mod (p^(a+1) - p^a) is required");
  // (1 - p^(k-1)) B_k / k = -zeta*(1-k)
  Rational d = zeta_star_neg(p, k2) - zeta_star_neg(p, k1);
  auto v = padic_valuation(d, p);
  return !v || *v >= static_cast<long>(a) + 1;
}

Rational padic_fixedlen(const PadicContext& ctx, unsigned long m) {
  ctx.validate();
  if (m < 2) throw DomainError("evaluation point 1 - m needs m >= 2");
  const unsigned k = ctx.k;
  // zeta*((1-m) r) = zeta*(1 - n) with n = 1 + (m-1) r
  auto mat = toeplitz_hessenberg<Rational>(k, [&](Eigen::Index i, Eigen::Index j) {
    const unsigned long r = static_cast<unsigned long>(j - i + 1);
    Rational ratio(factorial(static_cast<unsigned>(k - 1 - i)), factorial(static_cast<unsigned>(k - 1 - j)));
    return zeta_star_any(ctx.p, 1 + (m - 1) * r) * ratio;
  });
  return hessenberg_determinant(mat) / Rational(factorial(k));
}

std::optional<long> interpolation_valuation(unsigned long p, unsigned a, unsigned k, unsigned long m1,
                                            unsigned long m2) {
  PadicContext ctx{p, a, k};
  ctx.validate();
  if (m1 % (p - 1) != 2 % (p - 1) || m2 % (p - 1) != 2 % (p - 1))
    throw DomainError("m1 and m2 must both be 2 mod (p-1)");
  if ((BigInt(m1) - BigInt(m2)) % ipow(p, a) != 0) throw DomainError("m1 = m2 mod p^a is required");
  return padic_valuation(padic_fixedlen(ctx, m1) - padic_fixedlen(ctx, m2), p);
}

bool interpolation_check(unsigned long p, unsigned a, unsigned k, unsigned long m1, unsigned long m2) {
  auto v = interpolation_valuation(p, a, k, m1, m2);
  return !v || *v >= static_cast<long>(a) + 1;
}

unsigned long suggest_m2(unsigned long p, unsigned a, unsigned long m1) {
  require_odd_prime(p);
  return m1 + (p - 1) * ipow(p, a).convert_to<unsigned long>();
}

}  // namespace pz
