#pragma once

#include <vector>

#include "partzeta/common.hpp"

namespace pz {

/// Exact Bernoulli number B_n with B_1 = -1/2. Values are cached; the cache
/// only ever grows and is safe to read from several threads.
Rational bernoulli(unsigned n);

/// B_0..B_n.
std::vector<Rational> bernoulli_table(unsigned n);

/// Akiyama-Tanigawa recurrence, O(n^2) rationals per value. Returns B_n with
/// the B_1 = -1/2 convention. Slow; kept as an independent oracle.
Rational bernoulli_akiyama_tanigawa(unsigned n);

/// Signed Stirling numbers of the first kind, rows 0..n_max.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned n_max);
  const BigInt& operator()(unsigned n, unsigned k) const;
  unsigned n_max() const { return n_max_; }

 private:
  unsigned n_max_;
  std::vector<std::vector<BigInt>> rows_;
};

/// sigma_r(n) = sum of d^r over divisors d of n.
BigInt divisor_sigma(unsigned r, unsigned long n);

/// Moebius function.
int moebius(unsigned long n);

bool is_prime(unsigned long n);

}  // namespace pz
