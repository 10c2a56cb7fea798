#include "partzeta/tables.hpp"

#include <mutex>
#include <shared_mutex>

namespace pz {

namespace {

struct BernoulliCache {
  std::shared_mutex mu;
  std::vector<Rational> values{Rational(1), Rational(-1, 2)};
};

BernoulliCache& cache() {
  static BernoulliCache c;
  return c;
}

// Tangent numbers T_1..T_m (tan x = sum T_j x^(2j-1)/(2j-1)!), integer-only
// in-place sweep. B_2j = (-1)^(j-1) 2j T_j / (4^j (4^j - 1)).
std::vector<Rational> even_bernoulli_upto(unsigned m) {
  std::vector<BigInt> t(m + 1);
  std::vector<Rational> out(m + 1);
  if (m == 0) return out;
  t[1] = 1;
  for (unsigned k = 2; k <= m; ++k) t[k] = BigInt(k - 1) * t[k - 1];
  for (unsigned k = 2; k <= m; ++k)
    for (unsigned j = k; j <= m; ++j) t[j] = BigInt(j - k) * t[j - 1] + BigInt(j - k + 2) * t[j];
  for (unsigned j = 1; j <= m; ++j) {
    BigInt four_j = BigInt(1) << (2 * j);
    Rational b(BigInt(2 * j) * t[j], four_j * (four_j - 1));
    out[j] = (j % 2 == 1) ? b : Rational(-b);
  }
  return out;
}

}  // namespace

Rational bernoulli(unsigned n) {
  auto& c = cache();
  {
    std::shared_lock lock(c.mu);
    if (n < c.values.size()) return c.values[n];
  }
  std::unique_lock lock(c.mu);
  if (n >= c.values.size()) {
    // Grow with headroom so repeated requests for nearby indices stay cheap.
    unsigned target = std::max<unsigned>(n, static_cast<unsigned>(c.values.size()) * 3 / 2);
    target += target % 2;
    auto even = even_bernoulli_upto(target / 2);
    std::vector<Rational> v(target + 1, Rational(0));
    v[0] = 1;
    v[1] = Rational(-1, 2);
    for (unsigned j = 1; 2 * j <= target; ++j) v[2 * j] = even[j];
    c.values = std::move(v);
  }
  return c.values[n];
}

std::vector<Rational> bernoulli_table(unsigned n) {
  bernoulli(n);
  std::vector<Rational> out;
  out.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) out.push_back(bernoulli(i));
  return out;
}

Rational bernoulli_akiyama_tanigawa(unsigned n) {
  std::vector<Rational> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Rational(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = BigInt(j) * (a[j - 1] - a[j]);
  }
  // The recurrence produces B_1 = +1/2.
  return n == 1 ? Rational(-1, 2) : a[0];
}

StirlingTable::StirlingTable(unsigned n_max) : n_max_(n_max), rows_(n_max + 1) {
  rows_[0] = {BigInt(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    rows_[n].assign(n + 1, BigInt(0));
    for (unsigned k = 1; k <= n; ++k) {
      BigInt above_left = rows_[n - 1].size() > k - 1 ? rows_[n - 1][k - 1] : BigInt(0);
      BigInt above = k <= n - 1 ? rows_[n - 1][k] : BigInt(0);
      rows_[n][k] = above_left - BigInt(n - 1) * above;
    }
  }
}

const BigInt& StirlingTable::operator()(unsigned n, unsigned k) const {
  static const BigInt zero = 0;
  if (n > n_max_) throw DomainError("StirlingTable: row beyond table bound");
  return k <= n ? rows_[n][k] : zero;
}

BigInt divisor_sigma(unsigned r, unsigned long n) {
  BigInt s = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    s += bmp::pow(BigInt(d), r);
    if (d * d != n) s += bmp::pow(BigInt(n / d), r);
  }
  return s;
}

int moebius(unsigned long n) {
  int mu = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace pz
