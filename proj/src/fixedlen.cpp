#include "partzeta/fixedlen.hpp"

#include <sstream>

#include "partzeta/hessenberg.hpp"
#include "partzeta/series.hpp"
#include "partzeta/special.hpp"

namespace pz {

HPReal PiMultiple::value() const { return to_hp(coefficient) * pow(pi_hp(), HPReal(pi_power)); }

std::string PiMultiple::to_string() const {
  std::string s = pz::to_string(coefficient);
  if (pi_power == 0) return s;
  return s + " * pi^" + std::to_string(pi_power);
}

namespace {

void check_even(unsigned m, const char* what) {
  if (m < 2 || m % 2) throw DomainError(std::string(what) + ": exact route needs an even argument >= 2");
}

// [u^k] exp(sign * sum_j c_j u^j / j) with c_j = zeta(m j) / pi^(m j).
Rational exact_exp_coefficient(unsigned m, unsigned k, int sign) {
  TruncatedSeries<Rational> arg(k);
  for (unsigned j = 1; j <= k; ++j) arg[j] = Rational(sign) * zeta_even_over_pi_power(static_cast<long>(m) * j) / Rational(j);
  return arg.exp()[k];
}

HPReal hp_exp_coefficient(unsigned m, unsigned k, int sign) {
  TruncatedSeries<HPReal> arg(k);
  for (unsigned j = 1; j <= k; ++j) arg[j] = HPReal(sign) * zeta_int(static_cast<long>(m) * j) / HPReal(j);
  return arg.exp()[k];
}

// (1/k!) det with entries sign * zeta(m r)/pi^(m r) * (k-i)!/(k-j)!, r = j-i+1.
Rational exact_determinant(unsigned m, unsigned k, int sign) {
  if (k == 0) return 1;
  auto mat = toeplitz_hessenberg<Rational>(k, [&](Eigen::Index i, Eigen::Index j) {
    const long r = static_cast<long>(j - i + 1);
    Rational ratio(factorial(static_cast<unsigned>(k - 1 - i)), factorial(static_cast<unsigned>(k - 1 - j)));
    return Rational(sign) * zeta_even_over_pi_power(static_cast<long>(m) * r) * ratio;
  });
  return hessenberg_determinant(mat) / Rational(factorial(k));
}

}  // namespace

HPReal fixedlen_zeta(unsigned m, unsigned k) {
  if (m < 2) throw DomainError("fixedlen_zeta requires m >= 2");
  if (k == 0) return 1;
  if (m % 2 == 0) return fixedlen_zeta_series_exact(m, k).value();
  const unsigned bits = WorkingPrecision::current_bits();
  HPReal v;
  {
    WorkingPrecision wp(bits + 32);
    v = hp_exp_coefficient(m, k, +1);
  }
  return rounded(v);
}

PiMultiple fixedlen_zeta_exact(unsigned m, unsigned k) {
  check_even(m, "fixedlen_zeta_exact");
  return {exact_determinant(m, k, +1), static_cast<long>(m) * k};
}

PiMultiple fixedlen_zeta_series_exact(unsigned m, unsigned k) {
  check_even(m, "fixedlen_zeta_series_exact");
  if (k == 0) return {Rational(1), 0};
  return {exact_exp_coefficient(m, k, +1), static_cast<long>(m) * k};
}

HPReal mzv_equal_args(unsigned n, unsigned k) {
  if (n < 2) throw DomainError("mzv_equal_args requires n >= 2");
  if (k == 0) return 1;
  if (n % 2 == 0) return mzv_equal_args_exact(n, k).value();
  const unsigned bits = WorkingPrecision::current_bits();
  HPReal v;
  {
    WorkingPrecision wp(bits + 32);
    v = hp_exp_coefficient(n, k, -1);
    if (k % 2) v = -v;
  }
  return rounded(v);
}

PiMultiple mzv_equal_args_exact(unsigned n, unsigned k) {
  check_even(n, "mzv_equal_args_exact");
  if (k == 0) return {Rational(1), 0};
  Rational c = exact_exp_coefficient(n, k, -1);
  return {k % 2 ? Rational(-c) : c, static_cast<long>(n) * k};
}

PiMultiple mzv_equal_args_determinant(unsigned n, unsigned k) {
  check_even(n, "mzv_equal_args_determinant");
  Rational c = exact_determinant(n, k, -1);
  return {k % 2 ? Rational(-c) : c, static_cast<long>(n) * k};
}

TruncatedSum mzv_bruteforce(const std::vector<unsigned>& index, unsigned long bound) {
  if (index.empty()) return {HPReal(1), HPReal(0), "empty index"};
  if (index.front() < 2) throw DomainError("mzv_bruteforce: the exponent on the largest variable must be >= 2");
  for (auto e : index)
    if (e < 1) throw DomainError("mzv_bruteforce: exponents must be positive");
  if (bound < index.size()) throw DomainError("mzv_bruteforce: bound must be at least the depth");
  const std::size_t depth = index.size();
  // prefix[n] = sum over chains whose largest variable is <= n, innermost first.
  std::vector<HPReal> prefix(bound + 1, HPReal(1));
  for (std::size_t level = depth; level-- > 0;) {
    std::vector<HPReal> next(bound + 1, HPReal(0));
    const HPReal e = HPReal(index[level]);
    for (unsigned long n = 1; n <= bound; ++n) {
      HPReal inner = (level + 1 == depth) ? HPReal(1) : prefix[n - 1];
      next[n] = next[n - 1] + inner / pow(HPReal(n), e);
    }
    prefix = std::move(next);
  }
  HPReal inner_bound = 1;
  for (std::size_t i = 1; i < depth; ++i)
    inner_bound *= index[i] >= 2 ? zeta_int(index[i]) : HPReal(1) + log(HPReal(bound));
  const HPReal m1 = HPReal(index.front());
  HPReal tail = inner_bound * pow(HPReal(bound), 1 - m1) / (m1 - 1);
  std::ostringstream note;
  note << "largest variable <= " << bound << "; tail estimate from the outermost sum only";
  return {prefix[bound], tail, note.str()};
}

std::vector<std::vector<unsigned>> compositions(unsigned k) {
  if (k == 0) throw DomainError("compositions requires k >= 1");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (unsigned first = 1; first <= remaining; ++first) {
      cur.push_back(first);
      self(self, remaining - first);
      cur.pop_back();
    }
  };
  rec(rec, k);
  return out;
}

IdentityCheck shuffle_check(const HPReal& s, unsigned long bound) {
  if (!(s > 1)) throw DomainError("shuffle_check requires s > 1");
  HPReal inner = 0, lhs = 0;
  for (unsigned long n = 1; n <= bound; ++n) {
    const HPReal t = pow(HPReal(n), -s);
    inner += t;
    lhs += t * inner;
  }
  const HPReal zs = riemann_zeta(s);
  const HPReal rhs = (riemann_zeta(HPReal(2 * s)) + zs * zs) / 2;
  const HPReal tail = zs * pow(HPReal(bound), 1 - s) / (s - 1);
  return {lhs, rhs, rhs - lhs, tail};
}

IdentityCheck decoupling_check(unsigned m, unsigned k, unsigned long bound) {
  if (m < 2 || k < 1) throw DomainError("decoupling_check requires m >= 2, k >= 1");
  IdentityCheck out;
  out.lhs = fixedlen_zeta(m, k);
  out.rhs = 0;
  out.tail_estimate = 0;
  for (const auto& c : compositions(k)) {
    std::vector<unsigned> index;
    for (auto a : c) index.push_back(a * m);
    auto b = mzv_bruteforce(index, bound);
    out.rhs += b.value;
    out.tail_estimate += b.tail_estimate;
  }
  out.diff = out.lhs - out.rhs;
  return out;
}

namespace {

// Sum over bound >= n_1 >= ... >= n_k >= 1 of (n_1 ... n_k)^(-m).
HPReal weak_nested_sum(unsigned m, unsigned k, unsigned long bound) {
  std::vector<HPReal> prefix(bound + 1, HPReal(1));
  const HPReal e(m);
  for (unsigned level = 0; level < k; ++level) {
    std::vector<HPReal> next(bound + 1, HPReal(0));
    for (unsigned long n = 1; n <= bound; ++n) next[n] = next[n - 1] + prefix[n] / pow(HPReal(n), e);
    prefix = std::move(next);
  }
  return prefix[bound];
}

}  // namespace

LengthReduction length_reduction(unsigned n, unsigned k, unsigned long bound) {
  if (n < 2 || k < 2) throw DomainError("length_reduction requires n, k >= 2");
  LengthReduction out;
  out.n = n;
  out.k = k;
  std::ostringstream id;
  id << "zeta({" << n << "}^" << k << ") = zeta_P({" << n << "}^" << k << ")";
  HPReal rhs = fixedlen_zeta(n, k);
  HPReal rhs_truncated = weak_nested_sum(n, k, bound);
  HPReal tail = 0;
  for (const auto& c : compositions(k)) {
    if (c.size() == k) continue;
    std::vector<unsigned> index;
    for (auto a : c) index.push_back(a * n);
    out.subtracted.push_back(index);
    id << " - zeta(";
    for (std::size_t i = 0; i < index.size(); ++i) id << (i ? "," : "") << index[i];
    id << ")";
    auto b = mzv_bruteforce(index, bound);
    rhs -= b.value;
    rhs_truncated -= b.value;
    tail += b.tail_estimate;
  }
  out.identity = id.str();
  auto lhs = mzv_bruteforce(std::vector<unsigned>(k, n), bound);
  out.numeric = {lhs.value, rhs, rhs - lhs.value, tail + lhs.tail_estimate};
  out.truncated = {lhs.value, rhs_truncated, rhs_truncated - lhs.value, HPReal(0)};
  if (k == 2 && n % 2 == 0) {
    // zeta(n,n) = zeta_P({n}^2) - zeta(2n), every term a rational multiple of pi^(2n).
    out.exact_available = true;
    Rational r = fixedlen_zeta_exact(n, 2).coefficient - zeta_even_over_pi_power(2L * n);
    out.exact_match = (r == mzv_equal_args_exact(n, 2).coefficient);
  }
  return out;
}

}  // namespace pz
