#include "partzeta/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "partzeta/partitions.hpp"
#include "partzeta/special.hpp"
#include "partzeta/tables.hpp"

namespace pz {

// ---------------------------------------------------------------- LProfile

const HPReal& LProfile::at(unsigned s) const {
  if (s < 1 || s > lambda.size()) throw DomainError("Lambda(f, s) requested outside 1 <= s <= k-1");
  return lambda[s - 1];
}

void LProfile::validate(const HPReal& tol) const {
  if (weight < 4 || weight % 2) throw DomainError("LProfile: weight must be an even integer >= 4");
  if (level < 1) throw DomainError("LProfile: level must be positive");
  if (sign != 1 && sign != -1) throw DomainError("LProfile: sign must be +1 or -1");
  if (lambda.size() != weight - 1)
    throw DomainError("LProfile: expected " + std::to_string(weight - 1) + " critical values, got " +
                      std::to_string(lambda.size()));
  const unsigned k = weight;
  for (unsigned j = 0; j + 2 <= k; ++j) {
    if (abs(at(j + 1) - HPReal(sign) * at(k - 1 - j)) > tol)
      throw DomainError("LProfile: functional equation Lambda(f," + std::to_string(j + 1) +
                        ") = sign * Lambda(f," + std::to_string(k - 1 - j) + ") fails");
  }
  if (at(k / 2) < -tol) throw DomainError("LProfile: monotone chain needs Lambda(f,k/2) >= 0");
  for (unsigned s = k / 2; s + 1 <= k - 1; ++s) {
    if (at(s) > at(s + 1) + tol)
      throw DomainError("LProfile: monotone chain broken between Lambda(f," + std::to_string(s) + ") and Lambda(f," +
                        std::to_string(s + 1) + ")");
  }
  if (sign == -1 && abs(at(k / 2)) > tol) throw DomainError("LProfile: sign -1 forces Lambda(f,k/2) = 0");
}

// ------------------------------------------------------ universal recursion

Rational UniversalPolynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() <= n) throw DomainError("UniversalPolynomial::evaluate needs values for x_1..x_n");
  Rational total = linear_coefficient * x[1];
  for (const auto& t : terms) {
    Rational v = t.coefficient;
    for (const auto& [var, e] : t.powers)
      for (unsigned r = 0; r < e; ++r) v *= x[var];
    total += v;
  }
  return total;
}

std::string UniversalPolynomial::to_string() const {
  std::ostringstream os;
  os << "F_" << n << " = " << pz::to_string(linear_coefficient) << "*x1";
  for (const auto& t : terms) {
    os << (t.coefficient < 0 ? " - " : " + ") << pz::to_string(abs(t.coefficient));
    for (const auto& [var, e] : t.powers) {
      os << "*x" << var;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

UniversalPolynomial universal_F(unsigned n) {
  if (n < 1) throw DomainError("universal_F requires n >= 1");
  UniversalPolynomial f;
  f.n = n;
  f.linear_coefficient = Rational(BigInt(-2) * divisor_sigma(1, n), BigInt(n));
  if (n == 1) return f;
  for (const auto& lam : enumerate_partitions(n)) {
    if (lam.parts.front() == n) continue;
    std::map<unsigned, unsigned> mult;
    for (auto p : lam.parts) ++mult[static_cast<unsigned>(p)];
    const unsigned len = static_cast<unsigned>(lam.length());
    BigInt denom = 1;
    for (const auto& [part, m] : mult) denom *= factorial(m);
    Rational c(factorial(len - 1), denom);
    if (len % 2) c = -c;
    Monomial mono{c, {}};
    for (const auto& [part, m] : mult) mono.powers.emplace_back(part + 1, m);
    f.terms.push_back(std::move(mono));
  }
  return f;
}

std::vector<BigInt> tau_recursive(unsigned n_max, unsigned explicit_upto) {
  if (n_max < 1) throw DomainError("tau_recursive requires n_max >= 1");
  const Rational weight = 12;
  std::vector<BigInt> tau{1};
  // y[i] = x_{i+1} = tau(i+1); logc[i] = [q^i] log(1 + sum y_i q^i).
  std::vector<Rational> y(n_max, Rational(0)), logc(n_max, Rational(0));
  for (unsigned n = 1; n < n_max; ++n) {
    // partition part of F_n = -[q^n] log(1 + y_1 q + ... + y_{n-1} q^{n-1}) = (1/n) sum_{i<n} i logc_i y_{n-i}
    Rational conv = 0;
    for (unsigned i = 1; i < n; ++i) conv += Rational(i) * logc[i] * y[n - i];
    conv /= Rational(n);
    const Rational value = Rational(BigInt(-2) * divisor_sigma(1, n), BigInt(n)) * weight + conv;
    if (n <= explicit_upto) {
      std::vector<Rational> x(n + 1, Rational(0));
      x[1] = weight;
      for (unsigned i = 2; i <= n; ++i) x[i] = Rational(tau[i - 1]);
      if (universal_F(n).evaluate(x) != value)
        throw InternalDefect("universal recursion: explicit F_" + std::to_string(n) + " disagrees with the log form");
    }
    if (bmp::denominator(value) != 1)
      throw InternalDefect("universal recursion produced a non-integer coefficient at n = " + std::to_string(n + 1));
    y[n] = value;
    logc[n] = value - conv;
    tau.push_back(bmp::numerator(value));
  }
  return tau;
}

std::vector<BigInt> tau_eta_oracle(unsigned n_max) {
  if (n_max < 1) throw DomainError("tau_eta_oracle requires n_max >= 1");
  // c = prod (1 - q^n)^24 through q^(n_max - 1)
  std::vector<BigInt> c(n_max, BigInt(0));
  c[0] = 1;
  for (unsigned n = 1; n < n_max; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (unsigned i = n_max - 1; i >= n; --i) c[i] -= c[i - n];
  return c;
}

std::vector<Rational> eisenstein_coeffs(unsigned k, unsigned T) {
  if (k < 2 || k % 2) throw DomainError("eisenstein_coeffs requires an even k >= 2");
  const Rational scale = -Rational(2 * k) / bernoulli(k);
  std::vector<Rational> out{Rational(1)};
  for (unsigned n = 1; n <= T; ++n) out.push_back(scale * Rational(divisor_sigma(k - 1, n)));
  return out;
}

// ------------------------------------------------------------- Lambda(Delta)

unsigned lambda_delta_terms(const HPReal& tol) {
  if (!(tol > 0)) throw DomainError("lambda_delta: tolerance must be positive");
  const double log_target = static_cast<double>(log(tol)) + std::log(1e-2);
  constexpr double two_pi = 6.283185307179586;
  unsigned n = 1;
  // |tau(n)| <= n^6.5 and the gamma quotients are below e^(-2 pi n)
  while (6.5 * std::log(static_cast<double>(n)) - two_pi * n >= log_target) ++n;
  return n;
}

HPReal lambda_delta(const HPReal& s, const HPReal& tol) {
  if (s < 1 || s > 11) throw DomainError("lambda_delta requires 1 <= s <= 11");
  const unsigned bits = WorkingPrecision::current_bits();
  if (tol < pow2_neg(bits > 24 ? bits - 16 : 8))
    throw NumericFailure("lambda_delta: tolerance is below what the working precision can certify");
  const unsigned terms = lambda_delta_terms(tol);
  const auto tau = tau_eta_oracle(terms);
  HPReal total;
  {
    WorkingPrecision wp(bits + 32);
    const HPReal sv = rounded(s);
    const HPReal sr = HPReal(12) - sv;
    const HPReal two_pi = 2 * pi_hp();
    HPReal acc = 0;
    for (unsigned n = 1; n <= terms; ++n) {
      const HPReal x = two_pi * HPReal(n);
      const HPReal term = incomplete_gamma_upper(sv, x) / pow(x, sv) + incomplete_gamma_upper(sr, x) / pow(x, sr);
      acc += HPReal(tau[n - 1]) * term;
    }
    total = acc;
  }
  return rounded(total);
}

LProfile build_LProfile_delta(const HPReal& tol) {
  LProfile prof;
  prof.weight = 12;
  prof.level = 1;
  prof.sign = 1;
  prof.source = "computed: Delta, split incomplete-gamma series, " + std::to_string(lambda_delta_terms(tol)) + " terms";
  for (unsigned s = 1; s <= 11; ++s) prof.lambda.push_back(lambda_delta(HPReal(s), tol));
  prof.validate(tol);
  return prof;
}

// ------------------------------------------------------- period polynomial

PolyC period_polynomial(const LProfile& prof) {
  const unsigned k = prof.weight;
  std::vector<HPComplex> c;
  for (unsigned j = 0; j + 2 <= k; ++j) c.emplace_back(to_hp(Rational(binomial(k - 2, j))) * prof.at(k - 1 - j));
  return PolyC(std::move(c));
}

DeltaDecomposition delta_decomposition(const LProfile& prof) {
  if (prof.weight != 12) throw DomainError("delta_decomposition is defined for weight 12");
  const PolyC r = period_polynomial(prof);
  DeltaDecomposition d;
  d.even_constant = r.coeff(2).re;
  d.odd_constant = r.coeff(1).re / 4;
  const Rational even_pattern[] = {Rational(36, 691), 1, 3, 3, 1, Rational(36, 691)};
  const int odd_pattern[] = {4, 25, 42, 25, 4};
  d.pattern_deviation = 0;
  for (unsigned i = 0; i < 6; ++i) {
    HPReal expected = to_hp(even_pattern[i]) * d.even_constant;
    d.pattern_deviation = std::max(d.pattern_deviation, abs(r.coeff(2 * i).re / expected - 1));
  }
  for (unsigned i = 0; i < 5; ++i) {
    HPReal expected = HPReal(odd_pattern[i]) * d.odd_constant;
    d.pattern_deviation = std::max(d.pattern_deviation, abs(r.coeff(2 * i + 1).re / expected - 1));
  }
  return d;
}

// ----------------------------------------------------------------- moments

namespace {

HPReal power_with_zero(unsigned j, unsigned m) {
  if (m == 0) return 1;  // 0^0 = 1
  return pow(HPReal(j), HPReal(m));
}

}  // namespace

HPReal moments(const LProfile& prof, unsigned m) {
  const unsigned k = prof.weight;
  HPReal total = 0;
  for (unsigned j = 0; j + 2 <= k; ++j)
    total += to_hp(Rational(binomial(k - 2, j))) * prof.at(j + 1) * power_with_zero(j, m);
  return total / to_hp(Rational(factorial(k - 2)));
}

HPReal moments_first_form(const LProfile& prof, unsigned m) {
  const unsigned k = prof.weight;
  const HPReal scale = sqrt(HPReal(prof.level)) / (2 * pi_hp());
  HPReal total = 0;
  for (unsigned j = 0; j + 2 <= k; ++j) {
    const HPReal s = HPReal(j + 1);
    // L(f,s) = Lambda(f,s) / ((sqrt N / 2 pi)^s Gamma(s))
    const HPReal l_value = prof.at(j + 1) / (pow(scale, s) * to_hp(Rational(factorial(j))));
    total += pow(scale, s) * l_value / to_hp(Rational(factorial(k - 2 - j))) * power_with_zero(j, m);
  }
  return total;
}

// --------------------------------------------------------- zeta polynomial

ZetaPolynomial zeta_polynomial(const LProfile& prof) {
  const unsigned k = prof.weight;
  const unsigned d = k - 2;
  StirlingTable st(d);
  std::vector<HPReal> mom;
  for (unsigned m = 0; m <= d; ++m) mom.push_back(moments(prof, m));
  std::vector<HPComplex> c;
  for (unsigned h = 0; h <= d; ++h) {
    HPReal acc = 0;
    for (unsigned m = 0; m + h <= d; ++m) {
      const BigInt w = binomial(m + h, h) * st(d, m + h);
      acc += HPReal(w) * mom[m];
    }
    c.emplace_back(h % 2 ? HPReal(-acc) : acc);
  }
  ZetaPolynomial z;
  z.weight = k;
  z.sign = prof.sign;
  z.source = prof.source;
  if (prof.sign == -1) {
    // the top coefficient is M_f(0), which the functional equation forces to 0
    z.dropped_top = abs(c.back().re);
    c.pop_back();
  }
  z.poly = PolyC(std::move(c));
  return z;
}

FunctionalEqResult functional_eq_check(const PolyC& z, int sign) {
  const PolyC reflected = z.compose_affine(HPComplex(HPReal(-1)), HPComplex(HPReal(1)));
  const PolyC diff = z - reflected * HPComplex(HPReal(sign));
  return {coefficient_norm(diff), coefficient_norm(z)};
}

RhResult rh_check(const PolyC& z) {
  RhResult r;
  r.roots = poly_roots(z);
  if (!r.roots.converged) throw NumericFailure("rh_check: root finder did not converge");
  r.max_deviation = 0;
  const HPReal half = HPReal(1) / 2;
  for (const auto& root : r.roots.roots) r.max_deviation = std::max(r.max_deviation, HPReal(abs(root.re - half)));
  return r;
}

HPReal generating_check(const LProfile& prof, unsigned T) {
  const unsigned k = prof.weight;
  const PolyC r = period_polynomial(prof);
  const PolyC z = zeta_polynomial(prof).poly;
  HPReal worst = 0;
  for (unsigned n = 0; n <= T; ++n) {
    // [z^n] R(z) (1-z)^-(k-1) = sum_j r_j C(n-j+k-2, k-2)
    HPComplex coeff(HPReal(0));
    for (unsigned j = 0; j <= std::min(n, k - 2); ++j)
      coeff += r.coeff(j) * HPComplex(HPReal(binomial(n - j + k - 2, k - 2)));
    const HPComplex value = z(HPComplex(HPReal(-static_cast<long>(n))));
    worst = std::max(worst, abs(coeff - value));
  }
  return worst;
}

// ------------------------------------------------------- H-polynomials

namespace {

// C(s + c, e) as a polynomial in s.
template <class S>
Polynomial<S> binomial_poly(long c, unsigned e) {
  Polynomial<S> p = Polynomial<S>::constant(S(1));
  for (unsigned i = 0; i < e; ++i) p = p * Polynomial<S>(std::vector<S>{embed<S>(Rational(c - static_cast<long>(i))), S(1)});
  return p * embed<S>(Rational(BigInt(1), factorial(e)));
}

template <class S>
Polynomial<S> rv_impl(const Polynomial<S>& u) {
  if (u.is_zero()) throw DomainError("rv_transform: U must be nonzero");
  if (magnitude(u(S(1))) == 0) throw DomainError("rv_transform: U(1) = 0 is rejected (the degree would drop)");
  const unsigned e = static_cast<unsigned>(u.degree());
  Polynomial<S> h;
  for (unsigned j = 0; j <= e; ++j) {
    if (magnitude(u.coeff(j)) == 0) continue;
    h = h + binomial_poly<S>(static_cast<long>(e) - static_cast<long>(j), e) * u.coeff(j);
  }
  return h;
}

}  // namespace

PolyQ rv_transform(const PolyQ& u) { return rv_impl(u); }
PolyC rv_transform(const PolyC& u) { return rv_impl(u); }

PolyQ H_plus(unsigned k) {
  if (k < 4 || k % 2) throw DomainError("H_plus requires an even k >= 4");
  return binomial_poly<Rational>(k - 2, k - 2) + binomial_poly<Rational>(0, k - 2);
}

PolyQ H_minus(unsigned k) {
  if (k < 4 || k % 2) throw DomainError("H_minus requires an even k >= 4");
  PolyQ h;
  for (unsigned j = 0; j + 3 <= k; ++j)
    h = h + binomial_poly<Rational>(static_cast<long>(k) - 3 - static_cast<long>(j), k - 3);
  return h;
}

std::vector<HPReal> hk_zero_solver(unsigned k, int sign) {
  if (k < 6 || k % 2) throw DomainError("hk_zero_solver requires an even k >= 6");
  if (sign != 1 && sign != -1) throw DomainError("hk_zero_solver: sign must be +1 or -1");
  const unsigned bits = WorkingPrecision::current_bits();
  std::vector<HPReal> out;
  {
    WorkingPrecision wp(bits + 32);
    const HPReal pi = pi_hp();
    auto h = [&](const HPReal& t) {
      HPReal acc = 0;
      for (unsigned j = 0; j + 3 <= k; ++j) acc += pi / 2 - atan(2 * t / HPReal(2 * j + 1));
      return acc;
    };
    std::vector<HPReal> targets;
    if (sign < 0) {
      for (unsigned i = 1; i + 3 <= k; ++i) targets.push_back(HPReal(i) * pi);
    } else {
      for (unsigned i = 0; i + 3 <= k; ++i) targets.push_back((HPReal(i) + HPReal(1) / 2) * pi);
    }
    const HPReal span = HPReal((k - 2) * (k - 2));
    const unsigned steps = bits + 48 + static_cast<unsigned>(std::ceil(std::log2(2.0 * (k - 2) * (k - 2))));
    for (const auto& target : targets) {
      HPReal lo = -span, hi = span;  // h decreasing: h(lo) > target > h(hi)
      if (!(h(lo) > target && h(hi) < target)) throw NumericFailure("hk_zero_solver: target outside the bracket");
      for (unsigned it = 0; it < steps; ++it) {
        HPReal mid = (lo + hi) / 2;
        if (h(mid) > target) lo = mid;
        else hi = mid;
      }
      out.push_back((lo + hi) / 2);
    }
  }
  for (auto& t : out) t = rounded(t);
  std::sort(out.begin(), out.end());
  return out;
}

BigInt ehrhart_simplex_count(unsigned k, unsigned long m) {
  if (k < 6 || k % 2) throw DomainError("ehrhart_simplex_count requires an even k >= 6");
  const unsigned d = k - 3;
  const double box = std::pow(2.0 * static_cast<double>(m) + 1.0, d);
  if (box > static_cast<double>(kEhrhartBoxLimit))
    throw DomainError("ehrhart_simplex_count: scan box (2m+1)^(k-3) exceeds " + std::to_string(kEhrhartBoxLimit));
  const long mm = static_cast<long>(m);
  // x = sum_i c_i e_i - c_0 sum e_i with c >= 0 and sum c = m gives c_0 = (m - sum x)/(d+1)
  // and c_i = x_i + c_0; both conditions are checked after scaling by d+1.
  std::vector<long> x(d, -mm);
  BigInt count = 0;
  while (true) {
    long sx = 0;
    for (auto v : x) sx += v;
    const long scaled_c0 = mm - sx;
    bool inside = scaled_c0 >= 0;
    for (std::size_t i = 0; inside && i < d; ++i) inside = static_cast<long>(d + 1) * x[i] + scaled_c0 >= 0;
    if (inside) ++count;
    std::size_t pos = 0;
    while (pos < d && x[pos] == mm) x[pos++] = -mm;
    if (pos == d) break;
    ++x[pos];
  }
  return count;
}

Weight4Result weight4_inequality_check(const LProfile& prof, const HPReal& tol) {
  if (prof.weight != 4) throw DomainError("weight4_inequality_check needs a weight-4 profile");
  prof.validate(tol);
  Weight4Result r;
  const HPReal scale = sqrt(HPReal(prof.level)) / (2 * pi_hp());
  // L(f,s) = Lambda(f,s) (2 pi / sqrt N)^s / Gamma(s)
  const HPReal l2 = prof.at(2) / (scale * scale);
  const HPReal l3 = prof.at(3) / (pow(scale, HPReal(3)) * 2);
  r.lhs = HPReal(prof.level) / (pi_hp() * pi_hp()) * l3 * l3;
  r.rhs = l2 * l2;
  r.inequality = r.lhs >= r.rhs;
  const auto roots = poly_roots(period_polynomial(prof));
  r.unit_circle = roots.converged;
  for (const auto& z : roots.roots) r.unit_circle = r.unit_circle && abs(abs(z) - 1) < HPReal("1e-20");
  return r;
}

HPReal hausdorff_distance(const std::vector<HPComplex>& a, const std::vector<HPComplex>& b) {
  if (a.empty() || b.empty()) throw DomainError("hausdorff_distance needs two nonempty sets");
  auto directed = [](const std::vector<HPComplex>& p, const std::vector<HPComplex>& q) {
    HPReal worst = 0;
    for (const auto& x : p) {
      HPReal best = abs(x - q.front());
      for (const auto& y : q) best = std::min(best, HPReal(abs(x - y)));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<ConvergenceRow> convergence_experiment(const std::vector<LProfile>& profiles) {
  if (profiles.empty()) throw DomainError("convergence_experiment needs at least one profile");
  const unsigned k = profiles.front().weight;
  const int sign = profiles.front().sign;
  for (const auto& p : profiles)
    if (p.weight != k || p.sign != sign) throw DomainError("convergence_experiment: profiles must share weight and sign");
  const PolyQ h = sign > 0 ? H_plus(k) : H_minus(k);
  const PolyC h_reflected = to_complex(h.compose_affine(Rational(-1), Rational(0)));
  const auto h_roots = poly_roots_checked(h_reflected);
  const HPReal kk = HPReal(k);
  const HPReal bound = sign > 0 ? (kk - 3) * (kk - HPReal(7) / 2) : (kk - 4) * (kk - HPReal(9) / 2);
  std::vector<ConvergenceRow> rows;
  for (const auto& p : profiles) {
    const auto z = zeta_polynomial(p);
    const auto roots = poly_roots_checked(z.poly);
    ConvergenceRow row;
    row.source = p.source;
    row.hausdorff = hausdorff_distance(roots, h_roots);
    row.max_ordinate = 0;
    for (const auto& r : roots) row.max_ordinate = std::max(row.max_ordinate, HPReal(abs(r.im)));
    row.bound = bound;
    row.within_bound = row.max_ordinate < bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

LProfile synthetic_profile(unsigned k, int sign, const HPReal& x) {
  if (k < 4 || k % 2) throw DomainError("synthetic_profile requires an even k >= 4");
  if (!(x > 0 && x < 1)) throw DomainError("synthetic_profile requires 0 < x < 1");
  LProfile p;
  p.weight = k;
  p.level = 1;
  p.sign = sign;
  p.lambda.assign(k - 1, HPReal(0));
  const unsigned c = k / 2;
  for (unsigned d = 0; d < c; ++d) {
    const HPReal v = (sign < 0 && d == 0) ? HPReal(0) : HPReal(pow(x, HPReal(c - 1 - d)));
    p.lambda[c + d - 1] = v;
    p.lambda[c - d - 1] = HPReal(sign) * v;
  }
  std::ostringstream os;
  os << "synthetic: k=" << k << " sign=" << sign << " x=" << static_cast<double>(x);
  p.source = os.str();
  return p;
}

}  // namespace pz
