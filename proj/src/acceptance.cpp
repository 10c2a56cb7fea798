#include "partzeta/acceptance.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "partzeta/fixedlen.hpp"
#include "partzeta/modular.hpp"
#include "partzeta/padic.hpp"
#include "partzeta/pzeta.hpp"
#include "partzeta/special.hpp"

namespace pz {

namespace {

std::string sci(const HPReal& x) { return format_decimal(x, 3); }

struct Outcome {
  bool pass;
  std::string detail;
};

HPReal tolerance() { return pow2_neg(200); }

// The Delta profile is shared by criteria 12-14.
const LProfile& delta_profile() {
  static const LProfile prof = build_LProfile_delta(tolerance());
  return prof;
}

Outcome c1() {
  const HPComplex s(HPReal(2));
  const auto spec = PartSet::parse("2N");
  const HPReal euler = euler_product(spec, s, tolerance()).value.re;
  const HPReal gamma_route = closed_form_gamma(0, 2, 2);
  const auto mult = log_eval_multiples(2, s, tolerance());
  if (mult.is_pole()) return {false, "log_eval_multiples reported a pole at s = 2"};
  const HPReal log_route = exp(std::get<HPComplex>(mult.value).re);
  const HPReal target = pi_hp() / 2;
  const HPReal dev = std::max({abs(euler - gamma_route), abs(euler - log_route), abs(gamma_route - log_route)});
  const HPReal off = abs(euler - target);
  return {dev < HPReal("1e-35") && off < HPReal("1e-35"),
          "max pairwise deviation " + sci(dev) + ", |euler - pi/2| " + sci(off)};
}

Outcome c2() {
  const HPReal pi = pi_hp();
  const HPReal v1 = euler_product(PartSet::parse("geq:2"), HPComplex(HPReal(3)), tolerance()).value.re;
  const HPReal e1 = abs(v1 - 3 * pi / cosh(pi * sqrt(HPReal(3)) / 2));
  const HPReal v2 = euler_product(PartSet::parse("distinct"), HPComplex(HPReal(2)), tolerance()).value.re;
  const HPReal e2 = abs(v2 - sinh(pi) / pi);
  return {e1 < HPReal("1e-30") && e2 < HPReal("1e-30"), "geq:2 at 3: " + sci(e1) + ", distinct at 2: " + sci(e2)};
}

Outcome c3() {
  const HPReal pi = pi_hp();
  HPReal worst = 0;
  for (unsigned long m = 2; m <= 6; ++m) {
    const HPReal x = pi / HPReal(m);
    const HPReal two = pi / (HPReal(m) * sin(x));
    const HPReal four = pi * pi / (HPReal(m * m) * sin(x) * sinh(x));
    worst = std::max(worst, HPReal(abs(closed_form_gamma(0, m, 2) - two)));
    worst = std::max(worst, HPReal(abs(closed_form_gamma(0, m, 4) - four)));
  }
  return {worst < HPReal("1e-30"), "max error over m = 2..6, n in {2,4}: " + sci(worst)};
}

Outcome c4() {
  std::ostringstream bad;
  for (unsigned k = 1; k <= 10; ++k) {
    const Rational expected = Rational(bmp::pow(BigInt(2), 2 * k - 1) - 1, bmp::pow(BigInt(2), 2 * k - 2)) *
                              zeta_even_over_pi_power(2L * k);
    const auto got = fixedlen_zeta_exact(2, k);
    if (got.coefficient != expected || got.pi_power != 2L * k) bad << " (2," << k << ")";
  }
  for (unsigned m = 2; m <= 8; m += 2)
    for (unsigned k = 1; k <= 8; ++k)
      if (!(fixedlen_zeta_exact(m, k) == fixedlen_zeta_series_exact(m, k))) bad << " det!=series(" << m << "," << k << ")";
  const std::string b = bad.str();
  return {b.empty(), b.empty() ? "exact for k <= 10; routes agree for even m <= 8, k <= 8" : "mismatch:" + b};
}

Outcome c5() {
  std::ostringstream bad;
  for (unsigned k = 1; k <= 10; ++k) {
    const PiMultiple expected{Rational(BigInt(1), factorial(2 * k + 1)), 2L * k};
    if (!(mzv_equal_args_exact(2, k) == expected)) bad << " series k=" << k;
    if (!(mzv_equal_args_determinant(2, k) == expected)) bad << " determinant k=" << k;
  }
  const std::string b = bad.str();
  return {b.empty(), b.empty() ? "zeta({2}^k) = pi^(2k)/(2k+1)! for k = 1..10 by both routes" : "mismatch:" + b};
}

Outcome c6() {
  const bool exact = fixedlen_zeta_exact(2, 2).coefficient == Rational(7, 360) &&
                     zeta_even_over_pi_power(4) == Rational(1, 90) &&
                     mzv_equal_args_exact(2, 2).coefficient == Rational(1, 120) &&
                     Rational(7, 360) == Rational(1, 120) + Rational(1, 90);
  const auto a = decoupling_check(2, 3, 1000);
  const auto b = decoupling_check(3, 2, 1000);
  const bool ok = exact && abs(a.diff) <= a.tail_estimate && abs(b.diff) <= b.tail_estimate;
  return {ok, std::string("exact (2,2): ") + (exact ? "yes" : "no") + "; (2,3) diff " + sci(abs(a.diff)) + " <= tail " +
                  sci(a.tail_estimate) + "; (3,2) diff " + sci(abs(b.diff)) + " <= tail " + sci(b.tail_estimate)};
}

Outcome c7() {
  const auto r = shuffle_check(HPReal(3), 10000);
  return {abs(r.diff) < HPReal("1e-6"), "|diff| " + sci(abs(r.diff)) + " (tail estimate " + sci(r.tail_estimate) + ")"};
}

Outcome c8() {
  const std::vector<std::pair<long, long>> grid = {{1, 5}, {1, 4}, {3, 10}, {1, 3}, {2, 5}, {9, 20},
                                                   {1, 2}, {3, 5}, {3, 4}, {1, 1}, {3, 2}, {2, 1}, {3, 1}};
  std::vector<std::string> poles;
  bool finite_ok = true;
  for (const auto& [num, den] : grid) {
    const HPReal s = HPReal(num) / HPReal(den);
    const auto r = log_eval_multiples(2, HPComplex(s), tolerance());
    if (r.is_pole()) {
      poles.push_back(std::to_string(num) + "/" + std::to_string(den));
    } else {
      const HPComplex v = std::get<HPComplex>(r.value);
      finite_ok = finite_ok && boost::multiprecision::isfinite(v.re) && boost::multiprecision::isfinite(v.im);
    }
  }
  const std::vector<std::string> expected = {"1/5", "1/4", "1/3", "1/2", "1/1"};
  std::string list;
  for (const auto& p : poles) list += (list.empty() ? "" : ",") + p;
  return {poles == expected && finite_ok, "poles flagged at {" + list + "}, other grid values finite: " +
                                             (finite_ok ? "yes" : "no")};
}

Outcome c9() {
  const HPReal e2 = abs(zeta_via_mobius(2, 2, 20) - zeta_int(2));
  const HPReal e3 = abs(zeta_via_mobius(2, 3, 20) - zeta_int(3));
  return {e2 < HPReal("1e-8") && e3 < HPReal("1e-10"), "m = 2, K = 20: zeta(2) error " + sci(e2) + ", zeta(3) error " + sci(e3)};
}

Outcome c10() {
  std::mt19937_64 rng(20240601);
  const std::vector<unsigned long> primes = {5, 7, 11, 13, 17, 19, 23};
  unsigned passed = 0, total = 0;
  std::string first_fail;
  while (total < 200) {
    const unsigned long p = primes[rng() % primes.size()];
    const unsigned a = (p <= 13) ? static_cast<unsigned>(rng() % 2) : 0;
    unsigned long k1 = 2 + 2 * (rng() % 30);
    if (k1 % (p - 1) == 0) continue;
    unsigned long period = (p - 1);
    for (unsigned i = 0; i < a; ++i) period *= p;
    const unsigned long k2 = k1 + period * (1 + rng() % 2);
    ++total;
    if (kummer_check(p, a, k1, k2)) {
      ++passed;
    } else if (first_fail.empty()) {
      first_fail = " first failure p=" + std::to_string(p) + " a=" + std::to_string(a) + " k1=" + std::to_string(k1);
    }
  }
  std::ostringstream os;
  os << "Kummer " << passed << "/" << total << ";" << first_fail << " interpolation";
  bool interp_ok = true;
  for (const auto& [k, p] : std::vector<std::pair<unsigned, unsigned long>>{{1, 5}, {2, 7}, {3, 11}}) {
    for (unsigned a = 0; a <= 1; ++a) {
      const unsigned long m2 = suggest_m2(p, a, 2);
      const auto v = interpolation_valuation(p, a, k, 2, m2);
      const bool ok = !v || *v >= static_cast<long>(a) + 1;
      interp_ok = interp_ok && ok;
      os << " (k=" << k << ",p=" << p << ",a=" << a << ",m2=" << m2 << ",v=" << (v ? std::to_string(*v) : "inf") << ")";
    }
  }
  return {passed == total && interp_ok, os.str()};
}

Outcome c11() {
  const auto rec = tau_recursive(100);
  const auto eta = tau_eta_oracle(100);
  const bool ok = rec == eta && rec[1] == -24 && rec[2] == 252;
  return {ok, "tau(1..100) recursion vs eta product: " + std::string(rec == eta ? "identical" : "differ") +
                  "; tau(2) = " + rec[1].str() + ", tau(3) = " + rec[2].str()};
}

Outcome c12a() {
  const auto roots = poly_roots(period_polynomial(delta_profile()));
  HPReal worst = 0;
  for (const auto& z : roots.roots) worst = std::max(worst, HPReal(abs(abs(z) - 1)));
  return {roots.converged && roots.roots.size() == 10 && worst < HPReal("1e-10"),
          std::to_string(roots.roots.size()) + " roots, max ||z| - 1| " + sci(worst)};
}

Outcome c12b() {
  const auto roots = poly_roots(period_polynomial(delta_profile())).roots;
  const double listed[][2] = {{0, 1}, {-0.465, 0.885}, {-0.744, 0.668}, {-0.911, 0.411}, {-0.990, 0.140}};
  std::vector<HPComplex> expected;
  for (const auto& r : listed) {
    expected.emplace_back(HPReal(r[0]), HPReal(r[1]));
    expected.emplace_back(HPReal(r[0]), HPReal(-r[1]));
  }
  HPReal worst = 0;
  std::string worst_at;
  for (const auto& e : expected) {
    HPReal best = abs(e - roots.front());
    for (const auto& z : roots) best = std::min(best, HPReal(abs(e - z)));
    if (best > worst) {
      worst = best;
      worst_at = format_decimal(e.re, 3) + (e.im < 0 ? " - " : " + ") + format_decimal(abs(e.im), 3) + "i";
    }
  }
  return {worst < HPReal("1e-3") && hausdorff_distance(roots, expected) < HPReal("1e-3"),
          "largest distance to a listed root " + sci(worst) + " at " + worst_at};
}

Outcome c12c() {
  const auto d = delta_decomposition(delta_profile());
  const HPReal e1 = abs(d.even_constant - HPReal("0.114379"));
  const HPReal e2 = abs(d.odd_constant - HPReal("0.00926927"));
  return {e1 < HPReal("1e-5") && e2 < HPReal("1e-5"), "constants " + format_decimal(d.even_constant, 8) + " / " +
                                                          format_decimal(d.odd_constant, 8) + ", pattern deviation " +
                                                          sci(d.pattern_deviation)};
}

Outcome c13() {
  const auto z = zeta_polynomial(delta_profile());
  const auto fe = functional_eq_check(z.poly, 1);
  const auto rh = rh_check(z.poly);
  const double listed[] = {8.447, 5.002, 2.846, 1.352, 0.349};
  HPReal worst = 0;
  for (double t : listed) {
    for (int sgn : {1, -1}) {
      const HPReal target = HPReal(t) * sgn;
      HPReal best = abs(rh.roots.roots.front().im - target);
      for (const auto& r : rh.roots.roots) best = std::min(best, HPReal(abs(r.im - target)));
      worst = std::max(worst, best);
    }
  }
  const bool ok = fe.residual < HPReal("1e-25") && rh.max_deviation < HPReal("1e-20") && worst < HPReal("1e-3") &&
                  rh.roots.roots.size() == 10;
  return {ok, "functional equation residual " + sci(fe.residual) + ", max |Re - 1/2| " + sci(rh.max_deviation) +
                  ", max ordinate error " + sci(worst)};
}

Outcome c14() {
  LProfile synthetic;
  synthetic.weight = 4;
  synthetic.level = 7;
  synthetic.sign = 1;
  synthetic.lambda = {HPReal(3), HPReal(2), HPReal(3)};
  synthetic.source = "synthetic weight 4";
  synthetic.validate(tolerance());
  const HPReal a = generating_check(delta_profile(), 12);
  const HPReal b = generating_check(synthetic, 12);
  return {a < HPReal("1e-20") && b < HPReal("1e-20"), "Delta mismatch " + sci(a) + ", synthetic k=4 mismatch " + sci(b)};
}

Outcome c15() {
  std::ostringstream os;
  bool ok = true;
  const PolyQ h = rv_transform(PolyQ(std::vector<Rational>{1, 1, 1, 1}));
  const bool exact = h == PolyQ(std::vector<Rational>{Rational(1), Rational(7, 3), Rational(1), Rational(2, 3)}) &&
                     h == H_minus(6);
  ok = ok && exact;
  os << "rv_transform exact: " << (exact ? "yes" : "no");
  {
    const auto roots = poly_roots_checked(to_complex(h.compose_affine(Rational(-1), Rational(0))));
    const HPReal t = sqrt(HPReal(11)) / 2;
    const std::vector<HPComplex> expected = {HPComplex(HPReal(1) / 2, -t), HPComplex(HPReal(1) / 2),
                                             HPComplex(HPReal(1) / 2, t)};
    const HPReal d = hausdorff_distance(roots, expected);
    ok = ok && d < HPReal("1e-30");
    os << "; H_6^-(-s) roots off by " << sci(d);
  }
  HPReal worst = 0;
  for (unsigned k : {6u, 8u, 12u}) {
    for (int sign : {-1, 1}) {
      const PolyQ hk = sign < 0 ? H_minus(k) : H_plus(k);
      auto roots = poly_roots_checked(to_complex(hk.compose_affine(Rational(-1), Rational(0))));
      std::vector<HPReal> ords;
      for (const auto& r : roots) ords.push_back(r.im);
      std::sort(ords.begin(), ords.end());
      const auto solved = hk_zero_solver(k, sign);
      if (solved.size() != ords.size()) {
        ok = false;
        os << "; count mismatch at k=" << k;
        continue;
      }
      for (std::size_t i = 0; i < ords.size(); ++i) worst = std::max(worst, HPReal(abs(ords[i] - solved[i])));
    }
  }
  ok = ok && worst < HPReal("1e-20");
  os << "; bisection vs roots (k = 6, 8, 12) " << sci(worst);
  HPReal slack = 0;
  for (unsigned k : {20u, 30u, 40u}) {
    for (int sign : {-1, 1}) {
      const HPReal top = hk_zero_solver(k, sign).back();
      const HPReal c = HPReal((k - 3) * (k - 1)) / pi_hp();
      slack = std::max(slack, HPReal(abs(top - (sign < 0 ? c / 2 : c))));
    }
  }
  ok = ok && slack < 1;
  os << "; largest-ordinate offset (k = 20, 30, 40) " << format_decimal(slack, 4);
  return {ok, os.str()};
}

Outcome c16() {
  const PolyQ h = H_minus(6);
  std::ostringstream os;
  bool ok = true;
  for (unsigned m = 0; m <= 8; ++m) {
    const BigInt count = ehrhart_simplex_count(6, m);
    const Rational expected = h(Rational(m));
    ok = ok && Rational(count) == expected;
    os << (m ? "," : "") << count;
  }
  return {ok, "counts m = 0..8: " + os.str()};
}

Outcome c17() {
  const bool ok = euler_bernoulli_genfunc_check(12);
  return {ok, ok ? "all coefficients through t^12 match" : "coefficient mismatch"};
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"1", "three routes for the 2N value at s = 2 agree with pi/2", c1},
      {"2", "parts >= 2 at s = 3 and distinct parts at s = 2", c2},
      {"3", "gamma closed forms for parts in mN at n = 2, 4", c3},
      {"4", "exact rationality of fixed-length values", c4},
      {"5", "equal-argument MZV closed form", c5},
      {"6", "decoupling into compositions", c6},
      {"7", "shuffle identity at s = 3", c7},
      {"8", "pole structure over multiples of 2", c8},
      {"9", "Moebius-inverted series for zeta(2), zeta(3)", c9},
      {"10", "Kummer congruences and p-adic interpolation", c10},
      {"11", "tau recursion against the eta product", c11},
      {"12a", "R_Delta roots on the unit circle", c12a},
      {"12b", "R_Delta roots against the reference list", c12b},
      {"12c", "R_Delta decomposition constants", c12c},
      {"13", "Z_Delta functional equation, critical line, ordinates", c13},
      {"14", "generating function of Z(-n)", c14},
      {"15", "H-polynomials and their ordinates", c15},
      {"16", "Ehrhart count of the k = 6 simplex", c16},
      {"17", "Euler generating function coefficients", c17},
  };
  return list;
}

bool selected(const std::string& id, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& o : only) {
    if (o == id) return true;
    if (!o.empty() && id.rfind(o, 0) == 0 && id.size() == o.size() + 1 && std::isalpha(static_cast<unsigned char>(id.back())))
      return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> acceptance_ids() {
  std::vector<std::string> ids;
  for (const auto& c : criteria()) ids.push_back(c.id);
  return ids;
}

std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& only) {
  WorkingPrecision wp(kDefaultPrecisionBits);
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!selected(c.id, only)) continue;
    CriterionResult r{c.id, c.title, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run();
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.id << (r.id.size() < 3 ? std::string(3 - r.id.size(), ' ') : "") << " "
     << r.title << " | " << r.detail;
  os.precision(2);
  os << std::fixed << " (" << r.seconds << " s)";
  return os.str();
}

}  // namespace pz
