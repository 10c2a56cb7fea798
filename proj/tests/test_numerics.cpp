#include <random>

#include "doctest.h"
#include "partzeta/bell.hpp"
#include "partzeta/roots.hpp"
#include "partzeta/series.hpp"
#include "partzeta/special.hpp"
#include "partzeta/tables.hpp"
#include "test_util.hpp"

using namespace pz;
using pz::testing::close;

TEST_SUITE("numerics") {
  TEST_CASE("log_gamma at simple points") {
    const HPReal tol = pow2_neg(240);
    CHECK(abs(log_gamma(HPComplex(1))) < tol);
    CHECK(close(log_gamma(HPComplex(HPReal(1) / 2)).re, log(sqrt(pi_hp())), tol));
    CHECK(close(log_gamma(HPReal(5)), log(HPReal(24)), tol));
  }

  TEST_CASE("log_gamma at 1+i against the Legendre series") {
    // log Gamma(1+i) = log Gamma(1-z) with z = -i; |z| = 1 needs many terms,
    // so compare at 1 + i/2 and shift with the recurrence instead.
    const HPComplex z(HPReal(0), HPReal(-1) / 2);
    HPComplex legendre = log_gamma_one_minus_legendre(z, 400);
    HPComplex direct = log_gamma(HPComplex(HPReal(1), HPReal(1) / 2));
    CHECK(close(legendre, direct, pow2_neg(200)));
    HPComplex a = log_gamma(HPComplex(HPReal(1), HPReal(1)));
    HPComplex b = log_gamma(HPComplex(HPReal(2), HPReal(1))) - log(HPComplex(HPReal(1), HPReal(1)));
    CHECK(close(a, b, pow2_neg(240)));
  }

  TEST_CASE("log_gamma recurrence and reflection") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(0.05, 20.0), im(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
      HPComplex z(HPReal(re(rng)), HPReal(im(rng)));
      HPComplex lhs = log_gamma(z + HPComplex(1)) - log_gamma(z) - log(z);
      // branch differences are integer multiples of 2 pi i
      HPReal k = round(lhs.im / (2 * pi_hp()));
      CHECK(abs(lhs.re) < pow2_neg(220));
      CHECK(abs(lhs.im - 2 * pi_hp() * k) < pow2_neg(220));
    }
    for (double y : {0.1, 0.5, 1.0, 2.0, 2.9}) {
      HPReal yy(y);
      HPComplex s = log_gamma(HPComplex(HPReal(1), yy)) + log_gamma(HPComplex(HPReal(1), -yy));
      HPReal expect = pi_hp() * yy / sinh(pi_hp() * yy);
      CHECK(close(exp(s.re), expect, pow2_neg(220)));
    }
  }

  TEST_CASE("log_gamma rejects poles") {
    CHECK_THROWS_AS(log_gamma(HPComplex(0)), DomainError);
    CHECK_THROWS_AS(log_gamma(HPComplex(-3)), DomainError);
  }

  TEST_CASE("riemann_zeta values") {
    const HPReal tol = pow2_neg(240);
    CHECK(close(riemann_zeta(HPReal(2)), pi_hp() * pi_hp() / 6, tol));
    CHECK(zeta_nonpositive(1) == Rational(-1, 12));
    CHECK(close(riemann_zeta(HPReal(-1)), HPReal(-1) / 12, tol));
    CHECK(zeta_nonpositive(2) == 0);
    // zeta(3) by direct summation with an Euler-Maclaurin tail
    HPReal sum = 0;
    const long n = 2000;
    for (long j = 1; j < n; ++j) sum += HPReal(1) / (HPReal(j) * j * j);
    HPReal N(n);
    sum += 1 / (2 * N * N) + 1 / (2 * N * N * N) + HPReal(3) / (12 * N * N * N * N);
    CHECK(abs(riemann_zeta(HPReal(3)) - sum) < HPReal("1e-17"));
    CHECK(close(riemann_zeta(HPReal(3)), HPReal("1.2020569031595942853997381615114499907649862923405"),
                HPReal("1e-48")));
    CHECK_THROWS_AS(riemann_zeta(HPReal(1)), DomainError);
  }

  TEST_CASE("euler_bernoulli_genfunc_check") {
    CHECK(euler_bernoulli_genfunc_check(3));
    CHECK(euler_bernoulli_genfunc_check(4));
    CHECK(euler_bernoulli_genfunc_check(12));
    auto c = euler_bernoulli_coefficients(4);
    CHECK(c[0] == 1);
    CHECK(c[1] == Rational(1, 2));
    CHECK(c[2] == Rational(1, 12));
    CHECK(c[3] == 0);
  }

  TEST_CASE("incomplete_gamma_upper") {
    CHECK(close(incomplete_gamma_upper(HPReal(1), HPReal(1)), exp(HPReal(-1)), pow2_neg(240)));
    CHECK(close(incomplete_gamma_upper(HPReal(2), HPReal("1e-40")), HPReal(1), HPReal("1e-30")));
    // Integer s: Gamma(n, x) = (n-1)! e^-x sum_{j<n} x^j / j!
    const HPReal x = 2 * pi_hp();
    HPReal term = 1, acc = 0;
    for (int j = 0; j < 12; ++j) {
      acc += term;
      term *= x / (j + 1);
    }
    HPReal expect = to_hp(factorial(11)) * exp(-x) * acc;
    CHECK(abs(incomplete_gamma_upper(HPReal(12), x) - expect) < expect * HPReal("1e-60"));
  }

  TEST_CASE("complete_bell") {
    CHECK(complete_bell(std::vector<Rational>{Rational(3)}) == 3);
    CHECK(complete_bell(std::vector<Rational>{1, 1}) == 2);
    CHECK(complete_bell(std::vector<Rational>{1, 1, 1}) == 5);
    CHECK(complete_bell(std::vector<Rational>{1, 1, 1, 1, 1}) == 52);
    HPReal v = complete_bell(std::vector<HPReal>{HPReal(1), HPReal(1), HPReal(1)});
    CHECK(close(v, HPReal(5), pow2_neg(240)));
  }

  TEST_CASE("poly_roots") {
    const HPReal tol = pow2_neg(200);
    PolyC p(std::vector<HPComplex>{HPComplex(1), HPComplex(0), HPComplex(1)});
    auto r = poly_roots_checked(p);
    REQUIRE(r.size() == 2);
    CHECK(close(r[0], HPComplex(HPReal(0), HPReal(-1)), tol));
    CHECK(close(r[1], HPComplex(HPReal(0), HPReal(1)), tol));

    // (z - 1/2)^2 + 11/4 = z^2 - z + 3
    PolyC q(std::vector<HPComplex>{HPComplex(3), HPComplex(-1), HPComplex(1)});
    auto rq = poly_roots_checked(q);
    REQUIRE(rq.size() == 2);
    CHECK(close(rq[1], HPComplex(HPReal(1) / 2, sqrt(HPReal(11)) / 2), tol));
    CHECK(close(rq[0], HPComplex(HPReal(1) / 2, -sqrt(HPReal(11)) / 2), tol));

    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<HPComplex> roots;
    for (int i = 0; i < 8; ++i) roots.emplace_back(HPReal(u(rng)), HPReal(u(rng)));
    auto found = poly_roots_checked(PolyC::from_roots(roots));
    REQUIRE(found.size() == 8);
    for (const auto& z : roots) {
      HPReal best = abs(z - found[0]);
      for (const auto& w : found) best = std::min<HPReal>(best, HPReal(abs(z - w)));
      CHECK(best < HPReal("1e-30"));
    }
  }

  TEST_CASE("poly_roots rejects constants") {
    CHECK_THROWS_AS(poly_roots(PolyC::constant(HPComplex(2))), DomainError);
  }

  TEST_CASE("Stirling numbers") {
    StirlingTable s(20);
    const long row6[] = {0, -120, 274, -225, 85, -15, 1};
    for (unsigned k = 0; k <= 6; ++k) CHECK(s(6, k) == row6[k]);
    for (unsigned n = 0; n <= 20; ++n) {
      PolyQ falling = PolyQ::constant(Rational(1));
      for (unsigned j = 0; j < n; ++j) falling = falling * PolyQ(std::vector<Rational>{Rational(-static_cast<long>(j)), 1});
      for (unsigned k = 0; k <= n; ++k) CHECK(Rational(s(n, k)) == falling.coeff(k));
    }
  }

  TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    for (unsigned n = 3; n < 40; n += 2) CHECK(bernoulli(n) == 0);
    for (unsigned n = 0; n <= 30; ++n) CHECK(bernoulli(n) == bernoulli_akiyama_tanigawa(n));
    // sum_{j<n} C(n,j) B_j = 0 for n >= 2
    for (unsigned n = 2; n <= 30; ++n) {
      Rational acc = 0;
      for (unsigned j = 0; j < n; ++j) acc += Rational(binomial(n, j)) * bernoulli(j);
      CHECK(acc == 0);
    }
  }

  TEST_CASE("series round trips") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 8; ++trial) {
      TruncatedSeries<Rational> s(10);
      for (std::size_t i = 1; i <= 10; ++i) s[i] = Rational(d(rng), 1 + (d(rng) + 9));
      CHECK(s.exp().log().coefficients() == s.coefficients());
      TruncatedSeries<Rational> t = s;
      t[0] = Rational(1 + trial);
      auto prod = t * t.reciprocal();
      CHECK(prod.coefficients() == TruncatedSeries<Rational>::one(10).coefficients());
    }
  }

  TEST_CASE("working precision guards nest") {
    const unsigned outer = WorkingPrecision::current_bits();
    {
      WorkingPrecision wp(512);
      CHECK(WorkingPrecision::requested_bits() == 512);
      CHECK(WorkingPrecision::current_bits() >= 512);
      CHECK(precision_of(HPReal(1)) >= 512);
    }
    CHECK(WorkingPrecision::current_bits() == outer);
  }
}
