#include "doctest.h"
#include "partzeta/padic.hpp"
#include "partzeta/tables.hpp"
#include "test_util.hpp"

using namespace pz;

TEST_SUITE("padic") {
  TEST_CASE("zeta_star_neg") {
    CHECK(zeta_star_neg(5, 2) == Rational(1, 3));
    CHECK(zeta_star_neg(7, 2) == Rational(1, 2));
    CHECK(zeta_star_neg(5, 4) == Rational(-31, 30));
    CHECK_THROWS_AS(zeta_star_neg(5, 3), DomainError);
  }

  TEST_CASE("padic_valuation") {
    CHECK_FALSE(padic_valuation(Rational(0), 5).has_value());
    CHECK(padic_valuation(Rational(50, 3), 5) == 2);
    CHECK(padic_valuation(Rational(-1562, 21), 7) == -1);
    CHECK(padic_valuation(Rational(1), 3) == 0);
    CHECK_THROWS_AS(padic_valuation(Rational(2), 4), DomainError);
  }

  TEST_CASE("kummer_check") {
    CHECK(kummer_check(5, 0, 2, 6));
    CHECK_THROWS_AS(kummer_check(5, 0, 2, 4), DomainError);
    CHECK(kummer_check(7, 1, 2, 44));
    // the two stripped values at k1 = 2 and k2 = 6 for p = 5
    Rational a = zeta_star_neg(5, 2), b = zeta_star_neg(5, 6);
    CHECK(a == Rational(1, 3));
    auto v = padic_valuation(a - b, 5);
    REQUIRE(v.has_value());
    CHECK(*v >= 1);
  }

  TEST_CASE("PadicContext validation") {
    CHECK_NOTHROW(PadicContext{7, 1, 2}.validate());
    CHECK_THROWS_AS((PadicContext{4, 0, 1}).validate(), DomainError);
    CHECK_THROWS_AS((PadicContext{2, 0, 1}).validate(), DomainError);
    CHECK_THROWS_AS((PadicContext{5, 0, 3}).validate(), DomainError);
  }

  TEST_CASE("padic_fixedlen") {
    CHECK(padic_fixedlen({5, 0, 1}, 2) == Rational(1, 3));
    for (unsigned long m : {2UL, 4UL, 6UL, 10UL})
      CHECK(padic_fixedlen({11, 0, 1}, m) == zeta_star_neg(11, m));
    // 2x2 determinant with entries zeta*(-1), zeta*(-2) = 0 and the sub-diagonal -1
    const Rational z1 = zeta_star_neg(7, 2);
    CHECK(padic_fixedlen({7, 1, 2}, 2) == z1 * z1 / 2);
  }

  TEST_CASE("interpolation_check") {
    CHECK(interpolation_check(5, 1, 1, 2, 22));
    CHECK(interpolation_check(7, 1, 2, 2, 44));
    CHECK(interpolation_check(7, 0, 2, 2, 8));
    CHECK(interpolation_check(7, 1, 2, 44, 2) == interpolation_check(7, 1, 2, 2, 44));
    CHECK(interpolation_valuation(7, 1, 2, 2, 44) == interpolation_valuation(7, 1, 2, 44, 2));
    CHECK(suggest_m2(7, 1, 2) == 44);
    CHECK(suggest_m2(5, 1, 2) == 22);
    CHECK_THROWS_AS(interpolation_check(7, 1, 2, 2, 8), DomainError);
    CHECK_THROWS_AS(interpolation_check(7, 0, 2, 3, 9), DomainError);
  }

  TEST_CASE("factorial ratios stay p-integral") {
    // (k-i)!/(k-j)! for p >= k+3 never introduce p in a denominator
    for (unsigned long p : {5UL, 7UL, 11UL, 13UL})
      for (unsigned k = 1; k + 3 <= p; ++k)
        for (unsigned i = 1; i <= k; ++i)
          for (unsigned j = i; j <= k; ++j) {
            Rational r(factorial(k - i), factorial(k - j));
            auto v = padic_valuation(r, p);
            REQUIRE(v.has_value());
            CHECK(*v >= 0);
          }
  }

  TEST_CASE("zeta_star values are p-integral") {
    for (unsigned long p : {5UL, 7UL, 11UL})
      for (unsigned long n = 2; n <= 40; n += 2) {
        if (n % (p - 1) == 0) continue;
        auto v = padic_valuation(zeta_star_neg(p, n), p);
        if (v) CHECK(*v >= 0);
      }
  }
}
