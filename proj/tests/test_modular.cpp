#include <random>

#include "doctest.h"
#include "partzeta/modular.hpp"
#include "partzeta/profile_io.hpp"
#include "partzeta/special.hpp"
#include "test_util.hpp"

using namespace pz;
using pz::testing::close;

namespace {

const HPReal& tol() {
  static const HPReal t = pow2_neg(200);
  return t;
}

const LProfile& delta() {
  static const LProfile p = build_LProfile_delta(tol());
  return p;
}

PolyC poly(std::vector<HPComplex> c) { return PolyC(std::move(c)); }

bool has_root_near(const std::vector<HPComplex>& roots, const HPComplex& z, const HPReal& eps) {
  for (const auto& r : roots)
    if (abs(r - z) < eps) return true;
  return false;
}

}  // namespace

TEST_SUITE("modular") {
  TEST_CASE("universal polynomials") {
    UniversalPolynomial f1 = universal_F(1);
    CHECK(f1.linear_coefficient == -2);
    CHECK(f1.terms.empty());
    UniversalPolynomial f2 = universal_F(2);
    CHECK(f2.linear_coefficient == -3);
    REQUIRE(f2.terms.size() == 1);
    CHECK(f2.terms[0].coefficient == Rational(1, 2));
    CHECK(f2.terms[0].powers == std::vector<std::pair<unsigned, unsigned>>{{2, 2}});
    CHECK(f2.to_string() == "F_2 = -3*x1 + 1/2*x2^2");
    UniversalPolynomial f4 = universal_F(4);
    CHECK(f4.linear_coefficient == Rational(-7, 2));
    // evaluate at a point where every monomial is visible separately
    std::vector<Rational> x{0, 1, 2, 3, 5};
    Rational expect = Rational(-7, 2) * 1 - Rational(4 * 3) + Rational(2 * 5) + Rational(16, 4) + Rational(9, 2);
    CHECK(f4.evaluate(x) == expect);
    CHECK(f4.terms.size() == 4);
  }

  TEST_CASE("tau") {
    auto t = tau_recursive(100);
    REQUIRE(t.size() == 100);
    CHECK(t[0] == 1);
    CHECK(t[1] == -24);
    CHECK(t[2] == 252);
    auto oracle = tau_eta_oracle(100);
    CHECK(oracle[0] == 1);
    CHECK(oracle[1] == -24);
    CHECK(oracle[2] == 252);
    CHECK(t == oracle);
  }

  TEST_CASE("eisenstein_coeffs") {
    auto e2 = eisenstein_coeffs(2, 5);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == -24);
    CHECK(e2[2] == -72);
    auto e4 = eisenstein_coeffs(4, 3);
    CHECK(e4[1] == 240);
    CHECK(e4[2] == 2160);
  }

  TEST_CASE("Delta profile") {
    const LProfile& p = delta();
    CHECK(p.weight == 12);
    CHECK(p.sign == 1);
    CHECK_NOTHROW(p.validate(HPReal("1e-20")));
    CHECK(abs(p.at(2) - p.at(10)) < tol());
    CHECK(abs(p.at(6) - p.at(6)) == 0);
    CHECK(abs(p.at(11) - HPReal("0.005958965")) < HPReal("1e-9"));
    auto d = delta_decomposition(p);
    CHECK(abs(d.even_constant - HPReal("0.114379")) < HPReal("1e-5"));
    CHECK(abs(d.odd_constant - HPReal("0.00926927")) < HPReal("1e-5"));
    CHECK(d.pattern_deviation < HPReal("1e-40"));
  }

  TEST_CASE("Delta period polynomial roots") {
    PolyC r = period_polynomial(delta());
    CHECK(r.degree() == 10);
    auto roots = poly_roots_checked(r);
    REQUIRE(roots.size() == 10);
    for (const auto& z : roots) CHECK(abs(abs(z) - 1) < HPReal("1e-10"));
    const HPReal eps("1e-3");
    CHECK(has_root_near(roots, HPComplex(HPReal(0), HPReal(1)), eps));
    CHECK(has_root_near(roots, HPComplex(HPReal(0), HPReal(-1)), eps));
    // the displayed -0.465 +- 0.885i
    CHECK(has_root_near(roots, HPComplex(HPReal("-0.465"), HPReal("0.885")), eps));
    CHECK(has_root_near(roots, HPComplex(HPReal("-0.465"), HPReal("-0.885")), eps));
  }

  TEST_CASE("odd sign period polynomial vanishes simply at 1") {
    LProfile p = synthetic_profile(8, -1, HPReal("0.3"));
    PolyC r = period_polynomial(p);
    CHECK(abs(r(HPComplex(1))) < tol());
    CHECK(abs(r.derivative()(HPComplex(1))) > HPReal("1e-3"));
  }

  TEST_CASE("moments") {
    const LProfile& p = delta();
    HPReal direct = 0;
    for (unsigned j = 0; j <= 10; ++j) direct += to_hp(binomial(10, j)) * p.at(j + 1);
    direct /= to_hp(factorial(10));
    CHECK(close(moments(p, 0), direct, pow2_neg(200)));
    CHECK(close(moments(p, 0), moments_first_form(p, 0), HPReal("1e-40")));
    CHECK(close(moments(p, 3), moments_first_form(p, 3), HPReal("1e-40")));

    LProfile odd = synthetic_profile(8, -1, HPReal("0.5"));
    LProfile changed = odd;
    changed.lambda[3] = 0;  // already zero at the center s = k/2
    for (unsigned m = 0; m < 4; ++m) CHECK(moments(odd, m) == moments(changed, m));
  }

  TEST_CASE("Delta zeta polynomial") {
    ZetaPolynomial z = zeta_polynomial(delta());
    REQUIRE(z.poly.degree() == 10);
    auto rel = [](const HPReal& a, const HPReal& b) { return abs(a - b) / abs(b); };
    CHECK(rel(z.poly.coeff(10).re, HPReal("5.11e-7")) < HPReal("0.01"));
    CHECK(rel(z.poly.coeff(0).re, HPReal("0.00596")) < HPReal("0.01"));
    auto fe = functional_eq_check(z.poly, 1);
    CHECK(fe.residual < HPReal("1e-25"));
    auto rh = rh_check(z.poly);
    CHECK(rh.max_deviation < HPReal("1e-20"));
    const HPReal eps("1e-3");
    for (const char* t : {"8.447", "5.002", "2.846", "1.352", "0.349"}) {
      CHECK(has_root_near(rh.roots.roots, HPComplex(HPReal(1) / 2, HPReal(t)), eps));
      CHECK(has_root_near(rh.roots.roots, HPComplex(HPReal(1) / 2, -HPReal(t)), eps));
    }
  }

  TEST_CASE("weight 4 odd sign has the single root 1/2") {
    ZetaPolynomial z = zeta_polynomial(synthetic_profile(4, -1, HPReal("0.5")));
    REQUIRE(z.poly.degree() == 1);
    auto roots = poly_roots_checked(z.poly);
    CHECK(close(roots[0], HPComplex(HPReal(1) / 2), pow2_neg(200)));
  }

  TEST_CASE("functional_eq_check controls") {
    PolyC sym = poly({HPComplex(0), HPComplex(1), HPComplex(-1)});  // s(1-s)
    CHECK(functional_eq_check(sym, 1).residual == 0);
    PolyC id = poly({HPComplex(0), HPComplex(1)});
    CHECK(functional_eq_check(id, 1).residual > HPReal("0.5"));
    PolyC odd = poly({HPComplex(HPReal(-1) / 2), HPComplex(1)});  // s - 1/2
    CHECK(functional_eq_check(odd, -1).residual == 0);
  }

  TEST_CASE("rh_check controls") {
    // (s - 1/2)(s - 0.4)
    const HPReal a("0.5"), b("0.4");
    PolyC p = poly({HPComplex(a * b), HPComplex(-(a + b)), HPComplex(1)});
    CHECK(abs(rh_check(p).max_deviation - HPReal("0.1")) < HPReal("1e-40"));

    PolyC h = to_complex(H_minus(6)).compose_affine(HPComplex(-1), HPComplex(0));
    auto r = rh_check(h);
    CHECK(r.max_deviation < HPReal("1e-40"));
    const HPReal eps = pow2_neg(190);
    CHECK(has_root_near(r.roots.roots, HPComplex(HPReal(1) / 2), eps));
    CHECK(has_root_near(r.roots.roots, HPComplex(HPReal(1) / 2, sqrt(HPReal(11)) / 2), eps));
    CHECK(has_root_near(r.roots.roots, HPComplex(HPReal(1) / 2, -sqrt(HPReal(11)) / 2), eps));
  }

  TEST_CASE("generating_check") {
    CHECK(generating_check(delta(), 12) < HPReal("1e-20"));
    CHECK(generating_check(synthetic_profile(4, 1, HPReal("0.5")), 6) < HPReal("1e-20"));
    ZetaPolynomial z = zeta_polynomial(delta());
    CHECK(close(z.poly(HPComplex(0)).re, delta().at(11), pow2_neg(190)));
  }

  TEST_CASE("generating_check tightens with precision") {
    HPReal lo, hi;
    {
      WorkingPrecision wp(128);
      lo = generating_check(build_LProfile_delta(pow2_neg(100)), 12);
    }
    hi = generating_check(delta(), 12);
    CHECK(lo < HPReal("1e-25"));
    CHECK(hi <= lo * lo * HPReal("1e10") + pow2_neg(240));
  }

  TEST_CASE("rv_transform") {
    PolyQ u(std::vector<Rational>{1, 1, 1, 1});
    CHECK(rv_transform(u) == H_minus(6));
    PolyQ h6 = H_minus(6);
    CHECK(h6 == PolyQ(std::vector<Rational>{1, Rational(7, 3), 1, Rational(2, 3)}));
    CHECK(rv_transform(PolyQ::constant(Rational(1))) == PolyQ::constant(Rational(1)));
    for (unsigned k : {6u, 8u, 12u}) {
      std::vector<Rational> c(k - 1, Rational(0));
      c.front() = 1;
      c.back() = 1;
      CHECK(rv_transform(PolyQ(c)) == H_plus(k));
    }
    CHECK_THROWS_AS(rv_transform(PolyQ(std::vector<Rational>{-1, 1})), DomainError);
  }

  TEST_CASE("rv_transform of unit-circle polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(0.2, 3.0);
    std::uniform_int_distribution<int> pairs(1, 4), coin(0, 1);
    HPReal worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<HPComplex> roots;
      const int n = pairs(rng);
      for (int i = 0; i < n; ++i) {
        const HPReal th(angle(rng));
        roots.emplace_back(cos(th), sin(th));
        roots.emplace_back(cos(th), -sin(th));
      }
      if (coin(rng)) roots.emplace_back(-1);
      PolyC u = PolyC::from_roots(roots);
      REQUIRE(abs(u(HPComplex(1))) > 0);
      PolyC h = rv_transform(u).compose_affine(HPComplex(-1), HPComplex(0));
      for (const auto& z : poly_roots_checked(h)) worst = std::max<HPReal>(worst, HPReal(abs(z.re - HPReal(1) / 2)));
    }
    CHECK(worst < HPReal("1e-20"));
  }

  TEST_CASE("hk_zero_solver") {
    auto t6 = hk_zero_solver(6, -1);
    REQUIRE(t6.size() == 3);
    const HPReal eps = pow2_neg(190);
    CHECK(close(t6[0], -sqrt(HPReal(11)) / 2, eps));
    CHECK(abs(t6[1]) < eps);
    CHECK(close(t6[2], sqrt(HPReal(11)) / 2, eps));
    CHECK(abs(t6.back() - HPReal(15) / (2 * pi_hp())) < 1);

    for (unsigned k : {6u, 10u, 14u}) {
      CHECK(hk_zero_solver(k, -1).size() == k - 3);
      CHECK(hk_zero_solver(k, 1).size() == k - 2);
    }
    auto t40 = hk_zero_solver(40, 1);
    CHECK(abs(t40.back() - HPReal(37 * 39) / pi_hp()) < 1);
  }

  TEST_CASE("ehrhart_simplex_count") {
    CHECK(ehrhart_simplex_count(6, 0) == 1);
    CHECK(ehrhart_simplex_count(6, 1) == 5);
    CHECK(ehrhart_simplex_count(6, 4) == 69);
    const PolyQ h = H_minus(6);
    for (unsigned long m = 0; m <= 8; ++m) CHECK(Rational(ehrhart_simplex_count(6, m)) == h(Rational(m)));
    CHECK(Rational(ehrhart_simplex_count(8, 3)) == H_minus(8)(Rational(3)));
  }

  TEST_CASE("weight 4 inequality") {
    LProfile trivial;
    trivial.weight = 4;
    trivial.level = 7;
    trivial.sign = -1;
    trivial.lambda = {HPReal("-0.3"), HPReal(0), HPReal("0.3")};
    auto r = weight4_inequality_check(trivial, HPReal("1e-20"));
    CHECK(r.holds());

    LProfile fixture = load_profile(std::string(PARTZETA_DATA_DIR) + "/weight4_level5.json");
    CHECK(fixture.weight == 4);
    auto f = weight4_inequality_check(fixture, HPReal("1e-20"));
    CHECK(f.holds());
    CHECK(f.unit_circle);
    CHECK(f.consistent());

    LProfile bad = fixture;
    bad.lambda[1] = fixture.lambda[0] * 2;  // breaks the monotone chain
    CHECK_THROWS_AS(weight4_inequality_check(bad, HPReal("1e-20")), DomainError);
  }

  TEST_CASE("profile validation") {
    LProfile p = delta();
    p.lambda[0] += HPReal("1e-6");  // functional equation broken
    CHECK_THROWS_AS(p.validate(HPReal("1e-20")), DomainError);
    LProfile short_one = delta();
    short_one.lambda.pop_back();
    CHECK_THROWS_AS(short_one.validate(HPReal("1e-20")), DomainError);
  }

  TEST_CASE("convergence_experiment") {
    auto rows = convergence_experiment({delta()});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].bound == HPReal("76.5"));
    CHECK(rows[0].within_bound);
    CHECK(abs(rows[0].max_ordinate - HPReal("8.447")) < HPReal("1e-3"));

    auto trend = convergence_experiment({synthetic_profile(12, 1, HPReal("0.1")), synthetic_profile(12, 1, HPReal("0.01"))});
    REQUIRE(trend.size() == 2);
    CHECK(trend[1].hausdorff < trend[0].hausdorff);
    CHECK_THROWS_AS(convergence_experiment({delta(), synthetic_profile(10, 1, HPReal("0.1"))}), DomainError);
  }

  TEST_CASE("profile JSON round trip") {
    const LProfile& p = delta();
    LProfile q = profile_from_json(profile_to_json(p));
    CHECK(q.weight == p.weight);
    CHECK(q.level == p.level);
    CHECK(q.sign == p.sign);
    REQUIRE(q.lambda.size() == p.lambda.size());
    for (std::size_t i = 0; i < p.lambda.size(); ++i) CHECK(abs(q.lambda[i] - p.lambda[i]) < HPReal("1e-38"));
    CHECK_THROWS_AS(profile_from_json(nlohmann::json::parse(R"({"weight": 4})")), DomainError);
  }
}
