#pragma once

#include <cmath>
#include <ostream>

#include "partzeta/common.hpp"

namespace pz {

/// Minimal complex number over an arbitrary real scalar. std::complex is only
/// specified for the built-in floating types, so multiprecision values use this.
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Real& s) { return a /= s; }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  friend std::ostream& operator<<(std::ostream& os, const Complex& z) {
    return os << '(' << z.re << (z.im < 0 ? " - " : " + ") << (z.im < 0 ? Real(-z.im) : z.im) << "i)";
  }
};

using HPComplex = Complex<HPReal>;

template <class Real>
Complex<Real> conj(const Complex<Real>& z) {
  return {z.re, -z.im};
}

template <class Real>
Real norm2(const Complex<Real>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class Real>
Real abs(const Complex<Real>& z) {
  using std::hypot;
  return hypot(z.re, z.im);
}

template <class Real>
Real arg(const Complex<Real>& z) {
  using std::atan2;
  return atan2(z.im, z.re);
}

template <class Real>
Complex<Real> exp(const Complex<Real>& z) {
  using std::cos;
  using std::exp;
  using std::sin;
  Real m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

/// Principal branch, arg in (-pi, pi].
template <class Real>
Complex<Real> log(const Complex<Real>& z) {
  using std::log;
  return {log(abs(z)), arg(z)};
}

template <class Real>
Complex<Real> sqrt(const Complex<Real>& z) {
  using std::sqrt;
  Real r = abs(z);
  Real a = sqrt((r + z.re) / 2);
  Real b = sqrt((r - z.re) / 2);
  if (z.im < 0) b = -b;
  return {a, b};
}

/// z^w on the principal branch of log z.
template <class Real>
Complex<Real> pow(const Complex<Real>& z, const Complex<Real>& w) {
  return exp(w * log(z));
}

/// x^(-s) for real x > 0, the workhorse of every Dirichlet-type sum.
template <class Real>
Complex<Real> pow_neg(const Real& x, const Complex<Real>& s) {
  using std::log;
  return exp(-s * Complex<Real>(log(x)));
}

inline HPComplex rounded(const HPComplex& z) { return {rounded(z.re), rounded(z.im)}; }

inline HPReal magnitude(const HPReal& x) { return abs(x); }
inline HPReal magnitude(const HPComplex& z) { return abs(z); }
inline HPReal magnitude(const Rational& q) { return to_hp(abs(q)); }

/// Exact rational carried into another scalar domain.
template <class S>
S embed(const Rational& q);
template <>
inline Rational embed<Rational>(const Rational& q) {
  return q;
}
template <>
inline HPReal embed<HPReal>(const Rational& q) {
  return to_hp(q);
}
template <>
inline HPComplex embed<HPComplex>(const Rational& q) {
  return HPComplex(to_hp(q));
}

/// e(x) = exp(2 pi i x) for rational x, sampled on exact angles.
inline HPComplex unit_root(long num, long den) {
  HPReal t = 2 * pi_hp() * HPReal(num) / HPReal(den);
  return {cos(t), sin(t)};
}

}  // namespace pz
