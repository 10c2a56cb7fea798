#pragma once

#include <algorithm>
#include <vector>

#include "partzeta/complex.hpp"

namespace pz {

/// Dense univariate polynomial, coefficients stored from degree 0 upwards.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const S& v) { return Polynomial(std::vector<S>{v}); }
  /// The monic polynomial (x - r_1)...(x - r_n).
  static Polynomial from_roots(const std::vector<S>& roots) {
    Polynomial p = constant(S(1));
    for (const auto& r : roots) p = p * Polynomial(std::vector<S>{-r, S(1)});
    return p;
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
  const std::vector<S>& coefficients() const { return c_; }
  const S& leading() const { return c_.back(); }

  /// Horner evaluation at a point of a possibly wider scalar type.
  template <class T>
  T operator()(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial derivative() const {
    std::vector<S> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * S(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  /// p(alpha * x + beta), by Horner over polynomials.
  Polynomial compose_affine(const S& alpha, const S& beta) const {
    Polynomial lin(std::vector<S>{beta, alpha});
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(*it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<S> r(std::max(a.c_.size(), b.c_.size()), S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * S(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const S& s) {
    std::vector<S> r = a.c_;
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  template <class F>
  auto map(F&& f) const {
    using T = decltype(f(std::declval<const S&>()));
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(f(v));
    return Polynomial<T>(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }

  std::vector<S> c_;
};

using PolyQ = Polynomial<Rational>;
using PolyR = Polynomial<HPReal>;
using PolyC = Polynomial<HPComplex>;

/// Largest coefficient magnitude.
template <class S>
HPReal coefficient_norm(const Polynomial<S>& p) {
  HPReal n = 0;
  for (const auto& c : p.coefficients()) n = std::max(n, magnitude(c));
  return n;
}

template <class S>
PolyC to_complex(const Polynomial<S>& p) {
  if constexpr (std::is_same_v<S, Rational>) {
    return p.map([](const Rational& q) { return HPComplex(to_hp(q)); });
  } else {
    return p.map([](const S& v) { return HPComplex(v); });
  }
}

}  // namespace pz
