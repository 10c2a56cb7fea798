#pragma once

#include <cstddef>
#include <vector>

#include "partzeta/common.hpp"

namespace pz {

/// Formal power series c_0 + c_1 x + ... + c_T x^T, exact through order T.
///
/// All arithmetic is truncated at the smaller order of the operands. The
/// scalar may be Rational (exact), HPReal or Complex<HPReal>.
template <class Scalar>
class TruncatedSeries {
 public:
  TruncatedSeries() : coeffs_(1, Scalar(0)) {}
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Scalar(0)) {}
  TruncatedSeries(std::size_t order, std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Scalar(0));
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = Scalar(1);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t n) const { return coeffs_[n]; }
  Scalar& operator[](std::size_t n) { return coeffs_[n]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(std::size_t order) const {
    return TruncatedSeries(order, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i <= order(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrink_to(o.order());
    for (std::size_t i = 0; i <= order(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Scalar& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t t = std::min(a.order(), b.order());
    TruncatedSeries r(t);
    for (std::size_t i = 0; i <= t; ++i) {
      if (a.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; i + j <= t; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  TruncatedSeries reciprocal() const {
    if (coeffs_[0] == Scalar(0)) throw DomainError("series reciprocal requires a nonzero constant term");
    TruncatedSeries r(order());
    const Scalar inv0 = Scalar(1) / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
      Scalar acc(0);
      for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
      r.coeffs_[n] = -acc * inv0;
    }
    return r;
  }

  /// exp(S) via n b_n = sum_k k a_k b_{n-k}; needs c_0 = 0.
  TruncatedSeries exp() const {
    if (coeffs_[0] != Scalar(0)) throw DomainError("series exp requires a zero constant term");
    TruncatedSeries b(order());
    b.coeffs_[0] = Scalar(1);
    for (std::size_t n = 1; n <= order(); ++n) {
      Scalar acc(0);
      for (std::size_t k = 1; k <= n; ++k) {
        if (coeffs_[k] == Scalar(0)) continue;
        acc += Scalar(static_cast<long>(k)) * coeffs_[k] * b.coeffs_[n - k];
      }
      b.coeffs_[n] = acc / Scalar(static_cast<long>(n));
    }
    return b;
  }

  /// log(S) for S = 1 + ..., inverse of exp().
  TruncatedSeries log() const {
    if (coeffs_[0] != Scalar(1)) throw DomainError("series log requires constant term 1");
    TruncatedSeries a(order());
    for (std::size_t n = 1; n <= order(); ++n) {
      Scalar acc(0);
      for (std::size_t k = 1; k < n; ++k) acc += Scalar(static_cast<long>(k)) * a.coeffs_[k] * coeffs_[n - k];
      a.coeffs_[n] = coeffs_[n] - acc / Scalar(static_cast<long>(n));
    }
    return a;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void shrink_to(std::size_t order) {
    if (order < this->order()) coeffs_.resize(order + 1);
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace pz
