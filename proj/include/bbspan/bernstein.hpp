#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "bbspan/error.hpp"
#include "bbspan/scalar.hpp"

namespace bbspan {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Polynomial in Bernstein form on [0, 1]: sum_k c_k B^n_k(t).
template <class Scalar>
class BernsteinPoly {
 public:
  BernsteinPoly() : coeffs_(Vector<Scalar>::Zero(1)) {}
  explicit BernsteinPoly(Vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty coefficient vector");
  }

  static BernsteinPoly zero(int degree) {
    return BernsteinPoly(Vector<Scalar>::Zero(degree + 1));
  }

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] const Scalar& operator[](int k) const { return coeffs_(k); }

  friend bool operator==(const BernsteinPoly& a, const BernsteinPoly& b) {
    return a.coeffs_.size() == b.coeffs_.size() && (a.coeffs_.array() == b.coeffs_.array()).all();
  }

 private:
  Vector<Scalar> coeffs_;
};

/// Binomial coefficient via the multiplicative recurrence; exact in 64 bits
/// for every n used here (C(62, 31) < 2^63).
inline std::uint64_t binomial(int n, int i) {
  if (i < 0 || i > n) return 0;
  if (i > n - i) i = n - i;
  std::uint64_t r = 1;
  for (int q = 1; q <= i; ++q) {
    r = r * static_cast<std::uint64_t>(n - i + q) / static_cast<std::uint64_t>(q);
  }
  return r;
}

/// B^n_i(t) = C(n, i) t^i (1 - t)^(n - i).
template <class Scalar>
Scalar eval_basis(int n, int i, const Scalar& t) {
  if (n < 0 || i < 0 || i > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "Bernstein index " + std::to_string(i) + " outside [0, " + std::to_string(n) + "]");
  }
  Scalar value = scalar_from_int<Scalar>(static_cast<long long>(binomial(n, i)));
  const Scalar s = Scalar(1) - t;
  for (int q = 0; q < i; ++q) value *= t;
  for (int q = 0; q < n - i; ++q) value *= s;
  return value;
}

/// de Casteljau evaluation.
template <class Scalar>
Scalar eval_poly(const BernsteinPoly<Scalar>& p, const Scalar& t) {
  Vector<Scalar> work = p.coeffs();
  const Scalar s = Scalar(1) - t;
  for (int level = p.degree(); level > 0; --level) {
    for (int k = 0; k < level; ++k) {
      work(k) = s * work(k) + t * work(k + 1);
    }
  }
  return work(0);
}

/// Coefficients of t * p(t), one degree higher.
template <class Scalar>
BernsteinPoly<Scalar> multiply_by_t(const BernsteinPoly<Scalar>& p) {
  const int n = p.degree();
  Vector<Scalar> out = Vector<Scalar>::Zero(n + 2);
  const Scalar denom = scalar_from_int<Scalar>(n + 1);
  for (int k = 0; k <= n; ++k) {
    out(k + 1) = p[k] * scalar_from_int<Scalar>(k + 1) / denom;
  }
  return BernsteinPoly<Scalar>(std::move(out));
}

/// The same polynomial expressed in degree n + 1.
template <class Scalar>
BernsteinPoly<Scalar> degree_elevate(const BernsteinPoly<Scalar>& p) {
  const int n = p.degree();
  Vector<Scalar> out = Vector<Scalar>::Zero(n + 2);
  const Scalar denom = scalar_from_int<Scalar>(n + 1);
  for (int k = 0; k <= n + 1; ++k) {
    Scalar acc(0);
    if (k >= 1) acc += p[k - 1] * scalar_from_int<Scalar>(k);
    if (k <= n) acc += p[k] * scalar_from_int<Scalar>(n + 1 - k);
    out(k) = acc / denom;
  }
  return BernsteinPoly<Scalar>(std::move(out));
}

/// d/dt in Bernstein form: d_k = n (c_{k+1} - c_k).
template <class Scalar>
BernsteinPoly<Scalar> derivative_coeffs(const BernsteinPoly<Scalar>& p) {
  const int n = p.degree();
  if (n < 1) throw Error(ErrorCode::DegreeZero, "derivative of a degree-0 Bernstein polynomial");
  Vector<Scalar> out(n);
  const Scalar factor = scalar_from_int<Scalar>(n);
  for (int k = 0; k < n; ++k) out(k) = factor * (p[k + 1] - p[k]);
  return BernsteinPoly<Scalar>(std::move(out));
}

}  // namespace bbspan
