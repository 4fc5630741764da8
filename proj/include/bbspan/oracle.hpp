#pragma once

// Reference evaluations of B-spline basis functions from first principles.
// Nothing here is tuned for speed; these routines exist to cross-check the
// span conversion algorithms.

#include <span>
#include <string>
#include <vector>

#include "bbspan/bernstein.hpp"
#include "bbspan/error.hpp"
#include "bbspan/knots.hpp"
#include "bbspan/scalar.hpp"

namespace bbspan {

/// (x - c)^m_+ with the convention (x - c)^0_+ = 1 for x >= c.
template <class Scalar>
Scalar truncated_power(const Scalar& x, const Scalar& c, int m) {
  if (x < c) return Scalar(0);
  Scalar r(1);
  const Scalar d = x - c;
  for (int q = 0; q < m; ++q) r *= d;
  return r;
}

/// Which one-sided value of (t - u)^m_+ and its derivatives is used when a
/// node coincides with u.
enum class KinkSide {
  /// x >= c convention; derivatives of order >= m at the kink are undefined.
  Right,
  /// Left-hand limits (everything vanishes at t = u). This yields the
  /// right-continuous B-spline N_{m,i}(u), matching half-open spans.
  Left,
};

namespace detail {

// r-th derivative of t -> (t - u)^m_+ at t = x, divided by r!.
template <class Scalar>
Scalar truncated_power_taylor(const Scalar& x, const Scalar& u, int m, int r, KinkSide side) {
  if (x < u) return Scalar(0);
  if (x == u) {
    if (side == KinkSide::Left) return Scalar(0);
    if (r == 0) return truncated_power(x, u, m);
    if (r >= m) {
      throw Error(ErrorCode::UnsupportedConfluency,
                  "derivative of order " + std::to_string(r) + " at the kink of a degree-" +
                      std::to_string(m) + " truncated power");
    }
    return Scalar(0);
  }
  if (r > m) return Scalar(0);
  // C(m, r) (x - u)^(m - r)
  Scalar value = scalar_from_int<Scalar>(static_cast<long long>(binomial(m, r)));
  const Scalar d = x - u;
  for (int q = 0; q < m - r; ++q) value *= d;
  return value;
}

}  // namespace detail

/// Generalized divided difference [x_0, ..., x_r] (t - u)^m_+ acting on t.
///
/// Repeated nodes are handled by Taylor coefficients (derivative / r!), so
/// the result is exact whenever Scalar is exact.
template <class Scalar>
Scalar divided_difference_truncated_power(std::span<const Scalar> nodes, const Scalar& u, int m,
                                          KinkSide side = KinkSide::Right) {
  const int r = static_cast<int>(nodes.size()) - 1;
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "divided difference needs at least one node");
  for (int q = 0; q < r; ++q) {
    if (!(nodes[q] <= nodes[q + 1])) {
      throw Error(ErrorCode::NotNondecreasing, "divided-difference nodes must be sorted");
    }
  }
  // table[q] holds [x_q, ..., x_{q+level}] f after each pass.
  std::vector<Scalar> table(static_cast<std::size_t>(r + 1));
  for (int q = 0; q <= r; ++q) {
    table[q] = detail::truncated_power_taylor(nodes[q], u, m, 0, side);
  }
  for (int level = 1; level <= r; ++level) {
    for (int q = 0; q + level <= r; ++q) {
      const Scalar& lo = nodes[q];
      const Scalar& hi = nodes[q + level];
      if (lo == hi) {
        table[q] = detail::truncated_power_taylor(lo, u, m, level, side);
      } else {
        table[q] = (table[q + 1] - table[q]) / (hi - lo);
      }
    }
  }
  return table[0];
}

/// N_{m,i}(u) = (t_{i+m+1} - t_i) [t_i, ..., t_{i+m+1}] (t - u)^m_+.
///
/// Uses left-hand kink values so the result is the right-continuous basis
/// function, consistent with `deboor_cox_eval` at knots.
template <class Scalar>
Scalar bspline_value_definition(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u,
                                int degree) {
  if (i < -degree || i >= kv.spans()) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
  }
  const Scalar& lo = kv.t(i);
  const Scalar& hi = kv.t(i + degree + 1);
  if (lo == hi) return Scalar(0);
  const auto first = kv.values().begin() + (i + kv.degree());
  std::span<const Scalar> nodes(&*first, static_cast<std::size_t>(degree + 2));
  return (hi - lo) * divided_difference_truncated_power(nodes, u, degree, KinkSide::Left);
}

template <class Scalar>
Scalar bspline_value_definition(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u) {
  return bspline_value_definition(kv, i, u, kv.degree());
}

namespace detail {

// N_{p,i}(u), ..., N_{p,i+count-1}(u) for p = degree, by the triangular
// de Boor-Cox scheme seeded from the degree-0 indicator of the span that
// contains u. Entries outside the basis index range vanish by construction.
template <class Scalar>
std::vector<Scalar> deboor_cox_values(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u,
                                      int degree, int count) {
  const int n = kv.spans();
  std::vector<Scalar> level(static_cast<std::size_t>(count + degree), Scalar(0));
  if (!(kv.t(0) <= u && u <= kv.t(n))) return std::vector<Scalar>(count, Scalar(0));
  const int span = find_span(kv, u).value;
  for (int q = 0; q < count + degree; ++q) {
    if (i + q == span) level[q] = Scalar(1);
  }
  for (int p = 1; p <= degree; ++p) {
    for (int q = 0; q < count + degree - p; ++q) {
      const int idx = i + q;
      const Scalar left = over_knot_gap((u - kv.t(idx)) * level[q], kv.t(idx + p), kv.t(idx));
      const Scalar right =
          over_knot_gap((kv.t(idx + p + 1) - u) * level[q + 1], kv.t(idx + p + 1), kv.t(idx + 1));
      level[q] = left + right;
    }
  }
  level.resize(static_cast<std::size_t>(count));
  return level;
}

}  // namespace detail

/// N_{p,i}(u) by the de Boor-Cox recurrence, for any p <= kv.degree().
/// Zero outside [t_0, t_n]; u = t_n is evaluated as a left limit.
template <class Scalar>
Scalar deboor_cox_eval(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u, int degree) {
  if (degree < 0 || degree > kv.degree()) {
    throw Error(ErrorCode::InvalidArgument, "degree exceeds the knot vector's degree");
  }
  if (i < -degree || i >= kv.spans()) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
  }
  return detail::deboor_cox_values(kv, i, u, degree, 1).front();
}

template <class Scalar>
Scalar deboor_cox_eval(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u) {
  return deboor_cox_eval(kv, i, u, kv.degree());
}

/// N'_{p,i}(u) = p (N_{p-1,i}/(t_{p+i} - t_i) - N_{p-1,i+1}/(t_{p+i+1} - t_{i+1})).
template <class Scalar>
Scalar deboor_cox_derivative(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u,
                             int degree) {
  if (degree < 1) throw Error(ErrorCode::DegreeZero, "derivative needs degree >= 1");
  if (degree > kv.degree()) {
    throw Error(ErrorCode::InvalidArgument, "degree exceeds the knot vector's degree");
  }
  if (i < -degree || i >= kv.spans()) {
    throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
  }
  const auto lower = detail::deboor_cox_values(kv, i, u, degree - 1, 2);
  const Scalar p = scalar_from_int<Scalar>(degree);
  return p * (over_knot_gap(lower[0], kv.t(degree + i), kv.t(i)) -
              over_knot_gap(lower[1], kv.t(degree + i + 1), kv.t(i + 1)));
}

template <class Scalar>
Scalar deboor_cox_derivative(const BasicKnotVector<Scalar>& kv, int i, const Scalar& u) {
  return deboor_cox_derivative(kv, i, u, kv.degree());
}

}  // namespace bbspan
