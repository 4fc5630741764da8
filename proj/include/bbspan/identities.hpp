#pragma once

// Differential identities of the B-spline basis restated as equalities of
// Bernstein coefficient vectors over one span. With u = t_j + h t and
// h = t_{j+1} - t_j, a factor (a - u) d/du becomes
//
//   ((a - t_j) / h) * elevate(D c) - t * D c,
//
// so every identity reduces to vector arithmetic that is exact over the
// rationals.

#include <algorithm>
#include <optional>
#include <vector>

#include "bbspan/bernstein.hpp"
#include "bbspan/knots.hpp"
#include "bbspan/scalar.hpp"
#include "bbspan/span_conversion.hpp"

namespace bbspan {

template <class Scalar>
struct IdentitySides {
  BernsteinPoly<Scalar> lhs;
  BernsteinPoly<Scalar> rhs;

  [[nodiscard]] bool holds_exactly() const { return lhs == rhs; }

  [[nodiscard]] double max_deviation() const {
    double worst = 0.0;
    for (int k = 0; k <= lhs.degree(); ++k) {
      const double d = to_double(lhs[k] - rhs[k]);
      worst = std::max(worst, d < 0 ? -d : d);
    }
    return worst;
  }
};

namespace detail {

template <class Scalar>
BernsteinPoly<Scalar> scale(const BernsteinPoly<Scalar>& p, const Scalar& s) {
  return BernsteinPoly<Scalar>(p.coeffs() * s);
}

template <class Scalar>
BernsteinPoly<Scalar> add(const BernsteinPoly<Scalar>& a, const BernsteinPoly<Scalar>& b) {
  return BernsteinPoly<Scalar>(a.coeffs() + b.coeffs());
}

// p / (tk - tl), or the zero polynomial when the knots coincide.
template <class Scalar>
BernsteinPoly<Scalar> over_gap(const BernsteinPoly<Scalar>& p, const Scalar& tk, const Scalar& tl) {
  if (tk == tl) return BernsteinPoly<Scalar>::zero(p.degree());
  return BernsteinPoly<Scalar>(p.coeffs() / (tk - tl));
}

// (a - u) N'(u) on span j, for N with degree-m coefficients `c` (m >= 1).
template <class Scalar>
BernsteinPoly<Scalar> affine_times_derivative(const BasicKnotVector<Scalar>& kv, int j,
                                              const BernsteinPoly<Scalar>& c, const Scalar& a) {
  const Scalar h = kv.t(j + 1) - kv.t(j);
  const BernsteinPoly<Scalar> d = derivative_coeffs(c);
  const BernsteinPoly<Scalar> shift = scale(degree_elevate(d), Scalar((a - kv.t(j)) / h));
  return BernsteinPoly<Scalar>(shift.coeffs() - multiply_by_t(d).coeffs());
}

}  // namespace detail

/// m N_{m,i} + (t_{m+i+1} - u) N'_{m,i} = m (t_{m+i+1} - t_i) N_{m-1,i} / (t_{m+i} - t_i).
///
/// `upper` is the degree-m table over span j and `lower` the degree-(m-1)
/// table over the same span; i ranges over j-m..j.
template <class Scalar>
IdentitySides<Scalar> degree_lowering_identity_left(const BasicKnotVector<Scalar>& kv,
                                           const SpanTable<Scalar>& upper,
                                           const SpanTable<Scalar>& lower, int i) {
  const int m = upper.degree();
  const int j = upper.span().value;
  const Scalar mm = scalar_from_int<Scalar>(m);
  const auto c = upper.column(i);
  const auto lhs = detail::add(detail::scale(c, mm),
                               detail::affine_times_derivative(kv, j, c, kv.t(m + i + 1)));
  const auto rhs = detail::scale(detail::over_gap(degree_elevate(lower.column(i)), kv.t(m + i), kv.t(i)),
                                 Scalar(mm * (kv.t(m + i + 1) - kv.t(i))));
  return {lhs, rhs};
}

/// m N_{m,i} + (t_i - u) N'_{m,i} = m (t_{m+i+1} - t_i) N_{m-1,i+1} / (t_{m+i+1} - t_{i+1}).
template <class Scalar>
IdentitySides<Scalar> degree_lowering_identity_right(const BasicKnotVector<Scalar>& kv,
                                            const SpanTable<Scalar>& upper,
                                            const SpanTable<Scalar>& lower, int i) {
  const int m = upper.degree();
  const int j = upper.span().value;
  const Scalar mm = scalar_from_int<Scalar>(m);
  const auto c = upper.column(i);
  const auto lhs =
      detail::add(detail::scale(c, mm), detail::affine_times_derivative(kv, j, c, kv.t(i)));
  const auto rhs = detail::scale(
      detail::over_gap(degree_elevate(lower.column(i + 1)), kv.t(m + i + 1), kv.t(i + 1)),
      Scalar(mm * (kv.t(m + i + 1) - kv.t(i))));
  return {lhs, rhs};
}

/// Same-degree differential recurrence
///   N_{m,i} + (t_i - u)/m N'_{m,i}
///     = v_{mi} (N_{m,i+1} + (t_{m+i+2} - u)/m N'_{m,i+1}),
/// v_{mi} = (t_{m+i+1} - t_i) / (t_{m+i+2} - t_{i+1}).
///
/// Defined for i = j-m-1..j; returns nullopt when a knot it needs lies
/// outside t_{-m}..t_{n+m}.
template <class Scalar>
std::optional<IdentitySides<Scalar>> differential_recurrence(const BasicKnotVector<Scalar>& kv,
                                                             const SpanTable<Scalar>& table,
                                                             int i) {
  const int m = table.degree();
  const int j = table.span().value;
  if (i < -m || m + i + 2 > kv.spans() + kv.degree()) return std::nullopt;
  const Scalar inv_m = Scalar(1) / scalar_from_int<Scalar>(m);
  const auto side = [&](int f, const Scalar& a) {
    const auto c = table.column(f);
    return detail::add(c, detail::scale(detail::affine_times_derivative(kv, j, c, a), inv_m));
  };
  const Scalar v = over_knot_gap(Scalar(kv.t(m + i + 1) - kv.t(i)), kv.t(m + i + 2), kv.t(i + 1));
  return IdentitySides<Scalar>{side(i, kv.t(i)), detail::scale(side(i + 1, kv.t(m + i + 2)), v)};
}

/// Right-hand side of the coefficient recurrence that drives
/// `convert_span_new`, evaluated on an arbitrary table:
///   (t_j - t_i)/(t_{j+1} - t_i) B[k+1, i]
///     + v_{mi}/(t_{j+1} - t_i) ((t_{j+1} - t_{m+i+2}) B[k, i+1] + (t_{m+i+2} - t_j) B[k+1, i+1]).
/// Valid for j-m < i < j and 0 <= k < m.
template <class Scalar>
Scalar main_recurrence_rhs(const BasicKnotVector<Scalar>& kv, const SpanTable<Scalar>& table,
                           int k, int i) {
  const int m = table.degree();
  const int j = table.span().value;
  const Scalar& tj = kv.t(j);
  const Scalar& tj1 = kv.t(j + 1);
  const Scalar& ti = kv.t(i);
  const Scalar& tmi2 = kv.t(m + i + 2);
  const Scalar v = over_knot_gap(Scalar(kv.t(m + i + 1) - ti), tmi2, kv.t(i + 1));
  const Scalar mix = (tj1 - tmi2) * table(k, i + 1) + (tmi2 - tj) * table(k + 1, i + 1);
  return over_knot_gap(Scalar((tj - ti) * table(k + 1, i)), tj1, ti) +
         over_knot_gap(Scalar(v * mix), tj1, ti);
}

}  // namespace bbspan
