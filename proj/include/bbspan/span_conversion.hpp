#pragma once

// Bernstein-Bezier coefficients of the B-spline basis over one knot span.
//
// For a non-empty span [t_j, t_{j+1}) every non-trivial basis function
// N_{m,i}, i = j-m..j, restricted to the span is written as
//
//   N_{m,i}(u) = sum_k b^{(i,j)}_{m,k} B^m_k((u - t_j) / (t_{j+1} - t_j)).
//
// `convert_span_new` computes all (m+1)^2 coefficients in O(m^2) scalar
// operations; `convert_span_deboor` builds them degree by degree from the
// de Boor-Cox recurrence in O(m^3) and serves as the comparator. Both are
// generic over the scalar type so they run unchanged on doubles, exact
// rationals and the operation-counting scalar.

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "bbspan/bernstein.hpp"
#include "bbspan/error.hpp"
#include "bbspan/knots.hpp"
#include "bbspan/scalar.hpp"

namespace bbspan {

template <class Scalar>
using RowMajorMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Scalar>
using SpanCoefficients = BernsteinPoly<Scalar>;

/// The (m+1) x (m+1) table B[k, i] = b^{(i,j)}_{m,k}, k = 0..m, i = j-m..j.
///
/// Storage is k-major: row k holds coefficient k of every function, column
/// `i - (j - m)` holds one function.
template <class Scalar>
class SpanTable {
 public:
  using Matrix = RowMajorMatrix<Scalar>;

  SpanTable(int degree, SpanIndex span, Matrix coeffs)
      : degree_(degree), span_(span), coeffs_(std::move(coeffs)) {
    if (coeffs_.rows() != degree + 1 || coeffs_.cols() != degree + 1) {
      throw Error(ErrorCode::InvalidArgument, "span table must be (m+1) x (m+1)");
    }
  }

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] SpanIndex span() const noexcept { return span_; }
  [[nodiscard]] int first_function() const noexcept { return span_.value - degree_; }
  [[nodiscard]] int last_function() const noexcept { return span_.value; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return coeffs_; }

  [[nodiscard]] bool has_function(int i) const noexcept {
    return i >= first_function() && i <= last_function();
  }

  /// b^{(i,j)}_{m,k}; zero for functions not supported on the span.
  [[nodiscard]] Scalar operator()(int k, int i) const {
    if (!has_function(i)) return Scalar(0);
    return coeffs_(k, i - first_function());
  }

  /// Bernstein form of N_{m,i} on the span; all zero outside j-m..j.
  [[nodiscard]] BernsteinPoly<Scalar> column(int i) const {
    if (!has_function(i)) return BernsteinPoly<Scalar>::zero(degree_);
    return BernsteinPoly<Scalar>(coeffs_.col(i - first_function()));
  }

  friend bool operator==(const SpanTable& a, const SpanTable& b) {
    return a.degree_ == b.degree_ && a.span_ == b.span_ &&
           (a.coeffs_.array() == b.coeffs_.array()).all();
  }

 private:
  int degree_;
  SpanIndex span_;
  Matrix coeffs_;
};

/// Triangular table of b^{(i,j)}_{p,p}, p = 0..m, i = j-p..j.
template <class Scalar>
struct BmmColumn {
  int degree = 0;
  SpanIndex span;
  /// values(p, i - (j - m)); entries with i < j - p are zero.
  RowMajorMatrix<Scalar> values;

  [[nodiscard]] Scalar at(int p, int i) const { return values(p, i - (span.value - degree)); }
};

namespace detail {

template <class Scalar>
void check_span_request(const BasicKnotVector<Scalar>& kv, SpanIndex j, int m) {
  if (m < 0 || m > kv.degree()) {
    throw Error(ErrorCode::InvalidArgument,
                "degree " + std::to_string(m) + " outside [0, " + std::to_string(kv.degree()) + "]");
  }
  if (j.value < 0 || j.value >= kv.spans()) {
    throw Error(ErrorCode::IndexOutOfRange, "span index " + std::to_string(j.value));
  }
  if (kv.span_is_empty(j)) {
    throw Error(ErrorCode::EmptySpan, "span " + std::to_string(j.value) + " is empty");
  }
  if (m < kv.degree() && max_inner_multiplicity(kv) > m) {
    throw Error(ErrorCode::InnerMultiplicityTooHigh,
                "an inner knot is repeated more than " + std::to_string(m) + " times");
  }
}

// Runs the b_{p,p} recurrence for p = 1..m in place over `row`, which holds
// the functions i = j-m..j. On return row[i - (j-m)] = b^{(i,j)}_{m,m}.
// Ascending i lets each entry overwrite its degree-(p-1) value only after
// its left neighbour has consumed it.
template <class Scalar>
void bmm_row_in_place(const BasicKnotVector<Scalar>& kv, int j, int m, Scalar* row) {
  const int base = j - m;
  for (int c = 0; c <= m; ++c) row[c] = Scalar(0);
  row[m] = Scalar(1);
  const Scalar& tj = kv.t(j);
  const Scalar& tj1 = kv.t(j + 1);
  const Scalar h = tj1 - tj;
  for (int p = 1; p <= m; ++p) {
    for (int i = j - p; i <= j - 1; ++i) {
      const int c = i - base;
      row[c] = over_knot_gap((tj1 - kv.t(i)) * row[c], kv.t(p + i), kv.t(i)) +
               over_knot_gap((kv.t(p + i + 1) - tj1) * row[c + 1], kv.t(p + i + 1), kv.t(i + 1));
    }
    assert(kv.t(j + p) != tj);
    row[m] = h / (kv.t(j + p) - tj) * row[m];
  }
}

}  // namespace detail

/// b^{(j,j)}_{p,p} for p = 0..m: products of (t_{j+1} - t_j) / (t_{j+q} - t_j).
template <class Scalar>
Vector<Scalar> bmm_diagonal_seed(const BasicKnotVector<Scalar>& kv, SpanIndex j, int m) {
  detail::check_span_request(kv, j, m);
  const int jj = j.value;
  Vector<Scalar> out(m + 1);
  out(0) = Scalar(1);
  const Scalar h = kv.t(jj + 1) - kv.t(jj);
  for (int p = 1; p <= m; ++p) {
    // Nonzero: t_{j+p} >= t_{j+1} > t_j.
    assert(kv.t(jj + p) != kv.t(jj));
    out(p) = h / (kv.t(jj + p) - kv.t(jj)) * out(p - 1);
  }
  return out;
}

/// Full triangular scheme of b^{(i,j)}_{p,p}; its last row is the k = m row
/// of the span table.
template <class Scalar>
BmmColumn<Scalar> bmm_column(const BasicKnotVector<Scalar>& kv, SpanIndex j, int m) {
  const Vector<Scalar> diagonal = bmm_diagonal_seed(kv, j, m);
  const int jj = j.value;
  const int base = jj - m;
  RowMajorMatrix<Scalar> values = RowMajorMatrix<Scalar>::Zero(m + 1, m + 1);
  for (int p = 0; p <= m; ++p) values(p, m) = diagonal(p);
  const Scalar& tj1 = kv.t(jj + 1);
  for (int p = 1; p <= m; ++p) {
    for (int i = jj - 1; i >= jj - p; --i) {
      const int c = i - base;
      values(p, c) =
          over_knot_gap((tj1 - kv.t(i)) * values(p - 1, c), kv.t(p + i), kv.t(i)) +
          over_knot_gap((kv.t(p + i + 1) - tj1) * values(p - 1, c + 1), kv.t(p + i + 1),
                        kv.t(i + 1));
    }
  }
  return BmmColumn<Scalar>{m, j, std::move(values)};
}

/// Coefficients of N_{m,j-m} on span j: only coefficient 0 is nonzero.
template <class Scalar>
SpanCoefficients<Scalar> first_function_row(const BasicKnotVector<Scalar>& kv, SpanIndex j, int m) {
  detail::check_span_request(kv, j, m);
  if (m < 1) throw Error(ErrorCode::DegreeZero, "first_function_row needs m >= 1");
  const int jj = j.value;
  const Scalar& tj1 = kv.t(jj + 1);
  const Scalar h = tj1 - kv.t(jj);
  Vector<Scalar> out = Vector<Scalar>::Zero(m + 1);
  Scalar value(1);
  for (int q = 2; q <= m; ++q) {
    assert(tj1 != kv.t(jj - q + 1));
    value *= h / (tj1 - kv.t(jj - q + 1));
  }
  out(0) = value;
  return SpanCoefficients<Scalar>(std::move(out));
}

/// All (m+1)^2 coefficients over span j in Theta(m^2) scalar operations.
template <class Scalar>
SpanTable<Scalar> convert_span_new(const BasicKnotVector<Scalar>& kv, SpanIndex j, int m) {
  detail::check_span_request(kv, j, m);
  using Matrix = typename SpanTable<Scalar>::Matrix;
  if (m == 0) return SpanTable<Scalar>(0, j, Matrix::Constant(1, 1, Scalar(1)));

  const int jj = j.value;
  const int base = jj - m;
  Matrix b = Matrix::Zero(m + 1, m + 1);

  // k = m row: b^{(i,j)}_{m,m} for every i.
  detail::bmm_row_in_place(kv, jj, m, b.row(m).data());

  // N_{m,j-m} has a single nonzero coefficient.
  const Scalar& tj = kv.t(jj);
  const Scalar& tj1 = kv.t(jj + 1);
  const Scalar h = tj1 - tj;
  {
    Scalar value(1);
    for (int q = 2; q <= m; ++q) value *= h / (tj1 - kv.t(jj - q + 1));
    b(0, 0) = value;
  }

  // Back-substitution over the interior functions j-m < i < j. Column j
  // is zero below k = m and column j-m is already final. The knot factors
  // depend on i only, so they are formed once per function:
  //   b(k, i) = own * b(k+1, i) + lower * b(k, i+1) + upper * b(k+1, i+1).
  Vector<Scalar> own(m), lower(m), upper(m);
  for (int i = jj - 1; i >= jj - m + 1; --i) {
    const int c = i - base;
    const Scalar& ti = kv.t(i);
    const Scalar& tmi2 = kv.t(m + i + 2);
    const Scalar weight = over_knot_gap(kv.t(m + i + 1) - ti, tmi2, kv.t(i + 1));
    const Scalar width = tj1 - ti;  // > 0 because i <= j
    own(c) = (tj - ti) / width;
    lower(c) = weight * (tj1 - tmi2) / width;
    upper(c) = weight * (tmi2 - tj) / width;
  }
  for (int k = m - 1; k >= 0; --k) {
    for (int i = jj - 1; i >= jj - m + 1; --i) {
      const int c = i - base;
      b(k, c) = own(c) * b(k + 1, c) + lower(c) * b(k, c + 1) + upper(c) * b(k + 1, c + 1);
    }
  }
  return SpanTable<Scalar>(m, j, std::move(b));
}

template <class Scalar>
SpanTable<Scalar> convert_span_new(const BasicKnotVector<Scalar>& kv, SpanIndex j) {
  return convert_span_new(kv, j, kv.degree());
}

namespace detail {

// Degree-p coefficients stored with a zero border: rows k = -1..m, columns
// i = j-m..j+1, so every out-of-range lookup in the recurrence reads zero.
template <class Scalar>
class PaddedTable {
 public:
  PaddedTable(int m, int j) : m_(m), j_(j), data_(RowMajorMatrix<Scalar>::Zero(m + 2, m + 2)) {}

  Scalar& at(int k, int i) { return data_(k + 1, i - (j_ - m_)); }
  const Scalar& at(int k, int i) const { return data_(k + 1, i - (j_ - m_)); }
  void clear() { data_.setZero(); }

  SpanTable<Scalar> extract(int p) const {
    RowMajorMatrix<Scalar> out(p + 1, p + 1);
    for (int k = 0; k <= p; ++k) {
      for (int i = j_ - p; i <= j_; ++i) out(k, i - (j_ - p)) = at(k, i);
    }
    return SpanTable<Scalar>(p, SpanIndex{j_}, std::move(out));
  }

 private:
  int m_;
  int j_;
  RowMajorMatrix<Scalar> data_;
};

// One de Boor-Cox degree raise in Bernstein coefficient space, entry by
// entry, from `prev` (degree p-1) into `cur` (degree p).
template <class Scalar>
void raise_degree(const BasicKnotVector<Scalar>& kv, int j, int p, const PaddedTable<Scalar>& prev,
                  PaddedTable<Scalar>& cur) {
  const Scalar& tj = kv.t(j);
  const Scalar& tj1 = kv.t(j + 1);
  const Scalar pp = scalar_from_int<Scalar>(p);
  for (int i = j - p; i <= j; ++i) {
    const Scalar& ti = kv.t(i);
    const Scalar& ti1 = kv.t(i + 1);
    const Scalar& tpi = kv.t(p + i);
    const Scalar& tpi1 = kv.t(p + i + 1);
    for (int k = 0; k <= p; ++k) {
      const Scalar low = over_knot_gap(prev.at(k, i) * (tj - ti), tpi, ti) +
                         over_knot_gap(prev.at(k, i + 1) * (tpi1 - tj), tpi1, ti1);
      const Scalar high = over_knot_gap(prev.at(k - 1, i) * (tj1 - ti), tpi, ti) +
                          over_knot_gap(prev.at(k - 1, i + 1) * (tpi1 - tj1), tpi1, ti1);
      cur.at(k, i) = scalar_from_int<Scalar>(p - k) / pp * low +
                     scalar_from_int<Scalar>(k) / pp * high;
    }
  }
}

}  // namespace detail

/// Same table as `convert_span_new`, built from degree 0 upward in
/// Theta(m^3) operations.
template <class Scalar>
SpanTable<Scalar> convert_span_deboor(const BasicKnotVector<Scalar>& kv, SpanIndex j, int m) {
  detail::check_span_request(kv, j, m);
  const int jj = j.value;
  detail::PaddedTable<Scalar> prev(m, jj);
  detail::PaddedTable<Scalar> cur(m, jj);
  cur.at(0, jj) = Scalar(1);
  for (int p = 1; p <= m; ++p) {
    std::swap(prev, cur);
    cur.clear();
    detail::raise_degree(kv, jj, p, prev, cur);
  }
  return cur.extract(m);
}

template <class Scalar>
SpanTable<Scalar> convert_span_deboor(const BasicKnotVector<Scalar>& kv, SpanIndex j) {
  return convert_span_deboor(kv, j, kv.degree());
}

/// Tables for every degree p = 0..m over span j (the by-products of the
/// O(m^3) method). Lower degrees need no multiplicity assumption.
template <class Scalar>
std::vector<SpanTable<Scalar>> convert_span_deboor_all(const BasicKnotVector<Scalar>& kv,
                                                       SpanIndex j, int m) {
  if (m < 0 || m > kv.degree()) throw Error(ErrorCode::InvalidArgument, "degree out of range");
  if (j.value < 0 || j.value >= kv.spans()) {
    throw Error(ErrorCode::IndexOutOfRange, "span index " + std::to_string(j.value));
  }
  if (kv.span_is_empty(j)) throw Error(ErrorCode::EmptySpan, "span is empty");
  const int jj = j.value;
  std::vector<SpanTable<Scalar>> out;
  out.reserve(static_cast<std::size_t>(m + 1));
  detail::PaddedTable<Scalar> prev(m, jj);
  detail::PaddedTable<Scalar> cur(m, jj);
  cur.at(0, jj) = Scalar(1);
  out.push_back(cur.extract(0));
  for (int p = 1; p <= m; ++p) {
    std::swap(prev, cur);
    cur.clear();
    detail::raise_degree(kv, jj, p, prev, cur);
    out.push_back(cur.extract(p));
  }
  return out;
}

/// N_{m,i}(u) from the table via de Casteljau on the local parameter.
/// u = t_{j+1} is accepted only when t_{j+1} = t_n (right-closed domain).
template <class Scalar>
Scalar reconstruct(const SpanTable<Scalar>& table, const BasicKnotVector<Scalar>& kv, int i,
                   const Scalar& u) {
  const int j = table.span().value;
  const Scalar& tj = kv.t(j);
  const Scalar& tj1 = kv.t(j + 1);
  const bool right_end = u == tj1 && tj1 == kv.t(kv.spans());
  if (!(tj <= u && (u < tj1 || right_end))) {
    throw Error(ErrorCode::OutOfSpan, "parameter outside span " + std::to_string(j));
  }
  if (!table.has_function(i)) return Scalar(0);
  return eval_poly(table.column(i), (u - tj) / (tj1 - tj));
}

}  // namespace bbspan
