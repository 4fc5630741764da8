#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bbspan/error.hpp"
#include "bbspan/scalar.hpp"

namespace bbspan {

/// Index of a knot span [t_j, t_{j+1}), 0 <= j < n.
struct SpanIndex {
  int value = 0;

  friend bool operator==(SpanIndex, SpanIndex) = default;
};

template <class Scalar>
class BasicKnotVector;

template <class Scalar>
BasicKnotVector<Scalar> validate(int degree, int spans, std::vector<Scalar> values);

/// Validated knot sequence t_{-m} <= ... <= t_{n+m} with t_0 < t_n.
///
/// Knots are addressed by their mathematical index, so `t(-m)` is the first
/// stored value and `t(n + m)` the last. Instances are immutable; the only
/// way to obtain one is `validate`.
template <class Scalar>
class BasicKnotVector {
 public:
  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] int spans() const noexcept { return spans_; }

  [[nodiscard]] const Scalar& t(int i) const noexcept {
    return values_[static_cast<std::size_t>(i + degree_)];
  }

  [[nodiscard]] std::span<const Scalar> values() const noexcept { return values_; }

  [[nodiscard]] bool span_is_empty(SpanIndex j) const noexcept {
    return !(t(j.value) < t(j.value + 1));
  }

  /// Non-empty spans in increasing order.
  [[nodiscard]] std::vector<SpanIndex> nonempty_spans() const {
    std::vector<SpanIndex> out;
    for (int j = 0; j < spans_; ++j) {
      if (!span_is_empty(SpanIndex{j})) out.push_back(SpanIndex{j});
    }
    return out;
  }

  template <class S>
  friend BasicKnotVector<S> validate(int, int, std::vector<S>);

 private:
  BasicKnotVector(int degree, int spans, std::vector<Scalar> values)
      : degree_(degree), spans_(spans), values_(std::move(values)) {}

  int degree_;
  int spans_;
  std::vector<Scalar> values_;
};

using KnotVector = BasicKnotVector<double>;
using RationalKnotVector = BasicKnotVector<Rational>;

/// Number of knots exactly equal to `value`.
template <class Scalar>
int multiplicity(std::span<const Scalar> values, const Scalar& value) {
  return static_cast<int>(std::count(values.begin(), values.end(), value));
}

template <class Scalar>
int multiplicity(const BasicKnotVector<Scalar>& kv, const Scalar& value) {
  return multiplicity(kv.values(), value);
}

/// Largest multiplicity among the inner knots t_1, ..., t_{n-1} (0 if n = 1).
/// Multiplicity counts every index holding the value, boundary ones included.
template <class Scalar>
int max_inner_multiplicity(const BasicKnotVector<Scalar>& kv) {
  int worst = 0;
  for (int i = 1; i < kv.spans(); ++i) {
    worst = std::max(worst, multiplicity(kv, kv.t(i)));
  }
  return worst;
}

template <class Scalar>
BasicKnotVector<Scalar> validate(int degree, int spans, std::vector<Scalar> values) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  if (spans < 1) throw Error(ErrorCode::InvalidArgument, "span count must be positive");
  const auto expected = static_cast<std::size_t>(spans) + 2 * static_cast<std::size_t>(degree) + 1;
  if (values.size() != expected) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(expected) + " knots, got " +
                                               std::to_string(values.size()));
  }
  for (std::size_t q = 0; q + 1 < values.size(); ++q) {
    // Written as !(a <= b) so that NaN is rejected too.
    if (!(values[q] <= values[q + 1])) {
      throw Error(ErrorCode::NotNondecreasing,
                  "knot at position " + std::to_string(q) + " exceeds its successor");
    }
  }
  BasicKnotVector<Scalar> kv(degree, spans, std::move(values));
  if (!(kv.t(0) < kv.t(spans))) throw Error(ErrorCode::DegenerateDomain, "t_0 must be < t_n");
  for (int i = 1; i < spans; ++i) {
    if (multiplicity(kv, kv.t(i)) > degree) {
      throw Error(ErrorCode::InnerMultiplicityTooHigh,
                  "inner knot t_" + std::to_string(i) + " has multiplicity " +
                      std::to_string(multiplicity(kv, kv.t(i))) + " > " + std::to_string(degree));
    }
  }
  return kv;
}

/// Span containing `u`: t_j <= u < t_{j+1}. The right end t_n maps to the
/// last non-empty span.
template <class Scalar>
SpanIndex find_span(const BasicKnotVector<Scalar>& kv, const Scalar& u) {
  const int n = kv.spans();
  if (!(kv.t(0) <= u && u <= kv.t(n))) {
    throw Error(ErrorCode::OutOfDomain, "parameter outside [t_0, t_n]");
  }
  const auto all = kv.values();
  const auto first = all.begin() + kv.degree();  // t_0
  const auto last = first + n + 1;              // one past t_n
  if (u == kv.t(n)) {
    // Largest j with t_j < t_n.
    const auto it = std::lower_bound(first, last, u);
    return SpanIndex{static_cast<int>(it - first) - 1};
  }
  const auto it = std::upper_bound(first, last, u);
  return SpanIndex{static_cast<int>(it - first) - 1};
}

/// Converts every knot to another scalar type (exact for double -> Rational).
template <class To, class From>
BasicKnotVector<To> knot_cast(const BasicKnotVector<From>& kv) {
  std::vector<To> out;
  out.reserve(kv.values().size());
  for (const auto& v : kv.values()) {
    if constexpr (std::is_same_v<From, To> || std::is_same_v<From, double>) {
      out.push_back(To(v));
    } else {
      out.push_back(To(to_double(v)));
    }
  }
  return validate(kv.degree(), kv.spans(), std::move(out));
}

}  // namespace bbspan
