#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace bbspan {

/// Exact rational scalar. Expression templates are disabled so values
/// behave like ordinary value types inside Eigen containers and `auto`.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Tally of scalar arithmetic performed through `CountedScalar`.
struct OpCounts {
  std::uint64_t add = 0;
  std::uint64_t sub = 0;
  std::uint64_t mul = 0;
  std::uint64_t div = 0;

  [[nodiscard]] std::uint64_t total() const noexcept { return add + sub + mul + div; }
};

/// A double that counts every arithmetic operation applied to it.
///
/// Counters are thread-local; wrap the region of interest in an
/// `OpCountScope` to read them.
class CountedScalar {
 public:
  CountedScalar() = default;
  CountedScalar(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  CountedScalar(int v) : value_(v) {}     // NOLINT(google-explicit-constructor)
  CountedScalar(long v) : value_(static_cast<double>(v)) {}            // NOLINT
  CountedScalar(long long v) : value_(static_cast<double>(v)) {}       // NOLINT
  CountedScalar(unsigned long v) : value_(static_cast<double>(v)) {}   // NOLINT

  [[nodiscard]] double value() const noexcept { return value_; }
  explicit operator double() const noexcept { return value_; }

  static OpCounts& counts() noexcept {
    thread_local OpCounts c;
    return c;
  }

  friend CountedScalar operator+(CountedScalar a, CountedScalar b) {
    ++counts().add;
    return {a.value_ + b.value_};
  }
  friend CountedScalar operator-(CountedScalar a, CountedScalar b) {
    ++counts().sub;
    return {a.value_ - b.value_};
  }
  friend CountedScalar operator*(CountedScalar a, CountedScalar b) {
    ++counts().mul;
    return {a.value_ * b.value_};
  }
  friend CountedScalar operator/(CountedScalar a, CountedScalar b) {
    ++counts().div;
    return {a.value_ / b.value_};
  }
  CountedScalar operator-() const { return {-value_}; }
  CountedScalar& operator+=(CountedScalar o) { return *this = *this + o; }
  CountedScalar& operator-=(CountedScalar o) { return *this = *this - o; }
  CountedScalar& operator*=(CountedScalar o) { return *this = *this * o; }
  CountedScalar& operator/=(CountedScalar o) { return *this = *this / o; }

  friend bool operator==(CountedScalar a, CountedScalar b) { return a.value_ == b.value_; }
  friend auto operator<=>(CountedScalar a, CountedScalar b) { return a.value_ <=> b.value_; }

  friend std::ostream& operator<<(std::ostream& os, CountedScalar s) { return os << s.value_; }

 private:
  double value_ = 0.0;
};

/// Resets the thread-local operation counters on entry and exposes the
/// number of operations performed since.
class OpCountScope {
 public:
  OpCountScope() { CountedScalar::counts() = {}; }
  [[nodiscard]] OpCounts counts() const { return CountedScalar::counts(); }
};

// Conversions used by generic code. Doubles convert to rationals exactly.

template <class Scalar>
Scalar scalar_from_double(double v) {
  return Scalar(v);
}

template <class Scalar>
Scalar scalar_from_int(long long v) {
  if constexpr (std::is_same_v<Scalar, CountedScalar>) {
    return CountedScalar(v);
  } else {
    return Scalar(v);
  }
}

inline double to_double(double v) { return v; }
inline double to_double(const CountedScalar& v) { return v.value(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline std::string to_string(const Rational& v) { return v.str(); }

/// `q / (tk - tl)`, or zero when the two knots coincide.
///
/// The comparison is made on exact knot values before any division, so
/// no infinity or NaN is ever produced.
template <class Scalar>
Scalar over_knot_gap(const Scalar& q, const Scalar& tk, const Scalar& tl) {
  if (tk == tl) return Scalar(0);
  return q / (tk - tl);
}

}  // namespace bbspan

namespace Eigen {

template <>
struct NumTraits<bbspan::CountedScalar> : NumTraits<double> {
  using Real = bbspan::CountedScalar;
  using NonInteger = bbspan::CountedScalar;
  using Nested = bbspan::CountedScalar;
  using Literal = bbspan::CountedScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1,
  };
};

}  // namespace Eigen
