#pragma once

// Forward-mode differentiation scalar with a dynamically sized derivative
// vector. An empty derivative vector means "identically zero", so constants
// stay cheap when mixed into seeded expressions.

#include <cmath>
#include <Eigen/Core>

namespace mocapfit {

struct Dual {
  double v = 0.0;
  Eigen::VectorXd d;  // empty == zero gradient

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit by design
  Dual(double value, Eigen::VectorXd grad) : v(value), d(std::move(grad)) {}

  static Dual seeded(double value, int dim, int index) {
    Dual r(value);
    r.d = Eigen::VectorXd::Zero(dim);
    r.d[index] = 1.0;
    return r;
  }

  bool constant() const { return d.size() == 0; }

  Dual& operator+=(const Dual& o) {
    v += o.v;
    if (!o.constant()) {
      if (constant()) d = o.d;
      else d += o.d;
    }
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    v -= o.v;
    if (!o.constant()) {
      if (constant()) d = -o.d;
      else d -= o.d;
    }
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    if (o.constant()) {
      if (!constant()) d *= o.v;
    } else if (constant()) {
      d = v * o.d;
    } else {
      d = o.v * d + v * o.d;
    }
    v *= o.v;
    return *this;
  }
  Dual& operator/=(const Dual& o) {
    if (o.constant()) {
      if (!constant()) d /= o.v;
    } else if (constant()) {
      d = (-v / (o.v * o.v)) * o.d;
    } else {
      d = d / o.v - (v / (o.v * o.v)) * o.d;
    }
    v /= o.v;
    return *this;
  }
};

inline Dual operator+(Dual a, const Dual& b) { return a += b; }
inline Dual operator-(Dual a, const Dual& b) { return a -= b; }
inline Dual operator*(Dual a, const Dual& b) { return a *= b; }
inline Dual operator/(Dual a, const Dual& b) { return a /= b; }
inline Dual operator-(const Dual& a) {
  Dual r(-a.v);
  if (!a.constant()) r.d = -a.d;
  return r;
}
inline Dual operator+(const Dual& a) { return a; }

inline bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
inline bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
inline bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
inline bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
inline bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
inline bool operator!=(const Dual& a, const Dual& b) { return a.v != b.v; }

// Chain rule helper: f(a) with known f(a.v) and f'(a.v).
inline Dual chain(const Dual& a, double value, double slope) {
  Dual r(value);
  if (!a.constant()) r.d = slope * a.d;
  return r;
}

inline Dual sqrt(const Dual& a) {
  const double s = std::sqrt(a.v);
  return chain(a, s, 0.5 / s);
}
inline Dual sin(const Dual& a) { return chain(a, std::sin(a.v), std::cos(a.v)); }
inline Dual cos(const Dual& a) { return chain(a, std::cos(a.v), -std::sin(a.v)); }
inline Dual exp(const Dual& a) {
  const double e = std::exp(a.v);
  return chain(a, e, e);
}
inline Dual log(const Dual& a) { return chain(a, std::log(a.v), 1.0 / a.v); }
inline Dual abs(const Dual& a) { return a.v < 0.0 ? -a : a; }
inline Dual atan2(const Dual& y, const Dual& x) {
  const double denom = x.v * x.v + y.v * y.v;
  Dual r(std::atan2(y.v, x.v));
  if (!y.constant() || !x.constant()) {
    r.d = Eigen::VectorXd::Zero(y.constant() ? x.d.size() : y.d.size());
    if (!y.constant()) r.d += (x.v / denom) * y.d;
    if (!x.constant()) r.d -= (y.v / denom) * x.d;
  }
  return r;
}

inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.v; }

inline bool isfinite(const Dual& a) { return std::isfinite(a.v); }

}  // namespace mocapfit

namespace Eigen {
template <>
struct NumTraits<mocapfit::Dual> : NumTraits<double> {
  using Real = mocapfit::Dual;
  using NonInteger = mocapfit::Dual;
  using Nested = mocapfit::Dual;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 16
  };
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<mocapfit::Dual, double, BinaryOp> {
  using ReturnType = mocapfit::Dual;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, mocapfit::Dual, BinaryOp> {
  using ReturnType = mocapfit::Dual;
};
}  // namespace Eigen
