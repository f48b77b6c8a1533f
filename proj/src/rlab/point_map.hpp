#pragma once

#include <functional>
#include <utility>

#include "rlab/error.hpp"
#include "rlab/matrix.hpp"
#include "rlab/vec.hpp"

namespace rlab {

/// Total deterministic single-valued map R^n -> R^n. Evaluation must be
/// reentrant; all certifiers treat it as a pure function.
struct PointMap {
  int dim = 0;
  std::function<Vec(const Vec&)> eval;

  Vec operator()(const Vec& x) const { return eval(x); }
};

inline PointMap identity_map(int dim) {
  return {dim, [](const Vec& x) { return x; }};
}

inline PointMap matrix_map(const Matrix& m) {
  return {m.n(), [m](const Vec& x) { return m.apply(x); }};
}

inline PointMap scale_map(int dim, double s) {
  return {dim, [s](const Vec& x) { return scaled(x, s); }};
}

inline PointMap negate_map(const PointMap& t) {
  return {t.dim, [t](const Vec& x) { return scaled(t(x), -1.0); }};
}

/// x - T x
inline PointMap displacement_map(const PointMap& t) {
  return {t.dim, [t](const Vec& x) { return sub(x, t(x)); }};
}

/// a*x + b*T(x)
inline PointMap affine_map(double a, double b, const PointMap& t) {
  return {t.dim, [a, b, t](const Vec& x) {
            Vec tx = t(x);
            Vec r(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * tx[i];
            return r;
          }};
}

/// The nonexpansive candidate N with T = (1-alpha) Id + alpha N, i.e.
/// N = (1/alpha) T - ((1-alpha)/alpha) Id.
inline PointMap conic_decompose(const PointMap& t, double alpha) {
  if (!(alpha > 0.0)) fail(ErrorKind::argument, "conic_decompose: alpha must be positive");
  return affine_map(-(1.0 - alpha) / alpha, 1.0 / alpha, t);
}

}  // namespace rlab
