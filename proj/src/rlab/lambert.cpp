#include "rlab/lambert.hpp"

#include <algorithm>
#include <cmath>

#include "rlab/error.hpp"

namespace rlab {

namespace {

// Halley refinement of w e^w = z from a given starting point.
double halley(double w, double z) {
  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace

double lambert_w0(double z) {
  const double inv_e = std::exp(-1.0);
  if (z < -inv_e) fail(ErrorKind::domain, "lambert_w0: argument below -1/e");
  if (z == 0.0) return 0.0;

  if (z < -0.3235) {
    // branch-point series in p = sqrt(2 (1 + e z)); the radicand can round
    // slightly negative at z = -1/e
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 + z / inv_e)));
    const double w = -1.0 + p - p * p / 3.0 + (11.0 / 72.0) * p * p * p;
    if (p < 1e-4) return w;  // Halley's denominator degenerates at w = -1
    return halley(w, z);
  }
  const double w0 = z < 0.0 ? z * (1.0 - z) : std::log1p(z);
  return halley(w0, z);
}

double lambert_w0_of_exp(double s) {
  if (s <= 700.0) return lambert_w0(std::exp(s));
  // Solve w + log w = s by Newton; for s > 700, w > 693 so log w is tame.
  double w = s - std::log(s);
  for (int i = 0; i < 50; ++i) {
    const double step = (w + std::log(w) - s) / (1.0 + 1.0 / w);
    w -= step;
    if (std::abs(step) <= 1e-16 * w) break;
  }
  return w;
}

}  // namespace rlab
