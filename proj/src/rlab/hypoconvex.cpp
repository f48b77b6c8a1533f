#include "rlab/hypoconvex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlab/lambert.hpp"

namespace rlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_regime(double lambda, double mu, bool allow_equal) {
  if (!(lambda > 0.0)) fail(ErrorKind::regime, "hypoconvex scale lambda must be positive");
  if (!(mu > 0.0)) fail(ErrorKind::regime, "prox parameter mu must be positive");
  if (allow_equal ? mu > lambda : mu >= lambda)
    fail(ErrorKind::regime, allow_equal ? "prox requires mu <= lambda"
                                        : "prox requires mu < lambda (uniqueness regime)");
}

double optimality_residual(const HypoconvexFn& f, double mu, double x, double y) {
  if (!f.derivative) return std::numeric_limits<double>::quiet_NaN();
  const double r = y + mu * f.derivative(y) - x;
  if (f.domain) {
    // one-sided condition at an active box bound
    const double lo = f.domain->lo[0];
    const double hi = f.domain->hi[0];
    const double edge = 1e-12 * (1.0 + std::abs(y));
    if (std::isfinite(lo) && y - lo <= edge) return std::max(0.0, -r);
    if (std::isfinite(hi) && hi - y <= edge) return std::max(0.0, r);
  }
  return std::abs(r);
}

}  // namespace

std::string_view prox_method_name(ProxMethod m) {
  return m == ProxMethod::closed_form ? "closed_form" : "numeric";
}

ProxResult prox_exp_family(double lambda, double mu, double x) {
  require_regime(lambda, mu, /*allow_equal=*/true);
  double y;
  if (mu == lambda) {
    if (!(x > 0.0)) fail(ErrorKind::domain, "exp-family prox at mu = lambda requires x > 0");
    y = std::log(x / mu);
  } else {
    const double c = lambda * x / (lambda - mu);
    const double log_coeff = std::log(lambda * mu / (lambda - mu));
    y = c - lambert_w0_of_exp(log_coeff + c);
  }
  const double resid = std::abs(y + mu * (std::exp(y) - y / lambda) - x);
  return {y, resid, ProxMethod::closed_form};
}

Vec prox_indicator_quadratic(double lambda, double mu, const Box& d, const Vec& x) {
  require_regime(lambda, mu, false);
  require_dim(x, d.lo.size(), "prox input");
  return d.project(scaled(x, lambda / (lambda - mu)));
}

ProxResult prox_numeric(const HypoconvexFn& f, double mu, double x, double bracket_radius) {
  require_regime(f.lambda, mu, false);
  if (bracket_radius <= 0.0) bracket_radius = 10.0 * (1.0 + std::abs(x));
  const auto objective = [&](double y) { return f.value(y) + (y - x) * (y - x) / (2.0 * mu); };

  constexpr int kGrid = 2001;
  const double left = x - bracket_radius;
  const double step = 2.0 * bracket_radius / (kGrid - 1);
  double best_y = 0.0;
  double best_f = kInf;
  for (int k = 0; k < kGrid; ++k) {
    const double y = left + k * step;
    const double v = objective(y);
    if (v < best_f) {
      best_f = v;
      best_y = y;
    }
  }
  if (!std::isfinite(best_f))
    fail(ErrorKind::bracket, "prox_numeric: objective is not finite anywhere in the bracket");

  // Golden-section refinement around the best grid point. Tracking the best
  // point seen keeps indicator-style infinities from winning.
  double a = best_y - step;
  double b = best_y + step;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto track = [&](double y, double v) {
    if (v < best_f) {
      best_f = v;
      best_y = y;
    }
  };
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  track(c, fc);
  track(d, fd);
  for (int guard = 0; b - a > 1e-12 && guard < 400; ++guard) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = objective(c);
      track(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = objective(d);
      track(d, fd);
    }
  }

  // Parabolic stationarity polish. Value-only search stalls on the
  // floating-point plateau of the objective when |F| is large near the
  // minimizer; one vertex fit through well-separated points recovers the
  // location. Skipped whenever a neighbor is infinite (boundary minima).
  const double h = 1e-4 * (1.0 + std::abs(best_y));
  const double fm = objective(best_y - h);
  const double f0 = objective(best_y);
  const double fp = objective(best_y + h);
  if (std::isfinite(fm) && std::isfinite(f0) && std::isfinite(fp)) {
    const double curve = fp - 2.0 * f0 + fm;
    if (curve > 0.0) {
      const double v = best_y - h * (fp - fm) / (2.0 * curve);
      if (std::isfinite(v) && std::abs(v - best_y) <= h &&
          objective(v) <= f0 + 1e-12 * (1.0 + std::abs(f0)))
        best_y = v;
    }
  }
  return {best_y, optimality_residual(f, mu, x, best_y), ProxMethod::numeric};
}

ProxResult prox(const HypoconvexFn& f, double mu, double x) {
  if (f.closed_form_prox) {
    const double y = f.closed_form_prox(mu, x);
    return {y, optimality_residual(f, mu, x, y), ProxMethod::closed_form};
  }
  return prox_numeric(f, mu, x);
}

PointMap prox_map(const HypoconvexFn& f, double mu) {
  return {1, [f, mu](const Vec& x) { return Vec{prox(f, mu, x[0]).point}; }};
}

double moreau_envelope(const HypoconvexFn& f, double mu, double x) {
  require_regime(f.lambda, mu, false);
  const double p = prox(f, mu, x).point;
  return f.value(p) + (x - p) * (x - p) / (2.0 * mu);
}

CertReport check_hypoconvex(const HypoconvexFn& f, double lambda,
                            std::span<const std::pair<double, double>> pairs, double tol,
                            std::uint64_t seed) {
  if (!(lambda > 0.0)) fail(ErrorKind::argument, "check_hypoconvex: lambda must be positive");
  CertReport r;
  r.property = Property::hypoconvex;
  r.parameter = lambda;
  r.tolerance = tol;
  r.seed = seed;
  r.samples_used = static_cast<long>(pairs.size());

  double worst = kInf;
  double wx = 0.0, wy = 0.0;
  bool have_witness = false;
  auto consider = [&](double margin, double x, double y) {
    if (margin < worst) {
      worst = margin;
      wx = x;
      wy = y;
      have_witness = true;
    }
  };

  for (const auto& [x, y] : pairs) {
    const double fx = f.value(x);
    const double fy = f.value(y);
    if (!(std::isfinite(fx) && std::isfinite(fy))) continue;  // vacuous: rhs is +inf
    const double d2 = (x - y) * (x - y);

    for (int k = 1; k <= 9; ++k) {
      const double tau = 0.1 * k;
      const double fm = f.value((1.0 - tau) * x + tau * y);
      const double rhs = (1.0 - tau) * fx + tau * fy + tau * (1.0 - tau) * d2 / (2.0 * lambda);
      const double scale =
          std::max({1.0, std::abs(fx), std::abs(fy), std::isfinite(fm) ? std::abs(fm) : 0.0,
                    d2 / (2.0 * lambda)});
      consider((rhs - fm) / scale, x, y);
    }

    // midpoint convexity of f + |.|^2/(2 lambda), which must agree
    auto g = [&](double t) { return f.value(t) + t * t / (2.0 * lambda); };
    const double gm = g(0.5 * (x + y));
    const double gavg = 0.5 * (g(x) + g(y));
    const double scale = std::max({1.0, std::abs(gavg), std::isfinite(gm) ? std::abs(gm) : 0.0});
    consider((gavg - gm) / scale, x, y);
  }

  r.worst_margin = worst;
  r.passed = !(worst < -tol);
  if (have_witness) {
    r.witness_x = Vec{wx};
    r.witness_y = Vec{wy};
  }
  return r;
}

ProxConstants prox_constants(double lambda, double mu) {
  require_regime(lambda, mu, false);
  return {lambda / (lambda - mu), (lambda - mu) / lambda, lambda / (2.0 * (lambda - mu))};
}

HypoconvexFn make_exp_family(double lambda) {
  if (!(lambda > 0.0)) fail(ErrorKind::regime, "exp family requires lambda > 0");
  HypoconvexFn f;
  f.name = "exp-hypoconvex";
  f.lambda = lambda;
  f.value = [lambda](double y) { return std::exp(y) - y * y / (2.0 * lambda); };
  f.derivative = [lambda](double y) { return std::exp(y) - y / lambda; };
  f.closed_form_prox = [lambda](double mu, double x) {
    return prox_exp_family(lambda, mu, x).point;
  };
  return f;
}

HypoconvexFn make_concave_quadratic(double lambda) {
  if (!(lambda > 0.0)) fail(ErrorKind::regime, "concave-quadratic family requires lambda > 0");
  HypoconvexFn f;
  f.name = "concave-quadratic";
  f.lambda = lambda;
  f.value = [lambda](double y) { return -y * y / (2.0 * lambda); };
  f.derivative = [lambda](double y) { return -y / lambda; };
  f.closed_form_prox = [lambda](double mu, double x) {
    require_regime(lambda, mu, false);
    return lambda / (lambda - mu) * x;
  };
  return f;
}

HypoconvexFn make_indicator_quadratic(double lambda, const Box& d) {
  if (!(lambda > 0.0)) fail(ErrorKind::regime, "indicator-quadratic family requires lambda > 0");
  if (d.dim() != 1) fail(ErrorKind::argument, "scalar indicator family needs a 1-D box");
  HypoconvexFn f;
  f.name = "indicator-quadratic";
  f.lambda = lambda;
  f.domain = d;
  f.value = [lambda, d](double y) {
    if (y < d.lo[0] || y > d.hi[0]) return kInf;
    return -y * y / (2.0 * lambda);
  };
  f.derivative = [lambda](double y) { return -y / lambda; };
  f.closed_form_prox = [lambda, d](double mu, double x) {
    require_regime(lambda, mu, false);
    return d.project1(lambda / (lambda - mu) * x);
  };
  return f;
}

HypoconvexFn make_quadratic_spline(double lambda, std::vector<SplinePiece> pieces) {
  if (!(lambda > 0.0)) fail(ErrorKind::regime, "quadratic-spline family requires lambda > 0");
  if (pieces.empty()) fail(ErrorKind::argument, "quadratic spline needs at least one piece");
  double lo = kInf, hi = -kInf;
  for (const auto& p : pieces) {
    if (!(p.lo <= p.hi)) fail(ErrorKind::argument, "quadratic spline piece has lo > hi");
    if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c))
      fail(ErrorKind::argument, "quadratic spline coefficients must be finite");
    lo = std::min(lo, p.lo);
    hi = std::max(hi, p.hi);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const SplinePiece& l, const SplinePiece& r) { return l.lo < r.lo; });

  HypoconvexFn f;
  f.name = "quadratic-spline";
  f.lambda = lambda;
  f.domain = Box::interval(lo, hi);  // hull; holes stay +inf through value()
  f.value = [pieces](double y) {
    for (const auto& p : pieces)
      if (y >= p.lo && y <= p.hi) return p.a * y * y + p.b * y + p.c;
    return kInf;
  };
  f.derivative = [pieces](double y) {
    for (const auto& p : pieces)
      if (y >= p.lo && y <= p.hi) return 2.0 * p.a * y + p.b;
    return std::numeric_limits<double>::quiet_NaN();
  };
  return f;
}

}  // namespace rlab
