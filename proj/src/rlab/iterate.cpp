#include "rlab/iterate.hpp"

#include <cmath>
#include <cstdio>

namespace rlab {

namespace {

IterationTrace run_iteration(const Vec& x0, long max_iter, double tol,
                             const std::function<Vec(const Vec&)>& step) {
  if (!(tol > 0.0)) fail(ErrorKind::argument, "iteration tolerance must be positive");
  if (max_iter < 1) fail(ErrorKind::argument, "max_iter must be >= 1");

  IterationTrace trace;
  trace.iterates.push_back(x0);
  for (long k = 0; k < max_iter; ++k) {
    const Vec& x = trace.iterates.back();
    if (norm(x) > kDivergenceBound) {
      trace.status = IterStatus::diverged;
      return trace;
    }
    Vec next = step(x);
    const double residual = norm(sub(next, x));
    trace.iterates.push_back(std::move(next));
    trace.residuals.push_back(residual);
    if (norm(trace.iterates.back()) > kDivergenceBound) {
      trace.status = IterStatus::diverged;
      return trace;
    }
    if (residual <= tol) {
      trace.status = IterStatus::converged;
      trace.limit = trace.iterates.back();
      return trace;
    }
  }
  trace.status = IterStatus::max_iter;
  return trace;
}

}  // namespace

std::string_view iter_status_name(IterStatus s) {
  switch (s) {
    case IterStatus::converged: return "converged";
    case IterStatus::max_iter: return "max_iter";
    case IterStatus::diverged: return "diverged";
  }
  return "unknown";
}

IterationTrace km_iterate(const PointMap& T, const Vec& x0, double relaxation, long max_iter,
                          double tol) {
  if (!(relaxation > 0.0 && relaxation <= 1.0))
    fail(ErrorKind::argument, "relaxation must lie in (0, 1]");
  require_dim(x0, static_cast<std::size_t>(T.dim), "initial point");
  const double t = relaxation;
  return run_iteration(x0, max_iter, tol, [&T, t](const Vec& x) {
    const Vec tx = T(x);
    Vec next(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) next[i] = (1.0 - t) * x[i] + t * tx[i];
    return next;
  });
}

IterationTrace proximal_point(const HypoconvexFn& f, double mu, double x0, long max_iter,
                              double tol) {
  if (!(mu > 0.0 && mu < f.lambda))
    fail(ErrorKind::regime, "proximal point requires 0 < mu < lambda");
  return run_iteration(Vec{x0}, max_iter, tol,
                       [&f, mu](const Vec& x) { return Vec{prox(f, mu, x[0]).point}; });
}

double fixed_point_residual(const PointMap& T, const Vec& x) { return norm(sub(x, T(x))); }

std::string trace_csv(const IterationTrace& t) {
  std::string out = "iter";
  const std::size_t dim = t.iterates.empty() ? 0 : t.iterates.front().size();
  char buf[64];
  for (std::size_t j = 0; j < dim; ++j) {
    std::snprintf(buf, sizeof buf, ",x_%zu", j);
    out += buf;
  }
  out += ",residual\n";
  for (std::size_t k = 0; k < t.iterates.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%zu", k);
    out += buf;
    for (double v : t.iterates[k]) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out += buf;
    }
    if (k == 0) {
      out += ",";
    } else {
      std::snprintf(buf, sizeof buf, ",%.17g", t.residuals[k - 1]);
      out += buf;
    }
    out += "\n";
  }
  out += "# status=";
  out += iter_status_name(t.status);
  out += "\n";
  return out;
}

}  // namespace rlab
