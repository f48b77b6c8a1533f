#include "rlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rlab {

std::string_view property_name(Property p) {
  switch (p) {
    case Property::rho_monotone: return "rho_monotone";
    case Property::rho_comonotone: return "rho_comonotone";
    case Property::conic_nonexpansive: return "conic_nonexpansive";
    case Property::nonexpansive: return "nonexpansive";
    case Property::averaged: return "averaged";
    case Property::cocoercive: return "cocoercive";
    case Property::lipschitz: return "lipschitz";
    case Property::strongly_monotone: return "strongly_monotone";
    case Property::hypoconvex: return "hypoconvex";
  }
  return "unknown";
}

Slack property_slack(Property p, double param, const Vec& dx, const Vec& du) {
  const double ndx = norm2(dx);
  const double ndu = norm2(du);
  switch (p) {
    case Property::rho_monotone:
    case Property::strongly_monotone:
      return {dot(dx, du) - param * ndx, std::max(1.0, ndx)};
    case Property::rho_comonotone:
    case Property::cocoercive:
      return {dot(dx, du) - param * ndu, std::max(1.0, ndu)};
    case Property::lipschitz:
      // squared form: L^2 |dx|^2 - |du|^2 >= 0
      return {param * param * ndx - ndu, std::max({1.0, ndx, ndu})};
    case Property::nonexpansive:
    case Property::conic_nonexpansive: {
      const Vec dd = sub(dx, du);
      const double ndd = norm2(dd);
      return {2.0 * param * dot(du, dd) - (1.0 - 2.0 * param) * ndd, std::max({1.0, ndx, ndd})};
    }
    case Property::averaged: {
      // Both characterizations are algebraically identical; evaluating both
      // and taking the minimum makes the verdicts agree by construction.
      const Vec dd = sub(dx, du);
      const double ndd = norm2(dd);
      const double conic = 2.0 * param * dot(du, dd) - (1.0 - 2.0 * param) * ndd;
      const double direct = 2.0 * (1.0 - param) * dot(dx, du) - ndu - (1.0 - 2.0 * param) * ndx;
      return {std::min(conic, direct), std::max({1.0, ndx, ndd})};
    }
    case Property::hypoconvex:
      fail(ErrorKind::argument, "hypoconvex is not a pairwise map property");
  }
  fail(ErrorKind::argument, "unknown property");
}

void validate_parameter(Property p, double param) {
  switch (p) {
    case Property::conic_nonexpansive:
    case Property::nonexpansive:
      if (!(param > 0.0)) fail(ErrorKind::argument, "conic certification requires alpha > 0");
      break;
    case Property::averaged:
      if (!(param > 0.0 && param < 1.0))
        fail(ErrorKind::argument, "averaged certification requires 0 < alpha < 1");
      break;
    case Property::cocoercive:
      if (!(param > 0.0)) fail(ErrorKind::argument, "cocoercivity requires beta > 0");
      break;
    case Property::lipschitz:
      if (!(param >= 0.0)) fail(ErrorKind::argument, "Lipschitz constant must be >= 0");
      break;
    default:
      if (!std::isfinite(param)) fail(ErrorKind::argument, "parameter must be finite");
      break;
  }
}

CertReport certify_map(Property p, const PointMap& T, double param,
                       std::span<const std::pair<Vec, Vec>> pairs, double tol,
                       std::uint64_t seed) {
  validate_parameter(p, param);
  CertReport r;
  r.property = p;
  r.parameter = param;
  r.tolerance = tol;
  r.seed = seed;
  r.samples_used = static_cast<long>(pairs.size());

  double worst = std::numeric_limits<double>::infinity();
  std::size_t best = pairs.size();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [x, y] = pairs[k];
    const Slack s = property_slack(p, param, sub(x, y), sub(T(x), T(y)));
    const double margin = s.value / s.scale;
    if (margin < worst) {
      worst = margin;
      best = k;
    }
  }
  r.worst_margin = worst;
  r.passed = !(worst < -tol);
  if (best < pairs.size()) {
    r.witness_x = pairs[best].first;
    r.witness_y = pairs[best].second;
    r.witness_u = T(pairs[best].first);
    r.witness_v = T(pairs[best].second);
  }
  return r;
}

CertReport certify_conic(const PointMap& T, double alpha,
                         std::span<const std::pair<Vec, Vec>> pairs, double tol,
                         std::uint64_t seed) {
  if (!(alpha > 0.0)) fail(ErrorKind::argument, "conic certification requires alpha > 0");
  const Property p = alpha < 1.0   ? Property::averaged
                     : alpha == 1.0 ? Property::nonexpansive
                                    : Property::conic_nonexpansive;
  return certify_map(p, T, alpha, pairs, tol, seed);
}

CertReport certify_averaged(const PointMap& T, double alpha,
                            std::span<const std::pair<Vec, Vec>> pairs, double tol,
                            std::uint64_t seed) {
  return certify_map(Property::averaged, T, alpha, pairs, tol, seed);
}

CertReport certify_cocoercive(const PointMap& T, double beta,
                              std::span<const std::pair<Vec, Vec>> pairs, double tol,
                              std::uint64_t seed) {
  return certify_map(Property::cocoercive, T, beta, pairs, tol, seed);
}

CertReport certify_lipschitz(const PointMap& T, double lipschitz,
                             std::span<const std::pair<Vec, Vec>> pairs, double tol,
                             std::uint64_t seed) {
  return certify_map(Property::lipschitz, T, lipschitz, pairs, tol, seed);
}

CertReport certify_strongly_monotone(const PointMap& T, double beta,
                                     std::span<const std::pair<Vec, Vec>> pairs, double tol,
                                     std::uint64_t seed) {
  return certify_map(Property::strongly_monotone, T, beta, pairs, tol, seed);
}

}  // namespace rlab
