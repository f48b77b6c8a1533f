#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rlab/point_map.hpp"
#include "rlab/report.hpp"

namespace rlab {

using PairList = std::vector<std::pair<Vec, Vec>>;

/// Slack and scale of one property inequality evaluated on the differences
/// dx = x - y and du = Tx - Ty (for graph samples, u - v). The sample passes
/// when slack >= -tol * scale; scale = max(1, relevant squared norms) keeps
/// the tolerance relative for large-magnitude data.
struct Slack {
  double value = 0.0;
  double scale = 1.0;
};
Slack property_slack(Property p, double param, const Vec& dx, const Vec& du);

void validate_parameter(Property p, double param);

CertReport certify_map(Property p, const PointMap& T, double param,
                       std::span<const std::pair<Vec, Vec>> pairs, double tol = kDefaultTol,
                       std::uint64_t seed = 0);

/// Conic certification: alpha < 1 is reported as "averaged" and checked
/// through both characterizations (they must agree); alpha = 1 reports
/// "nonexpansive"; alpha > 1 the general conic class.
CertReport certify_conic(const PointMap& T, double alpha,
                         std::span<const std::pair<Vec, Vec>> pairs, double tol = kDefaultTol,
                         std::uint64_t seed = 0);

/// certify_conic with an explicit alpha < 1 gate.
CertReport certify_averaged(const PointMap& T, double alpha,
                            std::span<const std::pair<Vec, Vec>> pairs, double tol = kDefaultTol,
                            std::uint64_t seed = 0);

CertReport certify_cocoercive(const PointMap& T, double beta,
                              std::span<const std::pair<Vec, Vec>> pairs, double tol = kDefaultTol,
                              std::uint64_t seed = 0);

CertReport certify_lipschitz(const PointMap& T, double lipschitz,
                             std::span<const std::pair<Vec, Vec>> pairs, double tol = kDefaultTol,
                             std::uint64_t seed = 0);

/// beta = 0 is the plain monotonicity check.
CertReport certify_strongly_monotone(const PointMap& T, double beta,
                                     std::span<const std::pair<Vec, Vec>> pairs,
                                     double tol = kDefaultTol, std::uint64_t seed = 0);

}  // namespace rlab
