#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

#include "rlab/vec.hpp"

namespace rlab {

inline constexpr double kDefaultTol = 1e-9;

enum class Property {
  rho_monotone,
  rho_comonotone,
  conic_nonexpansive,
  nonexpansive,
  averaged,
  cocoercive,
  lipschitz,
  strongly_monotone,
  hypoconvex,
};

std::string_view property_name(Property p);

/// Verdict of a property check over a finite sample.
///
/// A pass certifies the supplied sample only, never the full operator;
/// samples_used records how much evidence was examined. worst_margin is the
/// minimum over samples of slack/scale, so passed <=> worst_margin >= -tol.
struct CertReport {
  Property property = Property::rho_monotone;
  double parameter = 0.0;
  bool passed = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::optional<Vec> witness_x;  // the two inputs achieving worst_margin
  std::optional<Vec> witness_y;
  std::optional<Vec> witness_u;  // their outputs / graph values, when meaningful
  std::optional<Vec> witness_v;
  long samples_used = 0;
  std::uint64_t seed = 0;
  double tolerance = kDefaultTol;
};

}  // namespace rlab
