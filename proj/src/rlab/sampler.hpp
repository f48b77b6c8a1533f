#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rlab/vec.hpp"

namespace rlab {

/// Deterministic standard-normal sampler used by all certifiers.
///
/// Pairs cycle through the radii {1e-3, 1, 1e3} so every inequality is
/// exercised across magnitudes; every fourth pair is near-coincident
/// (offset 1e-6) to stress the ratio checks.
struct SamplerConfig {
  std::uint64_t seed = 42;
  int count = 200;
};

std::vector<std::pair<Vec, Vec>> sample_pairs(int dim, const SamplerConfig& cfg = {});
std::vector<std::pair<double, double>> sample_scalar_pairs(const SamplerConfig& cfg = {});
std::vector<Vec> sample_points(int dim, int count, std::uint64_t seed);

}  // namespace rlab
