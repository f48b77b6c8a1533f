#include "rlab/sampler.hpp"

#include <cmath>
#include <random>

namespace rlab {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRadii[3] = {1e-3, 1.0, 1e3};
constexpr double kCoincidentOffset = 1e-6;

// Box-Muller over mt19937_64. std::normal_distribution is implementation
// defined, which would break byte-identical reports across toolchains.
class NormalGen {
 public:
  explicit NormalGen(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    have_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Vec vec(int dim) {
    Vec v(static_cast<std::size_t>(dim));
    for (auto& x : v) x = next();
    return v;
  }

 private:
  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  bool have_ = false;
  double spare_ = 0.0;
};

}  // namespace

std::vector<std::pair<Vec, Vec>> sample_pairs(int dim, const SamplerConfig& cfg) {
  NormalGen gen(cfg.seed);
  std::vector<std::pair<Vec, Vec>> pairs;
  pairs.reserve(static_cast<std::size_t>(cfg.count));
  for (int i = 0; i < cfg.count; ++i) {
    const double radius = kRadii[i % 3];
    Vec x = scaled(gen.vec(dim), radius);
    Vec y;
    if (i % 4 == 3) {
      Vec dir = gen.vec(dim);
      const double len = norm(dir);
      y = len > 0.0 ? axpy(kCoincidentOffset / len, dir, x) : x;
    } else {
      y = scaled(gen.vec(dim), radius);
    }
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

std::vector<std::pair<double, double>> sample_scalar_pairs(const SamplerConfig& cfg) {
  auto v = sample_pairs(1, cfg);
  std::vector<std::pair<double, double>> out;
  out.reserve(v.size());
  for (const auto& [x, y] : v) out.emplace_back(x[0], y[0]);
  return out;
}

std::vector<Vec> sample_points(int dim, int count, std::uint64_t seed) {
  NormalGen gen(seed);
  std::vector<Vec> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) pts.push_back(scaled(gen.vec(dim), kRadii[i % 3]));
  return pts;
}

}  // namespace rlab
