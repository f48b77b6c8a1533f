#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rlab/hypoconvex.hpp"
#include "rlab/point_map.hpp"

namespace rlab {

enum class IterStatus { converged, max_iter, diverged };
std::string_view iter_status_name(IterStatus s);

inline constexpr double kDivergenceBound = 1e8;
inline constexpr long kDefaultMaxIter = 10000;
inline constexpr double kDefaultIterTol = 1e-10;

/// Divergence (|x_k| exceeding the bound) is a status, not an error: the
/// hypoconvex objectives this feeds on may legitimately be unbounded below.
struct IterationTrace {
  std::vector<Vec> iterates;
  std::vector<double> residuals;  // |x_{k+1} - x_k|, one entry fewer than iterates
  IterStatus status = IterStatus::max_iter;
  std::optional<Vec> limit;  // final iterate when converged
};

/// x_{k+1} = (1-t) x_k + t T(x_k). The loop is single-threaded and uses this
/// exact update expression so traces are bit-reproducible.
IterationTrace km_iterate(const PointMap& T, const Vec& x0, double relaxation,
                          long max_iter = kDefaultMaxIter, double tol = kDefaultIterTol);

/// x_{k+1} = Prox_{mu f}(x_k); fixed points are zeros of the subdifferential.
IterationTrace proximal_point(const HypoconvexFn& f, double mu, double x0,
                              long max_iter = kDefaultMaxIter, double tol = kDefaultIterTol);

double fixed_point_residual(const PointMap& T, const Vec& x);

/// CSV: header "iter,x_0,...,x_{n-1},residual", one row per iterate (the
/// residual cell of row 0 is empty), final line "# status=<s>".
std::string trace_csv(const IterationTrace& t);

}  // namespace rlab
