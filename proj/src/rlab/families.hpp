#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rlab/graph.hpp"
#include "rlab/matrix.hpp"

namespace rlab {

/// Block-diagonal planar rotation N with N^T = -N and N^2 = -Id. Requires
/// even n: no real skew square root of -Id exists in odd dimension.
Matrix block_rotation(int n);

/// The rotation family T = (1-lambda) Id + lambda N together with the
/// operator A it is the resolvent of, and the optimal moduli
///   rho_mono   = lambda (1 - 2 lambda) / (lambda^2 + (1-lambda)^2)
///   rho_comono = (1 - 2 lambda) / (2 lambda)   (+inf at lambda = 0).
struct RotationFamily {
  Matrix T;
  Matrix A;
  double rho_mono = 0.0;
  double rho_comono = 0.0;
};
RotationFamily rotation_family(double lambda, int n);

/// T = (1-2a) Id + 2a P_U and, for a != 1/2, A = (2a/(1-2a)) P_{U^perp} with
/// T = J_A. At a = 1/2 the operator is the normal cone of U (set-valued), so
/// only the tag is returned. A is (1/(2a) - 1)-comonotone.
struct ProjectionFamily {
  Matrix T;
  std::optional<Matrix> A;
  bool normal_cone = false;
  double rho_comono = 0.0;
  Matrix projector;  // P_U
};
ProjectionFamily projection_family(double alpha, const std::vector<Vec>& u_basis);

/// Closed box with optional infinite bounds; projection clamps per coordinate.
struct Box {
  Vec lo;
  Vec hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool whole_space() const;
  Vec project(const Vec& x) const;
  double project1(double x) const;  // 1-D convenience

  static Box interval(double lo, double hi);
  static Box whole_line();
  static Box nonnegative();  // the cone [0, inf)
};

/// Graph samples of A = (-Id - r P_C)^{-1}: pairs (B x, x) over a mix of
/// grid and seeded points. ran(Id + A) = -r C, and the resolvent graph is
/// multivalued unless C is the whole space and r > 0.
OperatorGraph counterexample_graph(double r, const Box& c, int samples, std::uint64_t seed);

/// Graph of a linear operator over sampled points (radii {1e-3, 1, 1e3}).
OperatorGraph sample_linear_graph(const Matrix& A, int points, std::uint64_t seed);

}  // namespace rlab
