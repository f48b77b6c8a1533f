#include "rlab/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rlab/sampler.hpp"

namespace rlab {

Matrix block_rotation(int n) {
  if (n < 2 || n % 2 != 0)
    fail(ErrorKind::dimension, "block rotation requires even dimension n >= 2");
  Matrix N(n);
  for (int b = 0; b < n; b += 2) {
    N(b, b + 1) = -1.0;
    N(b + 1, b) = 1.0;
  }
  return N;
}

RotationFamily rotation_family(double lambda, int n) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    fail(ErrorKind::argument, "rotation family requires 0 <= lambda < 1");
  const Matrix N = block_rotation(n);
  const Matrix I = Matrix::identity(n);

  RotationFamily fam;
  fam.T = (1.0 - lambda) * I + lambda * N;
  const double denom = (1.0 - lambda) * (1.0 - lambda) + lambda * lambda;
  fam.A = (lambda / denom) * ((1.0 - 2.0 * lambda) * I - N);
  fam.rho_mono = lambda * (1.0 - 2.0 * lambda) / denom;
  fam.rho_comono = lambda == 0.0 ? std::numeric_limits<double>::infinity()
                                 : (1.0 - 2.0 * lambda) / (2.0 * lambda);

  const Matrix check = (I + fam.A).mul(fam.T) - I;
  if (check.max_abs() > 1e-12 * (1.0 + fam.A.inf_norm()))
    fail(ErrorKind::argument, "rotation family: resolvent identity check failed");
  return fam;
}

ProjectionFamily projection_family(double alpha, const std::vector<Vec>& u_basis) {
  if (!(alpha > 0.0)) fail(ErrorKind::argument, "projection family requires alpha > 0");
  if (u_basis.empty()) fail(ErrorKind::argument, "projection family requires a nonempty basis");
  const int n = static_cast<int>(u_basis.front().size());

  // Modified Gram-Schmidt; a residual that drops below tolerance means the
  // basis was linearly dependent.
  std::vector<Vec> q;
  for (const auto& b : u_basis) {
    require_dim(b, static_cast<std::size_t>(n), "basis vector");
    Vec w = b;
    for (const auto& e : q) w = axpy(-dot(w, e), e, w);
    const double len = norm(w);
    if (len <= 1e-10 * (1.0 + norm(b)))
      fail(ErrorKind::argument, "projection family: basis is linearly dependent");
    q.push_back(scaled(w, 1.0 / len));
  }

  Matrix p(n);
  for (const auto& e : q)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        p(i, j) += e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];

  const Matrix I = Matrix::identity(n);
  ProjectionFamily fam;
  fam.projector = p;
  fam.T = (1.0 - 2.0 * alpha) * I + 2.0 * alpha * p;
  fam.rho_comono = 1.0 / (2.0 * alpha) - 1.0;
  if (alpha == 0.5) {
    fam.normal_cone = true;  // A = N_U, set-valued; no matrix to return
  } else {
    fam.A = (2.0 * alpha / (1.0 - 2.0 * alpha)) * (I - p);
  }
  return fam;
}

bool Box::whole_space() const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (std::isfinite(lo[i]) || std::isfinite(hi[i])) return false;
  return true;
}

Vec Box::project(const Vec& x) const {
  Vec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::clamp(x[i], lo[i], hi[i]);
  return y;
}

double Box::project1(double x) const { return std::clamp(x, lo[0], hi[0]); }

Box Box::interval(double lo_, double hi_) {
  if (!(lo_ <= hi_)) fail(ErrorKind::argument, "box: lower bound exceeds upper bound");
  return Box{{lo_}, {hi_}};
}

Box Box::whole_line() {
  const double inf = std::numeric_limits<double>::infinity();
  return Box{{-inf}, {inf}};
}

Box Box::nonnegative() {
  return Box{{0.0}, {std::numeric_limits<double>::infinity()}};
}

OperatorGraph counterexample_graph(double r, const Box& c, int samples, std::uint64_t seed) {
  if (!(r >= 0.0)) fail(ErrorKind::argument, "counterexample family requires r >= 0");
  if (samples < 1) fail(ErrorKind::argument, "counterexample family requires samples >= 1");
  const int n = c.dim();

  // Half deterministic grid over [-3,3]^n diagonal, half seeded normals, so
  // both sides of the projection boundary are always represented.
  std::vector<Vec> points;
  const int grid = samples / 2;
  for (int k = 0; k < grid; ++k) {
    const double t = grid == 1 ? 0.0 : -3.0 + 6.0 * k / (grid - 1.0);
    points.push_back(Vec(static_cast<std::size_t>(n), t));
  }
  for (const auto& p : sample_points(n, samples - grid, seed)) points.push_back(p);

  OperatorGraph g;
  g.dim = n;
  g.pairs.reserve(points.size());
  for (const auto& x : points) {
    // B = -Id - r P_C; the graph of A = B^{-1} is {(B x, x)}.
    const Vec bx = axpy(-r, c.project(x), scaled(x, -1.0));
    g.pairs.push_back({bx, x});
  }
  return g;
}

OperatorGraph sample_linear_graph(const Matrix& A, int points, std::uint64_t seed) {
  OperatorGraph g;
  g.dim = A.n();
  g.pairs.reserve(static_cast<std::size_t>(points));
  for (const auto& x : sample_points(A.n(), points, seed)) g.pairs.push_back({x, A.apply(x)});
  return g;
}

}  // namespace rlab
