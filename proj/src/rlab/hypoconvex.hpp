#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rlab/families.hpp"
#include "rlab/point_map.hpp"
#include "rlab/report.hpp"

namespace rlab {

/// Scalar function with hypoconvexity scale lambda (modulus 1/lambda):
/// value(y) + y^2/(2 lambda) is convex on the effective domain. For
/// mu in ]0, lambda[ the proximal map is single-valued and equals the
/// resolvent of mu times the (abstract) subdifferential, which for the
/// registered families is just the derivative.
struct HypoconvexFn {
  std::string name;
  double lambda = 1.0;
  std::function<double(double)> value;                     // may return +inf
  std::function<double(double)> derivative;                // null when absent
  std::function<double(double, double)> closed_form_prox;  // (mu, x) -> y; null when absent
  std::optional<Box> domain;                               // 1-D effective domain, when boxed
};

enum class ProxMethod { closed_form, numeric };
std::string_view prox_method_name(ProxMethod m);

/// residual is the KKT violation of y + mu f'(y) = x (one-sided at box
/// edges); NaN when the function carries no derivative.
struct ProxResult {
  double point = 0.0;
  double residual = 0.0;
  ProxMethod method = ProxMethod::numeric;
};

/// Prox of f_lambda(y) = exp(y) - y^2/(2 lambda):
///   mu = lambda           -> ln(x/mu), defined for x > 0
///   mu in ]0, lambda[     -> lambda x/(lambda-mu) - W(...), via Lambert W.
ProxResult prox_exp_family(double lambda, double mu, double x);

/// Prox of iota_D - |.|^2/(2 lambda): the projection P_D(lambda/(lambda-mu) x)
/// (for a cone this equals (lambda/(lambda-mu)) P_D). Componentwise over boxes.
Vec prox_indicator_quadratic(double lambda, double mu, const Box& d, const Vec& x);

/// Coarse-grid (2001 points) + golden-section 1-D minimizer of
/// f(y) + (y-x)^2/(2 mu). This is the independent oracle every closed-form
/// prox is checked against. Default bracket radius: 10 (1 + |x|).
ProxResult prox_numeric(const HypoconvexFn& f, double mu, double x, double bracket_radius = 0.0);

/// Closed form when the family registers one, numeric otherwise.
ProxResult prox(const HypoconvexFn& f, double mu, double x);

PointMap prox_map(const HypoconvexFn& f, double mu);

/// e_mu f(x) = f(prox) + (x - prox)^2 / (2 mu).
double moreau_envelope(const HypoconvexFn& f, double mu, double x);

/// Verifies the mixing inequality
///   f((1-tau)x + tau y) <= (1-tau)f(x) + tau f(y) + tau(1-tau)|x-y|^2/(2 lambda)
/// over tau in {0.1,...,0.9}, together with the equivalent midpoint-convexity
/// check of f + |.|^2/(2 lambda). Pairs where f is infinite impose no
/// constraint (the right-hand side dominates).
CertReport check_hypoconvex(const HypoconvexFn& f, double lambda,
                            std::span<const std::pair<double, double>> pairs,
                            double tol = kDefaultTol, std::uint64_t seed = 0);

/// The three constants attached to Prox_{mu f} of a 1/lambda-hypoconvex f:
/// Lipschitz lambda/(lambda-mu), cocoercivity (lambda-mu)/lambda, and the
/// conic constant lambda/(2(lambda-mu)) of Id - Prox.
struct ProxConstants {
  double lipschitz;
  double cocoercive;
  double conic_alpha;
};
ProxConstants prox_constants(double lambda, double mu);

struct SplinePiece {
  double a, b, c;  // a y^2 + b y + c
  double lo, hi;
};

HypoconvexFn make_exp_family(double lambda);
HypoconvexFn make_concave_quadratic(double lambda);
HypoconvexFn make_indicator_quadratic(double lambda, const Box& d);
HypoconvexFn make_quadratic_spline(double lambda, std::vector<SplinePiece> pieces);

}  // namespace rlab
