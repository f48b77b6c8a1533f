#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "rlab/certify.hpp"
#include "rlab/hypoconvex.hpp"
#include "rlab/lambert.hpp"
#include "rlab/sampler.hpp"

using namespace rlab;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Newton oracle for w e^w = z, used to pin Lambert W reference values.
double lambert_newton(double z, double w0) {
  double w = w0;
  for (int i = 0; i < 100; ++i) {
    const double f = w * std::exp(w) - z;
    w -= f / (std::exp(w) * (1.0 + w));
  }
  return w;
}

// Bisection oracle for y + e^y = c.
double solve_y_plus_exp(double c) {
  double lo = -50.0, hi = 50.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (mid + std::exp(mid) < c ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// in-domain scalar pairs for box-constrained families
std::vector<std::pair<double, double>> pairs_in(double lo, double hi, int count) {
  std::vector<std::pair<double, double>> out;
  for (int i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.5 : static_cast<double>(i) / (count - 1);
    out.emplace_back(lo + t * (hi - lo), hi - 0.7 * t * (hi - lo));
  }
  return out;
}

}  // namespace

TEST_CASE("lambert W reference points") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));

  const double omega = lambert_newton(1.0, 0.5);
  CHECK(omega == doctest::Approx(0.5671432904097838).epsilon(1e-14));
  CHECK(lambert_w0(1.0) == doctest::Approx(omega).epsilon(1e-12));

  CHECK(lambert_w0(-std::exp(-1.0)) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK_THROWS_AS(lambert_w0(-0.4), Error);
}

TEST_CASE("lambert W residual stays relative across magnitudes") {
  for (double z : {-0.36, -0.2, -1e-6, 1e-9, 0.5, 3.0, 1e3, 1e8, 1e300}) {
    const double w = lambert_w0(z);
    CHECK(std::abs(w * std::exp(w) - z) <= 1e-13 * std::max(1.0, std::abs(z)));
  }
}

TEST_CASE("lambert W of huge exponents") {
  CHECK(lambert_w0_of_exp(5.0) == doctest::Approx(lambert_w0(std::exp(5.0))).epsilon(1e-14));
  const double w = lambert_w0_of_exp(800.0);
  CHECK(w + std::log(w) == doctest::Approx(800.0).epsilon(1e-13));
}

TEST_CASE("exp-family prox closed form") {
  // lambda=1, mu=1/2, x=1: optimality 0.5 (y + e^y) = 1, i.e. y + e^y = 2
  const double expected = solve_y_plus_exp(2.0);
  const auto res = prox_exp_family(1.0, 0.5, 1.0);
  CHECK(res.point == doctest::Approx(expected).epsilon(1e-12));
  CHECK(res.point == doctest::Approx(0.4428544010).epsilon(1e-9));
  CHECK(res.residual <= 1e-10);
  CHECK(res.method == ProxMethod::closed_form);

  // boundary mu = lambda: ln(x/mu)
  CHECK(prox_exp_family(1.0, 1.0, std::exp(1.0)).point == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(prox_exp_family(1.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(prox_exp_family(1.0, 1.5, 1.0), Error);
  try {
    prox_exp_family(1.0, 1.5, 1.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::regime);
  }
}

TEST_CASE("exp-family closed form agrees with the golden-section oracle") {
  const auto f = make_exp_family(0.2);
  for (int i = 0; i <= 100; ++i) {
    const double x = -5.0 + 0.1 * i;
    const double closed = prox_exp_family(0.2, 0.1, x).point;
    const double numeric = prox_numeric(f, 0.1, x).point;
    CHECK(std::abs(closed - numeric) <= 1e-6);
  }
}

TEST_CASE("indicator-quadratic prox") {
  // cone R+, lambda=1, mu=1/2: scale 2 then clamp below at 0
  const Box cone = Box::nonnegative();
  CHECK(prox_indicator_quadratic(1.0, 0.5, cone, {3.0})[0] == doctest::Approx(6.0));
  CHECK(prox_indicator_quadratic(1.0, 0.5, cone, {-1.0})[0] == 0.0);

  // numeric oracle agreement on the cone
  const auto fcone = make_indicator_quadratic(1.0, cone);
  for (double x : {-2.0, -0.3, 0.0, 0.4, 3.0}) {
    CHECK(prox(fcone, 0.5, x).point ==
          doctest::Approx(prox_numeric(fcone, 0.5, x).point).epsilon(1e-9));
  }

  // D = R^n: pure scaling
  Box whole{{-kInf, -kInf}, {kInf, kInf}};
  const Vec scaled_pt = prox_indicator_quadratic(1.0, 0.5, whole, {0.7, -1.1});
  CHECK(scaled_pt[0] == doctest::Approx(1.4));
  CHECK(scaled_pt[1] == doctest::Approx(-2.2));

  CHECK(prox_indicator_quadratic(1.0, 0.5, Box::interval(0.0, 1.0), {0.3})[0] ==
        doctest::Approx(0.6));

  CHECK_THROWS_AS(prox_indicator_quadratic(1.0, 1.0, cone, {1.0}), Error);
}

TEST_CASE("numeric prox oracle on analytic cases") {
  HypoconvexFn quad;
  quad.name = "quadratic";
  quad.lambda = 10.0;  // any scale works for a convex function
  quad.value = [](double y) { return 0.5 * y * y; };
  quad.derivative = [](double y) { return y; };
  const auto r = prox_numeric(quad, 1.0, 2.0);
  CHECK(r.point == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.residual <= 1e-8);
  CHECK(r.method == ProxMethod::numeric);

  const auto concave = make_concave_quadratic(1.0);
  CHECK(prox_numeric(concave, 0.5, 1.0).point == doctest::Approx(2.0).epsilon(1e-8));

  HypoconvexFn nowhere;
  nowhere.name = "empty";
  nowhere.lambda = 1.0;
  nowhere.value = [](double) { return kInf; };
  CHECK_THROWS_AS(prox_numeric(nowhere, 0.5, 0.0), Error);
  try {
    prox_numeric(nowhere, 0.5, 0.0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::bracket);
  }
}

TEST_CASE("prox dispatch prefers closed forms") {
  CHECK(prox(make_exp_family(1.0), 0.5, 1.0).method == ProxMethod::closed_form);
  const auto spline = make_quadratic_spline(1.0, {{0.5, 0.0, 0.0, -10.0, 10.0}});
  CHECK(prox(spline, 0.5, 2.0).method == ProxMethod::numeric);
  CHECK(prox(spline, 0.5, 2.0).point == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("Moreau envelope") {
  const auto zero = make_quadratic_spline(1.0, {{0.0, 0.0, 0.0, -1e6, 1e6}});
  CHECK(moreau_envelope(zero, 0.5, 3.7) == doctest::Approx(0.0).epsilon(1e-10));

  HypoconvexFn quad;
  quad.lambda = 10.0;
  quad.value = [](double y) { return 0.5 * y * y; };
  quad.derivative = [](double y) { return y; };
  CHECK(moreau_envelope(quad, 1.0, 2.0) == doctest::Approx(1.0).epsilon(1e-9));

  // exp family at lambda=1, mu=1/2, x=1: value frozen from the golden oracle;
  // consistent with f(p) + (x-p)^2 where e^p = 2 - p at the prox point
  const auto f = make_exp_family(1.0);
  const double p = prox_exp_family(1.0, 0.5, 1.0).point;
  const double analytic = (2.0 - p) - 0.5 * p * p + (1.0 - p) * (1.0 - p);
  const double env = moreau_envelope(f, 0.5, 1.0);
  CHECK(env == doctest::Approx(analytic).epsilon(1e-10));
  CHECK(env == doctest::Approx(1.7694968).epsilon(1e-6));

  // direct golden-section oracle over the envelope objective
  double best = kInf;
  for (int i = 0; i <= 200000; ++i) {
    const double y = -2.0 + 4.0 * i / 200000.0;
    best = std::min(best, f.value(y) + (1.0 - y) * (1.0 - y));
  }
  CHECK(env == doctest::Approx(best).epsilon(1e-8));
}

TEST_CASE("hypoconvexity check") {
  const auto pairs = sample_scalar_pairs({42, 120});

  const auto boundary = make_concave_quadratic(1.0);  // f + y^2/2 = 0 exactly
  const auto rep = check_hypoconvex(boundary, 1.0, pairs);
  CHECK(rep.passed);
  CHECK(std::abs(rep.worst_margin) <= 1e-12);

  HypoconvexFn toofar;  // -y^2 is not 1-hypoconvex
  toofar.lambda = 1.0;
  toofar.value = [](double y) { return -y * y; };
  CHECK_FALSE(check_hypoconvex(toofar, 1.0, pairs).passed);

  CHECK(check_hypoconvex(make_exp_family(1.0), 1.0, pairs).passed);
  CHECK(check_hypoconvex(make_exp_family(0.2), 0.2, pairs).passed);

  const auto box = make_indicator_quadratic(1.0, Box::interval(0.0, 1.0));
  CHECK(check_hypoconvex(box, 1.0, pairs_in(0.0, 1.0, 25)).passed);

  // convex spline passes, strongly concave spline fails
  const auto vee = make_quadratic_spline(1.0, {{0.0, -1.0, 0.0, -5.0, 0.0},
                                               {0.0, 1.0, 0.0, 0.0, 5.0}});
  CHECK(check_hypoconvex(vee, 1.0, pairs_in(-5.0, 5.0, 25)).passed);
  const auto cap = make_quadratic_spline(1.0, {{-2.0, 0.0, 0.0, -5.0, 5.0}});
  CHECK_FALSE(check_hypoconvex(cap, 1.0, pairs_in(-5.0, 5.0, 25)).passed);
}

TEST_CASE("prox constants") {
  const auto c = prox_constants(1.0, 0.5);
  CHECK(c.lipschitz == doctest::Approx(2.0));
  CHECK(c.cocoercive == doctest::Approx(0.5));
  CHECK(c.conic_alpha == doctest::Approx(1.0));

  const auto c2 = prox_constants(0.2, 0.1);  // ratios depend on mu/lambda only
  CHECK(c2.lipschitz == doctest::Approx(2.0));
  CHECK(c2.cocoercive == doctest::Approx(0.5));
  CHECK(c2.conic_alpha == doctest::Approx(1.0));

  const auto limit = prox_constants(1.0, 1e-9);  // firmly nonexpansive regime
  CHECK(limit.lipschitz == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(limit.cocoercive == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(limit.conic_alpha == doctest::Approx(0.5).epsilon(1e-6));

  CHECK_THROWS_AS(prox_constants(1.0, 1.0), Error);
}

TEST_CASE("every registered closed form matches the numeric oracle on the grid") {
  const Box box = Box::interval(-1.0, 2.0);
  for (double ratio : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const std::vector<HypoconvexFn> families = {
        make_exp_family(1.0), make_indicator_quadratic(1.0, box), make_concave_quadratic(1.0)};
    for (const auto& f : families) {
      for (int i = 0; i <= 100; ++i) {
        const double x = -5.0 + 0.1 * i;
        const double closed = f.closed_form_prox(ratio, x);
        const double numeric = prox_numeric(f, ratio, x).point;
        CHECK(std::abs(closed - numeric) <= 1e-6);
      }
    }
  }
}

TEST_CASE("closed forms satisfy the optimality residual everywhere") {
  for (double ratio : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int i = 0; i <= 40; ++i) {
      const double x = -5.0 + 0.25 * i;
      CHECK(prox_exp_family(1.0, ratio, x).residual <= 1e-10);
      const auto f = make_indicator_quadratic(1.0, Box::interval(-1.0, 2.0));
      CHECK(prox(f, ratio, x).residual <= 1e-10);
      CHECK(prox(make_concave_quadratic(1.0), ratio, x).residual <= 1e-10);
    }
  }
}

TEST_CASE("prox certifications: Lipschitz, cocoercive, conic") {
  const auto pairs = sample_pairs(1, {42, 200});
  const struct {
    double lambda, mu;
  } regimes[] = {{1.0, 0.5}, {0.2, 0.1}, {1.0, 0.9}};

  for (const auto& [lambda, mu] : regimes) {
    const auto constants = prox_constants(lambda, mu);
    for (const auto* fam : {"exp", "indicator"}) {
      const HypoconvexFn f = fam == std::string("exp")
                                 ? make_exp_family(lambda)
                                 : make_indicator_quadratic(lambda, Box::interval(0.0, 1.0));
      const auto p = prox_map(f, mu);
      CHECK(certify_lipschitz(p, constants.lipschitz, pairs).passed);
      const auto coco = certify_cocoercive(p, constants.cocoercive, pairs);
      const auto conic = certify_conic(displacement_map(p), constants.conic_alpha, pairs);
      CHECK(coco.passed);
      CHECK(conic.passed);
      CHECK(coco.passed == conic.passed);  // the two characterizations agree pairwise
    }

    // tightness on the pure quadratic family
    const auto pure = prox_map(make_concave_quadratic(lambda), mu);
    const auto tight = certify_cocoercive(pure, constants.cocoercive, pairs);
    CHECK(tight.passed);
    CHECK(std::abs(tight.worst_margin) <= 1e-10);
    CHECK_FALSE(certify_cocoercive(pure, constants.cocoercive + 1e-3, pairs).passed);
    const auto lip = certify_lipschitz(pure, constants.lipschitz, pairs);
    CHECK(lip.passed);
    CHECK(std::abs(lip.worst_margin) <= 1e-9);  // equality case
  }
}
