#include "rlab/correspond.hpp"

#include <cmath>
#include <limits>

#include "rlab/graph.hpp"

namespace rlab {

namespace {

constexpr double kBoundaryTol = 1e-9;

bool verdicts_agree(const CorrespondenceItem& item) {
  if (item.lhs.empty() || item.rhs.empty()) return true;
  const bool expected = item.lhs.front().report.passed;
  for (const auto& c : item.lhs)
    if (c.report.passed != expected) return false;
  for (const auto& c : item.rhs)
    if (c.report.passed != expected) return false;
  return true;
}

}  // namespace

ReflectedReport reflected_correspondence_report(const Matrix& A, const SamplerConfig& cfg,
                                                double tol) {
  const int n = A.n();
  ReflectedReport rep;
  rep.resolvent = resolvent_linear(A);
  rep.reflected = 2.0 * rep.resolvent - Matrix::identity(n);
  rep.rho_comono_opt = optimal_comonotone_modulus_linear(A);
  rep.rho_mono_opt = optimal_monotone_modulus_linear(A);

  const auto pairs = sample_pairs(n, cfg);
  const PointMap a_map = matrix_map(A);
  const PointMap j_map = matrix_map(rep.resolvent);
  const PointMap r_map = matrix_map(rep.reflected);
  const PointMap neg_r_map = matrix_map(-1.0 * rep.reflected);
  const auto seed = cfg.seed;

  {
    CorrespondenceItem it;
    it.item = "i";
    it.description = "beta-comonotone A <-> J_A 1/(2(1+beta))-averaged";
    const double beta = rep.rho_comono_opt;
    if (std::isfinite(beta) && beta > -0.5) {
      it.applicable = true;
      it.parameter = beta;
      const OperatorGraph g = sample_linear_graph(A, cfg.count, seed);
      it.lhs.push_back({"A comonotone", check_rho_comonotone(g, beta, tol)});
      it.rhs.push_back(
          {"J_A averaged", certify_averaged(j_map, 1.0 / (2.0 * (1.0 + beta)), pairs, tol, seed)});
    } else {
      it.note = "needs a finite comonotonicity modulus beta > -1/2";
    }
    it.agree = verdicts_agree(it);
    rep.items.push_back(std::move(it));
  }

  {
    CorrespondenceItem it;
    it.item = "ii";
    it.description = "beta-strongly monotone A <-> -R_A 1/(beta+1)-averaged, J_A 1/(beta+1)-Lipschitz";
    const double beta = rep.rho_mono_opt;
    if (beta > kBoundaryTol) {
      it.applicable = true;
      it.parameter = beta;
      const OperatorGraph g = sample_linear_graph(A, cfg.count, seed);
      it.lhs.push_back({"A strongly monotone", check_rho_monotone(g, beta, tol)});
      it.rhs.push_back(
          {"-R_A averaged", certify_averaged(neg_r_map, 1.0 / (beta + 1.0), pairs, tol, seed)});
      it.rhs.push_back(
          {"J_A Lipschitz", certify_lipschitz(j_map, 1.0 / (beta + 1.0), pairs, tol, seed)});
    } else {
      it.note = "needs a strong monotonicity modulus beta > 0";
    }
    it.agree = verdicts_agree(it);
    rep.items.push_back(std::move(it));
  }

  {
    CorrespondenceItem it;
    it.item = "iii";
    it.description = "A nonexpansive <-> J_A (1/2)-strongly monotone <-> R_A monotone";
    it.applicable = true;
    it.parameter = 1.0;
    it.lhs.push_back({"A nonexpansive", certify_lipschitz(a_map, 1.0, pairs, tol, seed)});
    it.rhs.push_back(
        {"J_A strongly monotone", certify_strongly_monotone(j_map, 0.5, pairs, tol, seed)});
    it.rhs.push_back({"R_A monotone", certify_strongly_monotone(r_map, 0.0, pairs, tol, seed)});
    it.agree = verdicts_agree(it);
    rep.items.push_back(std::move(it));
  }

  {
    CorrespondenceItem it;
    it.item = "iv";
    it.description = "alpha-averaged A <-> R_A (1-alpha)/alpha-cocoercive";
    const double alpha = optimal_conic_alpha_linear(A);
    if (std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0) {
      it.applicable = true;
      it.parameter = alpha;
      it.lhs.push_back({"A averaged", certify_averaged(a_map, alpha, pairs, tol, seed)});
      it.rhs.push_back({"R_A cocoercive",
                        certify_cocoercive(r_map, (1.0 - alpha) / alpha, pairs, tol, seed)});
    } else {
      it.note = "A is not averaged (no conic constant below 1)";
    }
    it.agree = verdicts_agree(it);
    rep.items.push_back(std::move(it));
  }

  {
    CorrespondenceItem it;
    it.item = "v";
    it.description = "A firmly nonexpansive <-> R_A firmly nonexpansive";
    it.applicable = true;
    it.parameter = 0.5;
    it.lhs.push_back({"A firmly nonexpansive", certify_averaged(a_map, 0.5, pairs, tol, seed)});
    it.rhs.push_back({"R_A firmly nonexpansive", certify_averaged(r_map, 0.5, pairs, tol, seed)});
    it.agree = verdicts_agree(it);
    rep.items.push_back(std::move(it));
  }

  for (const auto& it : rep.items) rep.all_agree = rep.all_agree && it.agree;
  return rep;
}

std::string regime_label(double rho, double boundary_tol) {
  if (rho > boundary_tol) return "rho > 0";
  if (rho >= -boundary_tol) return "rho = 0";
  if (rho > -0.5 + boundary_tol) return "-1/2 < rho < 0";
  if (rho >= -0.5 - boundary_tol) return "rho = -1/2";
  if (rho > -1.0 + boundary_tol) return "-1 < rho < -1/2";
  return "rho <= -1";
}

RegimeReport regime_report(const Matrix& A, const SamplerConfig& cfg, double tol) {
  RegimeReport rep;
  rep.n = A.n();
  rep.rho_comono_opt = optimal_comonotone_modulus_linear(A);
  rep.rho_mono_opt = optimal_monotone_modulus_linear(A);
  rep.regime = regime_label(rep.rho_comono_opt, kBoundaryTol);
  rep.degenerate_zero = A.is_zero();
  rep.alpha_conic = std::numeric_limits<double>::quiet_NaN();

  Matrix j;
  try {
    j = resolvent_linear(A);
    rep.resolvent_defined = true;
  } catch (const Error&) {
    rep.resolvent_defined = false;
  }

  // Snap boundary regimes to their exact modulus so the row claims use the
  // canonical constants (alpha = 1/2 firmly nonexpansive, alpha = 1
  // nonexpansive) instead of a value perturbed by bisection noise.
  double rho = rep.rho_comono_opt;
  if (rep.regime == "rho = 0") rho = 0.0;
  if (rep.regime == "rho = -1/2") rho = -0.5;

  if (rep.resolvent_defined) {
    const auto pairs = sample_pairs(A.n(), cfg);
    const PointMap j_map = matrix_map(j);
    const PointMap jinv_map = matrix_map(Matrix::identity(A.n()) - j);  // J_{A^{-1}} = Id - J_A

    if (rep.degenerate_zero) {
      // A = 0: J_A = Id and J_{A^{-1}} = 0; both are firmly nonexpansive and
      // the comonotonicity modulus is vacuous.
      rep.claims.push_back(
          {"J_A firmly nonexpansive", certify_averaged(j_map, 0.5, pairs, tol, cfg.seed)});
      rep.claims.push_back(
          {"J_{A^-1} cocoercive (beta=1)", certify_cocoercive(jinv_map, 1.0, pairs, tol, cfg.seed)});
    } else if (std::isfinite(rho) && rho > -1.0 + kBoundaryTol) {
      const double alpha = 1.0 / (2.0 * (rho + 1.0));
      rep.alpha_conic = alpha;
      const OperatorGraph g = sample_linear_graph(A, cfg.count, cfg.seed);
      rep.claims.push_back({"A rho-comonotone (sampled graph)",
                            check_rho_comonotone(g, rho, tol)});
      rep.claims.push_back({"A^-1 rho-monotone (sampled graph)",
                            check_rho_monotone(invert_graph(g), rho, tol)});
      rep.claims.push_back(
          {"J_A conic (alpha = 1/(2(rho+1)))", certify_conic(j_map, alpha, pairs, tol, cfg.seed)});
      rep.claims.push_back({"J_{A^-1} cocoercive (beta = rho+1)",
                            certify_cocoercive(jinv_map, rho + 1.0, pairs, tol, cfg.seed)});
    }
    // rho* <= -1: the table row makes no certifiable resolvent claim.

    rep.reflected = reflected_correspondence_report(A, cfg, tol);
  }

  for (const auto& c : rep.claims) rep.all_claims_pass = rep.all_claims_pass && c.report.passed;
  rep.all_ok = rep.all_claims_pass && (!rep.reflected || rep.reflected->all_agree);
  return rep;
}

}  // namespace rlab
