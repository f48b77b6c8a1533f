#pragma once

#include <string>
#include <vector>

#include "rlab/certify.hpp"
#include "rlab/families.hpp"
#include "rlab/matrix.hpp"
#include "rlab/sampler.hpp"

namespace rlab {

struct ClaimResult {
  std::string name;
  CertReport report;
};

/// One operator <-> resolvent/reflected-resolvent correspondence, evaluated
/// as a sample-level biconditional: the verdicts on both sides must agree.
struct CorrespondenceItem {
  std::string item;  // "i" .. "v"
  std::string description;
  bool applicable = false;
  std::string note;  // why skipped, or the parameter used
  double parameter = 0.0;
  std::vector<ClaimResult> lhs;  // property of A
  std::vector<ClaimResult> rhs;  // properties of J_A / R_A
  bool agree = true;
};

/// Correspondences between a linear operator, its resolvent J_A and the
/// reflected resolvent R_A = 2 J_A - Id:
///   (i)   beta-comonotone A        <-> J_A 1/(2(1+beta))-averaged
///   (ii)  beta-strongly monotone A <-> -R_A 1/(beta+1)-averaged,
///                                      J_A 1/(beta+1)-Lipschitz
///   (iii) A nonexpansive           <-> J_A (1/2)-strongly monotone
///                                  <-> R_A monotone
///   (iv)  A alpha-averaged         <-> R_A (1-alpha)/alpha-cocoercive
///   (v)   A firmly nonexpansive    <-> R_A firmly nonexpansive
/// Parameters are the computed optimal moduli; items whose parameter falls
/// outside its admissible range are reported as not applicable.
struct ReflectedReport {
  Matrix resolvent;
  Matrix reflected;
  double rho_comono_opt = 0.0;
  double rho_mono_opt = 0.0;
  std::vector<CorrespondenceItem> items;
  bool all_agree = true;
};

/// Requires Id + A invertible; throws ErrorKind::singular otherwise.
ReflectedReport reflected_correspondence_report(const Matrix& A, const SamplerConfig& cfg = {},
                                                double tol = kDefaultTol);

/// Regime classification by the optimal comonotonicity modulus rho*, with the
/// row's resolvent claims certified numerically on samples.
struct RegimeReport {
  int n = 0;
  double rho_comono_opt = 0.0;
  double rho_mono_opt = 0.0;
  std::string regime;
  bool resolvent_defined = false;
  double alpha_conic = 0.0;  // 1/(2(rho*+1)) when rho* > -1 and finite; NaN otherwise
  bool degenerate_zero = false;  // A = 0: every modulus is vacuous
  std::vector<ClaimResult> claims;
  bool all_claims_pass = true;
  std::optional<ReflectedReport> reflected;
  bool all_ok = true;  // claims pass and every applicable item agrees
};
RegimeReport regime_report(const Matrix& A, const SamplerConfig& cfg = {},
                           double tol = kDefaultTol);

std::string regime_label(double rho, double boundary_tol = 1e-9);

}  // namespace rlab
