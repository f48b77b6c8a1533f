#pragma once

#include <vector>

#include "rlab/vec.hpp"

namespace rlab {

/// Dense row-major square matrix. Everything here is desk scale (n <= 64 or
/// so), so the linear algebra is deliberately dependency-free.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  Matrix(int n, std::vector<double> entries);

  static Matrix identity(int n);

  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const std::vector<double>& data() const { return a_; }

  Vec apply(const Vec& x) const;
  Matrix transpose() const;
  Matrix sym() const;  // (A + A^T)/2
  Matrix mul(const Matrix& b) const;

  bool is_zero() const;
  double frobenius() const;
  double max_abs() const;
  double inf_norm() const;  // max row sum

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);

 private:
  int n_ = 0;
  std::vector<double> a_;
};

struct EigenResult {
  std::vector<double> eigenvalues;  // ascending
  Matrix vectors;                   // column i pairs with eigenvalues[i]
  double accuracy = 0.0;            // max_i |S v_i - lambda_i v_i|
};

/// Cyclic Jacobi for symmetric input: 30-sweep cap, off-diagonal threshold
/// 1e-13 * |S|_F. Plenty for the matrix sizes this library targets.
EigenResult jacobi_eigensystem(const Matrix& S);

double lambda_min_sym(const Matrix& S);
double lambda_max_sym(const Matrix& S);

/// Gaussian elimination with partial pivoting; throws ErrorKind::singular.
Matrix solve(const Matrix& M, const Matrix& B);
Matrix inverse(const Matrix& M);

struct LinearCheck {
  bool holds = false;
  double margin = 0.0;
};

/// A rho-monotone <=> lambda_min(A_s) >= rho; margin = lambda_min(A_s) - rho.
LinearCheck is_rho_monotone_linear(const Matrix& A, double rho);

/// A rho-comonotone <=> lambda_min(A_s - rho A^T A) >= 0; margin is that
/// smallest eigenvalue.
LinearCheck is_rho_comonotone_linear(const Matrix& A, double rho);

/// = lambda_min(A_s), the largest rho for which A is rho-monotone.
double optimal_monotone_modulus_linear(const Matrix& A);

/// sup{rho : lambda_min(A_s - rho A^T A) >= 0} by bisection. The margin is
/// nonincreasing in rho because A^T A is PSD, so bisection is exact up to
/// tolerance. Returns +inf when A = 0 or when every rho up to 1e6 still
/// qualifies, -inf when no rho down to -1e6 qualifies.
double optimal_comonotone_modulus_linear(const Matrix& A);

/// J_A = (Id + A)^{-1}; throws ErrorKind::singular when -1 is an eigenvalue.
Matrix resolvent_linear(const Matrix& A);

/// Smallest alpha for which the linear map T is alpha-conically nonexpansive
/// (equivalently Id - T is 1/(2 alpha)-cocoercive); +inf when there is none,
/// 0 when T = Id.
double optimal_conic_alpha_linear(const Matrix& T);

}  // namespace rlab
