#include "rlab/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rlab {

namespace {
constexpr double kBooleanMargin = 1e-10;
constexpr double kBisectionCap = 1e6;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

Matrix::Matrix(int n, std::vector<double> entries) : n_(n), a_(std::move(entries)) {
  if (n <= 0 || a_.size() != static_cast<std::size_t>(n) * n)
    fail(ErrorKind::dimension, "matrix: entry count does not match n*n");
  for (double v : a_)
    if (!std::isfinite(v)) fail(ErrorKind::argument, "matrix: non-finite entry");
}

Matrix Matrix::identity(int n) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vec Matrix::apply(const Vec& x) const {
  require_dim(x, static_cast<std::size_t>(n_), "matrix apply");
  Vec y(static_cast<std::size_t>(n_), 0.0);
  for (int i = 0; i < n_; ++i) {
    double s = 0.0;
    for (int j = 0; j < n_; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::sym() const {
  Matrix s(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) s(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
  return s;
}

Matrix Matrix::mul(const Matrix& b) const {
  Matrix c(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const double aik = (*this)(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return v == 0.0; });
}

double Matrix::frobenius() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::inf_norm() const {
  double m = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    m = std::max(m, row);
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (auto& v : c.a_) v *= s;
  return c;
}

EigenResult jacobi_eigensystem(const Matrix& S) {
  const int n = S.n();
  Matrix a = S;
  Matrix v = Matrix::identity(n);
  const double thresh = 1e-13 * S.frobenius();

  for (int sweep = 0; sweep < 30; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= thresh) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= thresh) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  EigenResult res;
  res.eigenvalues.resize(static_cast<std::size_t>(n));
  res.vectors = Matrix(n);
  for (int c = 0; c < n; ++c) {
    res.eigenvalues[static_cast<std::size_t>(c)] = a(order[static_cast<std::size_t>(c)],
                                                     order[static_cast<std::size_t>(c)]);
    for (int r = 0; r < n; ++r) res.vectors(r, c) = v(r, order[static_cast<std::size_t>(c)]);
  }

  for (int c = 0; c < n; ++c) {
    Vec vc(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) vc[static_cast<std::size_t>(r)] = res.vectors(r, c);
    Vec sv = S.apply(vc);
    const double lam = res.eigenvalues[static_cast<std::size_t>(c)];
    res.accuracy = std::max(res.accuracy, norm(sub(sv, scaled(vc, lam))));
  }
  return res;
}

double lambda_min_sym(const Matrix& S) { return jacobi_eigensystem(S).eigenvalues.front(); }
double lambda_max_sym(const Matrix& S) { return jacobi_eigensystem(S).eigenvalues.back(); }

Matrix solve(const Matrix& M, const Matrix& B) {
  const int n = M.n();
  Matrix a = M;
  Matrix x = B;
  const double pivot_floor = 1e-13 * std::max(M.max_abs(), 1e-300);

  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) <= pivot_floor)
      fail(ErrorKind::singular, "solve: matrix is singular to working precision");
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(k, j), a(piv, j));
        std::swap(x(k, j), x(piv, j));
      }
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (int j = 0; j < n; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (int k = n - 1; k >= 0; --k) {
    for (int j = 0; j < n; ++j) {
      double s = x(k, j);
      for (int i = k + 1; i < n; ++i) s -= a(k, i) * x(i, j);
      x(k, j) = s / a(k, k);
    }
  }
  return x;
}

Matrix inverse(const Matrix& M) { return solve(M, Matrix::identity(M.n())); }

LinearCheck is_rho_monotone_linear(const Matrix& A, double rho) {
  const double margin = lambda_min_sym(A.sym()) - rho;
  return {margin >= -kBooleanMargin, margin};
}

LinearCheck is_rho_comonotone_linear(const Matrix& A, double rho) {
  // Kernel directions of A contribute zero to both sides of the
  // comonotonicity form (the pointwise ratio <x, A_s x>/|Ax|^2 is 0/0
  // there), so the PSD test on the pencil needs no special-casing.
  const Matrix pencil = A.sym() - rho * A.transpose().mul(A);
  const double margin = lambda_min_sym(pencil);
  return {margin >= -kBooleanMargin, margin};
}

double optimal_monotone_modulus_linear(const Matrix& A) { return lambda_min_sym(A.sym()); }

double optimal_comonotone_modulus_linear(const Matrix& A) {
  if (A.is_zero()) return kInf;

  const Matrix as = A.sym();
  const Matrix ata = A.transpose().mul(A);
  auto margin = [&](double rho) { return lambda_min_sym(as - rho * ata); };

  const auto sym_eigs = jacobi_eigensystem(as).eigenvalues;
  const double sym_norm = std::max(std::abs(sym_eigs.front()), std::abs(sym_eigs.back()));

  double lo = std::max(-(1.0 + sym_norm), -kBisectionCap);
  while (margin(lo) < 0.0) {
    if (lo <= -kBisectionCap) return -kInf;
    lo = std::max(-kBisectionCap, 2.0 * lo);
  }
  double hi = std::max(1.0, std::abs(lo));
  while (margin(hi) >= 0.0) {
    if (hi >= kBisectionCap) return kInf;
    hi = std::min(kBisectionCap, 2.0 * hi);
  }

  for (int iter = 0; iter < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(lo)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    (margin(mid) >= 0.0 ? lo : hi) = mid;
  }
  return lo;  // the certified-feasible endpoint
}

Matrix resolvent_linear(const Matrix& A) {
  const int n = A.n();
  const Matrix m = Matrix::identity(n) + A;
  Matrix j = solve(m, Matrix::identity(n));
  const Matrix residual = m.mul(j) - Matrix::identity(n);
  if (residual.max_abs() > 1e-8 * (1.0 + m.inf_norm() * j.inf_norm()))
    fail(ErrorKind::singular, "resolvent: Id + A is numerically singular");
  return j;
}

double optimal_conic_alpha_linear(const Matrix& T) {
  const Matrix displacement = Matrix::identity(T.n()) - T;
  const double rho = optimal_comonotone_modulus_linear(displacement);
  if (std::isinf(rho) && rho > 0.0) return 0.0;  // T = Id
  if (!(rho > 0.0)) return kInf;                 // Id - T not cocoercive
  return 1.0 / (2.0 * rho);
}

}  // namespace rlab
