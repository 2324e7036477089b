#include "gqs/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace gqs {

Mat solve_lyapunov(const Mat& A, const Mat& D) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || D.rows() != n || D.cols() != n) {
    throw Error(ErrorCode::invalid_input, "A and D must be square and of equal size");
  }
  Eigen::ComplexSchur<CMat> schur(A.cast<Complex>());
  if (schur.info() != Eigen::Success) {
    throw Error(ErrorCode::invalid_input, "Schur decomposition failed");
  }
  const CMat u = schur.matrixU();
  const CMat t = schur.matrixT();

  // T W + W T^T = -E with E = U^H D conj(U); W_ij only depends on entries
  // with larger row/column index, so sweep from the bottom-right corner.
  const CMat e = u.adjoint() * D.cast<Complex>() * u.conjugate();
  CMat w = CMat::Zero(n, n);
  const double scale = std::max(1.0, A.norm());
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    for (Eigen::Index j = n - 1; j >= 0; --j) {
      Complex rhs = -e(i, j);
      for (Eigen::Index k = i + 1; k < n; ++k) rhs -= t(i, k) * w(k, j);
      for (Eigen::Index k = j + 1; k < n; ++k) rhs -= w(i, k) * t(j, k);
      const Complex denom = t(i, i) + t(j, j);
      if (std::abs(denom) < 1e-12 * scale) {
        throw Error(ErrorCode::resonant_spectrum,
                    "resonant spectrum: eigenvalue sum " +
                        std::to_string(denom.real()) + " + " +
                        std::to_string(denom.imag()) + "i is numerically zero");
      }
      w(i, j) = rhs / denom;
    }
  }
  const Mat v = (u * w * u.transpose()).real();
  return 0.5 * (v + v.transpose());
}

StabilityReport is_hurwitz(const Mat& A, double margin) {
  if (A.rows() != A.cols() || !A.allFinite()) {
    throw Error(ErrorCode::invalid_input, "A must be square with finite entries");
  }
  Eigen::EigenSolver<Mat> es(A, /*computeEigenvectors=*/false);
  StabilityReport report;
  report.spectral_abscissa = es.eigenvalues().real().maxCoeff();
  report.hurwitz = report.spectral_abscissa < -margin;
  return report;
}

RankReport controllability_rank(const CMat& Q, const CMat& P, double threshold) {
  const Eigen::Index n = Q.rows();
  if (Q.cols() != n || P.rows() != n || P.cols() < 1) {
    throw Error(ErrorCode::invalid_input, "Q must be N x N and P must be N x K");
  }
  const Eigen::Index k = P.cols();
  CMat kalman(n, n * k);
  kalman.leftCols(k) = P;
  for (Eigen::Index i = 1; i < n; ++i) {
    kalman.middleCols(i * k, k) = Q * kalman.middleCols((i - 1) * k, k);
  }
  Eigen::JacobiSVD<CMat> svd(kalman);
  RankReport report;
  const Vec sv = svd.singularValues();
  report.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  report.threshold =
      threshold >= 0.0
          ? threshold
          : static_cast<double>(n * k) *
                std::numeric_limits<double>::epsilon() * sigma_max;
  report.numerical_rank = static_cast<int>(
      std::count_if(report.singular_values.begin(), report.singular_values.end(),
                    [&](double s) { return s > report.threshold; }));
  return report;
}

Mat sqrt_spd(const Mat& Y) {
  if (Y.rows() != Y.cols()) {
    throw Error(ErrorCode::invalid_input, "matrix must be square");
  }
  const Mat y = 0.5 * (Y + Y.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> es(y);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= 0.0) {
    throw Error(ErrorCode::invalid_input,
                "matrix is not SPD (min eigenvalue " + std::to_string(min_eig) + ")");
  }
  const Mat r = es.eigenvectors() *
                es.eigenvalues().cwiseSqrt().asDiagonal() *
                es.eigenvectors().transpose();
  return 0.5 * (r + r.transpose());
}

CMat complete_unitary(const CVec& first_column) {
  const Eigen::Index n = first_column.size();
  if (n < 1 || std::abs(first_column.norm() - 1.0) > 1e-12) {
    throw Error(ErrorCode::invalid_input, "first column must have unit norm");
  }
  CMat u(n, n);
  u.col(0) = first_column;
  Eigen::Index filled = 1;
  for (Eigen::Index seed = 0; seed < n && filled < n; ++seed) {
    CVec v = CVec::Zero(n);
    v(seed) = 1.0;
    for (Eigen::Index j = 0; j < filled; ++j) {
      v -= u.col(j).dot(v) * u.col(j);
    }
    // re-orthogonalize once; plain Gram-Schmidt loses digits near n ~ 8
    for (Eigen::Index j = 0; j < filled; ++j) {
      v -= u.col(j).dot(v) * u.col(j);
    }
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    u.col(filled++) = v / norm;
  }
  if (filled < n) {
    throw Error(ErrorCode::invalid_input, "unitary completion failed");
  }
  return u;
}

Mat matrix_exponential(const Mat& A, double t) {
  if (A.rows() != A.cols() || !A.allFinite() || !std::isfinite(t)) {
    throw Error(ErrorCode::invalid_input, "A must be square with finite entries");
  }
  return (t * A).exp();
}

}  // namespace gqs
