#pragma once

#include "gqs/errors.hpp"
#include "gqs/types.hpp"

namespace gqs {

// Solves A V + V A^T + D = 0 by Bartels-Stewart on the complex Schur form
// of A. Rejects spectra with lambda_i + lambda_j ~ 0.
Mat solve_lyapunov(const Mat& A, const Mat& D);

struct StabilityReport {
  bool hurwitz;
  double spectral_abscissa;
};

StabilityReport is_hurwitz(const Mat& A, double margin = 1e-9);

// Numerical rank of the Kalman matrix [P, QP, ..., Q^{N-1}P] via SVD.
// threshold < 0 selects the default N*K*eps*sigma_max.
RankReport controllability_rank(const CMat& Q, const CMat& P,
                                double threshold = -1.0);

// Symmetric positive definite square root via eigendecomposition.
Mat sqrt_spd(const Mat& Y);

// Unitary with the given unit-norm first column. Remaining columns come
// from Gram-Schmidt over the canonical basis in index order, skipping any
// vector whose residual after orthogonalization falls below 1e-8.
CMat complete_unitary(const CVec& first_column);

Mat matrix_exponential(const Mat& A, double t);

}  // namespace gqs
