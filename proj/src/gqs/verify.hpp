#pragma once

#include <vector>

#include "gqs/types.hpp"

namespace gqs {

// A = Sigma (M + Im(C^dag C)), D = Sigma Re(C^dag C) Sigma^T.
StateSpaceModel state_space(const Realization& r);

// Lyapunov solution of the drift/diffusion pair; requires a Hurwitz drift.
Mat steady_state_covariance(const Realization& r);

struct VerificationReport {
  bool hurwitz = false;
  double spectral_abscissa = 0.0;
  double lyapunov_residual = 0.0;
  double assignment_error = 0.0;  // meaningful only when hurwitz
  double purity_defect = 0.0;
  std::vector<std::vector<int>> local_modes;  // 1-based supports per coupling row
  double tol = 0.0;
  bool pass = false;
};

VerificationReport verify_assignment(const Realization& r,
                                     const PureGaussianState& target,
                                     double tol = 1e-7);

struct MomentTrajectory {
  std::vector<double> times;
  std::vector<Vec> means;
  std::vector<Mat> covariances;
};

// Closed-form evolution exp(At) x0 and exp(At)(V0 - Vinf)exp(A^T t) + Vinf
// when the drift is Hurwitz; fixed-step RK4 on the moment ODEs otherwise.
MomentTrajectory simulate_moments(const Realization& r, const Mat& V0,
                                  const Vec& x0, const std::vector<double>& times);

// RK4 integration regardless of stability; used as the cross-check route.
MomentTrajectory simulate_moments_rk4(const Realization& r, const Mat& V0,
                                      const Vec& x0,
                                      const std::vector<double>& times,
                                      double step = 0.0);

struct NullifierReport {
  bool is_nullifier_form = false;
  CMat P;  // present only on success
};

// Attempts to factor C = P^T [-Z, I_N].
NullifierReport nullifier_check(const Realization& r, const GaussianGraph& g,
                                double tol = 1e-9);

// 1-based mode supports of each coupling row; columns j and N+j both count
// toward mode j, threshold 1e-12 absolute.
std::vector<std::vector<int>> coupling_supports(const Realization& r);

}  // namespace gqs
