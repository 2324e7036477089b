#include "gqs/verify.hpp"

#include <cmath>
#include <string>

#include "gqs/core.hpp"
#include "gqs/errors.hpp"
#include "gqs/linalg.hpp"

namespace gqs {

StateSpaceModel state_space(const Realization& r) {
  if (r.modes < 1 || r.M.rows() != 2 * r.modes || r.C.cols() != 2 * r.modes) {
    throw Error(ErrorCode::invalid_input, "realization dimensions are inconsistent");
  }
  const Mat sigma = symplectic_form(r.modes);
  const CMat gram = r.C.adjoint() * r.C;
  StateSpaceModel model;
  model.A = sigma * (r.M + gram.imag());
  model.D = sigma * gram.real() * sigma.transpose();
  model.D = 0.5 * (model.D + model.D.transpose());
  return model;
}

Mat steady_state_covariance(const Realization& r) {
  const StateSpaceModel model = state_space(r);
  const StabilityReport stability = is_hurwitz(model.A);
  if (!stability.hurwitz) {
    throw Error(ErrorCode::not_stable,
                "drift is not Hurwitz (spectral abscissa " +
                    std::to_string(stability.spectral_abscissa) + ")");
  }
  return solve_lyapunov(model.A, model.D);
}

std::vector<std::vector<int>> coupling_supports(const Realization& r) {
  std::vector<std::vector<int>> supports;
  supports.reserve(r.channels);
  for (int row = 0; row < r.channels; ++row) {
    std::vector<int> modes;
    for (int j = 0; j < r.modes; ++j) {
      if (std::abs(r.C(row, j)) > 1e-12 ||
          std::abs(r.C(row, r.modes + j)) > 1e-12) {
        modes.push_back(j + 1);
      }
    }
    supports.push_back(std::move(modes));
  }
  return supports;
}

VerificationReport verify_assignment(const Realization& r,
                                     const PureGaussianState& target,
                                     double tol) {
  if (target.modes != r.modes) {
    throw Error(ErrorCode::invalid_input, "target and realization mode counts differ");
  }
  const StateSpaceModel model = state_space(r);
  VerificationReport report;
  report.tol = tol;
  const StabilityReport stability = is_hurwitz(model.A);
  report.hurwitz = stability.hurwitz;
  report.spectral_abscissa = stability.spectral_abscissa;
  report.local_modes = coupling_supports(r);
  if (report.hurwitz) {
    const Mat v_inf = solve_lyapunov(model.A, model.D);
    report.lyapunov_residual =
        (model.A * v_inf + v_inf * model.A.transpose() + model.D).norm();
    report.assignment_error = (v_inf - target.V).norm();
    report.purity_defect = purity_check(v_inf).det_defect;
    report.pass = report.assignment_error <= tol;
  }
  return report;
}

namespace {

void check_initial_covariance(const Realization& r, const Mat& V0, const Vec& x0) {
  const int dim = 2 * r.modes;
  if (V0.rows() != dim || V0.cols() != dim || x0.size() != dim) {
    throw Error(ErrorCode::invalid_input, "initial moments have the wrong dimension");
  }
  if ((V0 - V0.transpose()).norm() > 1e-9 * std::max(1.0, V0.norm())) {
    throw Error(ErrorCode::invalid_input, "initial covariance must be symmetric");
  }
  if (purity_check(0.5 * (V0 + V0.transpose())).min_uncertainty_eig < -1e-8) {
    throw Error(ErrorCode::invalid_input,
                "initial covariance violates the uncertainty relation");
  }
}

}  // namespace

MomentTrajectory simulate_moments_rk4(const Realization& r, const Mat& V0,
                                      const Vec& x0,
                                      const std::vector<double>& times,
                                      double step) {
  check_initial_covariance(r, V0, x0);
  const StateSpaceModel model = state_space(r);
  if (step <= 0.0) {
    step = std::min(1e-2, 0.1 / std::max(1.0, model.A.norm()));
  }
  const auto deriv = [&](const Mat& v) -> Mat {
    return model.A * v + v * model.A.transpose() + model.D;
  };

  MomentTrajectory traj;
  traj.times = times;
  Mat v = 0.5 * (V0 + V0.transpose());
  Vec mean = x0;
  double t = 0.0;
  for (double target_t : times) {
    if (target_t < t) {
      throw Error(ErrorCode::invalid_input, "time grid must be non-decreasing");
    }
    while (t < target_t - 1e-15) {
      const double h = std::min(step, target_t - t);
      const Mat k1 = deriv(v);
      const Mat k2 = deriv(v + 0.5 * h * k1);
      const Mat k3 = deriv(v + 0.5 * h * k2);
      const Mat k4 = deriv(v + h * k3);
      v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      const Vec m1 = model.A * mean;
      const Vec m2 = model.A * (mean + 0.5 * h * m1);
      const Vec m3 = model.A * (mean + 0.5 * h * m2);
      const Vec m4 = model.A * (mean + h * m3);
      mean += (h / 6.0) * (m1 + 2.0 * m2 + 2.0 * m3 + m4);
      t += h;
    }
    traj.means.push_back(mean);
    traj.covariances.push_back(0.5 * (v + v.transpose()));
  }
  return traj;
}

MomentTrajectory simulate_moments(const Realization& r, const Mat& V0,
                                  const Vec& x0, const std::vector<double>& times) {
  check_initial_covariance(r, V0, x0);
  const StateSpaceModel model = state_space(r);
  if (!is_hurwitz(model.A).hurwitz) {
    return simulate_moments_rk4(r, V0, x0, times);
  }
  const Mat v_inf = solve_lyapunov(model.A, model.D);
  const Mat delta = 0.5 * (V0 + V0.transpose()) - v_inf;
  MomentTrajectory traj;
  traj.times = times;
  for (double t : times) {
    const Mat propagator = matrix_exponential(model.A, t);
    traj.means.push_back(propagator * x0);
    Mat v = propagator * delta * propagator.transpose() + v_inf;
    traj.covariances.push_back(0.5 * (v + v.transpose()));
  }
  return traj;
}

NullifierReport nullifier_check(const Realization& r, const GaussianGraph& g,
                                double tol) {
  if (g.modes != r.modes) {
    throw Error(ErrorCode::invalid_input, "graph and realization mode counts differ");
  }
  const int n = r.modes;
  NullifierReport report;
  const CMat p_t = r.C.rightCols(n);  // candidate P^T
  const CMat expected_left = -p_t * g.Z();
  if ((r.C.leftCols(n) - expected_left).norm() <= tol) {
    report.is_nullifier_form = true;
    report.P = p_t.transpose();
  }
  return report;
}

}  // namespace gqs
