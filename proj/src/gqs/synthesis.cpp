#include "gqs/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/SVD>

#include "gqs/core.hpp"
#include "gqs/errors.hpp"
#include "gqs/linalg.hpp"

namespace gqs {

namespace {

CMat nullifier_block(const GaussianGraph& g) {
  // [-Z, I_N]
  const int n = g.modes;
  CMat block(n, 2 * n);
  block.leftCols(n) = -g.Z();
  block.rightCols(n) = CMat::Identity(n, n);
  return block;
}

void check_params(const GaussianGraph& g, const SynthesisParams& params) {
  const int n = g.modes;
  if (params.R.rows() != n || params.R.cols() != n ||
      params.Gamma.rows() != n || params.Gamma.cols() != n ||
      params.P.rows() != n || params.P.cols() < 1) {
    throw Error(ErrorCode::invalid_input, "parameter dimensions do not match the graph");
  }
  const double scale_r = std::max(1.0, params.R.norm());
  if ((params.R - params.R.transpose()).norm() > 1e-9 * scale_r) {
    throw Error(ErrorCode::invalid_input, "R must be symmetric");
  }
  const double scale_g = std::max(1.0, params.Gamma.norm());
  if ((params.Gamma + params.Gamma.transpose()).norm() > 1e-9 * scale_g) {
    throw Error(ErrorCode::invalid_input, "Gamma must be skew-symmetric");
  }
  if (params.P.norm() == 0.0) {
    throw Error(ErrorCode::invalid_input, "P must be nonzero");
  }
}

}  // namespace

Realization realize_general(const GaussianGraph& g, const SynthesisParams& params) {
  check_params(g, params);
  const int n = g.modes;
  const Mat r = 0.5 * (params.R + params.R.transpose());
  const Mat gam = 0.5 * (params.Gamma - params.Gamma.transpose());
  const Mat y_inv = g.Y.inverse();

  const CMat q = Complex(0, -1) * (r * g.Y).cast<Complex>() +
                 (y_inv * gam).cast<Complex>();
  RankReport rank = controllability_rank(q, params.P);
  if (rank.numerical_rank < n) {
    throw RankError("rank condition fails: Kalman rank " +
                        std::to_string(rank.numerical_rank) + " < " +
                        std::to_string(n),
                    rank);
  }

  const Mat& x = g.X;
  const Mat& y = g.Y;
  Realization out;
  out.modes = n;
  out.channels = static_cast<int>(params.P.cols());
  out.M = Mat(2 * n, 2 * n);
  out.M.topLeftCorner(n, n) =
      x * r * x + y * r * y - gam * y_inv * x - x * y_inv * gam.transpose();
  out.M.topRightCorner(n, n) = -x * r + gam * y_inv;
  out.M.bottomLeftCorner(n, n) = -r * x + y_inv * gam.transpose();
  out.M.bottomRightCorner(n, n) = r;
  out.M = 0.5 * (out.M + out.M.transpose());
  out.C = params.P.transpose() * nullifier_block(g);
  return out;
}

std::pair<CascadeChain, Realization> realize_cascade(const GaussianGraph& g) {
  const int n = g.modes;
  const Mat y_inv_half = sqrt_spd(g.Y).inverse();
  const CMat c_full =
      Complex(0, 1) * y_inv_half.cast<Complex>() * nullifier_block(g);
  const Mat perm = interleaving_permutation(n);

  CascadeChain chain;
  chain.reserve(n);
  const CMat c_interleaved = c_full * perm;  // columns (2j, 2j+1) belong to mode j
  for (int j = 0; j < n; ++j) {
    chain.push_back(OscSubsystem{Mat::Zero(2, 2), c_interleaved.middleCols(2 * j, 2)});
  }

  Realization composed;
  composed.modes = n;
  composed.channels = n;
  composed.M = Mat::Zero(2 * n, 2 * n);
  composed.C = c_full;
  return {std::move(chain), std::move(composed)};
}

Realization compose_chain(const CascadeChain& chain) {
  if (chain.empty()) {
    throw Error(ErrorCode::invalid_input, "chain must be non-empty");
  }
  const int n = static_cast<int>(chain.size());
  const int k = static_cast<int>(chain.front().C.rows());
  for (const auto& sub : chain) {
    if (sub.M.rows() != 2 || sub.M.cols() != 2 || sub.C.cols() != 2) {
      throw Error(ErrorCode::invalid_input, "subsystems must be one-mode (2x2 M, K x 2 C)");
    }
    if (sub.C.rows() != k) {
      throw Error(ErrorCode::invalid_input, "subsystems must share one channel count");
    }
  }

  Mat mm = Mat::Zero(2 * n, 2 * n);
  CMat c_interleaved(k, 2 * n);
  for (int j = 0; j < n; ++j) {
    mm.block<2, 2>(2 * j, 2 * j) = chain[j].M;
    c_interleaved.middleCols(2 * j, 2) = chain[j].C;
    for (int l = 0; l < j; ++l) {
      const Mat cross = (chain[j].C.adjoint() * chain[l].C).imag();
      mm.block<2, 2>(2 * j, 2 * l) = cross;
      mm.block<2, 2>(2 * l, 2 * j) = cross.transpose();
    }
  }

  const Mat perm = interleaving_permutation(n);
  Realization out;
  out.modes = n;
  out.channels = k;
  out.M = perm * mm * perm.transpose();
  out.M = 0.5 * (out.M + out.M.transpose());
  out.C = c_interleaved * perm.transpose();
  return out;
}

Realization compose_series(const Realization& g1, const Realization& g2) {
  if (g1.channels != g2.channels) {
    throw Error(ErrorCode::invalid_input, "series product requires equal channel counts");
  }
  const int n1 = g1.modes;
  const int n2 = g2.modes;
  const int n = n1 + n2;

  // T maps the stacked vector (x1_grouped; x2_grouped) to the joint grouped
  // ordering (q^1, q^2, p^1, p^2).
  Mat t = Mat::Zero(2 * n, 2 * n);
  for (int i = 0; i < n1; ++i) {
    t(i, i) = 1.0;
    t(n + i, n1 + i) = 1.0;
  }
  for (int i = 0; i < n2; ++i) {
    t(n1 + i, 2 * n1 + i) = 1.0;
    t(n + n1 + i, 2 * n1 + n2 + i) = 1.0;
  }

  Mat stacked = Mat::Zero(2 * n, 2 * n);
  stacked.topLeftCorner(2 * n1, 2 * n1) = g1.M;
  stacked.bottomRightCorner(2 * n2, 2 * n2) = g2.M;
  const Mat cross = (g2.C.adjoint() * g1.C).imag();
  stacked.bottomLeftCorner(2 * n2, 2 * n1) = cross;
  stacked.topRightCorner(2 * n1, 2 * n2) = cross.transpose();

  CMat c_stacked(g1.channels, 2 * n);
  c_stacked.leftCols(2 * n1) = g1.C;
  c_stacked.rightCols(2 * n2) = g2.C;

  Realization out;
  out.modes = n;
  out.channels = g1.channels;
  out.M = t * stacked * t.transpose();
  out.M = 0.5 * (out.M + out.M.transpose());
  out.C = c_stacked * t.transpose();
  return out;
}

LocalFeasibility local_feasibility(const GaussianGraph& g, double tol) {
  const int n = g.modes;
  const CMat z = g.Z();
  LocalFeasibility result;
  result.tol = tol;
  result.max_offdiag.resize(n, 0.0);
  for (int l = 0; l < n; ++l) {
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == l) continue;
      worst = std::max(worst, std::abs(z(l, j)));
    }
    result.max_offdiag[l] = worst;
    if (worst <= tol) result.eligible_modes.push_back(l + 1);
  }
  return result;
}

Realization realize_local(const GaussianGraph& g, int mode,
                          const std::vector<double>& alphas) {
  const int n = g.modes;
  if (mode < 1 || mode > n) {
    throw Error(ErrorCode::invalid_input, "mode index out of range");
  }
  const LocalFeasibility feas = local_feasibility(g);
  if (std::find(feas.eligible_modes.begin(), feas.eligible_modes.end(), mode) ==
      feas.eligible_modes.end()) {
    throw Error(ErrorCode::infeasible,
                "mode " + std::to_string(mode) +
                    " is not eligible: graph row has off-diagonal magnitude " +
                    std::to_string(feas.max_offdiag[mode - 1]));
  }
  std::vector<double> a = alphas;
  if (a.empty()) {
    a.resize(n);
    for (int j = 0; j < n; ++j) a[j] = j + 1;
  }
  if (static_cast<int>(a.size()) != n) {
    throw Error(ErrorCode::invalid_input, "alphas must have one entry per mode");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a[i] == a[j]) {
        throw Error(ErrorCode::invalid_input, "alphas must be pairwise distinct");
      }
    }
  }

  const Mat y_half = sqrt_spd(g.Y);
  const Mat y_inv_half = y_half.inverse();

  Vec upsilon = Vec::Zero(n);
  upsilon(mode - 1) = 1.0;  // tau_1 = 1 normalizes the channel

  const Vec seed1 = y_half * upsilon;
  const CMat u1 = complete_unitary((seed1 / seed1.norm()).cast<Complex>());
  const CMat u2 = complete_unitary(
      CVec::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0)));
  CMat lambda = CMat::Zero(n, n);
  for (int j = 0; j < n; ++j) lambda(j, j) = Complex(0, a[j]);

  const CMat w = u1 * u2.adjoint() * lambda * u2 * u1.adjoint();
  // W is anti-Hermitian, so Im(W) is symmetric and Re(W) is skew.
  Mat r = -y_inv_half * w.imag() * y_inv_half;
  Mat gam = y_half * w.real() * y_half;
  r = 0.5 * (r + r.transpose());
  gam = 0.5 * (gam - gam.transpose());

  SynthesisParams params;
  params.R = r;
  params.Gamma = gam;
  params.P = upsilon.cast<Complex>();
  return realize_general(g, params);
}

std::vector<Mat> solve_passive_gamma(const Mat& X) {
  if (X.rows() != X.cols() || X.rows() < 1) {
    throw Error(ErrorCode::invalid_input, "X must be square");
  }
  const int n = static_cast<int>(X.rows());
  const Mat x = 0.5 * (X + X.transpose());
  const int dim = n * (n - 1) / 2;
  if (dim == 0) return {};

  // Column b of the constraint matrix holds the strict upper triangle of
  // E_b X + X E_b^T for the skew basis element E_b.
  Mat constraints(dim, dim);
  std::vector<std::pair<int, int>> idx;
  idx.reserve(dim);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  }
  for (int b = 0; b < dim; ++b) {
    Mat e = Mat::Zero(n, n);
    e(idx[b].first, idx[b].second) = 1.0;
    e(idx[b].second, idx[b].first) = -1.0;
    const Mat residual = e * x - x * e;
    for (int row = 0; row < dim; ++row) {
      constraints(row, b) = residual(idx[row].first, idx[row].second);
    }
  }

  Eigen::JacobiSVD<Mat> svd(constraints, Eigen::ComputeFullV);
  const double sigma_max = svd.singularValues().size() > 0
                               ? svd.singularValues()(0)
                               : 0.0;
  const double threshold =
      dim * std::numeric_limits<double>::epsilon() * std::max(sigma_max, 1.0);
  std::vector<Mat> basis;
  for (int b = 0; b < dim; ++b) {
    if (b < svd.singularValues().size() && svd.singularValues()(b) > threshold) {
      continue;
    }
    Mat gamma = Mat::Zero(n, n);
    for (int row = 0; row < dim; ++row) {
      gamma(idx[row].first, idx[row].second) = svd.matrixV()(row, b);
      gamma(idx[row].second, idx[row].first) = -svd.matrixV()(row, b);
    }
    basis.push_back(std::move(gamma));
  }
  return basis;
}

Realization realize_passive(const GaussianGraph& g, const CMat& P, const Mat& Gamma) {
  SynthesisParams params;
  params.R = Mat::Zero(g.modes, g.modes);
  params.Gamma = Gamma;
  params.P = P;
  return realize_general(g, params);
}

Realization realize_local_passive(const GaussianGraph& g, const CMat& P,
                                  const std::vector<double>& gamma_coeffs) {
  const std::vector<Mat> basis = solve_passive_gamma(g.X);
  if (gamma_coeffs.size() != basis.size()) {
    throw Error(ErrorCode::invalid_input,
                "expected " + std::to_string(basis.size()) + " gamma coefficients, got " +
                    std::to_string(gamma_coeffs.size()));
  }
  Mat gamma = Mat::Zero(g.modes, g.modes);
  for (size_t i = 0; i < basis.size(); ++i) gamma += gamma_coeffs[i] * basis[i];
  return realize_passive(g, P, gamma);
}

GaussianGraph enlarge_with_auxiliary(const GaussianGraph& g, double lambda,
                                     double y_aux) {
  if (y_aux <= 0.0) {
    throw Error(ErrorCode::invalid_input, "auxiliary Y entry must be positive");
  }
  const int n = g.modes;
  Mat x = Mat::Zero(n + 1, n + 1);
  Mat y = Mat::Zero(n + 1, n + 1);
  x.topLeftCorner(n, n) = g.X;
  x(n, n) = lambda;
  y.topLeftCorner(n, n) = g.Y;
  y(n, n) = y_aux;
  return make_graph(x, y);
}

Realization passive_transform_realize(const GaussianGraph& g, const Mat& Mtilde,
                                      const CMat& Ptilde) {
  const int n = g.modes;
  if (Mtilde.rows() != 2 * n || Mtilde.cols() != 2 * n || Ptilde.rows() != n ||
      Ptilde.cols() < 1) {
    throw Error(ErrorCode::invalid_input, "passive parameter dimensions do not match");
  }
  const Mat r = Mtilde.topLeftCorner(n, n);
  const Mat gam = Mtilde.topRightCorner(n, n);
  if ((r - r.transpose()).norm() > 1e-9 * std::max(1.0, r.norm()) ||
      (gam + gam.transpose()).norm() > 1e-9 * std::max(1.0, gam.norm()) ||
      (Mtilde.bottomRightCorner(n, n) - r).norm() > 1e-9 * std::max(1.0, r.norm()) ||
      (Mtilde.bottomLeftCorner(n, n) - gam.transpose()).norm() >
          1e-9 * std::max(1.0, gam.norm())) {
    throw Error(ErrorCode::invalid_input,
                "Mtilde is not of passive form [[R, G], [G^T, R]]");
  }

  CMat c_tilde(Ptilde.cols(), 2 * n);
  c_tilde.leftCols(n) = Ptilde.transpose() * (Complex(0, -1) * CMat::Identity(n, n));
  c_tilde.rightCols(n) = Ptilde.transpose();

  const Mat a_passive =
      symplectic_form(n) * (Mtilde + (c_tilde.adjoint() * c_tilde).imag());
  const StabilityReport stability = is_hurwitz(a_passive);
  if (!stability.hurwitz) {
    throw Error(ErrorCode::not_stable,
                "passive system is not Hurwitz (abscissa " +
                    std::to_string(stability.spectral_abscissa) + ")");
  }

  const Mat s_inv = state_from_graph(g).S.inverse();
  Realization out;
  out.modes = n;
  out.channels = static_cast<int>(Ptilde.cols());
  out.M = s_inv.transpose() * Mtilde * s_inv;
  out.M = 0.5 * (out.M + out.M.transpose());
  out.C = c_tilde * s_inv;
  return out;
}

}  // namespace gqs
