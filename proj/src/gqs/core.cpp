#include "gqs/core.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "gqs/errors.hpp"
#include "gqs/linalg.hpp"

namespace gqs {

Mat symplectic_form(int modes) {
  if (modes < 1) throw Error(ErrorCode::invalid_input, "mode count must be >= 1");
  Mat sigma = Mat::Zero(2 * modes, 2 * modes);
  sigma.topRightCorner(modes, modes) = Mat::Identity(modes, modes);
  sigma.bottomLeftCorner(modes, modes) = -Mat::Identity(modes, modes);
  return sigma;
}

Mat interleaving_permutation(int modes) {
  if (modes < 1) throw Error(ErrorCode::invalid_input, "mode count must be >= 1");
  Mat p = Mat::Zero(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) {
    p(j, 2 * j) = 1.0;              // q_j sits at interleaved slot 2j
    p(modes + j, 2 * j + 1) = 1.0;  // p_j sits at interleaved slot 2j+1
  }
  return p;
}

namespace {

Mat symmetrize_checked(const Mat& m, const char* label) {
  const double scale = std::max(1.0, m.norm());
  const double asym = (m - m.transpose()).norm() / scale;
  if (asym > 1e-9) {
    throw Error(ErrorCode::invalid_input,
                std::string(label) + " is not symmetric (relative asymmetry " +
                    std::to_string(asym) + ")");
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace

GaussianGraph make_graph(const Mat& X, const Mat& Y) {
  if (X.rows() < 1 || X.rows() != X.cols() || Y.rows() != X.rows() ||
      Y.cols() != X.cols()) {
    throw Error(ErrorCode::invalid_input, "X and Y must be square and of equal size");
  }
  GaussianGraph g;
  g.modes = static_cast<int>(X.rows());
  g.X = symmetrize_checked(X, "X");
  g.Y = symmetrize_checked(Y, "Y");
  Eigen::SelfAdjointEigenSolver<Mat> es(g.Y);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig <= 0.0) {
    throw Error(ErrorCode::invalid_input,
                "Y is not positive definite (min eigenvalue " +
                    std::to_string(min_eig) + ")");
  }
  return g;
}

PureGaussianState state_from_graph(const GaussianGraph& g) {
  const int n = g.modes;
  const Mat y_half = sqrt_spd(g.Y);
  const Mat y_inv_half = y_half.inverse();
  PureGaussianState st;
  st.modes = n;
  st.S = Mat::Zero(2 * n, 2 * n);
  st.S.topLeftCorner(n, n) = y_inv_half;
  st.S.bottomLeftCorner(n, n) = g.X * y_inv_half;
  st.S.bottomRightCorner(n, n) = y_half;
  st.V = 0.5 * st.S * st.S.transpose();
  st.V = 0.5 * (st.V + st.V.transpose());
  return st;
}

GaussianGraph graph_from_covariance(const Mat& V, double purity_tol) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0 || V.rows() < 2) {
    throw Error(ErrorCode::invalid_input, "covariance must be 2N x 2N");
  }
  const Mat v = symmetrize_checked(V, "V");
  const int n = static_cast<int>(V.rows()) / 2;
  const PurityReport purity = purity_check(v);
  if (purity.det_defect > purity_tol) {
    throw Error(ErrorCode::invalid_input,
                "covariance is not pure (det defect " +
                    std::to_string(purity.det_defect) + ")");
  }
  const Mat v_qq = v.topLeftCorner(n, n);
  Eigen::FullPivLU<Mat> lu(v_qq);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::invalid_input, "q-block of covariance is singular");
  }
  const Mat v_qq_inv = lu.inverse();
  const Mat y = 0.5 * v_qq_inv;
  const Mat x = v_qq_inv * v.topRightCorner(n, n);
  return make_graph(0.5 * (x + x.transpose()), 0.5 * (y + y.transpose()));
}

PurityReport purity_check(const Mat& V) {
  if (V.rows() != V.cols() || V.rows() % 2 != 0) {
    throw Error(ErrorCode::invalid_input, "covariance must be 2N x 2N");
  }
  const int n = static_cast<int>(V.rows()) / 2;
  PurityReport report;
  report.det_defect = std::abs(V.determinant() * std::pow(2.0, 2 * n) - 1.0);
  const CMat herm =
      V.cast<Complex>() + Complex(0, 0.5) * symplectic_form(n).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMat> es(herm);
  report.min_uncertainty_eig = es.eigenvalues().minCoeff();
  return report;
}

}  // namespace gqs
