#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gqs {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Target pure Gaussian state specified by its graph Z = X + iY, with
// X symmetric and Y symmetric positive definite. Construct via make_graph
// so the invariants are checked.
struct GaussianGraph {
  int modes = 0;
  Mat X;
  Mat Y;

  CMat Z() const { return X.cast<Complex>() + Complex(0, 1) * Y.cast<Complex>(); }
};

// Covariance matrix V with its symplectic factor S, V = (1/2) S S^T.
// Quadrature ordering is grouped: (q_1..q_N, p_1..p_N).
struct PureGaussianState {
  int modes = 0;
  Mat V;
  Mat S;
};

// One linear quantum system: Hamiltonian H = (1/2) x^T M x and coupling
// vector L = C x with K channels.
struct Realization {
  int modes = 0;
  int channels = 0;
  Mat M;
  CMat C;
};

// Drift/diffusion pair for the moment equations
//   d<x>/dt = A <x>,   dV/dt = A V + V A^T + D.
struct StateSpaceModel {
  Mat A;
  Mat D;
};

// Free parameters of the general realization: R symmetric, Gamma skew,
// P a nonzero N x K complex matrix.
struct SynthesisParams {
  Mat R;
  Mat Gamma;
  CMat P;
};

// One-mode subsystem of a cascade: M is 2x2 symmetric, C is K x 2.
struct OscSubsystem {
  Mat M;
  CMat C;
};

using CascadeChain = std::vector<OscSubsystem>;

}  // namespace gqs
