#pragma once

#include <utility>
#include <vector>

#include "gqs/types.hpp"

namespace gqs {

// General covariance-assignment realization:
//   M = [[XRX + YRY - G Y^{-1} X - X Y^{-1} G^T,  -XR + G Y^{-1}],
//        [-RX + Y^{-1} G^T,                        R]]
//   C = P^T [-Z, I_N]
// subject to rank([P, QP, ..., Q^{N-1}P]) = N with Q = -iRY + Y^{-1}G.
// Throws RankError when the rank condition fails.
Realization realize_general(const GaussianGraph& g, const SynthesisParams& params);

// Cascade of N one-mode oscillators with M_j = 0 and
// C_j = i Y^{-1/2} [-Z, I] P_N E_j. The composed system has M = 0,
// C = i Y^{-1/2} [-Z, I], drift -I and diffusion 2 V_target.
std::pair<CascadeChain, Realization> realize_cascade(const GaussianGraph& g);

// N-oscillator cascade composition: M = P_N MM P_N^T with MM_jj = M_j,
// MM_jk = Im(C_j^dag C_k) for j > k, and C = [C_1 ... C_N] P_N^T.
Realization compose_chain(const CascadeChain& chain);

// Series product G2 <| G1 on the direct sum of the two mode sets, with
// G1's modes first in the grouped joint ordering.
Realization compose_series(const Realization& g1, const Realization& g2);

struct LocalFeasibility {
  std::vector<int> eligible_modes;   // 1-based
  std::vector<double> max_offdiag;   // per mode, max |Z_{l j}| over j != l
  double tol;
};

LocalFeasibility local_feasibility(const GaussianGraph& g, double tol = 1e-9);

// Locally dissipative realization at the (1-based) eligible mode, built from
// the unitary-completion construction; alphas must be pairwise distinct and
// default to 1..N.
Realization realize_local(const GaussianGraph& g, int mode,
                          const std::vector<double>& alphas = {});

// Orthonormal basis of { Gamma skew : offdiag(Gamma X + X Gamma^T) = 0 }.
std::vector<Mat> solve_passive_gamma(const Mat& X);

// realize_general with R = 0 and an explicit Gamma.
Realization realize_passive(const GaussianGraph& g, const CMat& P, const Mat& Gamma);

// realize_passive with Gamma = sum_i coeffs_i * basis_i from solve_passive_gamma.
Realization realize_local_passive(const GaussianGraph& g, const CMat& P,
                                  const std::vector<double>& gamma_coeffs);

// Appends a decoupled auxiliary mode: X~ = diag[X, lambda], Y~ = diag[Y, y_aux].
GaussianGraph enlarge_with_auxiliary(const GaussianGraph& g, double lambda,
                                     double y_aux = 1.0);

// Conjugates a stable passive system (Mtilde, P~^T[-iI, I]) by the symplectic
// factor S of the target: M = S^{-T} Mtilde S^{-1}, C = Ctilde S^{-1}.
Realization passive_transform_realize(const GaussianGraph& g, const Mat& Mtilde,
                                      const CMat& Ptilde);

}  // namespace gqs
