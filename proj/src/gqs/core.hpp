#pragma once

#include "gqs/types.hpp"

namespace gqs {

// Sigma = [[0, I_N], [-I_N, 0]] in grouped quadrature ordering.
Mat symplectic_form(int modes);

// Permutation P_N with P_N * x_interleaved = x_grouped, i.e. it maps
// (q_1, p_1, q_2, p_2, ...) to (q_1..q_N, p_1..p_N).
Mat interleaving_permutation(int modes);

// Validates and symmetrizes (X, Y). Asymmetry below 1e-9 relative Frobenius
// is silently symmetrized; anything larger is an error, as is Y not SPD.
GaussianGraph make_graph(const Mat& X, const Mat& Y);

// V = (1/2) S S^T with S = [[Y^{-1/2}, 0], [X Y^{-1/2}, Y^{1/2}]].
PureGaussianState state_from_graph(const GaussianGraph& g);

// Inverse of state_from_graph: Y = (2 V_qq)^{-1}, X = V_qq^{-1} V_qp.
// Rejects impure V (relative det defect above purity_tol).
GaussianGraph graph_from_covariance(const Mat& V, double purity_tol = 1e-8);

struct PurityReport {
  double det_defect;          // |det(V) 2^{2N} - 1|
  double min_uncertainty_eig; // smallest eigenvalue of V + (i/2) Sigma
};

PurityReport purity_check(const Mat& V);

}  // namespace gqs
