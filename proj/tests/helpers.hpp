#pragma once

// Shared test utilities: independent oracles and random problem generators.

#include <random>

#include <Eigen/Dense>

#include "gqs/core.hpp"
#include "gqs/types.hpp"

namespace testutil {

using gqs::CMat;
using gqs::Complex;
using gqs::Mat;
using gqs::Vec;

// Independent Lyapunov oracle: dense Kronecker-vectorized solve of
// (I (x) A + A (x) I) vec(V) = -vec(D), column-major vec.
inline Mat kron_lyapunov(const Mat& A, const Mat& D) {
  const int n = static_cast<int>(A.rows());
  Mat K = Mat::Zero(n * n, n * n);
  const Mat I = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // block (i, j) of I (x) A is delta_ij A; of A (x) I is A_ij I.
      K.block(i * n, j * n, n, n) = (i == j ? A : Mat::Zero(n, n)) + A(i, j) * I;
    }
  }
  Eigen::Map<const Vec> d(D.data(), n * n);
  Vec v = K.fullPivLu().solve(-d);
  Mat V = Eigen::Map<const Mat>(v.data(), n, n);
  return 0.5 * (V + V.transpose());
}

inline Mat random_symmetric(std::mt19937& rng, int n, double scale = 2.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Mat X(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X(i, j) = dist(rng);
  return 0.5 * (X + X.transpose());
}

inline Mat random_spd(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat W(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) W(i, j) = dist(rng);
  return W.transpose() * W + 0.1 * Mat::Identity(n, n);
}

inline gqs::GaussianGraph random_graph(std::mt19937& rng, int n) {
  return gqs::make_graph(random_symmetric(rng, n), random_spd(rng, n));
}

inline Mat random_hurwitz(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat W(n, n), S(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      W(i, j) = dist(rng);
      S(i, j) = dist(rng);
    }
  return -W.transpose() * W - 0.1 * Mat::Identity(n, n) +
         0.5 * (S - S.transpose());
}

inline Mat random_psd(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Mat W(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) W(i, j) = dist(rng);
  return W.transpose() * W;
}

}  // namespace testutil
