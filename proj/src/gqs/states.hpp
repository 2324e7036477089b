#pragma once

#include <string>
#include <vector>

#include "gqs/types.hpp"

namespace gqs {

// X = 0, Y = I_N.
GaussianGraph vacuum(int modes);

// X = 0, Y = [[cosh 2a, -sinh 2a], [-sinh 2a, cosh 2a]].
GaussianGraph two_mode_squeezed(double alpha);

// Canonical Gaussian cluster state: X = B, Y = e^{-2a} I_N.
GaussianGraph canonical_cluster(const Mat& B, double alpha);

struct Fixture {
  std::string name;
  GaussianGraph graph;
  std::string notes;
  // Populated only for the tms-realization fixtures: the two one-mode
  // subsystems to be composed in order.
  CascadeChain chain;
};

// Known names: cluster-4-eq14, cluster-4-eq16, cluster-5-eq17,
// tms-realization1-params, tms-realization2-params.
Fixture fixture(const std::string& name, double alpha, double lambda = 1.4142135623730951);

std::vector<std::string> fixture_names();

Mat cluster_eq14_adjacency();
Mat cluster_eq16_adjacency();

// The two-parameter skew families making Gamma X + X Gamma^T diagonal for
// the eq-(14) and eq-(16) adjacencies.
Mat passive_gamma_eq14(double gamma1, double gamma2);
Mat passive_gamma_eq16(double gamma1, double gamma2);

}  // namespace gqs
