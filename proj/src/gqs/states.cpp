#include "gqs/states.hpp"

#include <cmath>

#include "gqs/core.hpp"
#include "gqs/errors.hpp"

namespace gqs {

GaussianGraph vacuum(int modes) {
  if (modes < 1) throw Error(ErrorCode::invalid_input, "mode count must be >= 1");
  return make_graph(Mat::Zero(modes, modes), Mat::Identity(modes, modes));
}

GaussianGraph two_mode_squeezed(double alpha) {
  if (!std::isfinite(alpha)) {
    throw Error(ErrorCode::invalid_input, "alpha must be finite");
  }
  Mat y(2, 2);
  y << std::cosh(2 * alpha), -std::sinh(2 * alpha),
      -std::sinh(2 * alpha), std::cosh(2 * alpha);
  return make_graph(Mat::Zero(2, 2), y);
}

GaussianGraph canonical_cluster(const Mat& B, double alpha) {
  if (B.rows() != B.cols() || B.rows() < 1) {
    throw Error(ErrorCode::invalid_input, "adjacency must be square");
  }
  const int n = static_cast<int>(B.rows());
  return make_graph(B, std::exp(-2 * alpha) * Mat::Identity(n, n));
}

Mat cluster_eq14_adjacency() {
  Mat b(4, 4);
  b << 0, 1, 0, 0,
       1, 0, 1, 0,
       0, 1, 0, 0,
       0, 0, 0, std::sqrt(2.0);
  return b;
}

Mat cluster_eq16_adjacency() {
  Mat b(4, 4);
  b << 0, 1, 0, 0,
       1, 0, 1, 0,
       0, 1, 0, 1,
       0, 0, 1, 0;
  return b;
}

Mat passive_gamma_eq14(double gamma1, double gamma2) {
  const double r2 = std::sqrt(2.0);
  Mat g(4, 4);
  g << 0, gamma1, 0, gamma2,
      -gamma1, 0, gamma1, r2 * gamma2,
      0, -gamma1, 0, gamma2,
      -gamma2, -r2 * gamma2, -gamma2, 0;
  return g;
}

Mat passive_gamma_eq16(double gamma1, double gamma2) {
  Mat g(4, 4);
  g << 0, gamma1, 0, gamma2,
      -gamma1, 0, gamma1 + gamma2, 0,
      0, -(gamma1 + gamma2), 0, gamma1,
      -gamma2, 0, -gamma1, 0;
  return g;
}

namespace {

CascadeChain tms_realization1_chain(double alpha) {
  const double q1 = std::sinh(2 * alpha) * std::sinh(2 * alpha) / std::cosh(2 * alpha) -
                    std::sinh(2 * alpha);
  const double q2 = std::sinh(2 * alpha) - std::cosh(2 * alpha);
  Mat m(2, 2);
  m << 2, q1,
       q1, 2;
  CMat c(1, 2);
  c << Complex(0, q2), Complex(1, 0);
  return {OscSubsystem{m, c}, OscSubsystem{-m, c}};
}

CascadeChain tms_realization2_chain(double alpha) {
  const double ch = std::cosh(alpha);
  const double sh = std::sinh(alpha);
  CMat c1(2, 2), c2(2, 2);
  c1 << Complex(ch, 0), Complex(0, ch),
        Complex(-sh, 0), Complex(0, sh);
  c2 << Complex(-sh, 0), Complex(0, sh),
        Complex(ch, 0), Complex(0, ch);
  return {OscSubsystem{Mat::Zero(2, 2), c1}, OscSubsystem{Mat::Zero(2, 2), c2}};
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"cluster-4-eq14", "cluster-4-eq16", "cluster-5-eq17",
          "tms-realization1-params", "tms-realization2-params"};
}

Fixture fixture(const std::string& name, double alpha, double lambda) {
  Fixture f;
  f.name = name;
  if (name == "cluster-4-eq14") {
    f.graph = canonical_cluster(cluster_eq14_adjacency(), alpha);
    f.notes = "four-mode canonical cluster state, locally preparable at mode 4";
  } else if (name == "cluster-4-eq16") {
    f.graph = canonical_cluster(cluster_eq16_adjacency(), alpha);
    f.notes = "four-mode path-graph cluster state, no local preparation exists";
  } else if (name == "cluster-5-eq17") {
    Mat b = Mat::Zero(5, 5);
    b.topLeftCorner(4, 4) = cluster_eq16_adjacency();
    b(4, 4) = lambda;
    f.graph = canonical_cluster(b, alpha);
    f.notes = "path-graph cluster state enlarged with a diagonal auxiliary mode";
  } else if (name == "tms-realization1-params") {
    f.graph = two_mode_squeezed(alpha);
    f.chain = tms_realization1_chain(alpha);
    f.notes = "two-mode squeezed target with the heuristic cascade subsystems";
  } else if (name == "tms-realization2-params") {
    f.graph = two_mode_squeezed(alpha);
    f.chain = tms_realization2_chain(alpha);
    f.notes = "two-mode squeezed target with the constructive cascade subsystems";
  } else {
    std::string valid;
    for (const auto& fname : fixture_names()) valid += " " + fname;
    throw Error(ErrorCode::invalid_input,
                "unknown fixture '" + name + "'; valid names:" + valid);
  }
  return f;
}

}  // namespace gqs
