#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "gqs/core.hpp"
#include "gqs/errors.hpp"
#include "gqs/states.hpp"

using namespace gqs;
using testutil::random_graph;

TEST_CASE("symplectic form") {
  Mat s1 = symplectic_form(1);
  CHECK(s1(0, 1) == 1.0);
  CHECK(s1(1, 0) == -1.0);
  CHECK(s1(0, 0) == 0.0);

  Mat s2 = symplectic_form(2);
  CHECK((s2.block(0, 2, 2, 2) - Mat::Identity(2, 2)).norm() == 0.0);
  CHECK((s2.block(2, 0, 2, 2) + Mat::Identity(2, 2)).norm() == 0.0);

  for (int n = 1; n <= 6; ++n) {
    Mat s = symplectic_form(n);
    CHECK((s.transpose() + s).norm() == 0.0);
    CHECK((s * s + Mat::Identity(2 * n, 2 * n)).norm() == 0.0);
    CHECK((s * s.transpose() - Mat::Identity(2 * n, 2 * n)).norm() == 0.0);
  }
}

TEST_CASE("interleaving permutation") {
  CHECK((interleaving_permutation(1) - Mat::Identity(2, 2)).norm() == 0.0);

  Vec x(4);
  x << 1, 2, 3, 4;  // (a, b, c, d) interleaved
  Vec y = interleaving_permutation(2) * x;
  CHECK(y(0) == 1);
  CHECK(y(1) == 3);
  CHECK(y(2) == 2);
  CHECK(y(3) == 4);

  for (int n = 1; n <= 6; ++n) {
    Mat p = interleaving_permutation(n);
    CHECK((p * p.transpose() - Mat::Identity(2 * n, 2 * n)).norm() == 0.0);
  }
}

TEST_CASE("permutation maps grouped form to per-mode blocks") {
  for (int n = 1; n <= 5; ++n) {
    Mat p = interleaving_permutation(n);
    Mat blocky = p.transpose() * symplectic_form(n) * p;
    Mat expected = Mat::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j) {
      expected(2 * j, 2 * j + 1) = 1.0;
      expected(2 * j + 1, 2 * j) = -1.0;
    }
    CHECK((blocky - expected).norm() < 1e-15);
  }
}

TEST_CASE("state from graph: vacuum") {
  auto st = state_from_graph(vacuum(3));
  CHECK((st.V - 0.5 * Mat::Identity(6, 6)).norm() < 1e-15);
  CHECK((st.S - Mat::Identity(6, 6)).norm() < 1e-15);
}

TEST_CASE("state from graph: two-mode squeezed covariance") {
  const double a = 0.5;
  auto st = state_from_graph(two_mode_squeezed(a));
  Mat expected(4, 4);
  const double c = std::cosh(2 * a), s = std::sinh(2 * a);
  expected << c, s, 0, 0,
              s, c, 0, 0,
              0, 0, c, -s,
              0, 0, -s, c;
  expected *= 0.5;
  CHECK((st.V - expected).norm() < 1e-12);
}

TEST_CASE("state from graph: invariants on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 8;
    auto g = random_graph(rng, n);
    auto st = state_from_graph(g);
    Mat sig = symplectic_form(n);
    CHECK((st.S * sig * st.S.transpose() - sig).norm() < 1e-10);
    CHECK(std::abs((2.0 * st.V).determinant() - 1.0) < 1e-8);
    CHECK((st.V - 0.5 * st.S * st.S.transpose()).norm() < 1e-12);
  }
}

TEST_CASE("graph from covariance") {
  SUBCASE("vacuum") {
    auto g = graph_from_covariance(0.5 * Mat::Identity(4, 4));
    CHECK(g.X.norm() < 1e-14);
    CHECK((g.Y - Mat::Identity(2, 2)).norm() < 1e-14);
  }
  SUBCASE("two-mode squeezed") {
    const double a = 0.5;
    auto g = graph_from_covariance(state_from_graph(two_mode_squeezed(a)).V);
    CHECK(g.X.norm() < 1e-12);
    Mat y(2, 2);
    y << std::cosh(1.0), -std::sinh(1.0), -std::sinh(1.0), std::cosh(1.0);
    CHECK((g.Y - y).norm() < 1e-12);
  }
  SUBCASE("round trip on random pure states") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + trial % 8;
      auto g = random_graph(rng, n);
      auto g2 = graph_from_covariance(state_from_graph(g).V);
      CHECK((g.X - g2.X).norm() < 1e-10);
      CHECK((g.Y - g2.Y).norm() < 1e-10);
      CHECK((state_from_graph(g2).V - state_from_graph(g).V).norm() < 1e-10);
    }
  }
  SUBCASE("impure input rejected") {
    CHECK_THROWS_AS(graph_from_covariance(Mat::Identity(4, 4)), Error);
  }
}

TEST_CASE("purity check") {
  SUBCASE("vacuum saturates") {
    auto rep = purity_check(0.5 * Mat::Identity(6, 6));
    CHECK(rep.det_defect < 1e-14);
    CHECK(std::abs(rep.min_uncertainty_eig) < 1e-14);
  }
  SUBCASE("squeezed state is pure") {
    auto rep = purity_check(state_from_graph(two_mode_squeezed(0.7)).V);
    CHECK(rep.det_defect < 1e-10);
  }
  SUBCASE("thermal-like state is impure") {
    auto rep = purity_check(Mat::Identity(4, 4));  // N = 2
    CHECK(rep.det_defect == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(rep.min_uncertainty_eig > 0.0);
  }
}

TEST_CASE("make graph validation") {
  SUBCASE("small asymmetry is symmetrized") {
    Mat x = Mat::Zero(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0 + 1e-12;
    auto g = make_graph(x, Mat::Identity(2, 2));
    CHECK(std::abs(g.X(0, 1) - g.X(1, 0)) == 0.0);
  }
  SUBCASE("large asymmetry is rejected") {
    Mat x = Mat::Zero(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 0.5;
    CHECK_THROWS_AS(make_graph(x, Mat::Identity(2, 2)), Error);
  }
  SUBCASE("indefinite Y is rejected") {
    Mat y = Mat::Identity(2, 2);
    y(1, 1) = -1.0;
    CHECK_THROWS_AS(make_graph(Mat::Zero(2, 2), y), Error);
  }
}
