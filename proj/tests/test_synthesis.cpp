#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"

#include "gqs/core.hpp"
#include "gqs/errors.hpp"
#include "gqs/linalg.hpp"
#include "gqs/states.hpp"
#include "gqs/synthesis.hpp"
#include "gqs/verify.hpp"

using namespace gqs;
using testutil::kron_lyapunov;

namespace {

Realization from_subsystem(const OscSubsystem& s) {
  return Realization{1, static_cast<int>(s.C.rows()), s.M, s.C};
}

// Least-squares coefficients of a skew matrix against an orthogonal basis.
std::vector<double> project_onto(const std::vector<Mat>& basis, const Mat& gamma) {
  std::vector<double> coeffs;
  Mat residual = gamma;
  for (const auto& b : basis) {
    const double c =
        (b.array() * gamma.array()).sum() / (b.array() * b.array()).sum();
    coeffs.push_back(c);
    residual -= c * b;
  }
  REQUIRE(residual.norm() < 1e-10);  // gamma must lie in the span
  return coeffs;
}

}  // namespace

TEST_CASE("general realization: vacuum nullifiers") {
  auto g = vacuum(3);
  SynthesisParams params{Mat::Zero(3, 3), Mat::Zero(3, 3), CMat::Identity(3, 3)};
  auto r = realize_general(g, params);
  CHECK(r.M.norm() < 1e-14);
  CMat expected(3, 6);
  expected << Complex(0, -1) * CMat::Identity(3, 3), CMat::Identity(3, 3);
  CHECK((r.C - expected).norm() < 1e-14);

  auto model = state_space(r);
  CHECK((model.A + Mat::Identity(6, 6)).norm() < 1e-12);
  CHECK((steady_state_covariance(r) - 0.5 * Mat::Identity(6, 6)).norm() < 1e-12);
}

TEST_CASE("general realization: purely dissipative on random graphs") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + trial % 4;
    auto g = testutil::random_graph(rng, n);
    SynthesisParams params{Mat::Zero(n, n), Mat::Zero(n, n), CMat::Identity(n, n)};
    auto r = realize_general(g, params);
    auto target = state_from_graph(g);
    CHECK((steady_state_covariance(r) - target.V).norm() < 1e-8);
  }
}

TEST_CASE("general realization: random parameters hit the target") {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    auto g = testutil::random_graph(rng, n);
    Mat skew = testutil::random_symmetric(rng, n);
    SynthesisParams params{testutil::random_symmetric(rng, n, 1.0),
                           0.5 * (skew - skew.transpose()), CMat::Identity(n, n)};
    auto r = realize_general(g, params);
    CHECK((r.M - r.M.transpose()).norm() < 1e-12);
    auto model = state_space(r);
    CHECK(is_hurwitz(model.A).hurwitz);
    Mat v = kron_lyapunov(model.A, model.D);
    CHECK((v - state_from_graph(g).V).norm() < 1e-8);
  }
}

TEST_CASE("general realization: rank condition enforcement") {
  // Q = 0 with a single coupling column cannot excite every mode.
  auto g = vacuum(2);
  CMat p = CMat::Zero(2, 1);
  p(0, 0) = 1.0;
  SynthesisParams params{Mat::Zero(2, 2), Mat::Zero(2, 2), p};
  CHECK_THROWS_AS(realize_general(g, params), RankError);
  try {
    realize_general(g, params);
  } catch (const RankError& e) {
    CHECK(e.report().numerical_rank == 1);
    CHECK(e.report().singular_values.size() == 2);
  }
}

TEST_CASE("general realization: homogeneous in coupling columns") {
  std::mt19937 rng(107);
  auto g = testutil::random_graph(rng, 3);
  SynthesisParams params{Mat::Zero(3, 3), Mat::Zero(3, 3), CMat::Identity(3, 3)};
  auto base = realize_general(g, params);
  params.P.col(1) *= Complex(0.0, 2.5);
  auto scaled = realize_general(g, params);
  CHECK((scaled.C.row(1) - Complex(0.0, 2.5) * base.C.row(1)).norm() < 1e-12);
  CHECK((scaled.C.row(0) - base.C.row(0)).norm() == 0.0);
  CHECK((steady_state_covariance(scaled) - steady_state_covariance(base)).norm() <
        1e-9);
}

TEST_CASE("cascade: single-mode vacuum") {
  auto [chain, composed] = realize_cascade(vacuum(1));
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].M.norm() == 0.0);
  CMat c1(1, 2);
  c1 << Complex(1, 0), Complex(0, 1);
  CHECK((chain[0].C - c1).norm() < 1e-14);
  CHECK((steady_state_covariance(composed) - 0.5 * Mat::Identity(2, 2)).norm() <
        1e-12);
}

TEST_CASE("cascade: two-mode squeezed subsystem couplings") {
  for (double a : {0.2, 0.5, 1.0}) {
    auto [chain, composed] = realize_cascade(two_mode_squeezed(a));
    REQUIRE(chain.size() == 2);
    CMat c1(2, 2), c2(2, 2);
    c1 << Complex(std::cosh(a), 0), Complex(0, std::cosh(a)),
          Complex(-std::sinh(a), 0), Complex(0, std::sinh(a));
    c2 << Complex(-std::sinh(a), 0), Complex(0, std::sinh(a)),
          Complex(std::cosh(a), 0), Complex(0, std::cosh(a));
    CHECK((chain[0].C - c1).norm() < 1e-12);
    CHECK((chain[1].C - c2).norm() < 1e-12);
    CHECK(chain[0].M.norm() == 0.0);
    CHECK(chain[1].M.norm() == 0.0);
  }
}

TEST_CASE("cascade: structural invariants on random graphs") {
  std::mt19937 rng(113);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    auto g = testutil::random_graph(rng, n);
    auto [chain, composed] = realize_cascade(g);
    CHECK(composed.M.norm() < 1e-12);

    auto model = state_space(composed);
    CHECK((model.A + Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-12);
    auto target = state_from_graph(g);
    CHECK((model.D - 2.0 * target.V).norm() < 1e-10);

    CMat cc = composed.C.adjoint() * composed.C;
    CHECK((cc.imag() - symplectic_form(n)).cwiseAbs().maxCoeff() < 1e-12);

    CHECK((steady_state_covariance(composed) - target.V).norm() < 1e-9);
  }
}

TEST_CASE("chain composition") {
  std::mt19937 rng(127);
  SUBCASE("single subsystem is the identity composition") {
    OscSubsystem s{testutil::random_symmetric(rng, 2), CMat::Random(1, 2)};
    auto r = compose_chain({s});
    CHECK((r.M - s.M).norm() < 1e-14);
    CHECK((r.C - s.C).norm() < 1e-14);
  }
  SUBCASE("cascade chains compose to zero Hamiltonian") {
    auto g = testutil::random_graph(rng, 4);
    auto [chain, composed] = realize_cascade(g);
    auto recomposed = compose_chain(chain);
    CHECK(recomposed.M.norm() < 1e-12);
    CHECK((recomposed.C - composed.C).norm() < 1e-13);
  }
  SUBCASE("two-subsystem chain equals the series product") {
    for (int trial = 0; trial < 5; ++trial) {
      OscSubsystem s1{testutil::random_symmetric(rng, 2), CMat::Random(1, 2)};
      OscSubsystem s2{testutil::random_symmetric(rng, 2), CMat::Random(1, 2)};
      auto via_chain = compose_chain({s1, s2});
      auto via_series = compose_series(from_subsystem(s1), from_subsystem(s2));
      CHECK((via_chain.M - via_series.M).norm() < 1e-12);
      CHECK((via_chain.C - via_series.C).norm() < 1e-12);
    }
  }
  SUBCASE("left-fold of the series product matches the chain composition") {
    auto g = testutil::random_graph(rng, 4);
    auto [chain, composed] = realize_cascade(g);
    Realization acc = from_subsystem(chain[0]);
    for (size_t j = 1; j < chain.size(); ++j) {
      acc = compose_series(acc, from_subsystem(chain[j]));
    }
    CHECK((acc.M - composed.M).norm() < 1e-12);
    CHECK((acc.C - composed.C).norm() < 1e-12);
  }
  SUBCASE("channel mismatch is rejected") {
    OscSubsystem s1{Mat::Zero(2, 2), CMat::Random(1, 2)};
    OscSubsystem s2{Mat::Zero(2, 2), CMat::Random(2, 2)};
    CHECK_THROWS_AS(compose_chain({s1, s2}), Error);
    CHECK_THROWS_AS(compose_series(from_subsystem(s1), from_subsystem(s2)), Error);
  }
}

TEST_CASE("series product: decoupled second system") {
  std::mt19937 rng(131);
  OscSubsystem s1{testutil::random_symmetric(rng, 2), CMat::Random(1, 2)};
  OscSubsystem s2{testutil::random_symmetric(rng, 2), CMat::Zero(1, 2)};
  auto joint = compose_series(from_subsystem(s1), from_subsystem(s2));
  // grouped joint ordering (q1, q2, p1, p2): per-mode blocks sit at
  // indices {0, 2} and {1, 3}.
  Mat expected = Mat::Zero(4, 4);
  const int idx1[2] = {0, 2}, idx2[2] = {1, 3};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      expected(idx1[a], idx1[b]) = s1.M(a, b);
      expected(idx2[a], idx2[b]) = s2.M(a, b);
    }
  CHECK((joint.M - expected).norm() < 1e-13);
  CHECK(std::abs(joint.C(0, 0) - s1.C(0, 0)) < 1e-14);
  CHECK(std::abs(joint.C(0, 2) - s1.C(0, 1)) < 1e-14);
  CHECK(std::abs(joint.C(0, 1)) == 0.0);
  CHECK(std::abs(joint.C(0, 3)) == 0.0);
}

TEST_CASE("series product: first two-mode-squeezing realization") {
  for (double a : {0.2, 0.5, 1.0}) {
    auto f = fixture("tms-realization1-params", a);
    REQUIRE(f.chain.size() == 2);
    auto joint =
        compose_series(from_subsystem(f.chain[0]), from_subsystem(f.chain[1]));
    auto model = state_space(joint);
    CHECK(is_hurwitz(model.A).hurwitz);
    auto target = state_from_graph(two_mode_squeezed(a));
    CHECK((steady_state_covariance(joint) - target.V).norm() < 1e-8);
  }
}

TEST_CASE("local feasibility") {
  auto modes_of = [](const LocalFeasibility& f) { return f.eligible_modes; };
  CHECK(modes_of(local_feasibility(fixture("cluster-4-eq14", 0.3).graph)) ==
        std::vector<int>{4});
  CHECK(modes_of(local_feasibility(fixture("cluster-4-eq16", 0.3).graph)).empty());
  CHECK(modes_of(local_feasibility(fixture("cluster-5-eq17", 0.3).graph)) ==
        std::vector<int>{5});
  std::mt19937 rng(137);
  CHECK(modes_of(local_feasibility(testutil::random_graph(rng, 1))) ==
        std::vector<int>{1});
}

TEST_CASE("local realization: single-mode vacuum") {
  auto r = realize_local(vacuum(1), 1);
  REQUIRE(r.channels == 1);
  // L proportional to -i q + p (tau2 = Z_11 = i)
  CHECK(std::abs(r.C(0, 0) - Complex(0, -1)) < 1e-12);
  CHECK(std::abs(r.C(0, 1) - Complex(1, 0)) < 1e-12);
  CHECK((steady_state_covariance(r) - 0.5 * Mat::Identity(2, 2)).norm() < 1e-10);
}

TEST_CASE("local realization: eligible cluster fixtures") {
  struct Case {
    const char* name;
    int mode;
  };
  for (const Case& tc : {Case{"cluster-4-eq14", 4}, Case{"cluster-5-eq17", 5}}) {
    auto f = fixture(tc.name, 0.3);
    auto r = realize_local(f.graph, tc.mode);
    const int n = f.graph.modes;
    REQUIRE(r.channels == 1);
    // support only on columns l and N+l
    for (int col = 0; col < 2 * n; ++col) {
      if (col == tc.mode - 1 || col == n + tc.mode - 1) continue;
      CHECK(std::abs(r.C(0, col)) < 1e-12);
    }
    CHECK(std::abs(r.C(0, n + tc.mode - 1) - Complex(1, 0)) < 1e-12);
    const CMat z = f.graph.Z();
    CHECK(std::abs(r.C(0, tc.mode - 1) + z(tc.mode - 1, tc.mode - 1)) < 1e-12);

    auto model = state_space(r);
    CHECK(is_hurwitz(model.A).hurwitz);
    CHECK((kron_lyapunov(model.A, model.D) - state_from_graph(f.graph).V).norm() <
          1e-7);
  }
}

TEST_CASE("local realization: custom spectra and error paths") {
  auto f = fixture("cluster-4-eq14", 0.3);
  SUBCASE("custom distinct spectrum works") {
    auto r = realize_local(f.graph, 4, {0.5, 1.5, 2.5, 7.0});
    CHECK((steady_state_covariance(r) - state_from_graph(f.graph).V).norm() <
          1e-7);
  }
  SUBCASE("repeated spectrum rejected") {
    CHECK_THROWS_AS(realize_local(f.graph, 4, {1.0, 1.0, 2.0, 3.0}), Error);
  }
  SUBCASE("ineligible mode rejected as infeasible") {
    try {
      realize_local(f.graph, 2);
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::infeasible);
    }
    CHECK_THROWS_AS(realize_local(fixture("cluster-4-eq16", 0.3).graph, 4), Error);
  }
}

TEST_CASE("passive coupling-shape solver") {
  SUBCASE("X = 0 leaves every skew matrix admissible") {
    auto basis = solve_passive_gamma(Mat::Zero(4, 4));
    CHECK(basis.size() == 6);  // N(N-1)/2
  }
  SUBCASE("every basis element satisfies the constraint") {
    for (const Mat& x :
         {cluster_eq14_adjacency(), cluster_eq16_adjacency()}) {
      for (const Mat& b : solve_passive_gamma(x)) {
        CHECK((b + b.transpose()).norm() < 1e-12);
        Mat q = b * x + x * b.transpose();
        q.diagonal().setZero();
        CHECK(q.norm() < 1e-10);
      }
    }
  }
  SUBCASE("paper-style two-parameter families lie in the span") {
    auto basis14 = solve_passive_gamma(cluster_eq14_adjacency());
    CHECK(basis14.size() == 2);
    project_onto(basis14, passive_gamma_eq14(1.0, 1.0));
    project_onto(basis14, passive_gamma_eq14(-0.3, 2.0));
    auto basis16 = solve_passive_gamma(cluster_eq16_adjacency());
    CHECK(basis16.size() == 2);
    project_onto(basis16, passive_gamma_eq16(1.0, 0.0));
    project_onto(basis16, passive_gamma_eq16(0.4, -1.1));
  }
}

TEST_CASE("passive realization of the star-like cluster") {
  const double a = 0.3;
  auto f = fixture("cluster-4-eq14", a);
  CMat p = CMat::Zero(4, 1);
  p(3, 0) = 1.0;

  SUBCASE("nonzero parameters give a stable local realization") {
    auto r = realize_passive(f.graph, p, passive_gamma_eq14(1.0, 1.0));
    auto model = state_space(r);
    CHECK(is_hurwitz(model.A).hurwitz);
    CHECK((steady_state_covariance(r) - state_from_graph(f.graph).V).norm() <
          1e-8);
    // L = -(sqrt2 + e^{-2a} i) q4 + p4
    CHECK(std::abs(r.C(0, 3) - Complex(-std::sqrt(2.0), -std::exp(-2 * a))) <
          1e-12);
    CHECK(std::abs(r.C(0, 7) - Complex(1, 0)) < 1e-12);
    for (int col : {0, 1, 2, 4, 5, 6}) CHECK(std::abs(r.C(0, col)) < 1e-12);
  }
  SUBCASE("coefficient-vector interface agrees with the explicit shape") {
    auto coeffs = project_onto(solve_passive_gamma(f.graph.X),
                               passive_gamma_eq14(1.0, 1.0));
    auto r1 = realize_local_passive(f.graph, p, coeffs);
    auto r2 = realize_passive(f.graph, p, passive_gamma_eq14(1.0, 1.0));
    CHECK((r1.M - r2.M).norm() < 1e-10);
    CHECK((r1.C - r2.C).norm() < 1e-10);
  }
  SUBCASE("vanishing parameter product fails the rank condition") {
    CHECK_THROWS_AS(realize_passive(f.graph, p, passive_gamma_eq14(1.0, 0.0)),
                    RankError);
    CHECK_THROWS_AS(realize_passive(f.graph, p, passive_gamma_eq14(0.0, 1.0)),
                    RankError);
    CHECK_THROWS_AS(realize_passive(f.graph, p, passive_gamma_eq14(0.0, 0.0)),
                    RankError);
  }
}

TEST_CASE("passive realization of the path cluster spills over two modes") {
  const double a = 0.3;
  auto f = fixture("cluster-4-eq16", a);
  CMat p = CMat::Zero(4, 1);
  p(3, 0) = 1.0;
  auto r = realize_passive(f.graph, p, passive_gamma_eq16(1.0, 0.0));
  auto model = state_space(r);
  CHECK(is_hurwitz(model.A).hurwitz);
  CHECK((steady_state_covariance(r) - state_from_graph(f.graph).V).norm() < 1e-8);
  // L = -q3 - i e^{-2a} q4 + p4
  CHECK(std::abs(r.C(0, 2) - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(r.C(0, 3) - Complex(0, -std::exp(-2 * a))) < 1e-12);
  CHECK(std::abs(r.C(0, 7) - Complex(1, 0)) < 1e-12);
  auto supports = coupling_supports(r);
  REQUIRE(supports.size() == 1);
  CHECK(supports[0] == std::vector<int>{3, 4});
}

TEST_CASE("auxiliary-mode enlargement") {
  const double a = 0.3;
  auto f = fixture("cluster-4-eq16", a);
  SUBCASE("matches the five-mode fixture") {
    auto enlarged = enlarge_with_auxiliary(f.graph, 1.7, std::exp(-2 * a));
    auto ref = fixture("cluster-5-eq17", a, 1.7);
    CHECK((enlarged.X - ref.graph.X).norm() == 0.0);
    CHECK((enlarged.Y - ref.graph.Y).norm() < 1e-15);
  }
  SUBCASE("default keeps unit auxiliary variance") {
    auto enlarged = enlarge_with_auxiliary(f.graph, 0.5);
    CHECK(enlarged.Y(4, 4) == 1.0);
    auto feas = local_feasibility(enlarged);
    CHECK(std::find(feas.eligible_modes.begin(), feas.eligible_modes.end(), 5) !=
          feas.eligible_modes.end());
  }
  SUBCASE("nonpositive auxiliary variance rejected") {
    CHECK_THROWS_AS(enlarge_with_auxiliary(f.graph, 0.5, -1.0), Error);
  }
}

TEST_CASE("symplectic transform of a stable passive system") {
  SUBCASE("zero Hamiltonian reproduces the dissipative realization") {
    std::mt19937 rng(139);
    auto g = testutil::random_graph(rng, 3);
    auto direct = realize_general(
        g, {Mat::Zero(3, 3), Mat::Zero(3, 3), CMat::Identity(3, 3)});
    auto transformed =
        passive_transform_realize(g, Mat::Zero(6, 6), CMat::Identity(3, 3));
    CHECK((direct.M - transformed.M).norm() < 1e-10);
    // the transform absorbs the symplectic factor into the channel:
    // C = Y^{-1/2} [-Z, I], a column-scaled copy of the direct realization
    CMat scaled = sqrt_spd(g.Y).inverse().cast<Complex>() * direct.C;
    CHECK((transformed.C - scaled).norm() < 1e-10);
    CHECK((steady_state_covariance(transformed) -
           steady_state_covariance(direct))
              .norm() < 1e-9);
  }
  SUBCASE("vacuum graph is the identity transform") {
    Mat mt = Mat::Zero(4, 4);
    mt(0, 0) = mt(1, 1) = mt(2, 2) = mt(3, 3) = 0.5;
    auto r = passive_transform_realize(vacuum(2), mt, CMat::Identity(2, 2));
    CHECK((r.M - mt).norm() < 1e-12);
  }
  SUBCASE("random stable passive systems hit the target") {
    std::mt19937 rng(149);
    for (int trial = 0; trial < 5; ++trial) {
      auto g = testutil::random_graph(rng, 3);
      Mat rt = testutil::random_symmetric(rng, 3, 0.5);
      Mat sk = testutil::random_symmetric(rng, 3, 0.5);
      Mat gt = 0.5 * (sk - sk.transpose());
      Mat mt(6, 6);
      mt << rt, gt, gt.transpose(), rt;
      auto r = passive_transform_realize(g, mt, CMat::Identity(3, 3));
      auto model = state_space(r);
      CHECK(is_hurwitz(model.A).hurwitz);
      CHECK((kron_lyapunov(model.A, model.D) - state_from_graph(g).V).norm() <
            1e-8);
    }
  }
  SUBCASE("unstable passive system rejected") {
    try {
      passive_transform_realize(vacuum(2), Mat::Zero(4, 4), CMat::Zero(2, 2));
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_stable);
    }
  }
}

TEST_CASE("no single-mode nullifier coupling exists for the path cluster") {
  auto f = fixture("cluster-4-eq16", 0.3);
  const CMat z = f.graph.Z();
  const int n = 4;
  for (int l = 0; l < n; ++l) {
    // nullifier row with P supported on mode l alone: C = e_l^T [-Z, I]
    CMat c = CMat::Zero(1, 2 * n);
    c.block(0, 0, 1, n) = -z.row(l);
    c(0, n + l) = 1.0;
    double spill = 0.0;
    for (int col = 0; col < 2 * n; ++col) {
      if (col == l || col == n + l) continue;
      spill = std::max(spill, std::abs(c(0, col)));
    }
    CHECK(spill > 0.1);
  }
}
