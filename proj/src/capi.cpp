// extern-C surface of the gqs shared library. Thin translation layer: raw
// row-major buffers in, opaque handles out, exceptions mapped to status codes
// with the message parked in a thread-local slot.

#include "gqs.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "gqs/core.hpp"
#include "gqs/errors.hpp"
#include "gqs/linalg.hpp"
#include "gqs/optics.hpp"
#include "gqs/states.hpp"
#include "gqs/synthesis.hpp"
#include "gqs/verify.hpp"

struct gqs_graph {
  gqs::GaussianGraph g;
};
struct gqs_realization {
  gqs::Realization r;
};
struct gqs_chain {
  gqs::CascadeChain chain;
};
struct gqs_trajectory {
  gqs::MomentTrajectory traj;
  int modes;
};
struct gqs_netlist {
  gqs::OpticsNetlist nl;
};

namespace {

thread_local std::string g_last_error;

using RowMat =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowCMat =
    Eigen::Matrix<gqs::Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

gqs::Mat map_real(const double* data, int rows, int cols) {
  return Eigen::Map<const RowMat>(data, rows, cols);
}

gqs::CMat map_complex(const double* data, int rows, int cols) {
  return Eigen::Map<const RowCMat>(
      reinterpret_cast<const gqs::Complex*>(data), rows, cols);
}

void store_real(const gqs::Mat& m, double* out) {
  Eigen::Map<RowMat>(out, m.rows(), m.cols()) = m;
}

void store_complex(const gqs::CMat& m, double* out) {
  Eigen::Map<RowCMat>(reinterpret_cast<gqs::Complex*>(out), m.rows(), m.cols()) = m;
}

gqs_status map_error(const gqs::Error& e) {
  switch (e.code()) {
    case gqs::ErrorCode::infeasible:
      return GQS_ERROR_INFEASIBLE;
    case gqs::ErrorCode::rank_deficient:
      return GQS_ERROR_RANK;
    case gqs::ErrorCode::not_stable:
      return GQS_ERROR_UNSTABLE;
    default:
      return GQS_ERROR_INVALID_INPUT;
  }
}

template <typename Fn>
gqs_status guarded(Fn&& fn) {
  try {
    fn();
    return GQS_OK;
  } catch (const gqs::Error& e) {
    g_last_error = e.what();
    return map_error(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GQS_ERROR_INTERNAL;
  }
}

}  // namespace

extern "C" {

const char* gqs_version(void) { return "0.1.0"; }

const char* gqs_last_error(void) { return g_last_error.c_str(); }

gqs_status gqs_graph_create(int modes, const double* X, const double* Y,
                            gqs_graph** out) {
  return guarded([&] {
    *out = new gqs_graph{gqs::make_graph(map_real(X, modes, modes),
                                         map_real(Y, modes, modes))};
  });
}

void gqs_graph_destroy(gqs_graph* g) { delete g; }

int gqs_graph_modes(const gqs_graph* g) { return g->g.modes; }

void gqs_graph_get(const gqs_graph* g, double* X, double* Y) {
  if (X) store_real(g->g.X, X);
  if (Y) store_real(g->g.Y, Y);
}

void gqs_graph_covariance(const gqs_graph* g, double* V) {
  store_real(gqs::state_from_graph(g->g).V, V);
}

gqs_status gqs_graph_from_covariance(int modes, const double* V, gqs_graph** out) {
  return guarded([&] {
    *out = new gqs_graph{
        gqs::graph_from_covariance(map_real(V, 2 * modes, 2 * modes))};
  });
}

gqs_status gqs_graph_vacuum(int modes, gqs_graph** out) {
  return guarded([&] { *out = new gqs_graph{gqs::vacuum(modes)}; });
}

gqs_status gqs_graph_tms(double alpha, gqs_graph** out) {
  return guarded([&] { *out = new gqs_graph{gqs::two_mode_squeezed(alpha)}; });
}

gqs_status gqs_graph_cluster(int modes, const double* B, double alpha,
                             gqs_graph** out) {
  return guarded([&] {
    *out = new gqs_graph{
        gqs::canonical_cluster(map_real(B, modes, modes), alpha)};
  });
}

gqs_status gqs_graph_fixture(const char* name, double alpha, double lambda,
                             gqs_graph** out) {
  return guarded([&] {
    *out = new gqs_graph{gqs::fixture(name, alpha, lambda).graph};
  });
}

gqs_status gqs_graph_enlarge(const gqs_graph* g, double lambda, double y_aux,
                             gqs_graph** out) {
  return guarded([&] {
    *out = new gqs_graph{gqs::enlarge_with_auxiliary(g->g, lambda, y_aux)};
  });
}

void gqs_purity_check(int modes, const double* V, double* det_defect,
                      double* min_uncertainty_eig) {
  const gqs::PurityReport report =
      gqs::purity_check(map_real(V, 2 * modes, 2 * modes));
  if (det_defect) *det_defect = report.det_defect;
  if (min_uncertainty_eig) *min_uncertainty_eig = report.min_uncertainty_eig;
}

gqs_status gqs_local_feasibility(const gqs_graph* g, double tol, int* eligible,
                                 double* max_offdiag) {
  return guarded([&] {
    const gqs::LocalFeasibility feas =
        gqs::local_feasibility(g->g, tol > 0 ? tol : 1e-9);
    if (eligible) {
      for (int j = 0; j < g->g.modes; ++j) eligible[j] = 0;
      for (int mode : feas.eligible_modes) eligible[mode - 1] = 1;
    }
    if (max_offdiag) {
      for (int j = 0; j < g->g.modes; ++j) max_offdiag[j] = feas.max_offdiag[j];
    }
  });
}

gqs_status gqs_realization_create(int modes, int channels, const double* M,
                                  const double* C, gqs_realization** out) {
  return guarded([&] {
    gqs::Realization r;
    r.modes = modes;
    r.channels = channels;
    r.M = map_real(M, 2 * modes, 2 * modes);
    r.C = map_complex(C, channels, 2 * modes);
    if ((r.M - r.M.transpose()).norm() > 1e-9 * std::max(1.0, r.M.norm())) {
      throw gqs::Error(gqs::ErrorCode::invalid_input, "M must be symmetric");
    }
    r.M = 0.5 * (r.M + r.M.transpose());
    *out = new gqs_realization{std::move(r)};
  });
}

void gqs_realization_destroy(gqs_realization* r) { delete r; }

int gqs_realization_modes(const gqs_realization* r) { return r->r.modes; }

int gqs_realization_channels(const gqs_realization* r) { return r->r.channels; }

void gqs_realization_get(const gqs_realization* r, double* M, double* C) {
  if (M) store_real(r->r.M, M);
  if (C) store_complex(r->r.C, C);
}

gqs_status gqs_synth_general(const gqs_graph* g, const double* R,
                             const double* Gamma, int channels, const double* P,
                             gqs_realization** out) {
  return guarded([&] {
    const int n = g->g.modes;
    gqs::SynthesisParams params;
    params.R = map_real(R, n, n);
    params.Gamma = map_real(Gamma, n, n);
    params.P = map_complex(P, n, channels);
    *out = new gqs_realization{gqs::realize_general(g->g, params)};
  });
}

gqs_status gqs_synth_cascade(const gqs_graph* g, gqs_chain** chain_out,
                             gqs_realization** out) {
  return guarded([&] {
    auto [chain, composed] = gqs::realize_cascade(g->g);
    if (chain_out) *chain_out = new gqs_chain{std::move(chain)};
    *out = new gqs_realization{std::move(composed)};
  });
}

gqs_status gqs_synth_local(const gqs_graph* g, int mode, const double* alphas,
                           gqs_realization** out) {
  return guarded([&] {
    std::vector<double> a;
    if (alphas) a.assign(alphas, alphas + g->g.modes);
    *out = new gqs_realization{gqs::realize_local(g->g, mode, a)};
  });
}

gqs_status gqs_passive_gamma_basis(int modes, const double* X, double* basis,
                                   int* dim) {
  return guarded([&] {
    const std::vector<gqs::Mat> b =
        gqs::solve_passive_gamma(map_real(X, modes, modes));
    const int capacity = *dim;
    *dim = static_cast<int>(b.size());
    if (basis) {
      for (int i = 0; i < *dim && i < capacity; ++i) {
        store_real(b[i], basis + static_cast<size_t>(i) * modes * modes);
      }
    }
  });
}

gqs_status gqs_synth_local_passive(const gqs_graph* g, int channels,
                                   const double* P, const double* coeffs,
                                   int ncoeffs, gqs_realization** out) {
  return guarded([&] {
    *out = new gqs_realization{gqs::realize_local_passive(
        g->g, map_complex(P, g->g.modes, channels),
        std::vector<double>(coeffs, coeffs + ncoeffs))};
  });
}

gqs_status gqs_synth_passive_transform(const gqs_graph* g, const double* Mtilde,
                                       int channels, const double* Ptilde,
                                       gqs_realization** out) {
  return guarded([&] {
    const int n = g->g.modes;
    *out = new gqs_realization{gqs::passive_transform_realize(
        g->g, map_real(Mtilde, 2 * n, 2 * n), map_complex(Ptilde, n, channels))};
  });
}

void gqs_chain_destroy(gqs_chain* c) { delete c; }

int gqs_chain_size(const gqs_chain* c) { return static_cast<int>(c->chain.size()); }

int gqs_chain_channels(const gqs_chain* c) {
  return c->chain.empty() ? 0 : static_cast<int>(c->chain.front().C.rows());
}

void gqs_chain_get(const gqs_chain* c, int index, double* M, double* C) {
  const gqs::OscSubsystem& sub = c->chain.at(index);
  if (M) store_real(sub.M, M);
  if (C) store_complex(sub.C, C);
}

gqs_status gqs_compose_chain(const gqs_chain* c, gqs_realization** out) {
  return guarded([&] { *out = new gqs_realization{gqs::compose_chain(c->chain)}; });
}

gqs_status gqs_compose_series(const gqs_realization* g1,
                              const gqs_realization* g2, gqs_realization** out) {
  return guarded([&] {
    *out = new gqs_realization{gqs::compose_series(g1->r, g2->r)};
  });
}

gqs_status gqs_verify(const gqs_realization* r, const gqs_graph* target,
                      double tol, gqs_report* out) {
  return guarded([&] {
    const gqs::VerificationReport report = gqs::verify_assignment(
        r->r, gqs::state_from_graph(target->g), tol > 0 ? tol : 1e-7);
    out->hurwitz = report.hurwitz ? 1 : 0;
    out->spectral_abscissa = report.spectral_abscissa;
    out->lyapunov_residual = report.lyapunov_residual;
    out->assignment_error = report.assignment_error;
    out->purity_defect = report.purity_defect;
    out->tol = report.tol;
    out->pass = report.pass ? 1 : 0;
  });
}

gqs_status gqs_steady_state(const gqs_realization* r, double* V) {
  return guarded([&] { store_real(gqs::steady_state_covariance(r->r), V); });
}

gqs_status gqs_state_space(const gqs_realization* r, double* A, double* D) {
  return guarded([&] {
    const gqs::StateSpaceModel model = gqs::state_space(r->r);
    if (A) store_real(model.A, A);
    if (D) store_real(model.D, D);
  });
}

gqs_status gqs_coupling_support(const gqs_realization* r, int row, int* modes) {
  return guarded([&] {
    if (row < 0 || row >= r->r.channels) {
      throw gqs::Error(gqs::ErrorCode::invalid_input, "coupling row out of range");
    }
    const auto supports = gqs::coupling_supports(r->r);
    for (int j = 0; j < r->r.modes; ++j) modes[j] = 0;
    for (int mode : supports[row]) modes[mode - 1] = 1;
  });
}

gqs_status gqs_nullifier_check(const gqs_realization* r, const gqs_graph* g,
                               double tol, int* is_nullifier, double* P) {
  return guarded([&] {
    const gqs::NullifierReport report =
        gqs::nullifier_check(r->r, g->g, tol > 0 ? tol : 1e-9);
    *is_nullifier = report.is_nullifier_form ? 1 : 0;
    if (P && report.is_nullifier_form) store_complex(report.P, P);
  });
}

gqs_status gqs_simulate(const gqs_realization* r, const double* V0,
                        const double* x0, const double* times, int ntimes,
                        gqs_trajectory** out) {
  return guarded([&] {
    const int dim = 2 * r->r.modes;
    gqs::Vec mean = gqs::Vec::Zero(dim);
    if (x0) mean = Eigen::Map<const gqs::Vec>(x0, dim);
    *out = new gqs_trajectory{
        gqs::simulate_moments(r->r, map_real(V0, dim, dim), mean,
                              std::vector<double>(times, times + ntimes)),
        r->r.modes};
  });
}

void gqs_trajectory_destroy(gqs_trajectory* t) { delete t; }

int gqs_trajectory_size(const gqs_trajectory* t) {
  return static_cast<int>(t->traj.times.size());
}

void gqs_trajectory_get(const gqs_trajectory* t, int index, double* time,
                        double* mean, double* V) {
  if (time) *time = t->traj.times.at(index);
  if (mean) {
    Eigen::Map<gqs::Vec>(mean, 2 * t->modes) = t->traj.means.at(index);
  }
  if (V) store_real(t->traj.covariances.at(index), V);
}

gqs_status gqs_netlist_build(const gqs_realization* r, double gamma,
                             gqs_netlist** out) {
  return guarded([&] { *out = new gqs_netlist{gqs::netlist(r->r, gamma)}; });
}

void gqs_netlist_destroy(gqs_netlist* nl) { delete nl; }

int gqs_netlist_count(const gqs_netlist* nl, gqs_component kind) {
  switch (kind) {
    case GQS_COMP_CRYSTAL:
      return static_cast<int>(nl->nl.crystals.size());
    case GQS_COMP_BEAMSPLITTER:
      return static_cast<int>(nl->nl.beamsplitters.size());
    case GQS_COMP_TWO_MODE_PUMP:
      return static_cast<int>(nl->nl.two_mode_pumps.size());
    case GQS_COMP_COUPLING:
      return static_cast<int>(nl->nl.couplings.size());
  }
  return 0;
}

double gqs_netlist_gamma(const gqs_netlist* nl) { return nl->nl.gamma_default; }

gqs_status gqs_netlist_crystal(const gqs_netlist* nl, int index, int* mode,
                               double* detuning, double* pump) {
  return guarded([&] {
    const gqs::Crystal& c = nl->nl.crystals.at(index);
    if (mode) *mode = c.mode;
    if (detuning) *detuning = c.detuning;
    if (pump) {
      pump[0] = c.pump.real();
      pump[1] = c.pump.imag();
    }
  });
}

gqs_status gqs_netlist_beamsplitter(const gqs_netlist* nl, int index,
                                    int* mode_j, int* mode_k, double* theta,
                                    double* phi) {
  return guarded([&] {
    const gqs::BeamSplitter& bs = nl->nl.beamsplitters.at(index);
    if (mode_j) *mode_j = bs.mode_j;
    if (mode_k) *mode_k = bs.mode_k;
    if (theta) *theta = bs.theta;
    if (phi) *phi = bs.phi;
  });
}

gqs_status gqs_netlist_pump(const gqs_netlist* nl, int index, int* mode_j,
                            int* mode_k, double* pump) {
  return guarded([&] {
    const gqs::TwoModePump& tp = nl->nl.two_mode_pumps.at(index);
    if (mode_j) *mode_j = tp.mode_j;
    if (mode_k) *mode_k = tp.mode_k;
    if (pump) {
      pump[0] = tp.pump.real();
      pump[1] = tp.pump.imag();
    }
  });
}

gqs_status gqs_netlist_coupling(const gqs_netlist* nl, int index, int* nmodes,
                                int* modes, double* gamma, double* eps1,
                                double* eps2, int* local, double* row) {
  return guarded([&] {
    const gqs::Coupling& c = nl->nl.couplings.at(index);
    if (nmodes) *nmodes = static_cast<int>(c.modes.size());
    if (modes) {
      for (size_t i = 0; i < c.modes.size(); ++i) modes[i] = c.modes[i];
    }
    if (gamma) *gamma = c.gamma;
    if (eps1) {
      eps1[0] = c.eps1.real();
      eps1[1] = c.eps1.imag();
    }
    if (eps2) {
      eps2[0] = c.eps2.real();
      eps2[1] = c.eps2.imag();
    }
    if (local) *local = c.local ? 1 : 0;
    if (row) {
      for (Eigen::Index i = 0; i < c.row.size(); ++i) {
        row[2 * i] = c.row(i).real();
        row[2 * i + 1] = c.row(i).imag();
      }
    }
  });
}

}  // extern "C"
