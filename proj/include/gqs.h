/* gqs — pure Gaussian state covariance-assignment synthesis toolkit.
 *
 * C interface to the shared library. All matrices are row-major double
 * buffers; complex matrices interleave (re, im) per entry, so a K x 2N
 * complex matrix occupies K * 2N * 2 doubles. Quadrature ordering is grouped:
 * (q_1..q_N, p_1..p_N). Mode indices are 1-based.
 *
 * Functions return GQS_OK on success; on failure they return an error code
 * and leave a human-readable message in gqs_last_error() (thread-local).
 */
#ifndef GQS_H
#define GQS_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gqs_status {
  GQS_OK = 0,
  GQS_ERROR_INVALID_INPUT = 2,
  GQS_ERROR_INFEASIBLE = 3,
  GQS_ERROR_RANK = 4,
  GQS_ERROR_UNSTABLE = 5,
  GQS_ERROR_INTERNAL = 6
} gqs_status;

typedef struct gqs_graph gqs_graph;
typedef struct gqs_realization gqs_realization;
typedef struct gqs_chain gqs_chain;
typedef struct gqs_trajectory gqs_trajectory;
typedef struct gqs_netlist gqs_netlist;

const char* gqs_version(void);
const char* gqs_last_error(void);

/* ---- target states ---- */

gqs_status gqs_graph_create(int modes, const double* X, const double* Y,
                            gqs_graph** out);
void gqs_graph_destroy(gqs_graph* g);
int gqs_graph_modes(const gqs_graph* g);
void gqs_graph_get(const gqs_graph* g, double* X, double* Y);
/* V is 2N x 2N */
void gqs_graph_covariance(const gqs_graph* g, double* V);
gqs_status gqs_graph_from_covariance(int modes, const double* V, gqs_graph** out);

gqs_status gqs_graph_vacuum(int modes, gqs_graph** out);
gqs_status gqs_graph_tms(double alpha, gqs_graph** out);
gqs_status gqs_graph_cluster(int modes, const double* B, double alpha,
                             gqs_graph** out);
gqs_status gqs_graph_fixture(const char* name, double alpha, double lambda,
                             gqs_graph** out);
gqs_status gqs_graph_enlarge(const gqs_graph* g, double lambda, double y_aux,
                             gqs_graph** out);

void gqs_purity_check(int modes, const double* V, double* det_defect,
                      double* min_uncertainty_eig);

/* eligible: N flags (1 = eligible); max_offdiag: per-mode max |Z_lj|, j != l.
 * Either output may be NULL. */
gqs_status gqs_local_feasibility(const gqs_graph* g, double tol, int* eligible,
                                 double* max_offdiag);

/* ---- realizations ---- */

gqs_status gqs_realization_create(int modes, int channels, const double* M,
                                  const double* C, gqs_realization** out);
void gqs_realization_destroy(gqs_realization* r);
int gqs_realization_modes(const gqs_realization* r);
int gqs_realization_channels(const gqs_realization* r);
void gqs_realization_get(const gqs_realization* r, double* M, double* C);

/* R, Gamma: N x N real; P: N x channels complex. */
gqs_status gqs_synth_general(const gqs_graph* g, const double* R,
                             const double* Gamma, int channels, const double* P,
                             gqs_realization** out);
/* chain_out may be NULL. */
gqs_status gqs_synth_cascade(const gqs_graph* g, gqs_chain** chain_out,
                             gqs_realization** out);
/* alphas may be NULL for the default 1..N. */
gqs_status gqs_synth_local(const gqs_graph* g, int mode, const double* alphas,
                           gqs_realization** out);
/* On entry *dim holds the capacity of basis (in N x N matrices); on return it
 * holds the basis size. basis may be NULL to query the size only. */
gqs_status gqs_passive_gamma_basis(int modes, const double* X, double* basis,
                                   int* dim);
gqs_status gqs_synth_local_passive(const gqs_graph* g, int channels,
                                   const double* P, const double* coeffs,
                                   int ncoeffs, gqs_realization** out);
/* Mtilde: 2N x 2N passive-form real; Ptilde: N x channels complex. */
gqs_status gqs_synth_passive_transform(const gqs_graph* g, const double* Mtilde,
                                       int channels, const double* Ptilde,
                                       gqs_realization** out);

void gqs_chain_destroy(gqs_chain* c);
int gqs_chain_size(const gqs_chain* c);
int gqs_chain_channels(const gqs_chain* c);
/* M: 2x2 real; C: channels x 2 complex. */
void gqs_chain_get(const gqs_chain* c, int index, double* M, double* C);
gqs_status gqs_compose_chain(const gqs_chain* c, gqs_realization** out);
gqs_status gqs_compose_series(const gqs_realization* g1,
                              const gqs_realization* g2, gqs_realization** out);

/* ---- verification & simulation ---- */

typedef struct gqs_report {
  int hurwitz;
  double spectral_abscissa;
  double lyapunov_residual;
  double assignment_error;
  double purity_defect;
  double tol;
  int pass;
} gqs_report;

gqs_status gqs_verify(const gqs_realization* r, const gqs_graph* target,
                      double tol, gqs_report* out);
gqs_status gqs_steady_state(const gqs_realization* r, double* V);
gqs_status gqs_state_space(const gqs_realization* r, double* A, double* D);
/* modes: N flags marking the support of the given coupling row. */
gqs_status gqs_coupling_support(const gqs_realization* r, int row, int* modes);
/* Attempts C = P^T [-Z, I]; is_nullifier set to 0/1, P (N x K complex) filled
 * on success when non-NULL. */
gqs_status gqs_nullifier_check(const gqs_realization* r, const gqs_graph* g,
                               double tol, int* is_nullifier, double* P);

gqs_status gqs_simulate(const gqs_realization* r, const double* V0,
                        const double* x0, const double* times, int ntimes,
                        gqs_trajectory** out);
void gqs_trajectory_destroy(gqs_trajectory* t);
int gqs_trajectory_size(const gqs_trajectory* t);
/* mean: 2N; V: 2N x 2N. Any output may be NULL. */
void gqs_trajectory_get(const gqs_trajectory* t, int index, double* time,
                        double* mean, double* V);

/* ---- optics netlists ---- */

typedef enum gqs_component {
  GQS_COMP_CRYSTAL = 0,
  GQS_COMP_BEAMSPLITTER = 1,
  GQS_COMP_TWO_MODE_PUMP = 2,
  GQS_COMP_COUPLING = 3
} gqs_component;

/* gamma <= 0 selects the adiabatic-regime default. */
gqs_status gqs_netlist_build(const gqs_realization* r, double gamma,
                             gqs_netlist** out);
void gqs_netlist_destroy(gqs_netlist* nl);
int gqs_netlist_count(const gqs_netlist* nl, gqs_component kind);
double gqs_netlist_gamma(const gqs_netlist* nl);
gqs_status gqs_netlist_crystal(const gqs_netlist* nl, int index, int* mode,
                               double* detuning, double* pump);
gqs_status gqs_netlist_beamsplitter(const gqs_netlist* nl, int index,
                                    int* mode_j, int* mode_k, double* theta,
                                    double* phi);
gqs_status gqs_netlist_pump(const gqs_netlist* nl, int index, int* mode_j,
                            int* mode_k, double* pump);
/* modes must hold N ints; nmodes receives the support size; row receives the
 * raw complex coupling row (2N entries). Outputs may be NULL. */
gqs_status gqs_netlist_coupling(const gqs_netlist* nl, int index, int* nmodes,
                                int* modes, double* gamma, double* eps1,
                                double* eps2, int* local, double* row);

#ifdef __cplusplus
}
#endif

#endif /* GQS_H */
