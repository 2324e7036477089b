// gqs command line front end. All numerics go through the C API in gqs.h;
// this file only does argument parsing, JSON serialization and exit codes.
//
// Exit codes: 0 pass, 1 verification failure, 2 input error,
// 3 infeasible target, 4 rank-condition failure.

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gqs.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitRank = 4;

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "gqs: " << message << "\n";
  std::exit(code);
}

int exit_code_for(gqs_status status) {
  switch (status) {
    case GQS_OK:
      return kExitPass;
    case GQS_ERROR_INFEASIBLE:
      return kExitInfeasible;
    case GQS_ERROR_RANK:
      return kExitRank;
    default:
      return kExitInput;
  }
}

void check(gqs_status status) {
  if (status != GQS_OK) die(exit_code_for(status), gqs_last_error());
}

// ---- matrix file <-> buffers -------------------------------------------

struct MatrixData {
  int rows = 0;
  int cols = 0;
  bool complex = false;
  std::vector<double> values;  // row-major; interleaved (re, im) when complex
};

json matrix_to_json(const MatrixData& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) {
      if (m.complex) {
        const double re = m.values[2 * (static_cast<size_t>(i) * m.cols + j)];
        const double im = m.values[2 * (static_cast<size_t>(i) * m.cols + j) + 1];
        row.push_back(json::array({re, im}));
      } else {
        row.push_back(m.values[static_cast<size_t>(i) * m.cols + j]);
      }
    }
    rows.push_back(std::move(row));
  }
  return json{{"shape", {m.rows, m.cols}}, {"data", std::move(rows)}};
}

MatrixData matrix_from_json(const json& j, bool want_complex) {
  if (!j.contains("shape") || !j.contains("data")) {
    die(kExitInput, "matrix object must have 'shape' and 'data'");
  }
  MatrixData m;
  m.rows = j["shape"][0].get<int>();
  m.cols = j["shape"][1].get<int>();
  m.complex = want_complex;
  if (static_cast<int>(j["data"].size()) != m.rows) {
    die(kExitInput, "matrix data does not match shape");
  }
  for (const auto& row : j["data"]) {
    if (static_cast<int>(row.size()) != m.cols) {
      die(kExitInput, "matrix data does not match shape");
    }
    for (const auto& entry : row) {
      double re = 0.0, im = 0.0;
      if (entry.is_array()) {
        re = entry[0].get<double>();
        im = entry.size() > 1 ? entry[1].get<double>() : 0.0;
      } else {
        re = entry.get<double>();
      }
      if (!std::isfinite(re) || !std::isfinite(im)) {
        die(kExitInput, "matrix entries must be finite");
      }
      if (want_complex) {
        m.values.push_back(re);
        m.values.push_back(im);
      } else {
        if (im != 0.0) die(kExitInput, "expected a real matrix");
        m.values.push_back(re);
      }
    }
  }
  return m;
}

MatrixData real_matrix(int rows, int cols, const double* data) {
  MatrixData m;
  m.rows = rows;
  m.cols = cols;
  m.values.assign(data, data + static_cast<size_t>(rows) * cols);
  return m;
}

MatrixData complex_matrix(int rows, int cols, const double* data) {
  MatrixData m;
  m.rows = rows;
  m.cols = cols;
  m.complex = true;
  m.values.assign(data, data + 2 * static_cast<size_t>(rows) * cols);
  return m;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitInput, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    die(kExitInput, path + ": " + e.what());
  }
  return j;
}

void write_json(const std::string& path, const json& j) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path);
  if (!out) die(kExitInput, "cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  uint64_t hash = 1469598103934665603ull;  // FNV-1a
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << hash;
  return os.str();
}

// ---- graph loading ------------------------------------------------------

struct GraphHandle {
  gqs_graph* g = nullptr;
  ~GraphHandle() { gqs_graph_destroy(g); }
};

struct RealizationHandle {
  gqs_realization* r = nullptr;
  ~RealizationHandle() { gqs_realization_destroy(r); }
};

gqs_graph* load_graph_file(const std::string& path) {
  const json j = load_json(path);
  gqs_graph* g = nullptr;
  if (j.contains("X") && j.contains("Y")) {
    const MatrixData x = matrix_from_json(j["X"], false);
    const MatrixData y = matrix_from_json(j["Y"], false);
    if (x.rows != x.cols || y.rows != x.rows || y.cols != x.cols) {
      die(kExitInput, path + ": X and Y must be square and of equal size");
    }
    check(gqs_graph_create(x.rows, x.values.data(), y.values.data(), &g));
  } else if (j.contains("V")) {
    const MatrixData v = matrix_from_json(j["V"], false);
    if (v.rows != v.cols || v.rows % 2 != 0) {
      die(kExitInput, path + ": V must be 2N x 2N");
    }
    check(gqs_graph_from_covariance(v.rows / 2, v.values.data(), &g));
  } else {
    die(kExitInput, path + ": expected a graph (X, Y) or covariance (V) file");
  }
  return g;
}

// --graph accepts either a file path or a built-in fixture name.
gqs_graph* resolve_graph(const std::string& spec, double alpha, double lambda) {
  if (std::filesystem::exists(spec)) return load_graph_file(spec);
  gqs_graph* g = nullptr;
  const gqs_status status = gqs_graph_fixture(spec.c_str(), alpha, lambda, &g);
  if (status != GQS_OK) {
    die(kExitInput, "--graph '" + spec + "' is neither a file nor a fixture: " +
                        gqs_last_error());
  }
  return g;
}

gqs_realization* load_realization(const std::string& m_path,
                                  const std::string& c_path) {
  const MatrixData m = matrix_from_json(load_json(m_path), false);
  const MatrixData c = matrix_from_json(load_json(c_path), true);
  if (m.rows != m.cols || m.rows % 2 != 0 || c.cols != m.rows) {
    die(kExitInput, "M must be 2N x 2N and C must be K x 2N");
  }
  gqs_realization* r = nullptr;
  check(gqs_realization_create(m.rows / 2, c.rows, m.values.data(),
                               c.values.data(), &r));
  return r;
}

// ---- report / output helpers -------------------------------------------

json report_to_json(const gqs_report& report, const gqs_realization* r) {
  json local_modes = json::array();
  const int n = gqs_realization_modes(r);
  for (int row = 0; row < gqs_realization_channels(r); ++row) {
    std::vector<int> flags(n, 0);
    check(gqs_coupling_support(r, row, flags.data()));
    json modes = json::array();
    for (int j = 0; j < n; ++j) {
      if (flags[j]) modes.push_back(j + 1);
    }
    local_modes.push_back(std::move(modes));
  }
  json j{{"hurwitz", report.hurwitz != 0},
         {"spectral_abscissa", report.spectral_abscissa},
         {"purity_defect", report.purity_defect},
         {"local_modes", std::move(local_modes)},
         {"tol", report.tol},
         {"pass", report.pass != 0},
         {"library_version", gqs_version()}};
  if (report.hurwitz) {
    j["lyapunov_residual"] = report.lyapunov_residual;
    j["assignment_error"] = report.assignment_error;
  }
  return j;
}

void write_graph_outputs(const gqs_graph* g, const std::string& out_dir) {
  const int n = gqs_graph_modes(g);
  std::vector<double> x(static_cast<size_t>(n) * n), y(x.size());
  gqs_graph_get(g, x.data(), y.data());
  write_json(out_dir + "/graph.json",
             json{{"modes", n},
                  {"X", matrix_to_json(real_matrix(n, n, x.data()))},
                  {"Y", matrix_to_json(real_matrix(n, n, y.data()))}});
  std::vector<double> v(static_cast<size_t>(4) * n * n);
  gqs_graph_covariance(g, v.data());
  write_json(out_dir + "/covariance.json",
             json{{"modes", n},
                  {"V", matrix_to_json(real_matrix(2 * n, 2 * n, v.data()))}});
}

void write_realization_outputs(const gqs_realization* r,
                               const std::string& out_dir) {
  const int n = gqs_realization_modes(r);
  const int k = gqs_realization_channels(r);
  std::vector<double> m(static_cast<size_t>(4) * n * n);
  std::vector<double> c(static_cast<size_t>(4) * n * k);
  gqs_realization_get(r, m.data(), c.data());
  write_json(out_dir + "/M.json", matrix_to_json(real_matrix(2 * n, 2 * n, m.data())));
  write_json(out_dir + "/C.json", matrix_to_json(complex_matrix(k, 2 * n, c.data())));
}

std::vector<double> parse_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      die(kExitInput, "cannot parse number '" + item + "'");
    }
  }
  return values;
}

// ---- subcommands --------------------------------------------------------

int cmd_state(const std::string& kind, int modes, double alpha, double lambda,
              const std::string& adjacency, const std::string& name,
              const std::string& out_dir) {
  GraphHandle graph;
  if (kind == "vacuum") {
    check(gqs_graph_vacuum(modes, &graph.g));
  } else if (kind == "tms") {
    check(gqs_graph_tms(alpha, &graph.g));
  } else if (kind == "cluster") {
    if (adjacency.empty()) die(kExitInput, "cluster requires --adjacency");
    const MatrixData b = matrix_from_json(load_json(adjacency), false);
    if (b.rows != b.cols) die(kExitInput, "adjacency must be square");
    check(gqs_graph_cluster(b.rows, b.values.data(), alpha, &graph.g));
  } else if (kind == "fixture") {
    if (name.empty()) die(kExitInput, "fixture requires --name");
    check(gqs_graph_fixture(name.c_str(), alpha, lambda, &graph.g));
  } else {
    die(kExitInput, "unknown state kind '" + kind + "'");
  }
  write_graph_outputs(graph.g, out_dir);
  return kExitPass;
}

int cmd_synth(const std::string& method, const std::string& graph_spec,
              double alpha, double lambda, int mode, const std::string& alphas,
              const std::string& gamma_coeffs, const std::string& r_file,
              const std::string& gamma_file, const std::string& p_file,
              double tol, const std::string& out_dir) {
  GraphHandle graph;
  graph.g = resolve_graph(graph_spec, alpha, lambda);
  const int n = gqs_graph_modes(graph.g);

  RealizationHandle real;
  gqs_chain* chain = nullptr;
  if (method == "cascade") {
    check(gqs_synth_cascade(graph.g, &chain, &real.r));
  } else if (method == "general") {
    std::vector<double> r_buf(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> g_buf(static_cast<size_t>(n) * n, 0.0);
    std::vector<double> p_buf;
    int channels = n;
    if (!r_file.empty()) r_buf = matrix_from_json(load_json(r_file), false).values;
    if (!gamma_file.empty()) {
      g_buf = matrix_from_json(load_json(gamma_file), false).values;
    }
    if (!p_file.empty()) {
      const MatrixData p = matrix_from_json(load_json(p_file), true);
      if (p.rows != n) die(kExitInput, "P must have N rows");
      channels = p.cols;
      p_buf = p.values;
    } else {
      // default P = I_N (nullifier vector)
      p_buf.assign(static_cast<size_t>(2) * n * n, 0.0);
      for (int j = 0; j < n; ++j) p_buf[2 * (static_cast<size_t>(j) * n + j)] = 1.0;
    }
    check(gqs_synth_general(graph.g, r_buf.data(), g_buf.data(), channels,
                            p_buf.data(), &real.r));
  } else if (method == "local") {
    if (mode < 1) {
      // pick the first eligible mode, if any
      std::vector<int> eligible(n, 0);
      check(gqs_local_feasibility(graph.g, 0, eligible.data(), nullptr));
      for (int j = 0; j < n && mode < 1; ++j) {
        if (eligible[j]) mode = j + 1;
      }
      if (mode < 1) {
        die(kExitInfeasible,
            "no eligible mode: every graph row has off-diagonal entries");
      }
    }
    std::vector<double> a = parse_list(alphas);
    check(gqs_synth_local(graph.g, mode, a.empty() ? nullptr : a.data(), &real.r));
  } else if (method == "local-passive") {
    std::vector<double> coeffs = parse_list(gamma_coeffs);
    std::vector<double> p_buf;
    int channels = 1;
    if (!p_file.empty()) {
      const MatrixData p = matrix_from_json(load_json(p_file), true);
      if (p.rows != n) die(kExitInput, "P must have N rows");
      channels = p.cols;
      p_buf = p.values;
    } else {
      // default P = e_N
      p_buf.assign(static_cast<size_t>(2) * n, 0.0);
      p_buf[2 * (n - 1)] = 1.0;
    }
    check(gqs_synth_local_passive(graph.g, channels, p_buf.data(), coeffs.data(),
                                  static_cast<int>(coeffs.size()), &real.r));
  } else {
    die(kExitInput, "unknown synthesis method '" + method + "'");
  }

  write_realization_outputs(real.r, out_dir);
  if (chain) {
    const int size = gqs_chain_size(chain);
    const int k = gqs_chain_channels(chain);
    json subsystems = json::array();
    for (int j = 0; j < size; ++j) {
      std::vector<double> m(4), c(static_cast<size_t>(4) * k);
      gqs_chain_get(chain, j, m.data(), c.data());
      subsystems.push_back(json{{"M", matrix_to_json(real_matrix(2, 2, m.data()))},
                                {"C", matrix_to_json(complex_matrix(k, 2, c.data()))}});
    }
    write_json(out_dir + "/chain.json",
               json{{"channels", k}, {"subsystems", std::move(subsystems)}});
    gqs_chain_destroy(chain);
  }

  gqs_report report;
  check(gqs_verify(real.r, graph.g, tol, &report));
  json report_json = report_to_json(report, real.r);
  if (std::filesystem::exists(graph_spec)) {
    report_json["input_hashes"] = json{{"graph", file_hash(graph_spec)}};
  }
  write_json(out_dir + "/report.json", report_json);
  return report.pass ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& m_file, const std::string& c_file,
               const std::string& target_file, double tol) {
  RealizationHandle real;
  real.r = load_realization(m_file, c_file);
  GraphHandle target;
  target.g = load_graph_file(target_file);
  gqs_report report;
  check(gqs_verify(real.r, target.g, tol, &report));
  json j = report_to_json(report, real.r);
  j["input_hashes"] = json{{"M", file_hash(m_file)},
                           {"C", file_hash(c_file)},
                           {"target", file_hash(target_file)}};
  std::cout << j.dump(2) << "\n";
  return report.pass ? kExitPass : kExitFail;
}

int cmd_simulate(const std::string& m_file, const std::string& c_file,
                 const std::string& v0_file, double t_end, int steps,
                 const std::string& out_file) {
  RealizationHandle real;
  real.r = load_realization(m_file, c_file);
  const int n = gqs_realization_modes(real.r);
  const size_t dim2 = static_cast<size_t>(4) * n * n;

  std::vector<double> v0(dim2, 0.0);
  if (v0_file.empty()) {
    for (int i = 0; i < 2 * n; ++i) v0[static_cast<size_t>(i) * 2 * n + i] = 0.5;
  } else {
    const json j = load_json(v0_file);
    const MatrixData v = matrix_from_json(j.contains("V") ? j["V"] : j, false);
    if (v.rows != 2 * n || v.cols != 2 * n) {
      die(kExitInput, "V0 must be 2N x 2N");
    }
    v0 = v.values;
  }

  if (steps < 1 || t_end <= 0.0) die(kExitInput, "need --t-end > 0 and --steps >= 1");
  std::vector<double> times(steps + 1);
  for (int i = 0; i <= steps; ++i) times[i] = t_end * i / steps;

  gqs_trajectory* traj = nullptr;
  check(gqs_simulate(real.r, v0.data(), nullptr, times.data(),
                     static_cast<int>(times.size()), &traj));

  std::vector<double> v_inf(dim2);
  const bool have_steady = gqs_steady_state(real.r, v_inf.data()) == GQS_OK;

  json times_json = json::array();
  json covs = json::array();
  json dist = json::array();
  std::vector<double> v(dim2), mean(static_cast<size_t>(2) * n);
  for (int i = 0; i < gqs_trajectory_size(traj); ++i) {
    double t = 0.0;
    gqs_trajectory_get(traj, i, &t, mean.data(), v.data());
    times_json.push_back(t);
    covs.push_back(matrix_to_json(real_matrix(2 * n, 2 * n, v.data())));
    if (have_steady) {
      double d2 = 0.0;
      for (size_t idx = 0; idx < dim2; ++idx) {
        const double diff = v[idx] - v_inf[idx];
        d2 += diff * diff;
      }
      dist.push_back(std::sqrt(d2));
    } else {
      dist.push_back(nullptr);
    }
  }
  gqs_trajectory_destroy(traj);

  write_json(out_file, json{{"times", std::move(times_json)},
                            {"covariances", std::move(covs)},
                            {"distance_to_steady_state", std::move(dist)},
                            {"library_version", gqs_version()},
                            {"input_hashes",
                             json{{"M", file_hash(m_file)}, {"C", file_hash(c_file)}}}});
  return kExitPass;
}

int cmd_netlist(const std::string& m_file, const std::string& c_file,
                double gamma, const std::string& out_file) {
  RealizationHandle real;
  real.r = load_realization(m_file, c_file);
  const int n = gqs_realization_modes(real.r);

  gqs_netlist* nl = nullptr;
  check(gqs_netlist_build(real.r, gamma, &nl));

  json crystals = json::array();
  for (int i = 0; i < gqs_netlist_count(nl, GQS_COMP_CRYSTAL); ++i) {
    int mode = 0;
    double detuning = 0.0, pump[2] = {0, 0};
    check(gqs_netlist_crystal(nl, i, &mode, &detuning, pump));
    crystals.push_back(json{{"mode", mode},
                            {"detuning", detuning},
                            {"pump", {pump[0], pump[1]}}});
  }
  json beamsplitters = json::array();
  for (int i = 0; i < gqs_netlist_count(nl, GQS_COMP_BEAMSPLITTER); ++i) {
    int mj = 0, mk = 0;
    double theta = 0.0, phi = 0.0;
    check(gqs_netlist_beamsplitter(nl, i, &mj, &mk, &theta, &phi));
    beamsplitters.push_back(
        json{{"mode_j", mj}, {"mode_k", mk}, {"theta", theta}, {"phi", phi}});
  }
  json pumps = json::array();
  for (int i = 0; i < gqs_netlist_count(nl, GQS_COMP_TWO_MODE_PUMP); ++i) {
    int mj = 0, mk = 0;
    double pump[2] = {0, 0};
    check(gqs_netlist_pump(nl, i, &mj, &mk, pump));
    pumps.push_back(json{{"mode_j", mj}, {"mode_k", mk}, {"pump", {pump[0], pump[1]}}});
  }
  json couplings = json::array();
  for (int i = 0; i < gqs_netlist_count(nl, GQS_COMP_COUPLING); ++i) {
    int nmodes = 0, local = 0;
    std::vector<int> modes(n, 0);
    double g = 0.0, eps1[2] = {0, 0}, eps2[2] = {0, 0};
    std::vector<double> row(static_cast<size_t>(4) * n);
    check(gqs_netlist_coupling(nl, i, &nmodes, modes.data(), &g, eps1, eps2,
                               &local, row.data()));
    json mode_list = json::array();
    for (int j = 0; j < nmodes; ++j) mode_list.push_back(modes[j]);
    json entry{{"modes", std::move(mode_list)},
               {"gamma", g},
               {"local", local != 0},
               {"row", matrix_to_json(complex_matrix(1, 2 * n, row.data()))["data"][0]}};
    if (local) {
      entry["eps1"] = {eps1[0], eps1[1]};
      entry["eps2"] = {eps2[0], eps2[1]};
    }
    couplings.push_back(std::move(entry));
  }

  write_json(out_file, json{{"modes", n},
                            {"gamma", gqs_netlist_gamma(nl)},
                            {"crystals", std::move(crystals)},
                            {"beamsplitters", std::move(beamsplitters)},
                            {"two_mode_pumps", std::move(pumps)},
                            {"couplings", std::move(couplings)},
                            {"library_version", gqs_version()},
                            {"input_hashes",
                             json{{"M", file_hash(m_file)}, {"C", file_hash(c_file)}}}});
  gqs_netlist_destroy(nl);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pure Gaussian state covariance-assignment synthesis toolkit"};
  app.require_subcommand(1);

  double default_tol = 1e-7;
  if (const char* env = std::getenv("GQS_DEFAULT_TOL")) {
    default_tol = std::atof(env);
  }

  // state
  auto* state = app.add_subcommand("state", "build a target state");
  std::string state_kind, state_adjacency, state_name, state_out = ".";
  int state_modes = 1;
  double state_alpha = 0.0, state_lambda = std::sqrt(2.0);
  state->add_option("kind", state_kind, "vacuum | tms | cluster | fixture")->required();
  state->add_option("--modes", state_modes, "mode count (vacuum)");
  state->add_option("--alpha", state_alpha, "squeezing parameter");
  state->add_option("--adjacency", state_adjacency, "adjacency matrix file (cluster)");
  state->add_option("--name", state_name, "fixture name");
  state->add_option("--lambda", state_lambda, "auxiliary diagonal entry (cluster-5-eq17)");
  state->add_option("--out", state_out, "output directory");

  // synth
  auto* synth = app.add_subcommand("synth", "synthesize a realization");
  std::string synth_method, synth_graph, synth_alphas, synth_coeffs;
  std::string synth_r, synth_gamma_file, synth_p, synth_out = ".";
  int synth_mode = 0;
  double synth_alpha = 0.3, synth_lambda = std::sqrt(2.0), synth_tol = default_tol;
  synth->add_option("method", synth_method, "general | cascade | local | local-passive")
      ->required();
  synth->add_option("--graph", synth_graph, "graph/covariance file or fixture name")
      ->required();
  synth->add_option("--alpha", synth_alpha, "fixture squeezing parameter");
  synth->add_option("--lambda", synth_lambda, "fixture auxiliary entry");
  synth->add_option("--mode", synth_mode, "target mode for local synthesis (1-based)");
  synth->add_option("--alphas", synth_alphas, "comma list of distinct spectrum values");
  synth->add_option("--gamma-coeffs", synth_coeffs, "comma list of basis coefficients");
  synth->add_option("--R", synth_r, "R matrix file (general)");
  synth->add_option("--Gamma", synth_gamma_file, "Gamma matrix file (general)");
  synth->add_option("--P", synth_p, "P matrix file");
  synth->add_option("--tol", synth_tol, "verification tolerance");
  synth->add_option("--out", synth_out, "output directory");

  // verify
  auto* verify = app.add_subcommand("verify", "verify a realization against a target");
  std::string verify_m, verify_c, verify_target;
  double verify_tol = default_tol;
  verify->add_option("--M", verify_m, "Hamiltonian matrix file")->required();
  verify->add_option("--C", verify_c, "coupling matrix file")->required();
  verify->add_option("--target", verify_target, "target graph or covariance file")
      ->required();
  verify->add_option("--tol", verify_tol, "pass tolerance");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "integrate the moment equations");
  std::string sim_m, sim_c, sim_v0, sim_out = "trajectory.json";
  double sim_t_end = 10.0;
  int sim_steps = 100;
  simulate->add_option("--M", sim_m, "Hamiltonian matrix file")->required();
  simulate->add_option("--C", sim_c, "coupling matrix file")->required();
  simulate->add_option("--V0", sim_v0, "initial covariance file (default vacuum)");
  simulate->add_option("--t-end", sim_t_end, "final time");
  simulate->add_option("--steps", sim_steps, "number of output intervals");
  simulate->add_option("--out", sim_out, "trajectory output file");

  // netlist
  auto* netlist = app.add_subcommand("netlist", "export a quantum-optics netlist");
  std::string net_m, net_c, net_out = "netlist.json";
  double net_gamma = -1.0;
  netlist->add_option("--M", net_m, "Hamiltonian matrix file")->required();
  netlist->add_option("--C", net_c, "coupling matrix file")->required();
  netlist->add_option("--gamma", net_gamma, "coupling cavity decay rate");
  netlist->add_option("--out", net_out, "netlist output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  if (state->parsed()) {
    return cmd_state(state_kind, state_modes, state_alpha, state_lambda,
                     state_adjacency, state_name, state_out);
  }
  if (synth->parsed()) {
    return cmd_synth(synth_method, synth_graph, synth_alpha, synth_lambda,
                     synth_mode, synth_alphas, synth_coeffs, synth_r,
                     synth_gamma_file, synth_p, synth_tol, synth_out);
  }
  if (verify->parsed()) {
    return cmd_verify(verify_m, verify_c, verify_target, verify_tol);
  }
  if (simulate->parsed()) {
    return cmd_simulate(sim_m, sim_c, sim_v0, sim_t_end, sim_steps, sim_out);
  }
  if (netlist->parsed()) {
    return cmd_netlist(net_m, net_c, net_gamma, net_out);
  }
  return kExitInput;
}
