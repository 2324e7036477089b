#pragma once

#include <utility>
#include <vector>

#include "gqs/types.hpp"

namespace gqs {

struct Crystal {
  int mode;  // 1-based
  double detuning;
  Complex pump;
};

struct BeamSplitter {
  int mode_j;  // 1-based, mode_j < mode_k
  int mode_k;
  double theta;
  double phi;
};

struct TwoModePump {
  int mode_j;
  int mode_k;
  Complex pump;  // coefficient of a_j^dag a_k^dag
};

struct Coupling {
  std::vector<int> modes;  // 1-based support
  double gamma;
  Complex eps1;  // meaningful only when local
  Complex eps2;
  bool local;
  CVec row;  // the raw coupling row, length 2N
};

struct OpticsNetlist {
  int modes = 0;
  double gamma_default = 0.0;
  std::vector<Crystal> crystals;
  std::vector<BeamSplitter> beamsplitters;
  std::vector<TwoModePump> two_mode_pumps;
  std::vector<Coupling> couplings;
};

// Pumped-cavity parameters (detuning, pump) reproducing the 2x2 single-mode
// Hamiltonian block [[delta - Im e, Re e], [Re e, delta + Im e]].
std::pair<double, Complex> crystal_params(const Mat& Md);

// (theta, phi) with h = i theta e^{-i phi} for the a_j^dag a_k coefficient h.
std::pair<double, double> beamsplitter_params(Complex h);

// (eps1, eps2) realizing L = c_q q + c_p p through a heavily damped auxiliary
// cavity with decay gamma: L = (1/sqrt(gamma)) (-eps2^* a + eps1 a^dag).
std::pair<Complex, Complex> coupling_params(Complex c_q, Complex c_p, double gamma);

// Ladder-operator coefficients (h of a_j^dag a_k, pump of a_j^dag a_k^dag)
// for the cross Hamiltonian x_j^T B x_k, and the inverse map.
std::pair<Complex, Complex> cross_block_to_ladder(const Mat& B);
Mat ladder_to_cross_block(Complex h, Complex pump);

// Decomposes a realization into crystals, beam splitters, two-mode pumps and
// dissipative couplings. gamma <= 0 selects the adiabatic-regime default
// 100 * (max|M| + max|C|)^2.
OpticsNetlist netlist(const Realization& r, double gamma = -1.0);

// Round-trip helpers: rebuild the Hamiltonian matrix from the emitted
// components, and a local coupling row from (eps1, eps2, gamma).
Mat hamiltonian_from_netlist(const OpticsNetlist& nl);
CVec coupling_row_from_params(Complex eps1, Complex eps2, double gamma, int mode,
                              int modes);

}  // namespace gqs
