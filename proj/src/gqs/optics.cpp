#include "gqs/optics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gqs/errors.hpp"

namespace gqs {

namespace {
constexpr double kPruneTol = 1e-12;
}

std::pair<double, Complex> crystal_params(const Mat& Md) {
  if (Md.rows() != 2 || Md.cols() != 2 ||
      std::abs(Md(0, 1) - Md(1, 0)) > 1e-12 * std::max(1.0, Md.norm())) {
    throw Error(ErrorCode::invalid_input, "single-mode block must be 2x2 symmetric");
  }
  const double detuning = 0.5 * (Md(0, 0) + Md(1, 1));
  const Complex pump(Md(0, 1), 0.5 * (Md(1, 1) - Md(0, 0)));
  return {detuning, pump};
}

std::pair<double, double> beamsplitter_params(Complex h) {
  if (std::abs(h) == 0.0) {
    throw Error(ErrorCode::invalid_input, "beam splitter coefficient must be nonzero");
  }
  const double theta = std::abs(h);
  // h = i theta e^{-i phi}
  const double phi = M_PI / 2.0 - std::arg(h);
  return {theta, phi};
}

std::pair<Complex, Complex> coupling_params(Complex c_q, Complex c_p, double gamma) {
  if (gamma <= 0.0) {
    throw Error(ErrorCode::invalid_input, "coupling gamma must be positive");
  }
  const double r2 = std::sqrt(2.0);
  const Complex alpha_minus = (c_q - Complex(0, 1) * c_p) / r2;
  const Complex alpha_plus = (c_q + Complex(0, 1) * c_p) / r2;
  const double root_gamma = std::sqrt(gamma);
  return {root_gamma * alpha_plus, -root_gamma * std::conj(alpha_minus)};
}

std::pair<Complex, Complex> cross_block_to_ladder(const Mat& B) {
  if (B.rows() != 2 || B.cols() != 2) {
    throw Error(ErrorCode::invalid_input, "cross block must be 2x2");
  }
  // q = (a + a^dag)/sqrt(2), p = -i (a - a^dag)/sqrt(2)
  const Complex h = 0.5 * (Complex(B(0, 0), 0) + Complex(0, -B(0, 1)) +
                           Complex(0, B(1, 0)) + Complex(B(1, 1), 0));
  const Complex pump = 0.5 * (Complex(B(0, 0), 0) + Complex(0, B(0, 1)) +
                              Complex(0, B(1, 0)) - Complex(B(1, 1), 0));
  return {h, pump};
}

Mat ladder_to_cross_block(Complex h, Complex pump) {
  Mat b(2, 2);
  b(0, 0) = h.real() + pump.real();
  b(0, 1) = -h.imag() + pump.imag();
  b(1, 0) = h.imag() + pump.imag();
  b(1, 1) = h.real() - pump.real();
  return b;
}

OpticsNetlist netlist(const Realization& r, double gamma) {
  const int n = r.modes;
  if (n < 1 || r.M.rows() != 2 * n || r.C.cols() != 2 * n) {
    throw Error(ErrorCode::invalid_input, "realization dimensions are inconsistent");
  }
  OpticsNetlist nl;
  nl.modes = n;
  if (gamma > 0.0) {
    nl.gamma_default = gamma;
  } else {
    const double scale = r.M.cwiseAbs().maxCoeff() + r.C.cwiseAbs().maxCoeff();
    nl.gamma_default = 100.0 * scale * scale;
    if (nl.gamma_default <= 0.0) nl.gamma_default = 1.0;
  }

  for (int j = 0; j < n; ++j) {
    Mat block(2, 2);
    block << r.M(j, j), r.M(j, n + j), r.M(n + j, j), r.M(n + j, n + j);
    if (block.cwiseAbs().maxCoeff() <= kPruneTol) continue;
    const auto [detuning, pump] = crystal_params(block);
    nl.crystals.push_back(Crystal{j + 1, detuning, pump});
  }

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Mat block(2, 2);
      block << r.M(j, k), r.M(j, n + k), r.M(n + j, k), r.M(n + j, n + k);
      const auto [h, pump] = cross_block_to_ladder(block);
      if (std::abs(h) > kPruneTol) {
        const auto [theta, phi] = beamsplitter_params(h);
        nl.beamsplitters.push_back(BeamSplitter{j + 1, k + 1, theta, phi});
      }
      if (std::abs(pump) > kPruneTol) {
        nl.two_mode_pumps.push_back(TwoModePump{j + 1, k + 1, pump});
      }
    }
  }

  for (int row = 0; row < r.channels; ++row) {
    Coupling cpl;
    cpl.gamma = nl.gamma_default;
    cpl.row = r.C.row(row).transpose();
    for (int j = 0; j < n; ++j) {
      if (std::abs(r.C(row, j)) > kPruneTol ||
          std::abs(r.C(row, n + j)) > kPruneTol) {
        cpl.modes.push_back(j + 1);
      }
    }
    cpl.local = cpl.modes.size() == 1;
    if (cpl.local) {
      const int l = cpl.modes.front() - 1;
      const auto [eps1, eps2] =
          coupling_params(r.C(row, l), r.C(row, n + l), cpl.gamma);
      cpl.eps1 = eps1;
      cpl.eps2 = eps2;
    }
    nl.couplings.push_back(std::move(cpl));
  }
  std::stable_sort(nl.couplings.begin(), nl.couplings.end(),
                   [](const Coupling& a, const Coupling& b) {
                     const int fa = a.modes.empty() ? 0 : a.modes.front();
                     const int fb = b.modes.empty() ? 0 : b.modes.front();
                     return fa < fb;
                   });
  return nl;
}

Mat hamiltonian_from_netlist(const OpticsNetlist& nl) {
  const int n = nl.modes;
  Mat m = Mat::Zero(2 * n, 2 * n);
  for (const auto& crystal : nl.crystals) {
    const int j = crystal.mode - 1;
    m(j, j) = crystal.detuning - crystal.pump.imag();
    m(j, n + j) = crystal.pump.real();
    m(n + j, j) = crystal.pump.real();
    m(n + j, n + j) = crystal.detuning + crystal.pump.imag();
  }
  // collect (h, pump) per pair, then invert the ladder map per cross block
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Complex h(0, 0), pump(0, 0);
      for (const auto& bs : nl.beamsplitters) {
        if (bs.mode_j == j + 1 && bs.mode_k == k + 1) {
          h += Complex(0, 1) * bs.theta * std::exp(Complex(0, -bs.phi));
        }
      }
      for (const auto& tp : nl.two_mode_pumps) {
        if (tp.mode_j == j + 1 && tp.mode_k == k + 1) pump += tp.pump;
      }
      if (std::abs(h) == 0.0 && std::abs(pump) == 0.0) continue;
      const Mat block = ladder_to_cross_block(h, pump);
      m(j, k) = block(0, 0);
      m(j, n + k) = block(0, 1);
      m(n + j, k) = block(1, 0);
      m(n + j, n + k) = block(1, 1);
      m(k, j) = block(0, 0);
      m(n + k, j) = block(0, 1);
      m(k, n + j) = block(1, 0);
      m(n + k, n + j) = block(1, 1);
    }
  }
  return m;
}

CVec coupling_row_from_params(Complex eps1, Complex eps2, double gamma, int mode,
                              int modes) {
  if (gamma <= 0.0 || mode < 1 || mode > modes) {
    throw Error(ErrorCode::invalid_input, "invalid coupling parameters");
  }
  // L = (1/sqrt(gamma)) (-eps2^* a + eps1 a^dag) with a = (q + ip)/sqrt(2)
  const double r2 = std::sqrt(2.0);
  const Complex a_coeff = -std::conj(eps2) / std::sqrt(gamma);
  const Complex adag_coeff = eps1 / std::sqrt(gamma);
  CVec row = CVec::Zero(2 * modes);
  row(mode - 1) = (a_coeff + adag_coeff) / r2;
  row(modes + mode - 1) = Complex(0, 1) * (a_coeff - adag_coeff) / r2;
  return row;
}

}  // namespace gqs
