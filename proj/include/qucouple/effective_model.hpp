#pragma once

// Schrieffer-Wolff elimination of the coupler from the three-spin exchange
// chain, and the closed-form eigensystem of the resulting two-qubit model.
//
// Basis convention: |00>, |01>, |10>, |11> with sigma^z |0> = +|0>, so the
// single-qubit term omega/2 sigma^z puts |0> at +omega/2.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "qucouple/eigensolver.hpp"
#include "qucouple/errors.hpp"
#include "qucouple/matrix.hpp"

namespace qucouple {

/// Two-level chain: qubits 1, 2 and coupler c with exchange couplings.
struct ThreeModeSpins {
  double omega_1 = 0.0;
  double omega_2 = 0.0;
  double omega_c = 0.0;
  double g_1 = 0.0;
  double g_2 = 0.0;
  double g_12 = 0.0;

  double detuning_1() const { return omega_1 - omega_c; }
  double detuning_2() const { return omega_2 - omega_c; }
};

/// Lamb-shifted frequencies and effective exchange coupling.
struct EffectiveTwoQubit {
  double omega_1 = 0.0;
  double omega_2 = 0.0;
  double coupling = 0.0;

  double alpha() const { return omega_1 + omega_2; }
  double detuning() const { return omega_1 - omega_2; }
  /// sqrt(4 g^2 + detuning^2)
  double gamma() const { return std::hypot(2.0 * coupling, detuning()); }
  /// -detuning + gamma, evaluated without cancellation.
  double xi() const {
    const double w = detuning();
    const double g = gamma();
    return w > 0.0 ? 4.0 * coupling * coupling / (g + w) : g - w;
  }
  /// -(detuning + gamma), evaluated without cancellation.
  double zeta() const {
    const double w = detuning();
    const double g = gamma();
    return w < 0.0 ? -4.0 * coupling * coupling / (g - w) : -(w + g);
  }

  EffectiveTwoQubit with_coupling(double g) const { return {omega_1, omega_2, g}; }
};

inline constexpr double kDispersiveRatio = 0.1;

/// omega~_j = omega_j + g_j^2 / Delta_j,  g~ = g_1 g_2 / Delta + g_12,
/// with 1/Delta = 1/Delta_1 + 1/Delta_2.
inline EffectiveTwoQubit swt_reduce(const ThreeModeSpins& s) {
  const double d1 = s.detuning_1();
  const double d2 = s.detuning_2();
  if (d1 == 0.0 || d2 == 0.0)
    throw DomainError("resonant coupler (omega_j = omega_c): Schrieffer-Wolff reduction invalid");
  const double inv_delta = 1.0 / d1 + 1.0 / d2;
  return {s.omega_1 + s.g_1 * s.g_1 / d1, s.omega_2 + s.g_2 * s.g_2 / d2,
          s.g_1 * s.g_2 * inv_delta + s.g_12};
}

/// Advisory only: reports |g_j / Delta_j| above 0.1.
inline std::vector<std::string> dispersive_warnings(const ThreeModeSpins& s) {
  std::vector<std::string> out;
  const std::array<double, 2> g{s.g_1, s.g_2};
  const std::array<double, 2> d{s.detuning_1(), s.detuning_2()};
  for (std::size_t j = 0; j < 2; ++j) {
    const double ratio = std::abs(g[j] / d[j]);
    if (ratio > kDispersiveRatio)
      out.push_back("|g_" + std::to_string(j + 1) + " / Delta_" + std::to_string(j + 1) +
                    "| = " + std::to_string(ratio) + " exceeds dispersive bound 0.1");
  }
  return out;
}

inline Matrix<4> effective_hamiltonian(const EffectiveTwoQubit& e) {
  Matrix<4> h = Matrix<4>::diagonal(
      {e.alpha() / 2.0, e.detuning() / 2.0, -e.detuning() / 2.0, -e.alpha() / 2.0});
  h(1, 2) = e.coupling;
  h(2, 1) = e.coupling;
  return h;
}

/// Eigenpairs in the labelling phi_1 = |00>, phi_2 = |11>, phi_3 (xi branch),
/// phi_4 (zeta branch). Energies are those of the matrix above:
/// (+alpha/2, -alpha/2, +gamma/2, -gamma/2).
struct EigenSystem4 {
  std::array<double, 4> energies{};
  std::array<Vector<4>, 4> states{};
  /// gamma == 0: phi_3 = |01>, phi_4 = |10>, both at zero energy.
  bool degenerate = false;
};

inline EigenSystem4 analytic_eigensystem(const EffectiveTwoQubit& e) {
  EigenSystem4 out;
  const double a = e.alpha();
  const double w = e.detuning();
  const double g = e.coupling;
  const double gam = e.gamma();

  out.energies = {a / 2.0, -a / 2.0, gam / 2.0, -gam / 2.0};
  out.states[0] = {1.0, 0.0, 0.0, 0.0};
  out.states[1] = {0.0, 0.0, 0.0, 1.0};

  if (gam == 0.0) {
    out.degenerate = true;
    out.states[2] = {0.0, 1.0, 0.0, 0.0};
    out.states[3] = {0.0, 0.0, 1.0, 0.0};
    return out;
  }

  // (c01, c10) ∝ (2g, xi) ∝ (gamma + w, 2g) for phi_3 and
  // (2g, zeta) ∝ (gamma - w, -2g) for phi_4; pick the form without cancellation.
  auto make = [](double c01, double c10) {
    if (c01 < 0.0 || (c01 == 0.0 && c10 < 0.0)) {
      c01 = -c01;
      c10 = -c10;
    }
    const double len = std::hypot(c01, c10);
    return Vector<4>{0.0, c01 / len, c10 / len, 0.0};
  };
  if (w >= 0.0) {
    out.states[2] = make(gam + w, 2.0 * g);
    out.states[3] = make(2.0 * g, e.zeta());
  } else {
    out.states[2] = make(2.0 * g, e.xi());
    out.states[3] = make(gam - w, -2.0 * g);
  }
  return out;
}

/// Numerical route, any size: thin wrapper over the Jacobi solver.
template <std::size_t N>
EigenDecomposition<N> numeric_eigensystem(const Matrix<N>& h) {
  return hermitian_eigensystem(h);
}

} // namespace qucouple
