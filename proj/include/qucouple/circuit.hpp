#pragma once

// Circuit parameters -> transmon frequencies and capacitive couplings for two
// flux-tunable transmons joined through a tunable coupler. Units are
// dimensionless energies (hbar = 1); flux bias is in units of the flux quantum.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qucouple/errors.hpp"

namespace qucouple::circuit {

struct JunctionPair {
  double e_j_left = 0.0;
  double e_j_right = 0.0;
  double flux_bias = 0.0;

  double total() const { return e_j_left + e_j_right; }
  /// Junction asymmetry d in [-1, 1].
  double asymmetry() const { return (e_j_left - e_j_right) / total(); }
};

struct TransmonMode {
  double e_c = 0.0;
  double e_j = 0.0;
};

struct TransmonSpectrum {
  double frequency = 0.0;
  double anharmonicity = 0.0;
};

/// Self-capacitances of the qubits (c_1, c_2) and coupler (c_c) plus the
/// qubit-coupler (c_1c, c_2c) and direct qubit-qubit (c_12) capacitances.
struct CircuitTopology {
  double c_1 = 0.0;
  double c_2 = 0.0;
  double c_c = 0.0;
  double c_1c = 0.0;
  double c_2c = 0.0;
  double c_12 = 0.0;
};

struct CouplingSet {
  double g_1 = 0.0;
  double g_2 = 0.0;
  double g_12 = 0.0;
  /// (c_1c c_2c) / (c_12 c_c); absent when c_12 = 0.
  std::optional<double> eta;
};

/// 3x3 matrix in (1, c, 2) mode ordering.
using CapacitanceMatrix = std::array<std::array<double, 3>, 3>;

struct HierarchyWarning {
  std::string smaller;
  std::string larger;
  double ratio = 0.0;

  std::string message() const {
    return smaller + " << " + larger + " violated (ratio " + std::to_string(ratio) + ")";
  }
};

inline constexpr double kHierarchyRatio = 0.2;

inline void validate(const JunctionPair& j) {
  if (!(j.e_j_left >= 0.0) || !(j.e_j_right >= 0.0))
    throw DomainError("junction energies must be non-negative");
  if (!(j.total() > 0.0))
    throw DomainError("junction asymmetry undefined: e_j_left + e_j_right = 0");
  if (!std::isfinite(j.flux_bias) || !std::isfinite(j.total()))
    throw DomainError("junction parameters must be finite");
}

inline void validate(const CircuitTopology& t) {
  for (double c : {t.c_1, t.c_2, t.c_c})
    if (!(c > 0.0) || !std::isfinite(c))
      throw DomainError("mode capacitances c_1, c_2, c_c must be positive");
  for (double c : {t.c_1c, t.c_2c, t.c_12})
    if (!(c >= 0.0) || !std::isfinite(c))
      throw DomainError("coupling capacitances must be non-negative");
}

/// Flux-tunable Josephson energy of a split junction:
/// E_J,T sqrt(cos^2(pi f) + d^2 sin^2(pi f)).
inline double tunable_josephson_energy(const JunctionPair& j) {
  validate(j);
  const double phase = std::numbers::pi * j.flux_bias;
  const double c = std::cos(phase);
  const double s = std::sin(phase);
  const double d = j.asymmetry();
  return j.total() * std::sqrt(c * c + d * d * s * s);
}

/// Two-level (Duffing) transmon: omega = sqrt(8 E_J E_C) - E_C, alpha = -E_C.
/// omega goes negative for E_J / E_C < 1/8 and that is allowed.
inline TransmonSpectrum transmon_frequency(const TransmonMode& m) {
  if (!(m.e_c > 0.0) || !std::isfinite(m.e_c))
    throw DomainError("charging energy must be positive");
  if (!(m.e_j >= 0.0) || !std::isfinite(m.e_j))
    throw DomainError("Josephson energy must be non-negative");
  return {std::sqrt(8.0 * m.e_j * m.e_c) - m.e_c, -m.e_c};
}

inline CapacitanceMatrix capacitance_matrix(const CircuitTopology& t) {
  validate(t);
  return {{
      {t.c_1 + t.c_12 + t.c_1c, -t.c_1c, -t.c_12},
      {-t.c_1c, t.c_c + t.c_2c + t.c_1c, -t.c_2c},
      {-t.c_12, -t.c_2c, t.c_2 + t.c_12 + t.c_2c},
  }};
}

inline double determinant(const CapacitanceMatrix& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Sylvester's criterion on leading minors.
inline bool is_positive_definite(const CapacitanceMatrix& m) {
  const double m1 = m[0][0];
  const double m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return m1 > 0.0 && m2 > 0.0 && determinant(m) > 0.0;
}

/// Inverse via the adjugate; throws for a singular matrix.
inline CapacitanceMatrix inverse(const CapacitanceMatrix& m) {
  const double det = determinant(m);
  if (det == 0.0 || !std::isfinite(det))
    throw DomainError("capacitance matrix is singular");
  CapacitanceMatrix inv{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  return inv;
}

/// Leading-order capacitive coupling constants
///   g_j  = 1/2 c_jc / sqrt(c_j c_c) sqrt(omega_j omega_c)
///   g_12 = 1/2 (1 + eta) c_12 / sqrt(c_1 c_2) sqrt(omega_1 omega_2)
inline CouplingSet coupling_strengths(const CircuitTopology& t, double omega_1, double omega_2,
                                      double omega_c) {
  validate(t);
  const double r1c = omega_1 * omega_c;
  const double r2c = omega_2 * omega_c;
  const double r12 = omega_1 * omega_2;
  if (!(r1c >= 0.0) || !(r2c >= 0.0) || !(r12 >= 0.0))
    throw DomainError("coupling radicand negative: mode frequencies must share a sign");

  CouplingSet out;
  out.g_1 = 0.5 * t.c_1c / std::sqrt(t.c_1 * t.c_c) * std::sqrt(r1c);
  out.g_2 = 0.5 * t.c_2c / std::sqrt(t.c_2 * t.c_c) * std::sqrt(r2c);
  if (t.c_12 > 0.0) {
    const double eta = (t.c_1c * t.c_2c) / (t.c_12 * t.c_c);
    out.eta = eta;
    out.g_12 = 0.5 * (1.0 + eta) * t.c_12 / std::sqrt(t.c_1 * t.c_2) * std::sqrt(r12);
  }
  return out;
}

/// Advisory check of c_12 << c_jc << c_lambda; a ratio above 0.2 is reported.
inline std::vector<HierarchyWarning> check_hierarchy(const CircuitTopology& t) {
  std::vector<HierarchyWarning> out;
  auto check = [&](double small, const char* small_name, double large, const char* large_name) {
    if (small == 0.0)
      return;
    const double ratio = large > 0.0 ? small / large : std::numeric_limits<double>::infinity();
    if (ratio > kHierarchyRatio)
      out.push_back({small_name, large_name, ratio});
  };
  check(t.c_12, "c_12", t.c_1c, "c_1c");
  check(t.c_12, "c_12", t.c_2c, "c_2c");
  check(t.c_1c, "c_1c", t.c_1, "c_1");
  check(t.c_1c, "c_1c", t.c_c, "c_c");
  check(t.c_2c, "c_2c", t.c_2, "c_2");
  check(t.c_2c, "c_2c", t.c_c, "c_c");
  return out;
}

/// Everything needed to go from a physical circuit to mode frequencies and
/// couplings. Mode index: 1, 2 qubits; c coupler.
struct CircuitParams {
  CircuitTopology topology;
  std::array<double, 3> e_c{};               // (1, 2, c)
  std::array<JunctionPair, 3> junctions{};   // (1, 2, c)
};

struct CircuitModes {
  std::array<double, 3> e_j{};               // tuned Josephson energies (1, 2, c)
  std::array<TransmonSpectrum, 3> spectra{}; // (1, 2, c)
  CouplingSet couplings;
  std::vector<HierarchyWarning> warnings;

  double omega_1() const { return spectra[0].frequency; }
  double omega_2() const { return spectra[1].frequency; }
  double omega_c() const { return spectra[2].frequency; }
};

inline CircuitModes analyse(const CircuitParams& p) {
  CircuitModes m;
  for (std::size_t k = 0; k < 3; ++k) {
    m.e_j[k] = tunable_josephson_energy(p.junctions[k]);
    m.spectra[k] = transmon_frequency({p.e_c[k], m.e_j[k]});
  }
  m.couplings = coupling_strengths(p.topology, m.omega_1(), m.omega_2(), m.omega_c());
  m.warnings = check_hierarchy(p.topology);
  return m;
}

} // namespace qucouple::circuit
