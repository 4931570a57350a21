#pragma once

// Gibbs states rho = exp(-H/T) / Z (k_B = 1) and the closed-form X-state
// elements of the effective two-qubit model.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>

#include "qucouple/effective_model.hpp"
#include "qucouple/eigensolver.hpp"
#include "qucouple/errors.hpp"
#include "qucouple/matrix.hpp"

namespace qucouple {

inline constexpr double kStateTolerance = 1e-12;
/// Below this temperature the Gibbs state is replaced by the (uniformly mixed)
/// ground-state projector.
inline constexpr double kZeroTemperature = 1e-6;

/// Hermitian, unit-trace, positive semidefinite N x N operator. Keeps its own
/// spectral decomposition so functions of rho (sqrt, logs...) can use exact
/// populations when the constructor knew them.
template <std::size_t N>
class DensityMatrix {
public:
  static constexpr std::size_t dim = N;

  /// Validates the density-matrix invariants at 1e-12 and diagonalises.
  static DensityMatrix from_matrix(const Matrix<N>& m) {
    if (m.hermiticity_defect() > kStateTolerance)
      throw DomainError("density matrix is not Hermitian");
    if (std::abs(m.trace() - Complex(1.0)) > kStateTolerance)
      throw DomainError("density matrix does not have unit trace");
    const auto eig = hermitian_eigensystem(m);
    std::array<double, N> p = eig.values;
    for (auto& x : p) {
      if (x < -kStateTolerance)
        throw DomainError("density matrix is not positive semidefinite");
      x = std::max(x, 0.0);
    }
    DensityMatrix out;
    out.rho_ = (m + m.adjoint()) * Complex(0.5);
    out.populations_ = p;
    out.states_ = eig.vectors;
    return out;
  }

  /// rho = sum_k p_k |v_k><v_k| for orthonormal v_k and a probability vector p.
  static DensityMatrix from_spectrum(const std::array<double, N>& populations,
                                     const std::array<Vector<N>, N>& states) {
    double total = 0.0;
    for (double p : populations) {
      if (!(p >= 0.0))
        throw DomainError("populations must be non-negative");
      total += p;
    }
    if (std::abs(total - 1.0) > kStateTolerance)
      throw DomainError("populations must sum to one");
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j) {
        const Complex expected = i == j ? 1.0 : 0.0;
        if (std::abs(inner(states[i], states[j]) - expected) > 1e-10)
          throw DomainError("spectral states are not orthonormal");
      }
    DensityMatrix out;
    for (std::size_t k = 0; k < N; ++k)
      if (populations[k] > 0.0)
        out.rho_ += outer(states[k], states[k]) * Complex(populations[k]);
    out.rho_ = (out.rho_ + out.rho_.adjoint()) * Complex(0.5);
    out.populations_ = populations;
    out.states_ = states;
    return out;
  }

  /// |psi><psi| for a normalised psi.
  static DensityMatrix pure(const Vector<N>& psi) {
    if (std::abs(norm(psi) - 1.0) > 1e-9)
      throw DomainError("state vector is not normalised");
    // Complete psi to an orthonormal basis by Gram-Schmidt on the unit vectors.
    std::array<Vector<N>, N> basis{};
    basis[0] = psi;
    std::size_t filled = 1;
    for (std::size_t e = 0; e < N && filled < N; ++e) {
      Vector<N> v{};
      v[e] = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < filled; ++k) {
          const Complex c = inner(basis[k], v);
          for (std::size_t i = 0; i < N; ++i)
            v[i] -= c * basis[k][i];
        }
      const double len = norm(v);
      if (len < 1e-6)
        continue;
      for (auto& x : v)
        x /= len;
      basis[filled++] = v;
    }
    std::array<double, N> p{};
    p[0] = 1.0;
    DensityMatrix out;
    out.rho_ = outer(psi, psi);
    out.populations_ = p;
    out.states_ = basis;
    return out;
  }

  const Matrix<N>& matrix() const { return rho_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }
  const std::array<double, N>& populations() const { return populations_; }
  const std::array<Vector<N>, N>& states() const { return states_; }

  /// log Z when the state was built as a Gibbs state.
  std::optional<double> log_partition_function() const { return log_z_; }
  std::optional<double> partition_function() const {
    if (!log_z_)
      return std::nullopt;
    return std::exp(*log_z_);
  }

  double purity() const {
    double s = 0.0;
    for (double p : populations_)
      s += p * p;
    return s;
  }

  /// f(rho) through the stored spectrum, f applied to each population.
  template <class F>
  Matrix<N> apply(F&& f) const {
    Matrix<N> m;
    for (std::size_t k = 0; k < N; ++k) {
      const double fk = f(populations_[k]);
      if (fk != 0.0)
        m += outer(states_[k], states_[k]) * Complex(fk);
    }
    return m;
  }

  Matrix<N> sqrt() const {
    return apply([](double p) { return std::sqrt(p); });
  }

  double min_eigenvalue() const {
    return hermitian_eigensystem(rho_).values[0];
  }

private:
  template <std::size_t M>
  friend DensityMatrix<M> gibbs_state(const Matrix<M>& h, double temperature);

  Matrix<N> rho_;
  std::array<double, N> populations_{};
  std::array<Vector<N>, N> states_{};
  std::optional<double> log_z_;
};

inline void require_positive_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw DomainError("temperature must be positive and finite");
}

/// rho = sum_i exp(-E_i / T) |psi_i><psi_i| / Z by spectral decomposition.
/// Energies are shifted by E_min before exponentiating. For T < 1e-6 the state
/// is the uniform mixture over the ground levels (within 1e-12).
template <std::size_t N>
DensityMatrix<N> gibbs_state(const Matrix<N>& h, double temperature) {
  require_positive_temperature(temperature);
  const auto eig = hermitian_eigensystem(h);
  const double e_min = eig.values[0];

  std::array<double, N> weights{};
  if (temperature < kZeroTemperature) {
    const double tie = kStateTolerance * std::max(1.0, h.norm());
    for (std::size_t k = 0; k < N; ++k)
      weights[k] = eig.values[k] - e_min <= tie ? 1.0 : 0.0;
  } else {
    for (std::size_t k = 0; k < N; ++k)
      weights[k] = std::exp(-(eig.values[k] - e_min) / temperature);
  }
  double total = 0.0;
  for (double w : weights)
    total += w;

  double boltzmann_sum = 0.0;
  for (std::size_t k = 0; k < N; ++k)
    boltzmann_sum += std::exp(-(eig.values[k] - e_min) / temperature);
  std::array<double, N> populations{};
  for (std::size_t k = 0; k < N; ++k)
    populations[k] = weights[k] / total;

  auto out = DensityMatrix<N>::from_spectrum(populations, eig.vectors);
  out.log_z_ = -e_min / temperature + std::log(boltzmann_sum);
  return out;
}

/// Z = 2 [cosh(alpha / 2T) + cosh(gamma / 2T)] for the effective model.
inline double partition_function(const EffectiveTwoQubit& e, double temperature) {
  require_positive_temperature(temperature);
  return 2.0 * (std::cosh(e.alpha() / (2.0 * temperature)) +
                std::cosh(e.gamma() / (2.0 * temperature)));
}

/// Unnormalised entries of exp(-H/T) for the effective model. r23 carries the
/// sign of the exact block exponential, -(2 g / gamma) sinh(gamma / 2T).
struct XStateElements {
  double r11 = 0.0;
  double r22 = 0.0;
  double r33 = 0.0;
  double r44 = 0.0;
  double r23 = 0.0;
  double z = 0.0;
};

inline XStateElements xstate_elements(const EffectiveTwoQubit& e, double temperature) {
  require_positive_temperature(temperature);
  const double x = e.gamma() / (2.0 * temperature);
  XStateElements out;
  out.r11 = std::exp(-e.alpha() / (2.0 * temperature));
  out.r44 = std::exp(e.alpha() / (2.0 * temperature));
  if (e.gamma() == 0.0) {
    out.r22 = out.r33 = 1.0;
    out.r23 = 0.0;
  } else {
    const double ch = std::cosh(x);
    const double sh = std::sinh(x);
    const double ratio = e.detuning() / e.gamma();
    out.r22 = ch - ratio * sh;
    out.r33 = ch + ratio * sh;
    out.r23 = -(2.0 * e.coupling / e.gamma()) * sh;
  }
  out.z = partition_function(e, temperature);
  return out;
}

} // namespace qucouple
