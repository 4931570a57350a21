#pragma once

// Two-qubit concurrence: pure states, Wootters' formula for mixed states, and
// the closed form for thermal states of the effective model (an X-state).

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "qucouple/effective_model.hpp"
#include "qucouple/eigensolver.hpp"
#include "qucouple/errors.hpp"
#include "qucouple/matrix.hpp"
#include "qucouple/thermal_state.hpp"

namespace qucouple {

/// Amplitudes on |00>, |01>, |10>, |11>.
struct PureState4 {
  Complex a;
  Complex b;
  Complex c;
  Complex d;

  Vector<4> vector() const { return {a, b, c, d}; }
};

struct ConcurrenceResult {
  double value = 0.0;
  /// Square roots of the eigenvalues of R = rho (Y x Y) rho* (Y x Y),
  /// descending.
  std::array<double, 4> lambdas{};
};

/// 2 |ad - bc|, divided by the squared norm so that rounding in the
/// amplitudes (1/sqrt2 and the like) does not leak into the result.
inline double concurrence_pure(const PureState4& s) {
  const double n2 = std::norm(s.a) + std::norm(s.b) + std::norm(s.c) + std::norm(s.d);
  if (!(std::abs(n2 - 1.0) <= 1e-9))
    throw DomainError("pure state is not normalised");
  return std::clamp(2.0 * std::abs(s.a * s.d - s.b * s.c) / n2, 0.0, 1.0);
}

/// sigma^y x sigma^y in the computational basis |00>..|11>.
inline Matrix<4> spin_flip() {
  Matrix<4> y;
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

inline constexpr double kConcurrenceClamp = 1e-12;

/// Wootters concurrence. The lambda_i are the singular values of
/// A = sqrt(rho) Y conj(sqrt(rho)), since A A^H = sqrt(rho) rho~ sqrt(rho)
/// shares its spectrum with R. They are read off as the non-negative half of
/// the spectrum of the Hermitian dilation [[0, A], [A^H, 0]], which keeps
/// full absolute accuracy for near-zero lambdas. Complex conjugation is in the
/// computational basis.
inline ConcurrenceResult concurrence_wootters(const DensityMatrix<4>& rho) {
  const Matrix<4> root = rho.sqrt();
  const Matrix<4> a = root * spin_flip() * root.conjugate();

  Matrix<8> dilation;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = a(i, j);
      dilation(4 + j, i) = std::conj(a(i, j));
    }
  const auto eig = hermitian_eigensystem(dilation);

  ConcurrenceResult out;
  for (std::size_t k = 0; k < 4; ++k) {
    double l = eig.values[7 - k];
    if (l < -kConcurrenceClamp)
      throw DomainError("negative spectrum in Wootters product: invalid density matrix");
    out.lambdas[k] = std::max(l, 0.0);
  }
  const double raw = out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3];
  out.value = std::clamp(raw, 0.0, 1.0);
  return out;
}

inline ConcurrenceResult concurrence_wootters(const Matrix<4>& rho) {
  return concurrence_wootters(DensityMatrix<4>::from_matrix(rho));
}

/// (2/Z) max(0, |r23| - sqrt(r11 r44)) = (2/Z) max(0, (2|g|/gamma) sinh(gamma/2T) - 1),
/// evaluated with every exponential scaled by exp(-max(|alpha|, gamma)/2T).
inline double concurrence_thermal(const EffectiveTwoQubit& e, double temperature) {
  require_positive_temperature(temperature);
  if (!std::isfinite(e.omega_1) || !std::isfinite(e.omega_2) || !std::isfinite(e.coupling))
    throw DomainError("effective parameters must be finite");
  const double gam = e.gamma();
  if (gam == 0.0 || e.coupling == 0.0)
    return 0.0;
  const double a = std::abs(e.alpha()) / (2.0 * temperature);
  const double c = gam / (2.0 * temperature);
  const double m = std::max(a, c);
  const double s = 2.0 * std::abs(e.coupling) / gam;
  const double numerator = 0.5 * s * (std::exp(c - m) - std::exp(-c - m)) - std::exp(-m);
  if (!(numerator > 0.0))
    return 0.0;
  const double denominator = std::exp(a - m) + std::exp(-a - m) + std::exp(c - m) + std::exp(-c - m);
  return std::clamp(2.0 * numerator / denominator, 0.0, 1.0);
}

inline constexpr double kCriticalTemperatureTolerance = 1e-10;

/// Temperature above which the thermal concurrence vanishes: the root of
/// (2|g|/gamma) sinh(gamma/2T) = 1, bisected on log T. The left side is
/// strictly decreasing in T, diverges as T -> 0 and vanishes as T -> inf, so
/// a root exists for every g != 0.
inline std::optional<double> critical_temperature(const EffectiveTwoQubit& e) {
  if (e.coupling == 0.0 || !std::isfinite(e.coupling))
    throw DomainError("critical temperature needs a nonzero finite coupling");
  const double gam = e.gamma();
  const double s = 2.0 * std::abs(e.coupling) / gam;
  auto excess = [&](double t) { return s * std::sinh(gam / (2.0 * t)) - 1.0; };

  double lo = std::abs(e.coupling);
  double hi = lo;
  for (int i = 0; i < 2000 && !(excess(lo) > 0.0); ++i)
    lo *= 0.5;
  for (int i = 0; i < 2000 && !(excess(hi) < 0.0); ++i)
    hi *= 2.0;
  if (!(excess(lo) > 0.0) || !(excess(hi) < 0.0))
    return std::nullopt;

  while (hi / lo - 1.0 > kCriticalTemperatureTolerance) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi)
      break;
    (excess(mid) > 0.0 ? lo : hi) = mid;
  }
  return std::sqrt(lo * hi);
}

} // namespace qucouple
