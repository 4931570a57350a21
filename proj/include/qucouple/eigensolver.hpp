#pragma once

// Cyclic Jacobi diagonalisation of small complex Hermitian matrices.
//
// Each rotation first removes the phase of the pivot a_pq with
// D = diag(1, exp(-i arg a_pq)), then applies the classic real symmetric
// Jacobi rotation. The combined 2x2 unitary U = D R is applied as A <- U^H A U
// and accumulated into the eigenvector matrix.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

#include "qucouple/errors.hpp"
#include "qucouple/matrix.hpp"

namespace qucouple {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kJacobiOffDiagonalTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 64;

template <std::size_t N>
struct EigenDecomposition {
  /// Ascending.
  std::array<double, N> values{};
  /// vectors[k] belongs to values[k], normalised and phased so that its
  /// dominant component is real and positive. Within a run of values spanning
  /// at most 1e-12 * max(1, ||H||) the vectors are ordered by dominant
  /// component index instead, so a pairing there is only good to that span.
  std::array<Vector<N>, N> vectors{};

  Matrix<N> reconstruct() const {
    Matrix<N> m;
    for (std::size_t k = 0; k < N; ++k)
      m += outer(vectors[k], vectors[k]) * Complex(values[k]);
    return m;
  }
};

namespace detail {

template <std::size_t N>
std::size_t dominant_index(const Vector<N>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (std::abs(v[i]) > std::abs(v[best]))
      best = i;
  return best;
}

template <std::size_t N>
void validate_hermitian(const Matrix<N>& h) {
  for (const auto& x : h.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw DomainError("matrix has non-finite entries");
  if (h.hermiticity_defect() > kHermitianTolerance * std::max(1.0, h.norm()))
    throw DomainError("matrix is not Hermitian");
}

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j)
        s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
void rotate(Matrix<N>& a, Matrix<N>& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0)
    return;
  const Complex phase = std::conj(apq / r);
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150)
    t = 0.5 / theta;
  else
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * phase;
  const Complex u_qq = c * phase;

  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
}

} // namespace detail

/// Full spectrum and orthonormal eigenvectors of a Hermitian matrix.
/// Throws DomainError for non-Hermitian or non-finite input and if the sweeps
/// fail to converge.
template <std::size_t N>
EigenDecomposition<N> hermitian_eigensystem(const Matrix<N>& h) {
  detail::validate_hermitian(h);

  Matrix<N> a = (h + h.adjoint()) * Complex(0.5);
  Matrix<N> v = Matrix<N>::identity();
  const double scale = a.norm();

  bool converged = scale == 0.0;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    if (detail::off_diagonal_norm(a) < kJacobiOffDiagonalTolerance * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q)
        detail::rotate(a, v, p, q);
  }
  if (!converged && detail::off_diagonal_norm(a) >= kJacobiOffDiagonalTolerance * scale)
    throw DomainError("Jacobi eigensolver did not converge");

  std::array<double, N> raw_values{};
  std::array<Vector<N>, N> raw_vectors{};
  std::array<std::size_t, N> dominant{};
  for (std::size_t k = 0; k < N; ++k) {
    raw_values[k] = a(k, k).real();
    Vector<N> col{};
    for (std::size_t i = 0; i < N; ++i)
      col[i] = v(i, k);
    const double len = norm(col);
    const std::size_t d = detail::dominant_index(col);
    const Complex fix = std::conj(col[d]) / (std::abs(col[d]) * len);
    for (auto& x : col)
      x *= fix;
    col[d] = std::abs(col[d]);
    raw_vectors[k] = col;
    dominant[k] = d;
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return raw_values[x] < raw_values[y]; });

  EigenDecomposition<N> out;
  for (std::size_t k = 0; k < N; ++k)
    out.values[k] = raw_values[order[k]];

  // Degenerate runs: deterministic vector order by dominant component.
  const double tie = kHermitianTolerance * std::max(1.0, scale);
  for (std::size_t begin = 0; begin < N;) {
    std::size_t end = begin + 1;
    while (end < N && out.values[end] - out.values[begin] <= tie)
      ++end;
    std::stable_sort(order.begin() + begin, order.begin() + end,
                     [&](std::size_t x, std::size_t y) { return dominant[x] < dominant[y]; });
    begin = end;
  }
  for (std::size_t k = 0; k < N; ++k)
    out.vectors[k] = raw_vectors[order[k]];
  return out;
}

/// max_k ||H v_k - lambda_k v_k||.
template <std::size_t N>
double max_residual(const Matrix<N>& h, const EigenDecomposition<N>& e) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    Vector<N> r = h * e.vectors[k];
    for (std::size_t i = 0; i < N; ++i)
      r[i] -= e.values[k] * e.vectors[k][i];
    worst = std::max(worst, norm(r));
  }
  return worst;
}

} // namespace qucouple
