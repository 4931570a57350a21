#pragma once

// Small fixed-size dense complex linear algebra. Everything in this project
// lives in 2-, 4- or 8-dimensional Hilbert spaces, so the types are plain
// value types on the stack.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qucouple {

using Complex = std::complex<double>;

template <std::size_t N>
using Vector = std::array<Complex, N>;

template <std::size_t N>
class Matrix {
public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i)
      m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * N + col]; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& x : data_)
      x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{})
          continue;
        for (std::size_t j = 0; j < N; ++j)
          r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vector<N> operator*(const Matrix& a, const Vector<N>& v) {
    Vector<N> r{};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix adjoint() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        r(i, j) = std::conj((*this)(j, i));
    return r;
  }

  Matrix conjugate() const {
    Matrix r;
    for (std::size_t k = 0; k < N * N; ++k)
      r.data_[k] = std::conj(data_[k]);
    return r;
  }

  Matrix transpose() const {
    Matrix r;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        r(i, j) = (*this)(j, i);
    return r;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < N; ++i)
      t += (*this)(i, i);
    return t;
  }

  /// Frobenius norm.
  double norm() const {
    double s = 0.0;
    for (const auto& x : data_)
      s += std::norm(x);
    return std::sqrt(s);
  }

  /// Largest elementwise deviation from being Hermitian.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = i; j < N; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }

  const std::array<Complex, N * N>& data() const { return data_; }

private:
  std::array<Complex, N * N> data_{};
};

template <std::size_t N>
Matrix<N> outer(const Vector<N>& ket, const Vector<N>& bra) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      r(i, j) = ket[i] * std::conj(bra[j]);
  return r;
}

/// <a|b>, antilinear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N>& a, const Vector<N>& b) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i)
    s += std::conj(a[i]) * b[i];
  return s;
}

template <std::size_t N>
double norm(const Vector<N>& v) {
  return std::sqrt(std::real(inner(v, v)));
}

template <std::size_t A, std::size_t B>
Matrix<A * B> kron(const Matrix<A>& a, const Matrix<B>& b) {
  Matrix<A * B> r;
  for (std::size_t i = 0; i < A; ++i)
    for (std::size_t j = 0; j < A; ++j)
      for (std::size_t k = 0; k < B; ++k)
        for (std::size_t l = 0; l < B; ++l)
          r(i * B + k, j * B + l) = a(i, j) * b(k, l);
  return r;
}

template <std::size_t N>
Matrix<N> commutator(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b - b * a;
}

/// Largest |entry| of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < N * N; ++k)
    worst = std::max(worst, std::abs(a.data()[k] - b.data()[k]));
  return worst;
}

} // namespace qucouple
