#include <catch_amalgamated.hpp>

#include "qucouple/matrix.hpp"

using namespace qucouple;

TEST_CASE("kron orders the first factor as the slow index", "[matrix]") {
  Matrix<2> a;
  a(0, 1) = 1.0;
  const Matrix<2> b = Matrix<2>::identity();
  const Matrix<4> k = kron(a, b);
  CHECK(k(0, 2) == Complex(1.0));
  CHECK(k(1, 3) == Complex(1.0));
  CHECK(k(0, 1) == Complex(0.0));
}

TEST_CASE("adjoint, trace and products", "[matrix]") {
  Matrix<2> m;
  m(0, 0) = 1.0;
  m(0, 1) = Complex(2.0, 3.0);
  m(1, 0) = Complex(-1.0, 1.0);
  m(1, 1) = 4.0;
  CHECK(m.adjoint()(0, 1) == Complex(-1.0, -1.0));
  CHECK(m.trace() == Complex(5.0));
  CHECK(m * Matrix<2>::identity() == m);
  CHECK(max_abs_diff(commutator(m, Matrix<2>::identity()), Matrix<2>{}) == 0.0);
  CHECK(m.hermiticity_defect() > 0.0);
  CHECK((m + m.adjoint()).hermiticity_defect() == 0.0);
}

TEST_CASE("outer and inner products", "[matrix]") {
  const Vector<2> v{Complex(0.6, 0.0), Complex(0.0, 0.8)};
  CHECK(norm(v) == Catch::Approx(1.0));
  const Matrix<2> p = outer(v, v);
  CHECK(p.trace().real() == Catch::Approx(1.0));
  CHECK(max_abs_diff(p * p, p) < 1e-15);
}
