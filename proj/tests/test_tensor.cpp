#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "rindler/states.hpp"
#include "rindler/tensor.hpp"

using namespace rindler;

namespace {

Matrix random_hermitian(int dim, std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  return 0.5 * (g + g.adjoint().eval());
}

Matrix random_density(int dim, std::mt19937& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

Matrix bell_density() {
  Vector amp = Vector::Zero(4);
  amp[0] = amp[3] = 1.0 / std::sqrt(2.0);
  return amp * amp.adjoint();
}

}  // namespace

TEST_CASE("kron identities and basis projectors") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((kron(i2, i2) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() == 0.0);

  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  Matrix expected = Matrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK((kron(p0, p1) - expected).cwiseAbs().maxCoeff() == 0.0);

  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  Vector ket00 = Vector::Zero(4);
  ket00[0] = 1.0;
  Vector flipped = kron(x, x) * ket00;
  CHECK(std::abs(flipped[3] - Complex(1.0, 0.0)) == 0.0);
  CHECK(flipped.head(3).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("jacobi eigenvalues on analytic 2x2 inputs") {
  Matrix pauli_x(2, 2);
  pauli_x << 0, 1, 1, 0;
  RealVector eigs = hermitian_eigenvalues(pauli_x);
  CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(eigs[1] == doctest::Approx(1.0).epsilon(1e-13));

  Matrix m(2, 2);
  m << Complex(1, 0), Complex(0, 1), Complex(0, -1), Complex(1, 0);
  eigs = hermitian_eigenvalues(m);
  CHECK(eigs[0] == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(eigs[1] == doctest::Approx(2.0).epsilon(1e-13));

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.75;
  d(1, 1) = 0.25;
  eigs = hermitian_eigenvalues(d);
  CHECK(eigs[0] == doctest::Approx(0.25));
  CHECK(eigs[1] == doctest::Approx(0.75));
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigenvalues(m), NonHermitianInput);
  CHECK_THROWS_AS(trace_norm(m), NonHermitianInput);
}

TEST_CASE("jacobi matches the reference solver on random Hermitian matrices") {
  std::mt19937 rng(20240811);
  for (int dim : {2, 3, 5, 8, 16}) {
    const Matrix m = random_hermitian(dim, rng);
    const RealVector mine = hermitian_eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<Matrix> ref(m);
    REQUIRE(mine.size() == dim);
    for (int i = 0; i < dim; ++i) {
      CHECK(mine[i] == doctest::Approx(ref.eigenvalues()[i]).epsilon(1e-11));
    }
    CHECK(std::abs(mine.sum() - m.trace().real()) <= 1e-10);
  }
}

TEST_CASE("eigensystem reconstructs the matrix") {
  std::mt19937 rng(7);
  for (int dim : {2, 4, 9, 16}) {
    const Matrix m = random_hermitian(dim, rng);
    const EigenSystem sys = hermitian_eigensystem(m);
    Matrix rebuilt = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
      rebuilt += sys.values[k] * (sys.vectors.col(k) * sys.vectors.col(k).adjoint());
    }
    CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("trace norm") {
  CHECK(trace_norm(Matrix::Identity(4, 4)) == doctest::Approx(4.0));

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.5;
  d(1, 1) = -0.5;
  CHECK(trace_norm(d) == doctest::Approx(1.0));

  // Bell state partial transpose: spectrum {1/2, 1/2, 1/2, -1/2}.
  const Matrix pt = transpose_slots(bell_density(), 2, {0});
  const RealVector eigs = hermitian_eigenvalues(pt);
  CHECK(eigs[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(eigs[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(trace_norm(d) >= std::abs(d.trace().real()));
}

TEST_CASE("trace norm agrees with the eigenvalue sum") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    const Matrix m = random_hermitian(6, rng);
    CHECK(trace_norm(m) ==
          doctest::Approx(hermitian_eigenvalues(m).cwiseAbs().sum()).epsilon(1e-10));
  }
}

TEST_CASE("partial trace of product states returns the kept factor") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix rho_a = random_density(2, rng);
    const Matrix rho_b = random_density(2, rng);
    const Matrix joint = kron(rho_a, rho_b);
    const Matrix kept = trace_out_slots(joint, 2, {0});
    CHECK((kept - rho_a).cwiseAbs().maxCoeff() <= 1e-14);
    const Matrix kept_b = trace_out_slots(joint, 2, {1});
    CHECK((kept_b - rho_b).cwiseAbs().maxCoeff() <= 1e-14);
  }
}

TEST_CASE("partial trace of the Bell state is maximally mixed") {
  const DensityMatrix rho(ModeRegister::minkowski(2), bell_density());
  for (int keep : {0, 1}) {
    const DensityMatrix red = partial_trace(rho, {keep});
    CHECK(red.dimension() == 2);
    CHECK(red.matrix()(0, 0).real() == doctest::Approx(0.5));
    CHECK(red.matrix()(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(red.matrix()(0, 1)) <= 1e-15);
  }
}

TEST_CASE("partial trace of the four-party W density onto one party") {
  const DensityMatrix rho = pure_density(w_state(4));
  const DensityMatrix red = partial_trace(rho, {0});
  CHECK(red.dimension() == 2);
  // Slot A holds the excitation with probability 1/4.
  CHECK(red.matrix()(0, 0).real() == doctest::Approx(0.75).epsilon(1e-13));
  CHECK(red.matrix()(1, 1).real() == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(std::abs(red.matrix()(0, 1)) <= 1e-15);
  CHECK(std::abs(red.matrix().trace().real() - 1.0) <= 1e-12);
  red.validate();
}

TEST_CASE("partial trace rejects an empty keep set") {
  const DensityMatrix rho(ModeRegister::minkowski(2), bell_density());
  CHECK_THROWS_AS(partial_trace(rho, {}), EmptyKeepSet);
}

TEST_CASE("partial transpose basics") {
  const DensityMatrix bell(ModeRegister::minkowski(2), bell_density());
  CHECK_THROWS_AS(partial_transpose(bell, {}), EmptyTransposeSet);

  // PPT for product states.
  std::mt19937 rng(5);
  const Matrix joint = kron(random_density(2, rng), random_density(2, rng));
  const Matrix pt = transpose_slots(joint, 2, {0});
  CHECK(hermitian_eigenvalues(pt)[0] >= -1e-12);

  // Bell state: minimum eigenvalue -1/2.
  const Matrix bell_pt = partial_transpose(bell, {0});
  CHECK(hermitian_eigenvalues(bell_pt)[0] == doctest::Approx(-0.5).epsilon(1e-12));

  // Involution on the W density.
  const DensityMatrix w = pure_density(w_state(4));
  const Matrix once = partial_transpose(w, {1, 3});
  const Matrix twice = transpose_slots(once, 4, {1, 3});
  CHECK((twice - w.matrix()).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("partial transpose preserves Hermiticity and trace") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const Matrix rho = random_density(8, rng);
    const Matrix pt = transpose_slots(rho, 3, {trial % 3});
    CHECK(hermiticity_defect(pt) <= 1e-14);
    CHECK(std::abs(pt.trace().real() - rho.trace().real()) <= 1e-13);
  }
}

TEST_CASE("reduction dimension follows the kept slot count") {
  std::mt19937 rng(77);
  const Matrix rho = random_density(16, rng);
  const DensityMatrix dm(ModeRegister::minkowski(4), rho);
  for (int k = 1; k <= 4; ++k) {
    std::vector<int> keep;
    for (int i = 0; i < k; ++i) keep.push_back(i);
    const DensityMatrix red = partial_trace(dm, keep);
    CHECK(red.dimension() == (Eigen::Index{1} << k));
    CHECK(hermitian_eigenvalues(red.matrix()).size() == (Eigen::Index{1} << k));
    CHECK(std::abs(red.matrix().trace().real() - 1.0) <= 1e-12);
  }
}
