#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "pdl/density_matrix.hpp"
#include "pdl/errors.hpp"
#include "pdl/rng.hpp"

using namespace pdl;
using cplx = std::complex<double>;

namespace {

DensityMatrix qubit_diag(double a, double b) {
  return DensityMatrix::diagonal(Basis::qubits(1), Eigen::Vector2d(a, b));
}

}  // namespace

TEST_CASE("index/label bijection over mixed bases") {
  const Basis bases[] = {Basis::qubits(3), Basis::qutrits(2),
                         Basis({SiteKind::Qutrit, SiteKind::Qubit, SiteKind::Qutrit})};
  for (const Basis& b : bases) {
    for (std::size_t i = 0; i < b.dim(); ++i)
      CHECK(b.index_of(b.digits_of(i)) == i);
  }
  CHECK(Basis::qubits(2).dim() == 4);
  CHECK(Basis::qutrits(3).dim() == 27);
  CHECK(Basis().dim() == 1);
}

TEST_CASE("labels use H, V and - for the vacuum") {
  const Basis b({SiteKind::Qubit, SiteKind::Qutrit});
  CHECK(b.label_of(0) == "HH");
  CHECK(b.label_of(2) == "H-");
  CHECK(b.label_of(4) == "VV");
  CHECK_THROWS_AS(b.label_of(6), ValidationError);
  CHECK_THROWS_AS(Basis::qubits(0), ValidationError);
}

TEST_CASE("entropy of analytic spectra") {
  CHECK(von_neumann_entropy(qubit_diag(1.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(von_neumann_entropy(qubit_diag(0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  const DensityMatrix three =
      DensityMatrix::diagonal(Basis::qutrits(1), Eigen::Vector3d(0.5, 0.25, 0.25));
  CHECK(von_neumann_entropy(three) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("entropy rejects bad input") {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(0.5, 0.0), cplx(0.4, 0.0), cplx(0.1, 0.0), cplx(0.5, 0.0);
  CHECK_THROWS_AS(von_neumann_entropy(DensityMatrix(Basis::qubits(1), m)), ValidationError);
  CHECK_THROWS_AS(von_neumann_entropy(qubit_diag(1.1, -0.1)), PsdError);
  // noise-level negatives are clamped, not rejected
  CHECK(von_neumann_entropy(qubit_diag(1.0 + 1e-12, -1e-12)) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("partial trace of a product ket") {
  Eigen::VectorXcd hv = Eigen::VectorXcd::Zero(4);
  hv(1) = 1.0;  // |HV>
  const DensityMatrix rho = DensityMatrix::pure(Basis::qubits(2), hv);
  const DensityMatrix left = rho.partial_trace({1});
  CHECK(left.basis() == Basis::qubits(1));
  CHECK(std::abs(left.entries()(0, 0) - cplx(1.0)) < 1e-15);
  CHECK(std::abs(left.entries()(1, 1)) < 1e-15);
}

TEST_CASE("partial trace of the 3-photon single-excitation ket") {
  // Expanding (|HHV>+|HVH>+|VHH>)/sqrt(3) and tracing the last photon by
  // hand gives (2/3) on the symmetric two-photon pair plus (1/3) on |HH>.
  Eigen::VectorXcd w3 = Eigen::VectorXcd::Zero(8);
  w3(1) = w3(2) = w3(4) = 1.0 / std::sqrt(3.0);
  const DensityMatrix rho = DensityMatrix::pure(Basis::qubits(3), w3);
  const DensityMatrix traced = rho.partial_trace({2});

  Eigen::MatrixXcd expect = Eigen::MatrixXcd::Zero(4, 4);
  expect(0, 0) = 1.0 / 3.0;
  expect(1, 1) = expect(2, 2) = expect(1, 2) = expect(2, 1) = 1.0 / 3.0;
  CHECK((traced.entries() - expect).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("tracing every site leaves the scalar trace") {
  Rng rng(11);
  const DensityMatrix rho = random_density(rng, Basis::qubits(2));
  const DensityMatrix all = rho.partial_trace({0, 1});
  CHECK(all.dim() == 1);
  CHECK(std::abs(all.entries()(0, 0).real() - 1.0) < 1e-12);
  CHECK_THROWS_AS(rho.partial_trace({2}), ValidationError);
  CHECK_THROWS_AS(rho.partial_trace({0, 0}), ValidationError);
}

TEST_CASE("kron basics") {
  const DensityMatrix half = qubit_diag(0.5, 0.5);
  const DensityMatrix four = kron(half, half);
  CHECK(four.dim() == 4);
  CHECK((four.entries() - Eigen::MatrixXcd::Identity(4, 4) * 0.25).cwiseAbs().maxCoeff() <
        1e-16);

  const double q = 0.3;
  const DensityMatrix prod = kron(qubit_diag(q, 1 - q), qubit_diag(q, 1 - q));
  const double expected[] = {q * q, q * (1 - q), (1 - q) * q, (1 - q) * (1 - q)};
  for (int i = 0; i < 4; ++i)
    CHECK(std::abs(prod.entries()(i, i).real() - expected[i]) < 1e-16);

  const DensityMatrix hv = kron(qubit_diag(1, 0), qubit_diag(0, 1));
  CHECK(std::abs(hv.entries()(1, 1).real() - 1.0) < 1e-16);  // |HV><HV|
  CHECK(std::abs(hv.trace_real() - 1.0) < 1e-16);
}

TEST_CASE("entropy is invariant under unitary conjugation") {
  Rng rng(42);
  for (int rep = 0; rep < 5; ++rep) {
    const DensityMatrix rho = random_density(rng, Basis::qubits(2));
    const Eigen::MatrixXcd u = random_unitary(rng, 4);
    CHECK((u * u.adjoint() - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
    const DensityMatrix rotated(Basis::qubits(2), u * rho.entries() * u.adjoint());
    CHECK(std::abs(von_neumann_entropy(rotated) - von_neumann_entropy(rho)) < 1e-9);
  }
}

TEST_CASE("entropy is additive over tensor products") {
  Rng rng(43);
  for (int rep = 0; rep < 5; ++rep) {
    const DensityMatrix a = random_density(rng, Basis::qubits(1));
    const DensityMatrix b = random_density(rng, Basis::qutrits(1));
    CHECK(std::abs(von_neumann_entropy(kron(a, b)) -
                   (von_neumann_entropy(a) + von_neumann_entropy(b))) < 1e-9);
  }
}

TEST_CASE("partial trace undoes kron") {
  Rng rng(44);
  for (int rep = 0; rep < 5; ++rep) {
    const DensityMatrix a = random_density(rng, Basis::qubits(1));
    DensityMatrix b = random_density(rng, Basis::qubits(1));
    b.entries() *= 0.7;  // subnormalized factor keeps the trace weight visible
    const DensityMatrix joined = kron(a, b);
    const DensityMatrix back = joined.partial_trace({1});
    CHECK((back.entries() - 0.7 * a.entries()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("constructors check shapes") {
  CHECK_THROWS_AS(DensityMatrix(Basis::qubits(2), Eigen::MatrixXcd::Zero(3, 3)),
                  ValidationError);
  CHECK_THROWS_AS(DensityMatrix::diagonal(Basis::qubits(1), Eigen::Vector3d(1, 0, 0)),
                  ValidationError);
}
