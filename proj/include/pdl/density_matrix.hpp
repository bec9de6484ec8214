#pragma once

#include <Eigen/Dense>
#include <span>

#include "pdl/basis.hpp"

namespace pdl {

// Hermiticity deviation above this is rejected by entropy/eigenvalue calls.
inline constexpr double kHermitianTol = 1e-9;
// Eigenvalues below this raise PsdError; anything in (kPsdTol, 0) is
// treated as numerical noise and clamped.
inline constexpr double kPsdTol = -1e-8;

// Dense complex operator over a labeled basis. Normalized states carry unit
// trace; channel blocks may be subnormalized (trace <= 1).
class DensityMatrix {
public:
  DensityMatrix(Basis basis, Eigen::MatrixXcd entries);

  static DensityMatrix zero(Basis basis);
  static DensityMatrix diagonal(Basis basis, const Eigen::VectorXd& diag);
  static DensityMatrix pure(Basis basis, const Eigen::VectorXcd& amplitudes);

  const Basis& basis() const { return basis_; }
  const Eigen::MatrixXcd& entries() const { return m_; }
  Eigen::MatrixXcd& entries() { return m_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }

  double trace_real() const;
  double hermiticity_error() const;  // max_ij |m_ij - conj(m_ji)|

  // Ascending; throws ValidationError if hermiticity_error() > kHermitianTol.
  Eigen::VectorXd eigenvalues() const;

  // Traces out the given sites; remaining sites keep their order. Tracing
  // every site leaves the 1x1 matrix [tr rho].
  DensityMatrix partial_trace(std::span<const int> traced_sites) const;
  DensityMatrix partial_trace(std::initializer_list<int> traced_sites) const;

private:
  Basis basis_;
  Eigen::MatrixXcd m_;
};

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

// -sum lambda*log2(lambda) with lambda*log(lambda) := 0 for lambda <= 0.
// Eigenvalues below kPsdTol raise PsdError. Works unchanged on the
// eigenvalues of a subnormalized block.
double entropy_bits(std::span<const double> eigenvalues);
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace pdl
