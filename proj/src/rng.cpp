#include "pdl/rng.hpp"

namespace pdl {

DensityMatrix random_density(Rng& rng, const Basis& basis) {
  const auto d = static_cast<Eigen::Index>(basis.dim());
  Eigen::MatrixXcd g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::MatrixXcd rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(basis, std::move(rho));
}

Eigen::MatrixXcd random_unitary(Rng& rng, int dim) {
  Eigen::MatrixXcd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      g(i, j) = std::complex<double>(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

}  // namespace pdl
