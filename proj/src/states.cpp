#include "pdl/states.hpp"

#include <bit>
#include <cmath>

#include "pdl/errors.hpp"

namespace pdl {

namespace {

// H is digit 0, V is digit 1, site 0 most significant.
int minority_bit(Polarization majority) { return majority == Polarization::H ? 1 : 0; }

bool single_minority(std::uint32_t index, int n, Polarization majority) {
  const int ones = std::popcount(index & ((1u << n) - 1u));
  return minority_bit(majority) == 1 ? ones == 1 : ones == n - 1;
}

Eigen::VectorXd product_diagonal(const DiagonalQubitState& s, int n) {
  // By minority count, so permuted basis states get bit-identical weights.
  const std::size_t dim = std::size_t(1) << n;
  Eigen::VectorXd diag(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    const int ones = std::popcount(i & (dim - 1));
    diag(static_cast<Eigen::Index>(i)) =
        std::pow(s.rho_hh, n - ones) * std::pow(s.rho_vv, ones);
  }
  return diag;
}

}  // namespace

DiagonalQubitState::DiagonalQubitState(double hh, double vv) : rho_hh(hh), rho_vv(vv) {
  if (!(hh >= 0.0 && hh <= 1.0) || !(vv >= 0.0 && vv <= 1.0))
    throw ValidationError("diagonal state weights must lie in [0, 1]");
  if (std::abs(hh + vv - 1.0) > 1e-12)
    throw ValidationError("diagonal state weights must sum to 1");
}

Eigen::VectorXcd w_state(int n, Polarization majority) {
  if (n < 1) throw ValidationError("w_state needs n >= 1");
  const std::size_t dim = std::size_t(1) << n;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < dim; ++i)
    if (single_minority(static_cast<std::uint32_t>(i), n, majority))
      v(static_cast<Eigen::Index>(i)) = amp;
  return v;
}

DensityMatrix product_power(const DiagonalQubitState& s, int n) {
  if (n < 1) throw ValidationError("product_power needs n >= 1");
  return DensityMatrix::diagonal(Basis::qubits(n), product_diagonal(s, n));
}

DensityMatrix rho_n(const DiagonalQubitState& s, int n, Polarization majority) {
  if (n < 2) throw ValidationError("rho_n needs n >= 2");
  const double rho_maj = majority == Polarization::H ? s.rho_hh : s.rho_vv;
  const double rho_min = majority == Polarization::H ? s.rho_vv : s.rho_hh;
  const double c = std::pow(rho_maj, n - 1) * rho_min;

  DensityMatrix m = product_power(s, n);
  const std::size_t dim = m.dim();
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < dim; ++i)
    if (single_minority(static_cast<std::uint32_t>(i), n, majority)) idx.push_back(i);
  for (std::size_t a : idx)
    for (std::size_t b : idx)
      if (a != b)
        m.entries()(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = c;
  return m;
}

DensityMatrix rho2(const DiagonalQubitState& s) { return rho_n(s, 2); }

DensityMatrix xi_2n(const DiagonalQubitState& s, int n, Polarization majority) {
  if (n < 1) throw ValidationError("xi_2n needs n >= 1");
  if (2 * n > 8)
    throw ResourceLimitError("xi_2n is oracle-scale only (2n <= 8)");
  DensityMatrix half = (n == 1)
      ? DensityMatrix::diagonal(Basis::qubits(1),
                                Eigen::Vector2d(s.rho_hh, s.rho_vv))
      : rho_n(s, n, majority);
  DensityMatrix m = kron(half, half);

  // |maj^n min^n> and |min^n maj^n> share the diagonal entry (hh*vv)^n;
  // the added coherence keeps the 2x2 block [[w,w],[w,w]] PSD.
  const double w = std::pow(s.rho_hh * s.rho_vv, n);
  const std::size_t lo = (std::size_t(1) << n) - 1;
  const std::size_t hi = lo << n;
  m.entries()(static_cast<Eigen::Index>(lo), static_cast<Eigen::Index>(hi)) += w;
  m.entries()(static_cast<Eigen::Index>(hi), static_cast<Eigen::Index>(lo)) += w;
  return m;
}

DensityMatrix xi4(const DiagonalQubitState& s) { return xi_2n(s, 2); }

}  // namespace pdl
