#include "pdl/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "pdl/errors.hpp"

namespace pdl {

DensityMatrix::DensityMatrix(Basis basis, Eigen::MatrixXcd entries)
    : basis_(std::move(basis)), m_(std::move(entries)) {
  const auto d = static_cast<Eigen::Index>(basis_.dim());
  if (m_.rows() != d || m_.cols() != d)
    throw ValidationError("matrix dimension does not match basis dimension");
}

DensityMatrix DensityMatrix::zero(Basis basis) {
  const auto d = static_cast<Eigen::Index>(basis.dim());
  return DensityMatrix(std::move(basis), Eigen::MatrixXcd::Zero(d, d));
}

DensityMatrix DensityMatrix::diagonal(Basis basis, const Eigen::VectorXd& diag) {
  const auto d = static_cast<Eigen::Index>(basis.dim());
  if (diag.size() != d) throw ValidationError("diagonal length does not match basis");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  m.diagonal() = diag.cast<std::complex<double>>();
  return DensityMatrix(std::move(basis), std::move(m));
}

DensityMatrix DensityMatrix::pure(Basis basis, const Eigen::VectorXcd& amplitudes) {
  const auto d = static_cast<Eigen::Index>(basis.dim());
  if (amplitudes.size() != d) throw ValidationError("amplitude length does not match basis");
  Eigen::MatrixXcd m = amplitudes * amplitudes.adjoint();
  return DensityMatrix(std::move(basis), std::move(m));
}

double DensityMatrix::trace_real() const { return m_.trace().real(); }

double DensityMatrix::hermiticity_error() const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  if (hermiticity_error() > kHermitianTol)
    throw ValidationError("matrix is not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

DensityMatrix DensityMatrix::partial_trace(std::span<const int> traced_sites) const {
  const int n = basis_.site_count();
  std::vector<bool> traced(static_cast<std::size_t>(n), false);
  for (int s : traced_sites) {
    if (s < 0 || s >= n) throw ValidationError("partial_trace: site index out of range");
    if (traced[static_cast<std::size_t>(s)])
      throw ValidationError("partial_trace: duplicate site index");
    traced[static_cast<std::size_t>(s)] = true;
  }

  // Strides of the full basis, then split sites into kept and traced.
  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int s = n - 2; s >= 0; --s)
    stride[static_cast<std::size_t>(s)] =
        stride[static_cast<std::size_t>(s) + 1] *
        static_cast<std::size_t>(site_dim(basis_.site(s + 1)));

  std::vector<SiteKind> kept_kinds;
  std::vector<std::size_t> kept_stride, traced_stride;
  std::vector<int> traced_dim;
  std::size_t traced_total = 1;
  for (int s = 0; s < n; ++s) {
    if (traced[static_cast<std::size_t>(s)]) {
      traced_stride.push_back(stride[static_cast<std::size_t>(s)]);
      traced_dim.push_back(site_dim(basis_.site(s)));
      traced_total *= static_cast<std::size_t>(site_dim(basis_.site(s)));
    } else {
      kept_kinds.push_back(basis_.site(s));
      kept_stride.push_back(stride[static_cast<std::size_t>(s)]);
    }
  }

  Basis out_basis = kept_kinds.empty() ? Basis() : Basis(kept_kinds);
  const auto out_dim = static_cast<Eigen::Index>(out_basis.dim());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);

  // Enumerate kept row/col patterns and sum the traced diagonal.
  const std::size_t kd = out_basis.dim();
  std::vector<int> kr(kept_kinds.size()), kc(kept_kinds.size()), td(traced_dim.size());
  for (std::size_t r = 0; r < kd; ++r) {
    out_basis.digits_of(r, kr);
    std::size_t base_r = 0;
    for (std::size_t s = 0; s < kr.size(); ++s)
      base_r += static_cast<std::size_t>(kr[s]) * kept_stride[s];
    for (std::size_t c = 0; c < kd; ++c) {
      out_basis.digits_of(c, kc);
      std::size_t base_c = 0;
      for (std::size_t s = 0; s < kc.size(); ++s)
        base_c += static_cast<std::size_t>(kc[s]) * kept_stride[s];
      std::complex<double> acc = 0.0;
      std::fill(td.begin(), td.end(), 0);
      for (std::size_t t = 0; t < traced_total; ++t) {
        std::size_t off = 0;
        for (std::size_t s = 0; s < td.size(); ++s)
          off += static_cast<std::size_t>(td[s]) * traced_stride[s];
        acc += m_(static_cast<Eigen::Index>(base_r + off),
                  static_cast<Eigen::Index>(base_c + off));
        for (std::size_t s = td.size(); s-- > 0;) {
          if (++td[s] < traced_dim[s]) break;
          td[s] = 0;
        }
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return DensityMatrix(std::move(out_basis), std::move(out));
}

DensityMatrix DensityMatrix::partial_trace(std::initializer_list<int> traced_sites) const {
  return partial_trace(std::span<const int>(traced_sites.begin(), traced_sites.size()));
}

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<SiteKind> sites;
  sites.reserve(static_cast<std::size_t>(a.basis().site_count() + b.basis().site_count()));
  for (int s = 0; s < a.basis().site_count(); ++s) sites.push_back(a.basis().site(s));
  for (int s = 0; s < b.basis().site_count(); ++s) sites.push_back(b.basis().site(s));

  const auto da = static_cast<Eigen::Index>(a.dim());
  const auto db = static_cast<Eigen::Index>(b.dim());
  Eigen::MatrixXcd out(da * db, da * db);
  for (Eigen::Index i = 0; i < da; ++i)
    for (Eigen::Index j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = a.entries()(i, j) * b.entries();
  return DensityMatrix(Basis(std::move(sites)), std::move(out));
}

double entropy_bits(std::span<const double> eigenvalues) {
  double acc = 0.0;
  for (double v : eigenvalues) {
    if (v < kPsdTol)
      throw PsdError("eigenvalue below PSD tolerance: " + std::to_string(v));
    if (v > 0.0) acc -= v * std::log2(v);
  }
  return acc;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Eigen::VectorXd ev = rho.eigenvalues();
  return entropy_bits(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

}  // namespace pdl
