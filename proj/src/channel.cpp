#include "pdl/channel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pdl/errors.hpp"

namespace pdl {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw ValidationError(std::string(name) + " must lie in [0, 1], got " + std::to_string(v));
}

void require_qubit_sites(const DensityMatrix& rho, const char* where) {
  const int n = rho.basis().site_count();
  if (n < 1) throw ValidationError(std::string(where) + ": state has no sites");
  for (int s = 0; s < n; ++s)
    if (rho.basis().site(s) != SiteKind::Qubit)
      throw ValidationError(std::string(where) + ": input sites must be qubits");
}

// Channel action on one site of a multi-site state. The site's alphabet
// grows from {H, V} to {H, V, vac}: surviving letters pick up
// sqrt(p_a p_b), the matched-letter diagonal feeds the vacuum level.
DensityMatrix apply_site(const DensityMatrix& in, int site, double ph, double pv) {
  const Basis& basis = in.basis();
  const int n = basis.site_count();
  std::size_t post = 1;
  std::vector<SiteKind> out_sites;
  out_sites.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    if (s > site) post *= static_cast<std::size_t>(site_dim(basis.site(s)));
    out_sites.push_back(s == site ? SiteKind::Qutrit : basis.site(s));
  }

  const double p[2] = {ph, pv};
  double amp[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) amp[a][b] = std::sqrt(p[a] * p[b]);

  Basis out_basis(std::move(out_sites));
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(out_basis.dim()),
                                                static_cast<Eigen::Index>(out_basis.dim()));
  const Eigen::MatrixXcd& m = in.entries();

  const std::size_t d_in = in.dim();
  // Per-index decomposition (pre, letter, post), reused across the pass.
  std::vector<std::size_t> idx_pre(d_in), idx_post(d_in);
  std::vector<int> idx_letter(d_in);
  for (std::size_t i = 0; i < d_in; ++i) {
    const std::size_t rest = i % (2 * post);
    idx_pre[i] = i / (2 * post);
    idx_letter[i] = static_cast<int>(rest / post);
    idx_post[i] = rest % post;
  }
  for (std::size_t r = 0; r < d_in; ++r) {
    const std::size_t r_sv =
        (idx_pre[r] * 3 + static_cast<std::size_t>(idx_letter[r])) * post + idx_post[r];
    const std::size_t r_vc = (idx_pre[r] * 3 + 2) * post + idx_post[r];
    for (std::size_t c = 0; c < d_in; ++c) {
      const std::complex<double> v = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (v == std::complex<double>(0.0, 0.0)) continue;
      const std::size_t c_sv =
          (idx_pre[c] * 3 + static_cast<std::size_t>(idx_letter[c])) * post + idx_post[c];
      out(static_cast<Eigen::Index>(r_sv), static_cast<Eigen::Index>(c_sv)) +=
          amp[idx_letter[r]][idx_letter[c]] * v;
      if (idx_letter[r] == idx_letter[c]) {
        const std::size_t c_vc = (idx_pre[c] * 3 + 2) * post + idx_post[c];
        out(static_cast<Eigen::Index>(r_vc), static_cast<Eigen::Index>(c_vc)) +=
            (1.0 - p[idx_letter[r]]) * v;
      }
    }
  }
  return DensityMatrix(std::move(out_basis), std::move(out));
}

// Subnormalized output block for one erasure pattern: G-weighted partial
// trace over the erased sites followed by the filter on the survivors.
Eigen::MatrixXcd reduce_block(const Eigen::MatrixXcd& rho, int n, std::uint32_t site_mask,
                              const double p[2]) {
  std::uint32_t erased_bits = 0;
  int erased_count = 0;
  for (int s = 0; s < n; ++s)
    if (site_mask & (1u << s)) {
      erased_bits |= 1u << (n - 1 - s);
      ++erased_count;
    }
  const int m = n - erased_count;
  const std::size_t d_in = std::size_t(1) << n;
  const std::size_t d_out = std::size_t(1) << m;

  std::vector<std::uint32_t> surv_idx(d_in);
  std::vector<double> erased_w(d_in), surv_amp(d_in);
  for (std::size_t i = 0; i < d_in; ++i) {
    std::uint32_t si = 0;
    double w = 1.0, f = 1.0;
    for (int s = 0; s < n; ++s) {
      const int letter = static_cast<int>((i >> (n - 1 - s)) & 1u);
      if (site_mask & (1u << s)) {
        w *= 1.0 - p[letter];
      } else {
        si = (si << 1) | static_cast<std::uint32_t>(letter);
        f *= std::sqrt(p[letter]);
      }
    }
    surv_idx[i] = si;
    erased_w[i] = w;
    surv_amp[i] = f;
  }

  Eigen::MatrixXcd sigma = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d_out),
                                                  static_cast<Eigen::Index>(d_out));
  for (std::size_t r = 0; r < d_in; ++r) {
    const double wr = erased_w[r] * surv_amp[r];
    if (wr == 0.0) continue;
    for (std::size_t c = 0; c < d_in; ++c) {
      if ((static_cast<std::uint32_t>(r ^ c) & erased_bits) != 0) continue;
      sigma(static_cast<Eigen::Index>(surv_idx[r]), static_cast<Eigen::Index>(surv_idx[c])) +=
          wr * surv_amp[c] * rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return sigma;
}

double block_entropy(const Eigen::MatrixXcd& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sigma, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  return entropy_bits(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

}  // namespace

ChannelParams::ChannelParams(double ph, double pv) : p_h(ph), p_v(pv) {
  require_unit_interval(ph, "p_h");
  require_unit_interval(pv, "p_v");
}

FilterPair filter_pair(const ChannelParams& p) {
  FilterPair fp;
  fp.f = Eigen::Matrix2d::Zero();
  fp.g = Eigen::Matrix2d::Zero();
  fp.f(0, 0) = std::sqrt(p.p_h);
  fp.f(1, 1) = std::sqrt(p.p_v);
  fp.g(0, 0) = std::sqrt(1.0 - p.p_h);
  fp.g(1, 1) = std::sqrt(1.0 - p.p_v);
  return fp;
}

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Degradable: return "degradable";
    case Classification::Antidegradable: return "antidegradable";
    case Classification::Both: return "both";
    case Classification::Neither: return "neither";
  }
  return "?";
}

Classification classify(const ChannelParams& p) {
  const bool anti = std::max(p.p_h, p.p_v) <= 0.5 || p.p_h == 0.0 || p.p_v == 0.0;
  const bool deg = std::min(p.p_h, p.p_v) >= 0.5 || p.p_h == 1.0 || p.p_v == 1.0;
  if (anti && deg) return Classification::Both;
  if (anti) return Classification::Antidegradable;
  if (deg) return Classification::Degradable;
  return Classification::Neither;
}

DensityMatrix apply_gamma(const ChannelParams& p, const DensityMatrix& rho) {
  if (rho.basis() != Basis::qubits(1))
    throw ValidationError("apply_gamma expects a single-qubit state");
  if (rho.hermiticity_error() > kHermitianTol)
    throw ValidationError("apply_gamma: state is not Hermitian within tolerance");
  const double tr = rho.trace_real();
  if (tr > 1.0 + 1e-9 || tr < -1e-12)
    throw ValidationError("apply_gamma: trace outside [0, 1]");
  const double det =
      (rho.entries()(0, 0) * rho.entries()(1, 1) - rho.entries()(0, 1) * rho.entries()(1, 0)).real();
  const double lam_min = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
  if (lam_min < kPsdTol) throw PsdError("apply_gamma: state is not PSD");

  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(3, 3);
  out(0, 0) = p.p_h * rho.entries()(0, 0);
  out(1, 1) = p.p_v * rho.entries()(1, 1);
  const double s = std::sqrt(p.p_h * p.p_v);
  out(0, 1) = s * rho.entries()(0, 1);
  out(1, 0) = s * rho.entries()(1, 0);
  out(2, 2) = (1.0 - p.p_h) * rho.entries()(0, 0) + (1.0 - p.p_v) * rho.entries()(1, 1);
  return DensityMatrix(Basis::qutrits(1), std::move(out));
}

DensityMatrix apply_gamma_complement(const ChannelParams& p, const DensityMatrix& rho) {
  return apply_gamma(p.complement(), rho);
}

std::array<KrausOperator, 3> kraus_operators(const ChannelParams& p) {
  std::array<KrausOperator, 3> k;
  for (auto& m : k) m.setZero();
  k[0](0, 0) = std::sqrt(p.p_h);
  k[0](1, 1) = std::sqrt(p.p_v);
  k[1](2, 0) = std::sqrt(1.0 - p.p_h);
  k[2](2, 1) = std::sqrt(1.0 - p.p_v);
  return k;
}

DensityMatrix apply_tensor_power(const ChannelParams& p, const DensityMatrix& rho,
                                 bool complement, int n_max) {
  require_qubit_sites(rho, "apply_tensor_power");
  const int n = rho.basis().site_count();
  if (n > n_max)
    throw ResourceLimitError("apply_tensor_power: " + std::to_string(n) +
                             " sites exceeds the dense cap of " + std::to_string(n_max));
  if (rho.hermiticity_error() > kHermitianTol)
    throw ValidationError("apply_tensor_power: state is not Hermitian within tolerance");
  const ChannelParams q = complement ? p.complement() : p;
  DensityMatrix cur = rho;
  for (int s = 0; s < n; ++s) cur = apply_site(cur, s, q.p_h, q.p_v);
  return cur;
}

std::vector<ErasureBlock> apply_tensor_power_blocked(const ChannelParams& p,
                                                     const DensityMatrix& rho,
                                                     bool complement) {
  require_qubit_sites(rho, "apply_tensor_power_blocked");
  const int n = rho.basis().site_count();
  if (n > kBlockedSiteLimit)
    throw ResourceLimitError("apply_tensor_power_blocked: " + std::to_string(n) +
                             " sites exceeds the blocked cap of " +
                             std::to_string(kBlockedSiteLimit));
  const ChannelParams q = complement ? p.complement() : p;
  const double pp[2] = {q.p_h, q.p_v};

  std::vector<ErasureBlock> blocks;
  blocks.reserve(std::size_t(1) << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Eigen::MatrixXcd sigma = reduce_block(rho.entries(), n, mask, pp);
    const int m = n - std::popcount(mask);
    Basis b = (m == 0) ? Basis() : Basis::qubits(m);
    blocks.push_back(ErasureBlock{mask, DensityMatrix(std::move(b), std::move(sigma))});
  }
  return blocks;
}

double output_entropy_blocked(const ChannelParams& p, const DensityMatrix& rho,
                              bool complement) {
  require_qubit_sites(rho, "output_entropy_blocked");
  const int n = rho.basis().site_count();
  if (n > kBlockedSiteLimit)
    throw ResourceLimitError("output_entropy_blocked: site count exceeds blocked cap");
  const ChannelParams q = complement ? p.complement() : p;
  const double pp[2] = {q.p_h, q.p_v};
  const std::int64_t count = std::int64_t(1) << n;
  std::vector<double> ent(static_cast<std::size_t>(count), 0.0);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t mask = 0; mask < count; ++mask) {
    ent[static_cast<std::size_t>(mask)] =
        block_entropy(reduce_block(rho.entries(), n, static_cast<std::uint32_t>(mask), pp));
  }

  double total = 0.0;
  for (double e : ent) total += e;
  return total;
}

double output_entropy_blocked_serial(const ChannelParams& p, const DensityMatrix& rho,
                                     bool complement) {
  require_qubit_sites(rho, "output_entropy_blocked_serial");
  const int n = rho.basis().site_count();
  if (n > kBlockedSiteLimit)
    throw ResourceLimitError("output_entropy_blocked_serial: site count exceeds blocked cap");
  const ChannelParams q = complement ? p.complement() : p;
  const double pp[2] = {q.p_h, q.p_v};
  double total = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    total += block_entropy(reduce_block(rho.entries(), n, mask, pp));
  return total;
}

double output_entropy_dense(const ChannelParams& p, const DensityMatrix& rho,
                            bool complement, int n_max) {
  return von_neumann_entropy(apply_tensor_power(p, rho, complement, n_max));
}

double coherent_information_oracle(const ChannelParams& p, const DensityMatrix& rho,
                                   OraclePath path) {
  require_qubit_sites(rho, "coherent_information_oracle");
  const int n = rho.basis().site_count();
  OraclePath chosen = path;
  if (chosen == OraclePath::Auto)
    chosen = (n <= 4) ? OraclePath::Dense : OraclePath::Blocked;
  if (chosen == OraclePath::Dense)
    return output_entropy_dense(p, rho, false) - output_entropy_dense(p, rho, true);
  return output_entropy_blocked(p, rho, false) - output_entropy_blocked(p, rho, true);
}

}  // namespace pdl
