#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "pdl/density_matrix.hpp"

namespace pdl {

// Dimensionless transmission factors for horizontally and vertically
// polarized photons. Both in [0, 1]; out of range is rejected.
struct ChannelParams {
  double p_h;
  double p_v;
  ChannelParams(double ph, double pv);
  ChannelParams complement() const { return ChannelParams(1.0 - p_h, 1.0 - p_v); }
};

// F = diag(sqrt(p_h), sqrt(p_v)) attenuates the surviving photon,
// G = sqrt(I - F^2) feeds the erasure branch; F^2 + G^2 = I.
struct FilterPair {
  Eigen::Matrix2d f;
  Eigen::Matrix2d g;
};
FilterPair filter_pair(const ChannelParams& p);

enum class Classification { Degradable, Antidegradable, Both, Neither };
const char* to_string(Classification c);

// Exact comparisons on the given values; callers scanning grids must pick
// grid points off the predicate boundaries.
Classification classify(const ChannelParams& p);

// Qubit in, qutrit out: upper 2x2 block F rho F, vacuum entry
// (1-p_h) rho_HH + (1-p_v) rho_VV, no cross terms.
DensityMatrix apply_gamma(const ChannelParams& p, const DensityMatrix& rho);

// Same channel with p -> 1 - p.
DensityMatrix apply_gamma_complement(const ChannelParams& p, const DensityMatrix& rho);

using KrausOperator = Eigen::Matrix<double, 3, 2>;

// K1 embeds F into the {H, V} levels; K2, K3 send H, V to the vacuum.
std::array<KrausOperator, 3> kraus_operators(const ChannelParams& p);

inline constexpr int kDenseSiteLimit = 8;    // 3^8 = 6561 output dimension
inline constexpr int kBlockedSiteLimit = 16;

// Sitewise application of the n-fold channel (or its complement) to an
// n-qubit state. Dense output; memory grows as 9^n, so the cap is n <= n_max.
DensityMatrix apply_tensor_power(const ChannelParams& p, const DensityMatrix& rho,
                                 bool complement = false, int n_max = kDenseSiteLimit);

// One subnormalized output block per erasure pattern. Bit s of erased_mask
// set means site s was erased; the block lives on the surviving qubits.
struct ErasureBlock {
  std::uint32_t erased_mask = 0;
  DensityMatrix block;
};

std::vector<ErasureBlock> apply_tensor_power_blocked(const ChannelParams& p,
                                                     const DensityMatrix& rho,
                                                     bool complement = false);

// Entropy (bits) of the n-fold channel output summed over erasure-pattern
// blocks: sum_S (-sum_i lambda^S_i log2 lambda^S_i) on unnormalized block
// spectra, which equals the dense output entropy. The plain kernel is
// OpenMP-parallel over patterns; the serial twin is the reference.
double output_entropy_blocked(const ChannelParams& p, const DensityMatrix& rho,
                              bool complement = false);
double output_entropy_blocked_serial(const ChannelParams& p, const DensityMatrix& rho,
                                     bool complement = false);
double output_entropy_dense(const ChannelParams& p, const DensityMatrix& rho,
                            bool complement = false, int n_max = kDenseSiteLimit);

enum class OraclePath { Auto, Dense, Blocked };

// S(Gamma^n[rho]) - S(complement^n[rho]) in bits. Auto takes the dense path
// for n <= 4 and the blocked path beyond.
double coherent_information_oracle(const ChannelParams& p, const DensityMatrix& rho,
                                   OraclePath path = OraclePath::Auto);

}  // namespace pdl
