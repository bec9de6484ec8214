#pragma once

#include <cstdint>

#include "pdl/channel.hpp"
#include "pdl/states.hpp"

namespace pdl {

// All rates and entropies in bits (log base 2). There is deliberately no
// alternative log-base anywhere in this library.

// Optimal diagonal one-shot input and its coherent information.
struct Q1Solution {
  DiagonalQubitState state;
  double q1 = 0.0;        // bits, clamped at 0
  bool degenerate = false;  // maximizer at rho_hh in {0, 1}
};

struct SuperadditivityReport {
  ChannelParams params;
  std::int64_t n;
  Classification classification;
  double q1;
  double w_n;
  double benefit;    // lower bound on Q_n - Q_1, bits
  double qn_lower;   // q1 + max(benefit, 0)
  bool superadditive;
};

// Coherent information of diag(q, 1-q), by analytic 3-level spectra.
double ic_diagonal(const ChannelParams& p, double q);

// 1001-point scan plus golden-section refinement; value tolerance 1e-12.
Q1Solution solve_q1(const ChannelParams& p);

// Two-shot coherent information of the partially coherent pair state:
// 2 q1 + 2 (1 - p_h - p_v) rho_hh rho_vv.
double ic_rho2(const ChannelParams& p, const Q1Solution& sol);

// The n-use superadditivity weight. Branch follows the better-transmitted
// polarization (ties to the H branch); direct binomial products for small n,
// log-gamma weights with compensated summation for large n (valid to 1e6+).
double w_n(const ChannelParams& p, std::int64_t n);

// rho_maj^{n-1} rho_min w_n with (maj, min) = (HH, VV) when p_h >= p_v.
// Degenerate solutions short-circuit to 0.
double benefit_n(const ChannelParams& p, const Q1Solution& sol, std::int64_t n);

// Large-n form (1-2 p_min) log2 n + (1-p_min) log2(1-p_maj) - p_min log2 p_maj.
// Requires p_h != p_v, both strictly inside (0, 1).
double w_asymptotic(const ChannelParams& p, double n);

// Root of the asymptotic weight: block length where superadditivity kicks in.
// Requires 0 < p_min < 1/2 < p_maj < 1.
double n_threshold(const ChannelParams& p);

// q1 + (1 - 2 p_min) rho_maj^{n-1} rho_min log2 n, the asymptotic rate of the
// n-photon code. Enforced n >= 10 * n_threshold; below that use exact w_n.
double asymptotic_rate_benefit(const ChannelParams& p, const Q1Solution& sol,
                               std::int64_t n);

// Four-shot coherent information of the doubled state:
// 4 q1 + 4 (1-p_h-p_v) rr + 2 rr^2 [(1-p_h)^2 (1-p_v)^2 - p_h^2 p_v^2].
double ic_xi4(const ChannelParams& p, const Q1Solution& sol);

// Lower bound on Q - Q1 from doubling the block length ad infinitum:
// (1-p_h-p_v) sum_m (rr)^{2^m}/2^m sum_k [(1-p_h)(1-p_v)]^{2^m-k-1} (p_h p_v)^k.
// Terms below 1e-300 truncate the sum.
double doubling_series_bound(const ChannelParams& p, const Q1Solution& sol, int m_max);

SuperadditivityReport superadditivity_report(const ChannelParams& p, std::int64_t n);

}  // namespace pdl
