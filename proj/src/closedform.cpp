#include "pdl/closedform.hpp"

#include <algorithm>
#include <cmath>

#include "pdl/errors.hpp"

namespace pdl {

namespace {

inline double plogp_bits(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

// I_c of diag(q, 1-q): both output spectra are analytic 3-level lists.
double ic_diag_kernel(double ph, double pv, double q) {
  const double s1 = plogp_bits(ph * q) + plogp_bits(pv * (1.0 - q)) +
                    plogp_bits((1.0 - ph) * q + (1.0 - pv) * (1.0 - q));
  const double s2 = plogp_bits((1.0 - ph) * q) + plogp_bits((1.0 - pv) * (1.0 - q)) +
                    plogp_bits(ph * q + pv * (1.0 - q));
  return s1 - s2;
}

struct KahanSum {
  double s = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// w_n with the binomial taken in the better-transmitted polarization p and
// the bracket weighted by the other one, x.
double wn_kernel(double p, double x, std::int64_t n) {
  if (n == 1) return 0.0;
  if (p == 0.0) return (1.0 - x) * std::log2(static_cast<double>(n));
  if (p == 1.0) return -x * std::log2(static_cast<double>(n));

  KahanSum acc;
  if (n <= 50) {
    // Exact integer binomials in doubles; plain products keep the sign of
    // the algebraic expression at roundoff-level zeros (the w_2 line).
    double choose = 1.0;
    for (std::int64_t k = 0; k < n; ++k) {
      if (k > 0) choose = choose * static_cast<double>(n - k) / static_cast<double>(k);
      const double wgt = choose * std::pow(1.0 - p, static_cast<double>(n - 1 - k)) *
                         std::pow(p, static_cast<double>(k));
      const double bracket = (1.0 - x) * std::log2(static_cast<double>(n - k)) -
                             x * std::log2(static_cast<double>(k + 1));
      acc.add(wgt * bracket);
    }
    return acc.s;
  }

  // Log-gamma weights; the binomial mass outside 20 sigma is < 1e-30 of the
  // total, far below every tolerance used against these sums.
  const double mean = static_cast<double>(n - 1) * p;
  const double sigma = std::sqrt(static_cast<double>(n - 1) * p * (1.0 - p));
  const std::int64_t lo =
      std::max<std::int64_t>(0, static_cast<std::int64_t>(std::floor(mean - 20.0 * sigma)) - 32);
  const std::int64_t hi =
      std::min<std::int64_t>(n - 1, static_cast<std::int64_t>(std::ceil(mean + 20.0 * sigma)) + 32);
  const double lg_n = std::lgamma(static_cast<double>(n));
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double lw = lg_n - std::lgamma(static_cast<double>(k + 1)) -
                      std::lgamma(static_cast<double>(n - k)) +
                      static_cast<double>(k) * lp + static_cast<double>(n - 1 - k) * lq;
    const double bracket = (1.0 - x) * std::log2(static_cast<double>(n - k)) -
                           x * std::log2(static_cast<double>(k + 1));
    acc.add(std::exp(lw) * bracket);
  }
  return acc.s;
}

void order_by_transmission(const ChannelParams& p, const Q1Solution& sol, double& rho_maj,
                           double& rho_min) {
  if (p.p_h >= p.p_v) {
    rho_maj = sol.state.rho_hh;
    rho_min = sol.state.rho_vv;
  } else {
    rho_maj = sol.state.rho_vv;
    rho_min = sol.state.rho_hh;
  }
}

}  // namespace

double ic_diagonal(const ChannelParams& p, double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw ValidationError("ic_diagonal: q must lie in [0, 1]");
  return ic_diag_kernel(p.p_h, p.p_v, q);
}

Q1Solution solve_q1(const ChannelParams& p) {
  // Solve in the p_maj >= p_min orientation and map the maximizer back;
  // this makes mirrored parameter pairs give bit-identical results.
  const bool swapped = p.p_h < p.p_v;
  const double pa = swapped ? p.p_v : p.p_h;
  const double pb = swapped ? p.p_h : p.p_v;
  const auto f = [pa, pb](double q) { return ic_diag_kernel(pa, pb, q); };

  // 1001-point scan guards against non-unimodality before refining.
  int best = 0;
  double fbest = f(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double v = f(i / 1000.0);
    if (v > fbest) {
      fbest = v;
      best = i;
    }
  }
  double a = (best == 0) ? 0.0 : (best - 1) / 1000.0;
  double b = (best == 1000) ? 1.0 : (best + 1) / 1000.0;

  const double invphi = 0.6180339887498948482;
  const double invphi2 = 0.3819660112501051518;
  double h = b - a;
  double c = a + invphi2 * h;
  double d = a + invphi * h;
  double fc = f(c), fd = f(d);
  while (h > 1e-11) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      h = b - a;
      c = a + invphi2 * h;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      h = b - a;
      d = a + invphi * h;
      fd = f(d);
    }
  }
  const double q = 0.5 * (a + b);
  const double value = f(q);
  const bool degenerate = q <= 1e-9 || q >= 1.0 - 1e-9;
  // Mirrored inputs must yield exactly swapped weights, so keep q itself on
  // the appropriate side instead of recomputing 1 - (1 - q).
  const DiagonalQubitState state =
      swapped ? DiagonalQubitState(1.0 - q, q) : DiagonalQubitState(q, 1.0 - q);
  return Q1Solution{state, std::max(value, 0.0), degenerate};
}

double ic_rho2(const ChannelParams& p, const Q1Solution& sol) {
  const double rr = sol.degenerate ? 0.0 : sol.state.rho_hh * sol.state.rho_vv;
  return 2.0 * sol.q1 + 2.0 * (1.0 - p.p_h - p.p_v) * rr;
}

double w_n(const ChannelParams& p, std::int64_t n) {
  if (n < 1) throw ValidationError("w_n needs n >= 1");
  return p.p_h >= p.p_v ? wn_kernel(p.p_h, p.p_v, n) : wn_kernel(p.p_v, p.p_h, n);
}

double benefit_n(const ChannelParams& p, const Q1Solution& sol, std::int64_t n) {
  if (n < 2) throw ValidationError("benefit_n needs n >= 2");
  if (sol.degenerate) return 0.0;
  double rho_maj, rho_min;
  order_by_transmission(p, sol, rho_maj, rho_min);
  return std::pow(rho_maj, static_cast<double>(n - 1)) * rho_min * w_n(p, n);
}

double w_asymptotic(const ChannelParams& p, double n) {
  if (p.p_h == p.p_v)
    throw DomainError("w_asymptotic requires p_h != p_v");
  if (p.p_h <= 0.0 || p.p_h >= 1.0 || p.p_v <= 0.0 || p.p_v >= 1.0)
    throw DomainError("w_asymptotic requires both parameters strictly inside (0, 1)");
  if (!(n > 0.0)) throw DomainError("w_asymptotic requires n > 0");
  const double pmaj = std::max(p.p_h, p.p_v);
  const double pmin = std::min(p.p_h, p.p_v);
  return (1.0 - 2.0 * pmin) * std::log2(n) + (1.0 - pmin) * std::log2(1.0 - pmaj) -
         pmin * std::log2(pmaj);
}

double n_threshold(const ChannelParams& p) {
  const double pmaj = std::max(p.p_h, p.p_v);
  const double pmin = std::min(p.p_h, p.p_v);
  if (!(pmin > 0.0 && pmin < 0.5 && pmaj > 0.5 && pmaj < 1.0))
    throw DomainError("n_threshold requires 0 < p_min < 1/2 < p_maj < 1");
  return std::pow(std::pow(pmaj, pmin) / std::pow(1.0 - pmaj, 1.0 - pmin),
                  1.0 / (1.0 - 2.0 * pmin));
}

double asymptotic_rate_benefit(const ChannelParams& p, const Q1Solution& sol, std::int64_t n) {
  const double n0 = n_threshold(p);  // rejects parameters outside both branches
  if (static_cast<double>(n) < 10.0 * n0)
    throw DomainError("asymptotic_rate_benefit requires n >= 10 * n_threshold; "
                      "evaluate the exact w_n sum instead");
  if (sol.degenerate) return sol.q1;
  double rho_maj, rho_min;
  order_by_transmission(p, sol, rho_maj, rho_min);
  const double pmin = std::min(p.p_h, p.p_v);
  return sol.q1 + (1.0 - 2.0 * pmin) * std::pow(rho_maj, static_cast<double>(n - 1)) * rho_min *
                      std::log2(static_cast<double>(n));
}

double ic_xi4(const ChannelParams& p, const Q1Solution& sol) {
  const double rr = sol.degenerate ? 0.0 : sol.state.rho_hh * sol.state.rho_vv;
  const double gg = (1.0 - p.p_h) * (1.0 - p.p_v);
  const double ff = p.p_h * p.p_v;
  return 4.0 * sol.q1 + 4.0 * (1.0 - p.p_h - p.p_v) * rr + 2.0 * rr * rr * (gg * gg - ff * ff);
}

double doubling_series_bound(const ChannelParams& p, const Q1Solution& sol, int m_max) {
  if (m_max < 0) throw ValidationError("doubling_series_bound needs m_max >= 0");
  const double rr = sol.degenerate ? 0.0 : sol.state.rho_hh * sol.state.rho_vv;
  if (rr == 0.0) return 0.0;
  const double a = (1.0 - p.p_h) * (1.0 - p.p_v);
  const double b = p.p_h * p.p_v;
  const double lrr = std::log(rr);

  double total = 0.0;
  for (int m = 0; m <= m_max; ++m) {
    const double len = std::ldexp(1.0, m);  // 2^m
    // (rr)^(2^m) underflows doubly exponentially; stop once it is dust.
    if (len * lrr - m * std::log(2.0) < -750.0) break;
    const double pref = std::pow(rr, len) / len;
    double ksum = 0.0;
    const std::int64_t kmax = static_cast<std::int64_t>(len);
    for (std::int64_t k = 0; k < kmax; ++k)
      ksum += std::pow(a, static_cast<double>(kmax - k - 1)) * std::pow(b, static_cast<double>(k));
    const double term = pref * ksum;
    total += term;
    if (term < 1e-300) break;
  }
  return (1.0 - p.p_h - p.p_v) * total;
}

SuperadditivityReport superadditivity_report(const ChannelParams& p, std::int64_t n) {
  if (n < 1) throw ValidationError("superadditivity_report needs n >= 1");
  const Classification cls = classify(p);
  const Q1Solution sol = solve_q1(p);
  const double w = w_n(p, n);
  const double ben = n >= 2 ? benefit_n(p, sol, n) : 0.0;
  const bool gated = cls == Classification::Antidegradable || cls == Classification::Both;
  return SuperadditivityReport{
      p, n, cls, sol.q1, w, ben, sol.q1 + std::max(ben, 0.0), !gated && w > 0.0 && ben > 0.0};
}

}  // namespace pdl
