// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code counts failures.
//
// Three checks are expected to stay red on exact arithmetic; the detail
// text carries the measured values so the gap is visible:
//   1. the two quoted four-use benefit values at (0.7, 0.2) correspond to a
//      slightly under-converged one-shot optimizer (rho_hh ~ 0.0672 instead
//      of the true 0.0687067); the exact formulas give 6.5e-3 / 9.7e-5.
//   2. the n-use benefit formula for n >= 3 is not an exact identity for
//      I_c(rho_n) - I_c(product): erasure folds product-state weight onto
//      the same surviving single-minority subspace that carries the W
//      coherence, which the per-block entropy-decrement argument ignores.
//      (It is exact at n = 2 and for the doubled four-photon state.)
//   7. the exact w_n = 0 boundary at n = 1e4 passes ~0.077 from the
//      limiting region boundary (cf. the n0 crossover: n0(0.92, 0.42) ~ 1e4),
//      well outside the 0.02 tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pdl/format.hpp"
#include "pdl/region.hpp"
#include "pdl/rng.hpp"

using namespace pdl;

namespace {

struct CriterionResult {
  bool passed = true;
  std::string detail;
};

std::string fmt(double x) { return format_sig(x, 4); }

bool matches_2sf(double value, double target) {
  const double scale = std::pow(10.0, std::floor(std::log10(std::abs(target))) - 1.0);
  return std::abs(value - target) <= 0.5 * scale;
}

ChannelParams nondegenerate_point(Rng& rng) {
  for (;;) {
    const bool mirror = rng.uniform() < 0.5;
    const double pmaj = rng.uniform(0.55, 0.95);
    const double pmin = rng.uniform(0.05, 0.45);
    const ChannelParams p = mirror ? ChannelParams(pmin, pmaj) : ChannelParams(pmaj, pmin);
    if (!solve_q1(p).degenerate) return p;
  }
}

// ---- criterion 1: quoted four-use benefits at (0.7, 0.2), 2 s.f. ----
CriterionResult criterion1() {
  const ChannelParams p(0.7, 0.2);
  const Q1Solution sol = solve_q1(p);
  const double rr = sol.state.rho_hh * sol.state.rho_vv;
  const double doubled =
      (1 - p.p_h - p.p_v) * rr * (1 + 0.5 * rr * (1 - p.p_h - p.p_v + 2 * p.p_h * p.p_v));
  const double four = benefit_n(p, sol, 4);
  CriterionResult r;
  r.passed = matches_2sf(doubled, 6.3e-3) && matches_2sf(four, 9.1e-5);
  r.detail = "doubled-state benefit " + fmt(doubled) + " vs 6.3e-03, n=4 benefit " +
             fmt(four) + " vs 9.1e-05";
  return r;
}

// ---- criterion 2: closed forms vs the dense spectral oracle, 1e-9 ----
CriterionResult criterion2() {
  Rng rng(20240811);
  double dev2 = 0.0, dev_xi = 0.0, dev3 = 0.0, dev4 = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const ChannelParams p = nondegenerate_point(rng);
    const Q1Solution sol = solve_q1(p);
    const Polarization maj = p.p_h >= p.p_v ? Polarization::H : Polarization::V;

    dev2 = std::max(dev2, std::abs(ic_rho2(p, sol) -
                                   coherent_information_oracle(p, rho2(sol.state))));
    dev_xi = std::max(dev_xi, std::abs(ic_xi4(p, sol) -
                                       coherent_information_oracle(p, xi4(sol.state))));
    for (int n : {3, 4}) {
      const double oracle =
          (coherent_information_oracle(p, rho_n(sol.state, n, maj)) -
           coherent_information_oracle(p, product_power(sol.state, n))) /
          n;
      const double dev = std::abs(benefit_n(p, sol, n) - oracle);
      (n == 3 ? dev3 : dev4) = std::max(n == 3 ? dev3 : dev4, dev);
    }
  }
  CriterionResult r;
  r.passed = dev2 < 1e-9 && dev_xi < 1e-9 && dev3 < 1e-9 && dev4 < 1e-9;
  r.detail = "max deviations: two-shot " + fmt(dev2) + ", doubled " + fmt(dev_xi) +
             ", n=3 benefit " + fmt(dev3) + ", n=4 benefit " + fmt(dev4);
  return r;
}

// ---- criterion 3: w_2 identity on a 101x101 grid, 1e-12 ----
CriterionResult criterion3() {
  double worst = 0.0;
  bool signs_ok = true;
  for (int i = 0; i < 101; ++i)
    for (int j = 0; j < 101; ++j) {
      const double ph = (i + 0.5) / 101.0, pv = (j + 0.5) / 101.0;
      const double w = w_n(ChannelParams(ph, pv), 2);
      const double line = 1.0 - ph - pv;
      worst = std::max(worst, std::abs(w - line));
      // sign region p_h + p_v < 1, well posed away from the line itself
      if (std::abs(line) > 1e-12 && (w > 0.0) != (line > 0.0)) signs_ok = false;
    }
  CriterionResult r;
  r.passed = worst < 1e-12 && signs_ok;
  r.detail = "max |w_2 - (1-p_h-p_v)| = " + fmt(worst);
  return r;
}

// ---- criterion 4: erasure special case ----
CriterionResult criterion4() {
  double dev_value = 0.0, dev_arg = 0.0;
  for (double p : {0.6, 0.75, 0.9}) {
    const Q1Solution sol = solve_q1(ChannelParams(p, p));
    dev_value = std::max(dev_value, std::abs(sol.q1 - (2 * p - 1)));
    dev_arg = std::max(dev_arg, std::abs(sol.state.rho_hh - 0.5));
  }
  CriterionResult r;
  r.passed = dev_value < 1e-9 && dev_arg < 1e-6;
  r.detail = "max |q1 - (2p-1)| = " + fmt(dev_value) + ", max |q - 1/2| = " + fmt(dev_arg);
  return r;
}

// ---- criterion 5: classification map on 41x41, exact ----
CriterionResult criterion5() {
  const std::int64_t ns[] = {2};
  const RegionGrid g = scan(41, ns);
  bool ok = true;
  for (int i = 0; i < 41 && ok; ++i)
    for (int j = 0; j < 41 && ok; ++j) {
      const double ph = g.p_h_at(i), pv = g.p_v_at(j);
      const bool anti = std::max(ph, pv) <= 0.5 || ph == 0.0 || pv == 0.0;
      const bool deg = std::min(ph, pv) >= 0.5 || ph == 1.0 || pv == 1.0;
      const Classification expect =
          anti && deg ? Classification::Both
                      : anti ? Classification::Antidegradable
                             : deg ? Classification::Degradable : Classification::Neither;
      if (g.classification[g.cell_index(i, j)] != expect) ok = false;
      if (g.classification[g.cell_index(i, j)] != g.classification[g.cell_index(j, i)])
        ok = false;
    }
  CriterionResult r;
  r.passed = ok;
  r.detail = ok ? "all 1681 cells match the predicates, mirror exact"
               : "cell/classification mismatch";
  return r;
}

// ---- criterion 6: nested superadditivity regions on 41x41 ----
CriterionResult criterion6() {
  const std::int64_t ns[] = {2, 3, 10};
  const RegionGrid g = scan(41, ns);
  bool nested = true;
  for (int i = 0; i < 41; ++i)
    for (int j = 0; j < 41; ++j) {
      const std::size_t c = g.cell_index(i, j) * 3;
      if (g.superadditive[c + 0] && !g.superadditive[c + 1]) nested = false;
      if (g.superadditive[c + 1] && !g.superadditive[c + 2]) nested = false;
    }
  const double w3 = w_n(ChannelParams(0.7, 0.3), 3);
  const bool beyond_line = w3 > 0.0 && superadditivity_report(ChannelParams(0.7, 0.3), 3).superadditive;
  CriterionResult r;
  r.passed = nested && beyond_line;
  r.detail = std::string("nesting ") + (nested ? "holds" : "violated") +
             ", w_3(0.7,0.3) = " + fmt(w3);
  return r;
}

// ---- criterion 7: asymptotic convergence ----
CriterionResult criterion7() {
  const BoundaryCurve curve = boundary(10000, 201);
  double worst = 0.0;
  for (const auto& pt : curve.points)
    worst = std::max(worst, distance_to_neither_boundary(pt[0], pt[1]));

  double rel_worst = 0.0;
  const double pts[5][2] = {{0.7, 0.2}, {0.8, 0.35}, {0.6, 0.1}, {0.9, 0.45}, {0.55, 0.3}};
  for (const auto& s : pts) {
    const ChannelParams p(s[0], s[1]);
    const double exact = w_n(p, 1000000);
    rel_worst = std::max(rel_worst, std::abs(w_asymptotic(p, 1e6) - exact) / std::abs(exact));
  }

  CriterionResult r;
  r.passed = worst <= 0.02 && rel_worst <= 0.05;
  r.detail = "boundary distance " + fmt(worst) + " (tol 0.02), asymptotic rel. dev. " +
             fmt(rel_worst) + " (tol 0.05)";
  return r;
}

// ---- criterion 8: doubling-series consistency ----
CriterionResult criterion8() {
  Rng rng(5150);
  double worst = 0.0;
  bool monotone = true;
  for (int rep = 0; rep < 6; ++rep) {
    const ChannelParams p = rep == 0 ? ChannelParams(0.7, 0.2) : nondegenerate_point(rng);
    const Q1Solution sol = solve_q1(p);
    const double rr = sol.state.rho_hh * sol.state.rho_vv;
    worst = std::max(worst,
                     std::abs(doubling_series_bound(p, sol, 0) - (1 - p.p_h - p.p_v) * rr));
    const double q4 = (1 - p.p_h - p.p_v) * rr *
                      (1 + 0.5 * rr * (1 - p.p_h - p.p_v + 2 * p.p_h * p.p_v));
    worst = std::max(worst, std::abs(doubling_series_bound(p, sol, 1) - q4));
    if (1 - p.p_h - p.p_v > 0) {
      double prev = doubling_series_bound(p, sol, 0);
      for (int m = 1; m <= 8; ++m) {
        const double cur = doubling_series_bound(p, sol, m);
        if (cur < prev) monotone = false;
        prev = cur;
      }
    }
  }
  CriterionResult r;
  r.passed = worst < 1e-14 && monotone;
  r.detail = "max partial-sum deviation " + fmt(worst) +
             (monotone ? ", monotone" : ", NOT monotone");
  return r;
}

// ---- criterion 9: state-construction invariants ----
CriterionResult criterion9() {
  Rng rng(424242);
  double worst_psd = 0.0, worst_trace = 0.0, worst_diag = 0.0, worst_w = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const double hh = rng.uniform();
    const DiagonalQubitState s(hh, 1.0 - hh);
    const Polarization maj = rng.uniform() < 0.5 ? Polarization::H : Polarization::V;
    for (int n = 2; n <= 6; ++n) {
      const DensityMatrix rho = rho_n(s, n, maj);
      worst_psd = std::max(worst_psd, -rho.eigenvalues().minCoeff());
      worst_trace = std::max(worst_trace, std::abs(rho.trace_real() - 1.0));
      worst_diag = std::max(
          worst_diag, (rho.entries().diagonal() - product_power(s, n).entries().diagonal())
                          .cwiseAbs()
                          .maxCoeff());
    }
    for (int n = 2; n <= 4; ++n) {  // 2n <= 8
      const DensityMatrix xi = xi_2n(s, n, maj);
      worst_psd = std::max(worst_psd, -xi.eigenvalues().minCoeff());
      worst_trace = std::max(worst_trace, std::abs(xi.trace_real() - 1.0));
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (Polarization maj : {Polarization::H, Polarization::V}) {
      const DensityMatrix w = DensityMatrix::pure(Basis::qubits(n), w_state(n, maj));
      const DensityMatrix traced = w.partial_trace({n - 1});
      DensityMatrix expect = DensityMatrix::pure(Basis::qubits(n - 1), w_state(n - 1, maj));
      expect.entries() *= (n - 1.0) / n;
      const Eigen::Index all_maj =
          maj == Polarization::H ? 0 : static_cast<Eigen::Index>((std::size_t(1) << (n - 1)) - 1);
      expect.entries()(all_maj, all_maj) += 1.0 / n;
      worst_w = std::max(worst_w, (traced.entries() - expect.entries()).cwiseAbs().maxCoeff());
    }
  }
  CriterionResult r;
  r.passed = worst_psd < 1e-10 && worst_trace < 1e-12 && worst_diag < 1e-14 && worst_w < 1e-12;
  r.detail = "PSD " + fmt(worst_psd) + ", trace " + fmt(worst_trace) + ", diagonal " +
             fmt(worst_diag) + ", W recursion " + fmt(worst_w);
  return r;
}

// ---- criterion 10: capacity itself is out of reach by construction ----
CriterionResult criterion10() {
  CriterionResult r;
  r.passed = true;
  r.detail = "informational: no closed form for Q exists; capacity statements in this "
             "artifact are lower bounds and oracle equivalences only";
  return r;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double budget_seconds;
    std::function<CriterionResult()> run;
  };
  const std::vector<Entry> entries = {
      {1, "four-use benefit values at (0.7, 0.2) to 2 s.f.", 1.0, criterion1},
      {2, "closed forms vs dense spectral oracle (1e-9, 20 points)", 300.0, criterion2},
      {3, "w_2 identity on the 101x101 grid (1e-12)", 1.0, criterion3},
      {4, "erasure special case q1 = 2p - 1", 1.0, criterion4},
      {5, "classification map, 41x41, exact predicates", 1.0, criterion5},
      {6, "nested superadditivity regions (n = 2, 3, 10)", 10.0, criterion6},
      {7, "asymptotic boundary convergence (n = 1e4, 1e6)", 120.0, criterion7},
      {8, "doubling-series partial sums and monotonicity", 1.0, criterion8},
      {9, "state-construction invariants (50 random states)", 60.0, criterion9},
      {10, "no closed-form capacity claim", 1.0, criterion10},
  };

  int failures = 0;
  for (const auto& e : entries) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult res = e.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = secs < e.budget_seconds;
    const bool ok = res.passed && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%s; %.2f s of %.0f s budget)\n", ok ? "PASS" : "FAIL",
                e.id, e.title, res.detail.c_str(), secs, e.budget_seconds);
  }
  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
