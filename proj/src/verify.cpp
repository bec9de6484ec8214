#include "pdl/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "pdl/closedform.hpp"
#include "pdl/format.hpp"
#include "pdl/rng.hpp"

namespace pdl {

namespace {

struct Outcome {
  bool passed;
  double worst;  // worst deviation seen, for the detail line
};

ChannelParams random_params(Rng& rng) {
  return ChannelParams(rng.uniform(0.02, 0.98), rng.uniform(0.02, 0.98));
}

// Parameter points whose one-shot optimum is interior and well conditioned.
ChannelParams random_nondegenerate_params(Rng& rng) {
  for (;;) {
    const bool mirror = rng.uniform() < 0.5;
    const double pmaj = rng.uniform(0.55, 0.95);
    const double pmin = rng.uniform(0.05, 0.45);
    const ChannelParams p = mirror ? ChannelParams(pmin, pmaj) : ChannelParams(pmaj, pmin);
    const Q1Solution sol = solve_q1(p);
    if (!sol.degenerate && sol.state.rho_hh * sol.state.rho_vv > 1e-3) return p;
  }
}

Eigen::MatrixXcd kraus_apply(const std::array<KrausOperator, 3>& ks, const Eigen::MatrixXcd& rho) {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(3, 3);
  for (const auto& k : ks) {
    const Eigen::MatrixXcd kc = k.cast<std::complex<double>>();
    acc += kc * rho * kc.adjoint();
  }
  return acc;
}

Outcome check_kraus_sum(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const ChannelParams p = random_params(rng);
    const DensityMatrix rho = random_density(rng, Basis::qubits(1));
    const auto ks = kraus_operators(p);
    worst = std::max(worst,
                     (kraus_apply(ks, rho.entries()) - apply_gamma(p, rho).entries())
                         .cwiseAbs()
                         .maxCoeff());
    Eigen::Matrix2d closure = Eigen::Matrix2d::Zero();
    for (const auto& k : ks) closure += k.transpose() * k;
    worst = std::max(worst, (closure - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
  }
  return {worst < 1e-13, worst};
}

Outcome check_gram_complement(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const ChannelParams p = random_params(rng);
    const DensityMatrix rho = random_density(rng, Basis::qubits(1));
    const auto ks = kraus_operators(p);
    Eigen::MatrixXcd gram(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const Eigen::MatrixXcd ki = ks[static_cast<std::size_t>(i)].cast<std::complex<double>>();
        const Eigen::MatrixXcd kj = ks[static_cast<std::size_t>(j)].cast<std::complex<double>>();
        gram(i, j) = (ki * rho.entries() * kj.adjoint()).trace();
      }
    const double s_gram = von_neumann_entropy(DensityMatrix(Basis::qutrits(1), gram));
    const double s_comp = von_neumann_entropy(apply_gamma_complement(p, rho));
    worst = std::max(worst, std::abs(s_gram - s_comp));
  }
  return {worst < 1e-10, worst};
}

Outcome check_complement_involution(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const ChannelParams p = random_params(rng);
    const DensityMatrix rho = random_density(rng, Basis::qubits(1));
    const auto a = apply_gamma_complement(p.complement(), rho);
    const auto b = apply_gamma(p, rho);
    worst = std::max(worst, (a.entries() - b.entries()).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(b.trace_real() - rho.trace_real()));
  }
  return {worst < 1e-12, worst};
}

Outcome check_filter_closure(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const FilterPair fp = filter_pair(random_params(rng));
    const Eigen::Matrix2d closure = fp.f.transpose() * fp.f + fp.g.transpose() * fp.g;
    worst = std::max(worst, (closure - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
  }
  return {worst < 1e-15, worst};
}

Outcome check_ic_diagonal_oracle(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const ChannelParams p = random_params(rng);
    const double q = rng.uniform();
    const DensityMatrix rho =
        DensityMatrix::diagonal(Basis::qubits(1), Eigen::Vector2d(q, 1.0 - q));
    worst = std::max(worst,
                     std::abs(ic_diagonal(p, q) - coherent_information_oracle(p, rho)));
  }
  return {worst < 1e-10, worst};
}

Outcome check_ic_rho2_oracle(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const ChannelParams p = random_nondegenerate_params(rng);
    const Q1Solution sol = solve_q1(p);
    const DensityMatrix state = rho2(sol.state);
    worst = std::max(worst,
                     std::abs(ic_rho2(p, sol) - coherent_information_oracle(p, state)));
  }
  return {worst < 1e-9, worst};
}

Outcome check_blocked_vs_dense(Rng& rng, int n_max) {
  double worst = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    const ChannelParams p = random_params(rng);
    const DensityMatrix rho = random_density(rng, Basis::qubits(n));
    for (bool comp : {false, true}) {
      const double dense = output_entropy_dense(p, rho, comp);
      const double blocked = output_entropy_blocked(p, rho, comp);
      const double serial = output_entropy_blocked_serial(p, rho, comp);
      worst = std::max(worst, std::abs(dense - blocked));
      if (blocked != serial) worst = std::max(worst, 1.0);  // must be bit-identical
    }
  }
  return {worst < 1e-9, worst};
}

Outcome check_w2_identity(Rng&) {
  double worst = 0.0;
  for (int i = 0; i < 101; ++i)
    for (int j = 0; j < 101; ++j) {
      const double ph = (i + 0.5) / 101.0, pv = (j + 0.5) / 101.0;
      worst = std::max(worst, std::abs(w_n(ChannelParams(ph, pv), 2) - (1.0 - ph - pv)));
    }
  return {worst < 1e-12, worst};
}

Outcome check_w_recursion(Rng&) {
  // Tracing one site of |W^n><W^n| leaves ((n-1)/n) |W^(n-1)><W^(n-1)|
  // plus (1/n) on the all-majority ket.
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (Polarization maj : {Polarization::H, Polarization::V}) {
      const DensityMatrix w = DensityMatrix::pure(Basis::qubits(n), w_state(n, maj));
      const DensityMatrix traced = w.partial_trace({n - 1});
      DensityMatrix expect =
          DensityMatrix::pure(Basis::qubits(n - 1), w_state(n - 1, maj));
      expect.entries() *= (n - 1.0) / n;
      const std::size_t all_maj = maj == Polarization::H ? 0 : (std::size_t(1) << (n - 1)) - 1;
      expect.entries()(static_cast<Eigen::Index>(all_maj), static_cast<Eigen::Index>(all_maj)) +=
          1.0 / n;
      worst = std::max(worst, (traced.entries() - expect.entries()).cwiseAbs().maxCoeff());
    }
  }
  return {worst < 1e-12, worst};
}

Outcome check_state_invariants(Rng& rng, int n_max) {
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const double hh = rng.uniform();
    const DiagonalQubitState s(hh, 1.0 - hh);
    for (int n = 2; n <= n_max; ++n) {
      const DensityMatrix rho = rho_n(s, n);
      worst = std::max(worst, std::abs(rho.trace_real() - 1.0));
      worst = std::max(worst, rho.hermiticity_error());
      worst = std::max(worst, std::max(0.0, -rho.eigenvalues().minCoeff()));
      const DensityMatrix prod = product_power(s, n);
      worst = std::max(
          worst,
          (rho.entries().diagonal() - prod.entries().diagonal()).cwiseAbs().maxCoeff());
    }
  }
  return {worst < 1e-10, worst};
}

Outcome check_ic_xi4_oracle(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const ChannelParams p = random_nondegenerate_params(rng);
    const Q1Solution sol = solve_q1(p);
    const DensityMatrix state = xi4(sol.state);
    worst = std::max(worst,
                     std::abs(ic_xi4(p, sol) - coherent_information_oracle(p, state)));
  }
  return {worst < 1e-9, worst};
}

Outcome check_xi_2n_psd(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const double hh = rng.uniform();
    const DiagonalQubitState s(hh, 1.0 - hh);
    for (int n = 2; n <= 4; ++n) {
      const DensityMatrix xi = xi_2n(s, n);
      worst = std::max(worst, std::max(0.0, -xi.eigenvalues().minCoeff()));
      worst = std::max(worst, std::abs(xi.trace_real() - 1.0));
    }
  }
  return {worst < 1e-10, worst};
}

Outcome check_doubling_series(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const ChannelParams p = random_nondegenerate_params(rng);
    const Q1Solution sol = solve_q1(p);
    const double rr = sol.state.rho_hh * sol.state.rho_vv;
    const double m0 = doubling_series_bound(p, sol, 0);
    worst = std::max(worst, std::abs(m0 - (1.0 - p.p_h - p.p_v) * rr));
    const double m1 = doubling_series_bound(p, sol, 1);
    const double q4 = (1.0 - p.p_h - p.p_v) * rr *
                      (1.0 + 0.5 * rr * (1.0 - p.p_h - p.p_v + 2.0 * p.p_h * p.p_v));
    worst = std::max(worst, std::abs(m1 - q4));
    if (1.0 - p.p_h - p.p_v > 0.0) {
      double prev = m0;
      for (int m = 1; m <= 8; ++m) {
        const double cur = doubling_series_bound(p, sol, m);
        if (cur < prev - 1e-18) worst = std::max(worst, prev - cur);
        prev = cur;
      }
    }
  }
  return {worst < 1e-14, worst};
}

}  // namespace

std::vector<VerifyCheck> run_verification(bool full, std::uint64_t seed) {
  using Entry = std::pair<const char*, std::function<Outcome(Rng&)>>;
  std::vector<Entry> entries = {
      {"kraus-sum identity and completeness", check_kraus_sum},
      {"gram-matrix complement entropy equality", check_gram_complement},
      {"complement involution and trace preservation", check_complement_involution},
      {"filter closure f^2 + g^2 = I", check_filter_closure},
      {"diagonal coherent information vs dense oracle", check_ic_diagonal_oracle},
      {"two-shot closed form vs dense oracle", check_ic_rho2_oracle},
      {"blocked vs dense output entropy (n <= 3)",
       [](Rng& r) { return check_blocked_vs_dense(r, 3); }},
      {"w_2 equals 1 - p_h - p_v on a 101x101 grid", check_w2_identity},
      {"W-state partial-trace recursion", check_w_recursion},
      {"state invariants (PSD, trace, diagonal match)",
       [](Rng& r) { return check_state_invariants(r, 4); }},
  };
  if (full) {
    entries.push_back({"blocked vs dense output entropy (n = 4)",
                       [](Rng& r) { return check_blocked_vs_dense(r, 4); }});
    entries.push_back({"four-shot doubled-state closed form vs 81-dim oracle",
                       check_ic_xi4_oracle});
    entries.push_back({"doubled-state PSD across block lengths", check_xi_2n_psd});
    entries.push_back({"doubling series identities and monotonicity", check_doubling_series});
  }

  std::vector<VerifyCheck> results;
  results.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
    const auto start = std::chrono::steady_clock::now();
    const Outcome out = entries[i].second(rng);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(VerifyCheck{entries[i].first, out.passed,
                                  "max deviation " + format_sig(out.worst, 3), secs});
  }
  return results;
}

}  // namespace pdl
