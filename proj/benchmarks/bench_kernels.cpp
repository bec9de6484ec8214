// Wall-clock comparison of the OpenMP kernels against their serial
// reference implementations. The kernels must agree bit-for-bit; the
// numbers here are only about speed.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "pdl/region.hpp"
#include "pdl/rng.hpp"

namespace {

double best_of(int reps, const std::function<void()>& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

  pdl::Rng rng(20240811);
  for (int n = 6; n <= 8; ++n) {
    const pdl::ChannelParams p(0.7, 0.2);
    const pdl::DensityMatrix rho = pdl::random_density(rng, pdl::Basis::qubits(n));
    double serial_val = 0.0, parallel_val = 0.0;
    const double ts = best_of(3, [&] { serial_val = pdl::output_entropy_blocked_serial(p, rho); });
    const double tp = best_of(3, [&] { parallel_val = pdl::output_entropy_blocked(p, rho); });
    char name[64];
    std::snprintf(name, sizeof name, "blocked output entropy, n=%d%s", n,
                  serial_val == parallel_val ? "" : "  MISMATCH");
    std::printf("%-44s %10.4f %10.4f %7.2fx\n", name, ts, tp, ts / tp);
  }

  {
    const std::int64_t ns[] = {2, 3, 10};
    pdl::RegionGrid gs, gp;
    const double ts = best_of(2, [&] { gs = pdl::scan_serial(101, ns); });
    const double tp = best_of(2, [&] { gp = pdl::scan(101, ns); });
    const bool same = gs.w == gp.w && gs.benefit == gp.benefit &&
                      gs.superadditive == gp.superadditive && gs.q1 == gp.q1;
    char name[64];
    std::snprintf(name, sizeof name, "region scan, res=101, n={2,3,10}%s",
                  same ? "" : "  MISMATCH");
    std::printf("%-44s %10.4f %10.4f %7.2fx\n", name, ts, tp, ts / tp);
  }

  {
    pdl::BoundaryCurve bs, bp;
    const double ts = best_of(2, [&] { bs = pdl::boundary_serial(10000, 101); });
    const double tp = best_of(2, [&] { bp = pdl::boundary(10000, 101); });
    const bool same = bs.points == bp.points;
    char name[64];
    std::snprintf(name, sizeof name, "w_n boundary, n=1e4, 101 rays%s", same ? "" : "  MISMATCH");
    std::printf("%-44s %10.4f %10.4f %7.2fx\n", name, ts, tp, ts / tp);
  }

  return 0;
}
