#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "pdl/density_matrix.hpp"

namespace pdl {

// mt19937_64 with explicit output mapping so sampled streams are identical
// across standard libraries (std distributions are not portable).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double normal() {
    // Box-Muller; one value per call keeps the stream simple.
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

// Ginibre construction: G G^dag / tr, always PSD with unit trace.
DensityMatrix random_density(Rng& rng, const Basis& basis);

// QR of a complex Gaussian matrix with the standard phase fix.
Eigen::MatrixXcd random_unitary(Rng& rng, int dim);

}  // namespace pdl
