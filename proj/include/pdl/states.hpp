#pragma once

#include "pdl/density_matrix.hpp"

namespace pdl {

enum class Polarization { H, V };

// Normalized diagonal qubit state diag(rho_hh, rho_vv).
struct DiagonalQubitState {
  double rho_hh;
  double rho_vv;
  DiagonalQubitState(double hh, double vv);
};

// Equal-amplitude superposition of the n basis vectors holding exactly one
// minority-polarization photon; n = 1 degenerates to the minority ket.
Eigen::VectorXcd w_state(int n, Polarization majority = Polarization::H);

// (diag state)^{tensor n}.
DensityMatrix product_power(const DiagonalQubitState& s, int n);

// Product state plus rho_hh*rho_vv (|HV><VH| + |VH><HV|).
DensityMatrix rho2(const DiagonalQubitState& s);

// Agrees with the product state outside the single-minority subspace; inside
// it is the rank-1 operator n rho_maj^{n-1} rho_min |W><W|. Same diagonal as
// the product state. Degenerate inputs (rho_hh in {0,1}) simply reproduce
// the product state.
DensityMatrix rho_n(const DiagonalQubitState& s, int n,
                    Polarization majority = Polarization::H);

// rho2 x rho2 plus (rho_hh rho_vv)^2 (|HHVV><VVHH| + h.c.).
DensityMatrix xi4(const DiagonalQubitState& s);

// (rho_n)^{x2} plus a coherence between |maj^n min^n> and |min^n maj^n>
// whose weight equals their common diagonal entry (rho_hh rho_vv)^n.
// Oracle-scale only: 2n <= 8.
DensityMatrix xi_2n(const DiagonalQubitState& s, int n,
                    Polarization majority = Polarization::H);

}  // namespace pdl
