#pragma once

#include <complex>
#include <vector>

#include "ccqed/coupling.hpp"
#include "ccqed/linalg.hpp"

namespace ccqed {

/// Parameters of one excitation block of the Jaynes-Cummings Hamiltonian,
/// spanned by {|e,n>, |g,n+1>}.  omega may be zero: spectra are then reported
/// relative to the bare photon ladder, which is convenient for sweep output.
struct JCBlock {
  JCBlock(int n, double omega, double omega_m, CouplingConstant g);

  int n;           // photon number of the excited-state branch
  double omega;    // mode angular frequency, rad/s
  double omega_m;  // molecular transition angular frequency, rad/s
  CouplingConstant g;

  double detuning() const { return omega_m - omega; }  // rad/s
};

JCBlock jc_block_avg(const ChiralMolecule& molecule, const CavityMode& mode,
                     int n);
JCBlock jc_block_at(const ChiralMolecule& molecule, const CavityMode& mode,
                    int n, double z);

/// The 2x2 excitation block in joules:
///   hbar [ n w + w_M/2        sqrt(n+1) g*   ]
///        [ sqrt(n+1) g   (n+1) w - w_M/2 ]
linalg::HermitianMatrix jc_matrix(const JCBlock& block);

/// Rabi frequency Omega = sqrt(Delta^2 + 4 (n+1) |g|^2), rad/s.
double rabi_frequency(const JCBlock& block);

/// Dressed eigensystem of an excitation block.
///
/// `energies` lists the dressed pair descending (E1 >= E2); for the
/// three-level two-mode blocks the decoupled branch E3 is appended last so
/// that labels follow the physical branch rather than the numeric order.
/// Eigenvectors come from the numeric solver, are orthonormal and ordered to
/// match `energies`; `theta` is the mixing angle recovered from the first
/// eigenvector, cos(theta) = |<e,...|E1>|, in [0, pi/2].  (The closed-form
/// tangent expression for theta is dimensionally inconsistent and is not
/// used.)
struct Eigensystem {
  std::vector<double> energies;  // J
  double rabi = 0.0;             // rad/s
  double theta = 0.0;            // rad
  std::vector<std::vector<std::complex<double>>> eigenvectors;
};

/// Energies (n + 1/2) hbar w +/- hbar Omega / 2 with numerically derived
/// eigenvectors over {|e,n>, |g,n+1>}.
Eigensystem eigensystem(const JCBlock& block);

/// Position-dependent part of the dressed state energy for an x-oriented
/// molecule: U(z) = +/- (hbar/2) Omega(z), relative to the block centre
/// (n + 1/2) hbar w.  This is the Casimir-Polder potential whose gradient
/// gives the force; state_index 1 selects the upper branch.
double cp_potential(const ChiralMolecule& molecule, const CavityMode& mode,
                    int n, double z, int state_index);

/// Full dressed energy (n + 1/2) hbar w + U(z) in J.
double oriented_state_energy(const ChiralMolecule& molecule,
                             const CavityMode& mode, int n, double z,
                             int state_index);

/// Closed-form Casimir-Polder force F_z = -dE/dz along the cavity axis, N:
///   F_z = +/- 2 hbar (n+1) k G^2 sin(kz) cos(kz) / Omega(z)
/// with G^2 the oriented coupling prefactor at the antinode; state_index 1
/// (the upper branch) takes the + sign, state_index 2 the - sign.
double cp_force(const ChiralMolecule& molecule, const CavityMode& mode, int n,
                double z, int state_index);

}  // namespace ccqed
