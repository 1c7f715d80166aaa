#pragma once

#include <array>
#include <string>
#include <utility>

#include "ccqed/single_mode.hpp"

namespace ccqed {

/// One excitation block of a molecule coupled to two circularly polarised
/// modes, spanned by {|e,n1,n2>, |g,n1+1,n2>, |g,n1,n2+1>}.
struct TwoModeBlock {
  TwoModeBlock(int n1, int n2, double omega1, double omega2,
               CouplingConstant g1, CouplingConstant g2, double omega_m);

  int n1;
  int n2;
  double omega1;  // rad/s
  double omega2;  // rad/s
  CouplingConstant g1;
  CouplingConstant g2;
  double omega_m;  // rad/s
};

/// The 3x3 excitation block in joules.  The two one-photon branches never
/// couple to each other directly: entries (2,3) and (3,2) are structurally
/// zero.
linalg::HermitianMatrix two_mode_matrix(const TwoModeBlock& block);

/// Orthogonal change of basis to the collective field states
/// |F+-> = (|n+1,n> +- |n,n+1>) / sqrt(2).
struct CollectiveBasis {
  std::array<std::array<double, 3>, 3> transform;  // T, column convention
  std::array<std::string, 3> labels;
};

/// For a degenerate block (omega1 = omega2, g1 = g2, n1 = n2) rotates the
/// Hamiltonian into the basis {|e,n,n>, |g,F+>, |g,F->}.  The superradiant
/// state |F+> couples with strength sqrt(2(n+1)) hbar |g| while |F->
/// decouples entirely (zero row and column).  Throws UsageError for a
/// non-degenerate block.
std::pair<CollectiveBasis, linalg::HermitianMatrix> collective_transform(
    const TwoModeBlock& block);

/// Closed-form spectrum of the degenerate block:
///   E_1,2 = (2n + 1/2) hbar w +/- (hbar/2) sqrt(Delta^2 + 8 (n+1) |g|^2)
///   E_3   = (2n + 1) hbar w - (1/2) hbar w_M    (bare decoupled branch)
/// `energies` holds {E1, E2, E3} (dressed pair descending, decoupled branch
/// last); eigenvectors are numeric, with the E3 branch identified by its
/// overlap with |g,F->.
Eigensystem degenerate_spectrum(const TwoModeBlock& block);

/// Closed-form spectrum for omega1 = omega2 and n1 = n2 but arbitrary
/// couplings:  Omega = sqrt(Delta^2 + 4 (n+1) (|g1|^2 + |g2|^2)).
/// Ordering and labelling as in degenerate_spectrum.
Eigensystem nondegenerate_spectrum(const TwoModeBlock& block);

/// The two-mode coupling scenarios with closed-form Rabi splittings.
struct Scenario {
  enum class Kind { degenerate, imperfect, near_degenerate };

  static Scenario degenerate();
  /// Weak admixture of the opposite handedness with amplitude ratio
  /// delta_A0 / A0 in [0, 1).
  static Scenario imperfect(double amplitude_ratio);
  static Scenario near_degenerate();

  Kind kind = Kind::degenerate;
  double amplitude_ratio = 0.0;
};

/// Couplings (g1, g2) of the scenario for a molecule at position z inside a
/// cavity whose primary mode is `primary`; the secondary mode has the
/// opposite handedness and the same frequency and volume.
///   degenerate:      g1 = g2 = i (w A0/hbar) d.v            (achiral premise)
///   imperfect(r):    g1 = i (w A0/hbar)(1 + s chi) d.v1,
///                    g2 = i (w r A0/hbar)(1 - s chi) d.v2
///   near_degenerate: g1 = g + dg, g2 = g - dg with g = i (w A0/hbar) d.v,
///                    dg = chi g
/// (s = handedness sign of the primary mode.)
std::pair<CouplingConstant, CouplingConstant> scenario_couplings(
    const Scenario& scenario, const ChiralMolecule& molecule,
    const CavityMode& primary, double z);

}  // namespace ccqed
