#pragma once

#include <complex>

#include "ccqed/mode_field.hpp"
#include "ccqed/molecule.hpp"

namespace ccqed {

/// Molecule-mode coupling constant g in rad/s (the coupling energy is
/// hbar g).  g = i (omega A0 / hbar) (1 + sign * chi) d . v(z), where sign is
/// the mode handedness; the chiral factor enhances the coupling when the
/// handedness of molecule and mode match and reduces it otherwise.
class CouplingConstant {
 public:
  explicit CouplingConstant(std::complex<double> value)
      : value_(value), magnitude_sq_(std::norm(value)) {}

  /// Coupling of known squared magnitude, given the conventional i phase.
  static CouplingConstant from_magnitude_sq(double magnitude_sq);

  std::complex<double> value() const { return value_; }  // rad/s
  double magnitude_sq() const { return magnitude_sq_; }  // rad^2/s^2
  double magnitude() const;

 private:
  std::complex<double> value_;
  double magnitude_sq_;
};

/// Position-resolved coupling for a molecule with definite dipole
/// orientation.  Throws UsageError for a rotationally averaged molecule
/// (use coupling_avg_sq for that case).
CouplingConstant coupling_at(const ChiralMolecule& molecule,
                             const CavityMode& mode, double z);

/// Rotationally averaged squared coupling,
/// |g|^2 = (omega A0 / hbar)^2 |d|^2 (1 + sign * chi)^2 / 3.
/// Position independent.
double coupling_avg_sq(const ChiralMolecule& molecule, const CavityMode& mode);

/// Squared coupling for dipoles pinned along x,
/// |g|^2(z) = (omega A0 / hbar)^2 d_x^2 (1 + sign * chi)^2 cos^2(kz).
double coupling_oriented_sq(const ChiralMolecule& molecule,
                            const CavityMode& mode, double z);

}  // namespace ccqed
