#pragma once

#include <string>

#include "ccqed/units.hpp"

namespace ccqed {

/// Dipole orientation model.  Only the two cases that admit closed forms are
/// supported: an isotropic rotational average, and both dipoles pinned along
/// the x axis.
enum class Orientation { rotational_average, fixed_x };

/// Chirality parameter from a rotatory strength R (SI, Im(d . m*)) and the
/// electric dipole:  chi = R / (c |d|^2), restricted to [-1, 1].
/// Throws DomainError for a vanishing dipole and ValidationError when the
/// result falls outside the physical range.
double chirality_parameter(double rotatory_strength, const DipoleMoment& d);

/// A chiral two-level molecule: transition frequency, transition dipole and
/// the dimensionless chirality parameter chi.  The magnetic transition
/// dipole is tied to the electric one by m / c = -i chi d, so chi is the
/// stored quantity and the rotatory strength R = chi c |d|^2 is derived.
class ChiralMolecule {
 public:
  ChiralMolecule(std::string name, FrequencyValue transition,
                 DipoleMoment dipole, double chi,
                 Orientation orientation = Orientation::rotational_average);

  const std::string& name() const { return name_; }
  double omega_m() const { return omega_m_; }  // rad/s
  const DipoleMoment& dipole() const { return dipole_; }
  double chi() const { return chi_; }
  Orientation orientation() const { return orientation_; }

  /// R = chi c |d|^2 in SI units.
  double rotatory_strength() const;

  /// The mirror-image molecule: chi -> -chi, all else unchanged.
  ChiralMolecule enantiomer() const;

 private:
  std::string name_;
  double omega_m_;
  DipoleMoment dipole_;
  double chi_;
  Orientation orientation_;
};

/// |m| / c = |chi| |d| in C m.
double magnetic_dipole_magnitude(const ChiralMolecule& molecule);

}  // namespace ccqed
