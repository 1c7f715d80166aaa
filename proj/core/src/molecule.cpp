#include "ccqed/molecule.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

double chirality_parameter(double rotatory_strength, const DipoleMoment& d) {
  if (!(d.magnitude() > 0.0)) {
    throw DomainError("chirality parameter is undefined for a zero dipole");
  }
  const double chi = rotatory_strength /
                     (constants::speed_of_light * d.magnitude() * d.magnitude());
  // admit the boundary chi = +/-1 up to rounding of the division
  if (!(std::abs(chi) <= 1.0 + 1e-12)) {
    throw ValidationError("rotatory strength implies |chi| > 1, got chi = " +
                          std::to_string(chi));
  }
  return std::clamp(chi, -1.0, 1.0);
}

ChiralMolecule::ChiralMolecule(std::string name, FrequencyValue transition,
                               DipoleMoment dipole, double chi,
                               Orientation orientation)
    : name_(std::move(name)),
      omega_m_(transition.omega()),
      dipole_(std::move(dipole)),
      chi_(chi),
      orientation_(orientation) {
  if (!(std::abs(chi_) <= 1.0)) {
    throw ValidationError("chirality parameter must lie in [-1, 1], got " +
                          std::to_string(chi_));
  }
  // The orientation variant owns the component picture: fixed_x pins the
  // dipole along x, the rotational average has no definite components.
  if (orientation_ == Orientation::fixed_x) {
    dipole_ = DipoleMoment::along_x(dipole_.magnitude());
  } else {
    dipole_ = DipoleMoment::from_si(dipole_.magnitude());
  }
}

double ChiralMolecule::rotatory_strength() const {
  return chi_ * constants::speed_of_light * dipole_.magnitude() *
         dipole_.magnitude();
}

ChiralMolecule ChiralMolecule::enantiomer() const {
  ChiralMolecule mirror = *this;
  mirror.chi_ = -chi_;
  return mirror;
}

double magnetic_dipole_magnitude(const ChiralMolecule& molecule) {
  return std::abs(molecule.chi()) * molecule.dipole().magnitude();
}

}  // namespace ccqed
