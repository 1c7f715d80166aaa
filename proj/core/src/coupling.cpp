#include "ccqed/coupling.hpp"

#include <cmath>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

namespace {

/// omega A0 / hbar scaled by the dipole magnitude, in rad/s per unit of the
/// dimensionless orientation factor.
double coupling_scale(const CavityMode& mode) {
  return mode.omega() * mode.amplitude() / constants::hbar;
}

double chiral_factor(const ChiralMolecule& molecule, const CavityMode& mode) {
  return 1.0 + sign(mode.handedness()) * molecule.chi();
}

}  // namespace

CouplingConstant CouplingConstant::from_magnitude_sq(double magnitude_sq) {
  if (!(magnitude_sq >= 0.0) || !std::isfinite(magnitude_sq)) {
    throw DomainError("squared coupling must be nonnegative");
  }
  return CouplingConstant({0.0, std::sqrt(magnitude_sq)});
}

double CouplingConstant::magnitude() const { return std::abs(value_); }

CouplingConstant coupling_at(const ChiralMolecule& molecule,
                             const CavityMode& mode, double z) {
  const auto& components = molecule.dipole().components();
  if (!components.has_value()) {
    throw UsageError(
        "position-resolved coupling needs a definite dipole orientation; "
        "use coupling_avg_sq for a rotationally averaged molecule");
  }
  const std::array<double, 3> v = mode.profile(z);
  const std::array<double, 3>& d = *components;
  const double projection = d[0] * v[0] + d[1] * v[1] + d[2] * v[2];
  const double g =
      coupling_scale(mode) * chiral_factor(molecule, mode) * projection;
  return CouplingConstant({0.0, g});
}

double coupling_avg_sq(const ChiralMolecule& molecule, const CavityMode& mode) {
  const double scale =
      coupling_scale(mode) * chiral_factor(molecule, mode) *
      molecule.dipole().magnitude();
  return scale * scale / 3.0;
}

double coupling_oriented_sq(const ChiralMolecule& molecule,
                            const CavityMode& mode, double z) {
  if (molecule.orientation() != Orientation::fixed_x) {
    throw UsageError("oriented coupling requires the fixed_x orientation");
  }
  const double dx = (*molecule.dipole().components())[0];
  const double c = std::cos(mode.wavenumber() * z);
  const double scale =
      coupling_scale(mode) * chiral_factor(molecule, mode) * dx * c;
  return scale * scale;
}

}  // namespace ccqed
