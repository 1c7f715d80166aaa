#include "ccqed/mode_field.hpp"

#include <cmath>
#include <string>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

double mode_amplitude(double omega, double volume) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("mode frequency must be positive");
  }
  if (!(volume > 0.0) || !std::isfinite(volume)) {
    throw DomainError("mode volume must be positive");
  }
  return std::sqrt(constants::hbar /
                   (2.0 * constants::vacuum_permittivity * omega * volume));
}

std::array<double, 3> mode_profile(double z, double k, Handedness handedness) {
  return {std::cos(k * z), -sign(handedness) * std::sin(k * z), 0.0};
}

CavityMode::CavityMode(FrequencyValue frequency, Handedness handedness,
                       double volume_m3)
    : omega_(frequency.omega()), handedness_(handedness), volume_(volume_m3) {
  if (!(volume_ > 0.0) || !std::isfinite(volume_)) {
    throw DomainError("mode volume must be positive, got " +
                      std::to_string(volume_m3) + " m^3");
  }
}

CavityMode::CavityMode(double omega_rad_s, Handedness handedness,
                       double volume_m3)
    : CavityMode(FrequencyValue::from_rad_per_second(omega_rad_s), handedness,
                 volume_m3) {}

double CavityMode::wavenumber() const {
  return omega_ / constants::speed_of_light;
}

double CavityMode::amplitude() const { return mode_amplitude(omega_, volume_); }

double CavityMode::wavelength() const {
  return 2.0 * constants::pi / wavenumber();
}

std::array<double, 3> CavityMode::profile(double z) const {
  return mode_profile(z, wavenumber(), handedness_);
}

FieldSnapshot field_snapshot(const CavityMode& mode,
                             std::span<const double> z_values, double t,
                             FieldNormalisation normalisation) {
  if (z_values.empty()) {
    throw UsageError("field snapshot needs at least one z sample");
  }
  if (!std::isfinite(t)) {
    throw DomainError("snapshot time must be finite");
  }

  double e_amp = 1.0;
  double b_amp = 1.0 / constants::speed_of_light;
  if (normalisation == FieldNormalisation::single_photon) {
    const double a0 = mode.amplitude();
    e_amp = mode.omega() * a0;
    b_amp = mode.wavenumber() * a0;
  }

  const double s = sign(mode.handedness());
  const double e_t = e_amp * std::sin(mode.omega() * t);
  const double b_t = s * b_amp * std::cos(mode.omega() * t);

  FieldSnapshot snap;
  snap.z_values.assign(z_values.begin(), z_values.end());
  snap.t = t;
  snap.e_field.reserve(z_values.size());
  snap.b_field.reserve(z_values.size());
  for (const double z : z_values) {
    const std::array<double, 3> v = mode.profile(z);
    snap.e_field.push_back({e_t * v[0], e_t * v[1], 0.0});
    snap.b_field.push_back({b_t * v[0], b_t * v[1], 0.0});
  }
  return snap;
}

}  // namespace ccqed
