#include "ccqed/units.hpp"

#include <cmath>
#include <string>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

namespace {

using constants::elementary_charge;
using constants::hbar;
using constants::pi;
using constants::speed_of_light;

double omega_from(double value, FrequencyUnit unit) {
  switch (unit) {
    case FrequencyUnit::hertz:
      return 2.0 * pi * value;
    case FrequencyUnit::rad_per_second:
      return value;
    case FrequencyUnit::wavenumber_cm:
      // sigma in 1/m is 100 * value
      return 2.0 * pi * speed_of_light * 100.0 * value;
    case FrequencyUnit::electronvolt:
      return value * elementary_charge / hbar;
    case FrequencyUnit::wavelength_m:
      return 2.0 * pi * speed_of_light / value;
  }
  throw UsageError("unknown frequency unit");
}

double value_from_omega(double omega, FrequencyUnit unit) {
  switch (unit) {
    case FrequencyUnit::hertz:
      return omega / (2.0 * pi);
    case FrequencyUnit::rad_per_second:
      return omega;
    case FrequencyUnit::wavenumber_cm:
      return omega / (2.0 * pi * speed_of_light * 100.0);
    case FrequencyUnit::electronvolt:
      return omega * hbar / elementary_charge;
    case FrequencyUnit::wavelength_m:
      return 2.0 * pi * speed_of_light / omega;
  }
  throw UsageError("unknown frequency unit");
}

}  // namespace

std::string_view unit_name(FrequencyUnit unit) {
  switch (unit) {
    case FrequencyUnit::hertz:
      return "Hz";
    case FrequencyUnit::rad_per_second:
      return "rad/s";
    case FrequencyUnit::wavenumber_cm:
      return "1/cm";
    case FrequencyUnit::electronvolt:
      return "eV";
    case FrequencyUnit::wavelength_m:
      return "m";
  }
  return "?";
}

FrequencyValue FrequencyValue::from(double value, FrequencyUnit unit) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError("frequency value must be positive and finite, got " +
                      std::to_string(value) + " " +
                      std::string(unit_name(unit)));
  }
  return FrequencyValue(omega_from(value, unit), unit, value);
}

FrequencyValue FrequencyValue::from_rad_per_second(double omega) {
  return from(omega, FrequencyUnit::rad_per_second);
}

FrequencyValue FrequencyValue::from_hertz(double nu) {
  return from(nu, FrequencyUnit::hertz);
}

double FrequencyValue::hertz() const { return omega_ / (2.0 * constants::pi); }

double FrequencyValue::in(FrequencyUnit unit) const {
  return value_from_omega(omega_, unit);
}

FrequencyValue convert_frequency(double value, FrequencyUnit unit) {
  return FrequencyValue::from(value, unit);
}

DipoleMoment DipoleMoment::from_si(double magnitude) {
  if (magnitude < 0.0 || !std::isfinite(magnitude)) {
    throw DomainError("dipole magnitude must be nonnegative, got " +
                      std::to_string(magnitude) + " C m");
  }
  return DipoleMoment(magnitude, std::nullopt);
}

DipoleMoment DipoleMoment::from_debye(double d) {
  if (d < 0.0 || !std::isfinite(d)) {
    throw DomainError("dipole magnitude must be nonnegative, got " +
                      std::to_string(d) + " D");
  }
  return DipoleMoment(d * constants::debye, std::nullopt);
}

DipoleMoment DipoleMoment::along_x(double magnitude_si) {
  DipoleMoment d = from_si(magnitude_si);
  d.components_ = {magnitude_si, 0.0, 0.0};
  return d;
}

DipoleMoment DipoleMoment::from_components(const std::array<double, 3>& si) {
  const double norm = std::hypot(si[0], si[1], si[2]);
  if (!std::isfinite(norm)) {
    throw DomainError("dipole components must be finite");
  }
  return DipoleMoment(norm, si);
}

double DipoleMoment::in_debye() const { return magnitude_ / constants::debye; }

DipoleMoment debye_to_si(double d) { return DipoleMoment::from_debye(d); }

DipoleMoment oscillator_strength_to_dipole(double f, double omega) {
  if (!(f > 0.0) || !std::isfinite(f)) {
    throw DomainError("oscillator strength must be positive");
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("transition frequency must be positive");
  }
  const double e = constants::elementary_charge;
  const double d_sq = 3.0 * constants::hbar * e * e * f /
                      (2.0 * constants::electron_mass * omega);
  return DipoleMoment::from_si(std::sqrt(d_sq));
}

double minimal_mode_volume(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("mode frequency must be positive");
  }
  const double half_lambda = constants::pi * constants::speed_of_light / omega;
  return half_lambda * half_lambda * half_lambda;
}

}  // namespace ccqed
