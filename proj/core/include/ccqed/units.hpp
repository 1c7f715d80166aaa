#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace ccqed {

enum class FrequencyUnit {
  hertz,           // cycles per second
  rad_per_second,  // angular frequency (canonical)
  wavenumber_cm,   // spectroscopic wavenumber, 1/cm
  electronvolt,    // photon energy
  wavelength_m     // vacuum wavelength
};

std::string_view unit_name(FrequencyUnit unit);

/// A frequency held canonically as an angular frequency in rad/s, remembering
/// the unit it was specified in.  Round-tripping back through any supported
/// unit reproduces the input to 1e-12 relative.
class FrequencyValue {
 public:
  /// Converts `value` expressed in `unit`.  Throws DomainError unless
  /// value > 0.
  static FrequencyValue from(double value, FrequencyUnit unit);
  static FrequencyValue from_rad_per_second(double omega);
  static FrequencyValue from_hertz(double nu);

  double omega() const { return omega_; }  // rad/s
  double hertz() const;                    // omega / 2pi

  /// Expresses the frequency in any supported unit.
  double in(FrequencyUnit unit) const;

  FrequencyUnit source_unit() const { return source_unit_; }
  double source_value() const { return source_value_; }

 private:
  FrequencyValue(double omega, FrequencyUnit unit, double value)
      : omega_(omega), source_unit_(unit), source_value_(value) {}

  double omega_;
  FrequencyUnit source_unit_;
  double source_value_;
};

/// Operation form of FrequencyValue::from.
FrequencyValue convert_frequency(double value, FrequencyUnit unit);

/// Electric transition dipole magnitude in C m, with optional cartesian
/// components.  When components are present their norm equals the magnitude
/// by construction.
class DipoleMoment {
 public:
  static DipoleMoment from_si(double magnitude);  // C m, >= 0
  static DipoleMoment from_debye(double d);       // D, >= 0
  /// Dipole of the given magnitude pointing along x.
  static DipoleMoment along_x(double magnitude_si);
  static DipoleMoment from_components(const std::array<double, 3>& si);

  double magnitude() const { return magnitude_; }  // C m
  double in_debye() const;
  const std::optional<std::array<double, 3>>& components() const {
    return components_;
  }

 private:
  DipoleMoment(double magnitude, std::optional<std::array<double, 3>> comps)
      : magnitude_(magnitude), components_(comps) {}

  double magnitude_ = 0.0;
  std::optional<std::array<double, 3>> components_;
};

/// Operation form of DipoleMoment::from_debye.
DipoleMoment debye_to_si(double d);

/// Dipole magnitude from an absorption oscillator strength f at angular
/// transition frequency omega:  |d|^2 = 3 hbar e^2 f / (2 m_e omega).
DipoleMoment oscillator_strength_to_dipole(double f, double omega);

/// Smallest cavity mode volume (lambda/2)^3 = (pi c / omega)^3 for a mode of
/// angular frequency omega.
double minimal_mode_volume(double omega);

}  // namespace ccqed
