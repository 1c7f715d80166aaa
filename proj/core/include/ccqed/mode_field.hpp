#pragma once

#include <array>
#include <span>
#include <vector>

#include "ccqed/units.hpp"

namespace ccqed {

/// Sense of circular polarisation of a standing-wave cavity mode.
enum class Handedness { right, left };

/// +1 for a right-handed mode, -1 for a left-handed one.  This sign selects
/// the branch of the transverse profile and of the magnetic-field phase.
constexpr double sign(Handedness h) {
  return h == Handedness::right ? 1.0 : -1.0;
}

constexpr Handedness flipped(Handedness h) {
  return h == Handedness::right ? Handedness::left : Handedness::right;
}

/// Single-photon vector-potential amplitude sqrt(hbar / (2 eps0 omega V)) in
/// V s / m.  Throws DomainError for nonpositive inputs.
double mode_amplitude(double omega, double volume);

/// Transverse unit profile of a circularly polarised standing wave along the
/// cavity axis: v(z) = (cos kz, -sign * sin kz, 0).  |v(z)| = 1 for every z,
/// so the mode has no spatial nodes.
std::array<double, 3> mode_profile(double z, double k, Handedness handedness);

/// One circularly polarised standing-wave mode of a planar cavity whose
/// optical axis is z.
class CavityMode {
 public:
  CavityMode(FrequencyValue frequency, Handedness handedness, double volume_m3);
  CavityMode(double omega_rad_s, Handedness handedness, double volume_m3);

  double omega() const { return omega_; }          // rad/s
  Handedness handedness() const { return handedness_; }
  double volume() const { return volume_; }        // m^3
  double wavenumber() const;                       // k = omega / c, 1/m
  double amplitude() const;                        // A0, V s / m
  double wavelength() const;                       // 2 pi / k, m

  std::array<double, 3> profile(double z) const;

 private:
  double omega_;
  Handedness handedness_;
  double volume_;
};

enum class FieldNormalisation {
  unit,          // E amplitude 1, B amplitude 1/c (dimensionless plot units)
  single_photon  // E amplitude omega * A0 (V/m), B amplitude k * A0 (T)
};

/// Real-valued classical field profiles sampled over a z grid at time t.
/// Phase convention: E ~ sin(omega t), B ~ sign * cos(omega t), so the two
/// fields oscillate in quadrature.  All vectors are transverse (zero z
/// component).
struct FieldSnapshot {
  std::vector<double> z_values;  // m
  double t = 0.0;                // s
  std::vector<std::array<double, 3>> e_field;
  std::vector<std::array<double, 3>> b_field;
};

FieldSnapshot field_snapshot(const CavityMode& mode,
                             std::span<const double> z_values, double t,
                             FieldNormalisation normalisation);

}  // namespace ccqed
