#pragma once

// Fundamental constants in SI units, CODATA 2018 recommended values.
// The 2019 SI redefinition fixes h, e, N_A and c exactly; eps0 and m_e carry
// experimental uncertainty well below anything resolved here.  The values are
// fixed literals so that all derived numbers are bit-stable across builds.

namespace ccqed::constants {

inline constexpr char codata_version[] = "CODATA-2018";

inline constexpr double pi = 3.141592653589793238462643383279502884;

/// h, J s (exact): 6.62607015e-34
inline constexpr double planck = 6.62607015e-34;

/// hbar = h / 2pi, J s: 1.054571817646e-34
inline constexpr double hbar = planck / (2.0 * pi);

/// c, m/s (exact): 299792458
inline constexpr double speed_of_light = 299792458.0;

/// eps0, C^2 N^-1 m^-2: 8.8541878128e-12
inline constexpr double vacuum_permittivity = 8.8541878128e-12;

/// e, C (exact): 1.602176634e-19
inline constexpr double elementary_charge = 1.602176634e-19;

/// m_e, kg: 9.1093837015e-31
inline constexpr double electron_mass = 9.1093837015e-31;

/// N_A, mol^-1 (exact): 6.02214076e23
inline constexpr double avogadro = 6.02214076e23;

/// 1 debye in C m: 1 D = 1e-21 / c = 3.335640951982e-30
inline constexpr double debye = 1.0e-21 / speed_of_light;

}  // namespace ccqed::constants

namespace ccqed {

/// Value snapshot of the constant set, reported in output headers.
struct PhysicalConstants {
  double hbar;
  double eps0;
  double c;
  double e_charge;
  double m_electron;
  double debye;
  double avogadro;
};

constexpr PhysicalConstants physical_constants() {
  return {constants::hbar,
          constants::vacuum_permittivity,
          constants::speed_of_light,
          constants::elementary_charge,
          constants::electron_mass,
          constants::debye,
          constants::avogadro};
}

}  // namespace ccqed
