#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccqed/estimates.hpp"
#include "ccqed/mode_field.hpp"
#include "ccqed/two_mode.hpp"

// Deterministic CSV/JSON emitters behind the ccqed command-line tool.  Every
// CSV stream starts with a '#'-prefixed header block that records the tool
// version, the constants version and the fully resolved configuration, then
// one comma-separated header line and the data rows.  Floats are printed in
// scientific notation with 12 significant digits, so identical configurations
// produce byte-identical output.

namespace ccqed::cli {

inline constexpr char version[] = "0.1.0";

/// "%.11e" rendering used for every floating-point field.
std::string format_sci(double value);

/// Uniform grid from lo to hi inclusive; points >= 2 and lo < hi.
std::vector<double> linspace(double lo, double hi, int points);

enum class TableFormat { csv, json };

struct TableConfig {
  std::string db_path;
  TableFormat format = TableFormat::csv;
};

/// One row per database record: inputs (nu, d, V) plus the Rabi splitting,
/// the chiral shift (both in rad/s and in Hz) and the resolving power.  The
/// resolving-power field is empty for achiral records.
void cmd_table(const TableConfig& config, std::ostream& out);

enum class SpectrumScenario { single, degenerate, imperfect, near_degenerate };

SpectrumScenario parse_spectrum_scenario(const std::string& name);

struct SpectrumConfig {
  SpectrumScenario scenario = SpectrumScenario::single;
  int n = 0;               // photon number per mode
  double omega = 0.0;      // mode frequency, rad/s; 0 reports energies
                           // relative to the bare photon ladder
  double detuning = 0.0;   // omega_M - omega, rad/s
  double g_max = 0.0;      // sweep end, rad/s
  int points = 0;
  double chi = 0.0;        // molecular chirality parameter
  double delta_ratio = 0.4;  // imperfect cavity: delta_A0 / A0
};

/// Eigenenergy sweep over the achiral coupling magnitude g in [0, g_max].
/// Each scenario applies its own chiral factors to g:
///   single          g (1 + chi)          (right-handed mode)
///   degenerate      g1 = g2 = g
///   imperfect       g1 = g (1 + chi), g2 = r g (1 - chi)
///   near_degenerate g1 = g (1 + chi), g2 = g (1 - chi)
/// Columns: g_rads, E1_over_hbar_rads, E2_over_hbar_rads, E3_over_hbar_rads
/// (E3 empty for the single-mode scenario).
void cmd_spectrum(const SpectrumConfig& config, std::ostream& out);

struct ForceConfig {
  // either a database name ...
  std::string molecule_name;
  std::string db_path;
  // ... or inline parameters
  double nu = 0.0;      // Hz
  double d_debye = 0.0;
  double chi = 0.01;
  std::optional<double> volume;  // m^3, default (lambda/2)^3

  Handedness handedness = Handedness::right;
  int n = 0;
  double detuning = 0.0;  // rad/s
  double z_min = 0.0;     // m
  double z_max = 0.0;     // m
  int points = 0;
  int state = 1;
};

/// Casimir-Polder force profile for an x-oriented molecule, with the
/// independent finite-difference column alongside the closed form.
/// Columns: z_m, kz_rad, F_z_newton, F_z_fd_newton.
void cmd_force(const ForceConfig& config, std::ostream& out);

struct FieldsConfig {
  double nu = 0.0;      // Hz
  double volume = 0.0;  // m^3
  Handedness handedness = Handedness::right;
  std::vector<double> times = {0.0, 0.25, 0.5, 0.75};  // period fractions
  int points = 0;       // z samples over one wavelength
  FieldNormalisation normalisation = FieldNormalisation::unit;
};

/// Transverse field snapshots over one wavelength at the requested period
/// fractions.  Columns: t_frac, z_m, Ex, Ey, Bx, By (the z components vanish
/// identically and are omitted).
void cmd_fields(const FieldsConfig& config, std::ostream& out);

}  // namespace ccqed::cli
