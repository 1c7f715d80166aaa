#include "ccqed/emitters.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

#include <json.hpp>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"
#include "ccqed/single_mode.hpp"

namespace ccqed::cli {

namespace {

using constants::hbar;
using constants::pi;

void write_header(std::ostream& out, const std::string& command,
                  const std::vector<std::pair<std::string, std::string>>& kv) {
  out << "# ccqed " << command << " v" << version << "\n";
  out << "# constants=" << constants::codata_version << "\n";
  for (const auto& [key, value] : kv) {
    out << "# " << key << "=" << value << "\n";
  }
}

std::string handedness_name(Handedness h) {
  return h == Handedness::right ? "right" : "left";
}

const char* scenario_name(SpectrumScenario s) {
  switch (s) {
    case SpectrumScenario::single:
      return "single";
    case SpectrumScenario::degenerate:
      return "degenerate";
    case SpectrumScenario::imperfect:
      return "imperfect";
    case SpectrumScenario::near_degenerate:
      return "near_degenerate";
  }
  return "?";
}

void check_sweep(int points, double lo, double hi) {
  if (points < 2) {
    throw UsageError("sweep needs at least 2 points, got " +
                     std::to_string(points));
  }
  if (!(lo < hi)) {
    throw UsageError("sweep range must satisfy min < max");
  }
}

}  // namespace

std::string format_sci(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", value);
  return buf;
}

std::vector<double> linspace(double lo, double hi, int points) {
  check_sweep(points, lo, hi);
  std::vector<double> grid(points);
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[i] = lo + i * step;
  grid.back() = hi;
  return grid;
}

void cmd_table(const TableConfig& config, std::ostream& out) {
  const std::vector<MoleculeRecord> records = load_database(config.db_path);

  if (config.format == TableFormat::json) {
    nlohmann::ordered_json doc;
    doc["command"] = "table";
    doc["version"] = version;
    doc["constants"] = constants::codata_version;
    doc["db"] = config.db_path;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& rec : records) {
      const EstimateRow row = estimate(rec);
      nlohmann::ordered_json r;
      r["name"] = rec.name;
      r["nu_hz"] = rec.nu;
      r["d_debye"] = rec.d;
      r["volume_m3"] = resolved_volume(rec);
      r["omega_rabi_rads"] = row.omega_rabi;
      r["chiral_shift_rads"] = row.chiral_shift;
      r["omega_rabi_hz"] = row.omega_rabi / (2.0 * pi);
      r["chiral_shift_hz"] = row.chiral_shift / (2.0 * pi);
      if (row.resolving_power.has_value()) {
        r["resolving_power"] = *row.resolving_power;
      } else {
        r["resolving_power"] = nullptr;
      }
      doc["rows"].push_back(std::move(r));
    }
    out << doc.dump(2) << "\n";
    return;
  }

  write_header(out, "table", {{"db", config.db_path}, {"format", "csv"}});
  out << "name,nu_hz,d_debye,volume_m3,omega_rabi_rads,chiral_shift_rads,"
         "omega_rabi_hz,chiral_shift_hz,resolving_power\n";
  for (const auto& rec : records) {
    const EstimateRow row = estimate(rec);
    out << rec.name << ',' << format_sci(rec.nu) << ',' << format_sci(rec.d)
        << ',' << format_sci(resolved_volume(rec)) << ','
        << format_sci(row.omega_rabi) << ',' << format_sci(row.chiral_shift)
        << ',' << format_sci(row.omega_rabi / (2.0 * pi)) << ','
        << format_sci(row.chiral_shift / (2.0 * pi)) << ',';
    if (row.resolving_power.has_value()) {
      out << format_sci(*row.resolving_power);
    }
    out << '\n';
  }
}

SpectrumScenario parse_spectrum_scenario(const std::string& name) {
  if (name == "single") return SpectrumScenario::single;
  if (name == "degenerate") return SpectrumScenario::degenerate;
  if (name == "imperfect") return SpectrumScenario::imperfect;
  if (name == "near_degenerate") return SpectrumScenario::near_degenerate;
  throw UsageError("unknown scenario '" + name +
                   "'; valid scenarios: single, degenerate, imperfect, "
                   "near_degenerate");
}

void cmd_spectrum(const SpectrumConfig& config, std::ostream& out) {
  check_sweep(config.points, 0.0, config.g_max);
  if (config.n < 0) {
    throw UsageError("photon number must be nonnegative");
  }
  if (!(std::abs(config.chi) <= 1.0)) {
    throw UsageError("chi must lie in [-1, 1]");
  }
  if (config.scenario == SpectrumScenario::imperfect &&
      !(config.delta_ratio >= 0.0 && config.delta_ratio < 1.0)) {
    throw UsageError("delta-ratio must lie in [0, 1)");
  }

  const double omega_m = config.omega + config.detuning;
  write_header(out, "spectrum",
               {{"scenario", scenario_name(config.scenario)},
                {"n", std::to_string(config.n)},
                {"omega_rads", format_sci(config.omega)},
                {"detuning_rads", format_sci(config.detuning)},
                {"g_max_rads", format_sci(config.g_max)},
                {"points", std::to_string(config.points)},
                {"chi", format_sci(config.chi)},
                {"delta_ratio", format_sci(config.delta_ratio)}});
  out << "g_rads,E1_over_hbar_rads,E2_over_hbar_rads,E3_over_hbar_rads\n";

  for (const double g : linspace(0.0, config.g_max, config.points)) {
    const double enhanced = g * (1.0 + config.chi);
    const double reduced = g * (1.0 - config.chi);
    double e1 = 0.0, e2 = 0.0, e3 = 0.0;
    bool has_e3 = true;
    switch (config.scenario) {
      case SpectrumScenario::single: {
        const JCBlock block(config.n, config.omega, omega_m,
                            CouplingConstant({0.0, enhanced}));
        const double rabi = rabi_frequency(block);
        const double centre = (config.n + 0.5) * config.omega;
        e1 = centre + 0.5 * rabi;
        e2 = centre - 0.5 * rabi;
        has_e3 = false;
        break;
      }
      case SpectrumScenario::degenerate: {
        const TwoModeBlock block(config.n, config.n, config.omega, config.omega,
                                 CouplingConstant({0.0, g}),
                                 CouplingConstant({0.0, g}), omega_m);
        const Eigensystem sys = degenerate_spectrum(block);
        e1 = sys.energies[0] / hbar;
        e2 = sys.energies[1] / hbar;
        e3 = sys.energies[2] / hbar;
        break;
      }
      case SpectrumScenario::imperfect:
      case SpectrumScenario::near_degenerate: {
        const double g2 = config.scenario == SpectrumScenario::imperfect
                              ? config.delta_ratio * reduced
                              : reduced;
        const TwoModeBlock block(config.n, config.n, config.omega, config.omega,
                                 CouplingConstant({0.0, enhanced}),
                                 CouplingConstant({0.0, g2}), omega_m);
        const Eigensystem sys = nondegenerate_spectrum(block);
        e1 = sys.energies[0] / hbar;
        e2 = sys.energies[1] / hbar;
        e3 = sys.energies[2] / hbar;
        break;
      }
    }
    out << format_sci(g) << ',' << format_sci(e1) << ',' << format_sci(e2)
        << ',';
    if (has_e3) {
      out << format_sci(e3);
    }
    out << '\n';
  }
}

void cmd_force(const ForceConfig& config, std::ostream& out) {
  MoleculeRecord record;
  if (!config.molecule_name.empty()) {
    const std::vector<MoleculeRecord> records = load_database(config.db_path);
    bool found = false;
    for (const auto& rec : records) {
      if (rec.name == config.molecule_name) {
        record = rec;
        found = true;
        break;
      }
    }
    if (!found) {
      throw ValidationError("molecule '" + config.molecule_name +
                            "' not found in database " + config.db_path);
    }
  } else {
    record.name = "inline";
    record.nu = config.nu;
    record.d = config.d_debye;
    record.chi = config.chi;
    record.volume = config.volume;
    if (!(record.nu > 0.0)) {
      throw UsageError("force needs --molecule or a positive inline --nu");
    }
  }

  const ChiralMolecule molecule(record.name,
                                FrequencyValue::from_hertz(record.nu),
                                DipoleMoment::from_debye(record.d), record.chi,
                                Orientation::fixed_x);
  const double omega_mode = molecule.omega_m() - config.detuning;
  if (!(omega_mode > 0.0)) {
    throw UsageError("detuning leaves a nonpositive mode frequency");
  }
  const CavityMode mode(omega_mode, config.handedness, resolved_volume(record));
  const std::vector<double> grid =
      linspace(config.z_min, config.z_max, config.points);

  const double k = mode.wavenumber();
  const double h = 1e-6 / k;  // scale-free step for the difference column

  write_header(out, "force",
               {{"molecule", record.name},
                {"nu_hz", format_sci(record.nu)},
                {"d_debye", format_sci(record.d)},
                {"chi", format_sci(record.chi)},
                {"volume_m3", format_sci(resolved_volume(record))},
                {"handedness", handedness_name(config.handedness)},
                {"n", std::to_string(config.n)},
                {"detuning_rads", format_sci(config.detuning)},
                {"state", std::to_string(config.state)},
                {"z_min_m", format_sci(config.z_min)},
                {"z_max_m", format_sci(config.z_max)},
                {"points", std::to_string(config.points)},
                {"fd_step_m", format_sci(h)}});
  out << "z_m,kz_rad,F_z_newton,F_z_fd_newton\n";

  for (const double z : grid) {
    const double force = cp_force(molecule, mode, config.n, z, config.state);
    const double fd = -linalg::central_diff(
        [&](double zz) {
          return cp_potential(molecule, mode, config.n, zz, config.state);
        },
        z, h);
    out << format_sci(z) << ',' << format_sci(k * z) << ','
        << format_sci(force) << ',' << format_sci(fd) << '\n';
  }
}

void cmd_fields(const FieldsConfig& config, std::ostream& out) {
  if (config.times.empty()) {
    throw UsageError("fields needs at least one snapshot time");
  }
  for (const double t : config.times) {
    if (!std::isfinite(t)) {
      throw UsageError("snapshot times must be finite period fractions");
    }
  }
  const CavityMode mode(FrequencyValue::from_hertz(config.nu),
                        config.handedness, config.volume);
  const std::vector<double> grid = linspace(0.0, mode.wavelength(),
                                            config.points);
  const double period = 2.0 * pi / mode.omega();

  std::string times_text;
  for (std::size_t i = 0; i < config.times.size(); ++i) {
    if (i > 0) times_text += ' ';
    times_text += format_sci(config.times[i]);
  }
  write_header(
      out, "fields",
      {{"nu_hz", format_sci(config.nu)},
       {"volume_m3", format_sci(config.volume)},
       {"handedness", handedness_name(config.handedness)},
       {"times_frac", times_text},
       {"points", std::to_string(config.points)},
       {"normalisation", config.normalisation == FieldNormalisation::unit
                             ? "unit"
                             : "single_photon"},
       {"phase_convention", "E~sin(wt), B~sign*cos(wt)"}});
  out << "t_frac,z_m,Ex,Ey,Bx,By\n";

  for (const double frac : config.times) {
    const FieldSnapshot snap =
        field_snapshot(mode, grid, frac * period, config.normalisation);
    for (std::size_t i = 0; i < snap.z_values.size(); ++i) {
      out << format_sci(frac) << ',' << format_sci(snap.z_values[i]) << ','
          << format_sci(snap.e_field[i][0]) << ','
          << format_sci(snap.e_field[i][1]) << ','
          << format_sci(snap.b_field[i][0]) << ','
          << format_sci(snap.b_field[i][1]) << '\n';
    }
  }
}

}  // namespace ccqed::cli
