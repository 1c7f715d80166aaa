// ccqed: command-line front end for the chiral cavity QED library.
//
// Subcommands: table, spectrum, force, fields.  All output is UTF-8 CSV (or
// JSON for `table --format json`) with a '#'-prefixed configuration header,
// written to stdout or to --output.  Exit codes: 0 success, 2 usage or
// configuration error, 3 data or validation error, 4 numeric failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccqed/emitters.hpp"
#include "ccqed/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

std::string default_db_path() {
  if (const char* env = std::getenv("CCQED_DB")) {
    return env;
  }
  if (std::filesystem::exists(CCQED_SOURCE_DB_PATH)) {
    return CCQED_SOURCE_DB_PATH;
  }
  return CCQED_INSTALLED_DB_PATH;
}

ccqed::Handedness parse_handedness(const std::string& name) {
  if (name == "right") return ccqed::Handedness::right;
  if (name == "left") return ccqed::Handedness::left;
  throw ccqed::UsageError("handedness must be 'left' or 'right'");
}

/// Emits to stdout or to the configured file.
int write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "ccqed: cannot open output file " << path << "\n";
    return kExitUsage;
  }
  out << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strong coupling of a chiral molecule to circularly polarised "
               "cavity modes: splittings, spectra, forces and fields"};
  app.require_subcommand(1);

  std::string output_path;

  // --- table ---------------------------------------------------------------
  ccqed::cli::TableConfig table_cfg;
  table_cfg.db_path = default_db_path();
  std::string table_format = "csv";
  CLI::App* table = app.add_subcommand(
      "table", "Rabi splittings, chiral shifts and resolving powers for the "
               "molecule database");
  table->add_option("--db", table_cfg.db_path, "molecule database (JSON)")
      ->capture_default_str();
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  table->add_option("-o,--output", output_path, "output file (default stdout)");

  // --- spectrum --------------------------------------------------------------
  ccqed::cli::SpectrumConfig spec_cfg;
  spec_cfg.points = 201;
  std::string scenario_name = "single";
  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "Dressed eigenenergies versus coupling strength");
  spectrum->add_option("--scenario", scenario_name, "coupling scenario")
      ->check(CLI::IsMember(
          {"single", "degenerate", "imperfect", "near_degenerate"}))
      ->capture_default_str();
  spectrum->add_option("--n", spec_cfg.n, "photon number per mode")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  spectrum->add_option("--omega", spec_cfg.omega,
                       "mode frequency in rad/s (0 = report energies "
                       "relative to the bare photon ladder)")
      ->capture_default_str();
  spectrum->add_option("--detuning", spec_cfg.detuning,
                       "molecule-mode detuning in rad/s")
      ->capture_default_str();
  spectrum->add_option("--g-max", spec_cfg.g_max, "sweep end in rad/s")
      ->required();
  spectrum->add_option("--points", spec_cfg.points, "sweep points (>= 2)")
      ->capture_default_str();
  spectrum->add_option("--chi", spec_cfg.chi, "chirality parameter in [-1, 1]")
      ->check(CLI::Range(-1.0, 1.0))
      ->capture_default_str();
  spectrum->add_option("--delta-ratio", spec_cfg.delta_ratio,
                       "imperfect cavity amplitude ratio delta_A0/A0")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  spectrum->add_option("-o,--output", output_path,
                       "output file (default stdout)");

  // --- force -----------------------------------------------------------------
  ccqed::cli::ForceConfig force_cfg;
  force_cfg.db_path = default_db_path();
  force_cfg.points = 201;
  std::string force_handedness = "right";
  CLI::App* force = app.add_subcommand(
      "force", "Casimir-Polder force profile along the cavity axis");
  auto* by_name = force->add_option("--molecule", force_cfg.molecule_name,
                                    "molecule name from the database");
  force->add_option("--db", force_cfg.db_path,
                    "molecule database for --molecule lookups")
      ->capture_default_str();
  auto* inline_nu = force->add_option("--nu", force_cfg.nu,
                                      "inline molecule: transition frequency "
                                      "in Hz");
  force->add_option("--d", force_cfg.d_debye,
                    "inline molecule: transition dipole in debye");
  force->add_option("--chi", force_cfg.chi,
                    "inline molecule: chirality parameter")
      ->check(CLI::Range(-1.0, 1.0))
      ->capture_default_str();
  double force_volume = 0.0;
  auto* volume_opt = force->add_option(
      "--volume", force_volume,
      "cavity mode volume in m^3 (default: minimal volume (lambda/2)^3)");
  force->add_option("--handedness", force_handedness, "mode handedness")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  force->add_option("--n", force_cfg.n, "photon number")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  force->add_option("--detuning", force_cfg.detuning,
                    "molecule-mode detuning in rad/s")
      ->capture_default_str();
  force->add_option("--z-min", force_cfg.z_min, "grid start in m")->required();
  force->add_option("--z-max", force_cfg.z_max, "grid end in m")->required();
  force->add_option("--points", force_cfg.points, "grid points (>= 2)")
      ->capture_default_str();
  force->add_option("--state", force_cfg.state, "dressed branch, 1 (upper) or 2")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  force->add_option("-o,--output", output_path,
                    "output file (default stdout)");
  by_name->excludes(inline_nu);

  // --- fields ------------------------------------------------------------------
  ccqed::cli::FieldsConfig fields_cfg;
  fields_cfg.points = 201;
  std::string fields_handedness = "right";
  std::string fields_normalisation = "unit";
  CLI::App* fields = app.add_subcommand(
      "fields", "Electric and magnetic field snapshots over one wavelength");
  fields->add_option("--nu", fields_cfg.nu, "mode frequency in Hz")->required();
  fields->add_option("--volume", fields_cfg.volume, "mode volume in m^3")
      ->required();
  fields->add_option("--handedness", fields_handedness, "mode handedness")
      ->check(CLI::IsMember({"left", "right"}))
      ->capture_default_str();
  fields->add_option("--times", fields_cfg.times,
                     "snapshot times as fractions of the optical period")
      ->delimiter(',')
      ->capture_default_str();
  fields->add_option("--points", fields_cfg.points, "z samples (>= 2)")
      ->capture_default_str();
  fields->add_option("--normalisation", fields_normalisation,
                     "field amplitude normalisation")
      ->check(CLI::IsMember({"unit", "single_photon"}))
      ->capture_default_str();
  fields->add_option("-o,--output", output_path,
                     "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::ostringstream out;
    if (table->parsed()) {
      table_cfg.format = table_format == "json"
                             ? ccqed::cli::TableFormat::json
                             : ccqed::cli::TableFormat::csv;
      ccqed::cli::cmd_table(table_cfg, out);
    } else if (spectrum->parsed()) {
      spec_cfg.scenario = ccqed::cli::parse_spectrum_scenario(scenario_name);
      ccqed::cli::cmd_spectrum(spec_cfg, out);
    } else if (force->parsed()) {
      force_cfg.handedness = parse_handedness(force_handedness);
      if (volume_opt->count() > 0) {
        force_cfg.volume = force_volume;
      }
      ccqed::cli::cmd_force(force_cfg, out);
    } else if (fields->parsed()) {
      fields_cfg.handedness = parse_handedness(fields_handedness);
      fields_cfg.normalisation = fields_normalisation == "single_photon"
                                     ? ccqed::FieldNormalisation::single_photon
                                     : ccqed::FieldNormalisation::unit;
      ccqed::cli::cmd_fields(fields_cfg, out);
    }
    return write_output(output_path, out.str());
  } catch (const ccqed::UsageError& e) {
    std::cerr << "ccqed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ccqed::DomainError& e) {
    std::cerr << "ccqed: " << e.what() << "\n";
    return kExitData;
  } catch (const ccqed::ValidationError& e) {
    std::cerr << "ccqed: " << e.what() << "\n";
    return kExitData;
  } catch (const ccqed::NumericError& e) {
    std::cerr << "ccqed: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "ccqed: unexpected error: " << e.what() << "\n";
    return 1;
  }
}
