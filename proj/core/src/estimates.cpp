#include "ccqed/estimates.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

namespace {

using constants::hbar;
using constants::pi;
using constants::speed_of_light;
using constants::vacuum_permittivity;

void check_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive, got " +
                      std::to_string(value));
  }
}

[[noreturn]] void record_error(const std::string& where,
                               const std::string& message) {
  throw ValidationError("molecule record " + where + ": " + message);
}

MoleculeRecord parse_record(const nlohmann::json& j, std::size_t index) {
  const std::string where =
      (j.is_object() && j.contains("name") && j["name"].is_string())
          ? "'" + j["name"].get<std::string>() + "'"
          : "#" + std::to_string(index);
  if (!j.is_object()) {
    record_error(where, "expected a JSON object");
  }

  static const std::set<std::string> known = {"name", "nu",     "d",
                                              "chi",  "volume", "notes"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.contains(key)) {
      record_error(where, "unknown field '" + key + "'");
    }
  }

  MoleculeRecord rec;
  if (!j.contains("name") || !j["name"].is_string()) {
    record_error(where, "field 'name' must be a string");
  }
  rec.name = j["name"].get<std::string>();
  if (!j.contains("nu") || !j["nu"].is_number()) {
    record_error(where, "field 'nu' (Hz) must be a number");
  }
  rec.nu = j["nu"].get<double>();
  if (!(rec.nu > 0.0) || !std::isfinite(rec.nu)) {
    record_error(where, "field 'nu' must be positive");
  }
  if (!j.contains("d") || !j["d"].is_number()) {
    record_error(where, "field 'd' (debye) must be a number");
  }
  rec.d = j["d"].get<double>();
  if (rec.d < 0.0 || !std::isfinite(rec.d)) {
    record_error(where, "field 'd' must be nonnegative");
  }
  if (j.contains("chi")) {
    if (!j["chi"].is_number()) {
      record_error(where, "field 'chi' must be a number");
    }
    rec.chi = j["chi"].get<double>();
    if (!(std::abs(rec.chi) <= 1.0)) {
      record_error(where, "field 'chi' must lie in [-1, 1], got " +
                              std::to_string(rec.chi));
    }
  }
  if (j.contains("volume")) {
    if (!j["volume"].is_number()) {
      record_error(where, "field 'volume' (m^3) must be a number");
    }
    const double v = j["volume"].get<double>();
    if (!(v > 0.0) || !std::isfinite(v)) {
      record_error(where, "field 'volume' must be positive");
    }
    rec.volume = v;
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_string()) {
      record_error(where, "field 'notes' must be a string");
    }
    rec.notes = j["notes"].get<std::string>();
  }
  return rec;
}

}  // namespace

double vacuum_rabi(double nu, const DipoleMoment& d, double volume) {
  check_positive(nu, "frequency");
  check_positive(volume, "mode volume");
  const double omega = 2.0 * pi * nu;
  const double dsq = d.magnitude() * d.magnitude();
  return std::sqrt(2.0 * omega * dsq /
                   (3.0 * vacuum_permittivity * hbar * volume));
}

double chiral_shift(double nu, const DipoleMoment& d, double chi,
                    double volume) {
  check_positive(nu, "frequency");
  check_positive(volume, "mode volume");
  if (chi < 0.0 || !std::isfinite(chi)) {
    throw DomainError("chiral shift takes the chi magnitude, got " +
                      std::to_string(chi));
  }
  const double omega = 2.0 * pi * nu;
  const double rotatory = chi * speed_of_light * d.magnitude() * d.magnitude();
  return std::sqrt(2.0 * omega * rotatory /
                   (3.0 * vacuum_permittivity * hbar * speed_of_light * volume));
}

double resolving_power(double nu, double chiral_shift) {
  check_positive(nu, "frequency");
  if (!(chiral_shift > 0.0)) {
    throw DomainError("a vanishing chiral shift cannot be resolved");
  }
  return nu / chiral_shift;
}

std::vector<MoleculeRecord> load_database(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open molecule database: " + path.string());
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("molecule database " + path.string() +
                          " is not valid JSON: " + e.what());
  }
  if (!doc.is_array()) {
    throw ValidationError("molecule database must be a JSON array of records");
  }
  std::vector<MoleculeRecord> records;
  records.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    records.push_back(parse_record(doc[i], i));
  }
  return records;
}

double resolved_volume(const MoleculeRecord& record) {
  if (record.volume.has_value()) {
    return *record.volume;
  }
  return minimal_mode_volume(2.0 * pi * record.nu);
}

EstimateRow estimate(const MoleculeRecord& record) {
  const DipoleMoment d = DipoleMoment::from_debye(record.d);
  const double volume = resolved_volume(record);
  EstimateRow row;
  row.omega_rabi = vacuum_rabi(record.nu, d, volume);
  const double chi_mag = std::abs(record.chi);
  row.chiral_shift =
      chi_mag > 0.0 ? chiral_shift(record.nu, d, chi_mag, volume) : 0.0;
  if (row.chiral_shift > 0.0) {
    row.resolving_power = resolving_power(record.nu, row.chiral_shift);
  }
  return row;
}

}  // namespace ccqed
