#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ccqed/units.hpp"

namespace ccqed {

/// One molecule/cavity entry of the estimates database.  `chi` defaults to
/// 0.01 (a magnetic moment about a hundred times weaker than the electric
/// one, typical for small chiral molecules); a missing volume means the
/// minimal cavity (lambda/2)^3.
struct MoleculeRecord {
  std::string name;
  double nu = 0.0;    // transition frequency, Hz
  double d = 0.0;     // transition dipole, debye
  double chi = 0.01;  // dimensionless chirality parameter
  std::optional<double> volume;  // cavity mode volume, m^3
  std::string notes;
};

/// Nondiscriminatory vacuum Rabi splitting for a rotationally averaged
/// molecule on resonance:  Omega = sqrt(2 omega |d|^2 / (3 eps0 hbar V)),
/// rad/s, with omega = 2 pi nu.
double vacuum_rabi(double nu, const DipoleMoment& d, double volume);

/// Discriminatory component of the splitting, computed through the rotatory
/// strength R = chi c |d|^2:
///   dOmega = sqrt(2 omega R / (3 eps0 hbar c V))   (rad/s)
/// which equals Omega sqrt(chi).  Requires chi >= 0 (pass the magnitude; the
/// enantiomer sign only flips which mode handedness is enhanced).
double chiral_shift(double nu, const DipoleMoment& d, double chi,
                    double volume);

/// Spectral resolution power needed to resolve the chiral shift, computed
/// with the plain-number convention P = nu[Hz] / dOmega[rad/s].
double resolving_power(double nu, double chiral_shift);

/// Parses a UTF-8 JSON array of molecule records.  Field names are exactly
/// {name, nu, d, chi, volume, notes}; unknown fields are rejected so unit
/// mistakes cannot hide.  Throws ValidationError with the record name (or
/// index) and field on any violation.
std::vector<MoleculeRecord> load_database(const std::filesystem::path& path);

/// Mode volume the record resolves to: the stored value or (lambda/2)^3.
double resolved_volume(const MoleculeRecord& record);

/// One line of the estimates table.  `resolving_power` is absent for an
/// achiral record (zero shift resolves nothing).
struct EstimateRow {
  double omega_rabi = 0.0;    // rad/s
  double chiral_shift = 0.0;  // rad/s
  std::optional<double> resolving_power;
};

EstimateRow estimate(const MoleculeRecord& record);

}  // namespace ccqed
