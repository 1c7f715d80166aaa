#include "ccqed/two_mode.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

namespace {

using constants::hbar;

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

bool is_degenerate(const TwoModeBlock& b) {
  const double gtol = 1e-12 * std::max(b.g1.magnitude(), b.g2.magnitude());
  return b.n1 == b.n2 && close_rel(b.omega1, b.omega2, 1e-12) &&
         std::abs(b.g1.value() - b.g2.value()) <= std::max(gtol, 0.0);
}

void require_shared_photon_sector(const TwoModeBlock& b) {
  if (b.n1 != b.n2 || !close_rel(b.omega1, b.omega2, 1e-12)) {
    throw UsageError(
        "closed-form two-mode spectra need equal mode frequencies and photon "
        "numbers");
  }
}

/// Shared assembly of the three-level Eigensystem: closed-form energies plus
/// numeric eigenvectors, with the decoupled branch recognised by its overlap
/// with `decoupled_direction` and listed last.
Eigensystem assemble_three_level(const TwoModeBlock& block, double rabi,
                                 std::array<std::complex<double>, 3>
                                     decoupled_direction) {
  Eigensystem sys;
  sys.rabi = rabi;
  const int n = block.n1;
  const double omega = block.omega1;
  const double centre = (2.0 * n + 0.5) * hbar * omega;
  const double half_split = 0.5 * hbar * rabi;
  const double bare = (2.0 * n + 1.0) * hbar * omega - 0.5 * hbar * block.omega_m;
  sys.energies = {centre + half_split, centre - half_split, bare};

  const linalg::EigenDecomposition eig =
      linalg::eigh(two_mode_matrix(block));

  double best = -1.0;
  std::size_t bare_index = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    std::complex<double> overlap = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
      overlap += std::conj(decoupled_direction[r]) * eig.eigenvectors[i][r];
    }
    if (std::abs(overlap) > best) {
      best = std::abs(overlap);
      bare_index = i;
    }
  }
  std::vector<std::size_t> dressed;
  for (std::size_t i = 3; i-- > 0;) {  // descending eigenvalue order
    if (i != bare_index) dressed.push_back(i);
  }
  sys.eigenvectors = {eig.eigenvectors[dressed[0]],
                      eig.eigenvectors[dressed[1]],
                      eig.eigenvectors[bare_index]};
  const double ground_weight = std::hypot(std::abs(sys.eigenvectors[0][1]),
                                          std::abs(sys.eigenvectors[0][2]));
  sys.theta = std::atan2(ground_weight, std::abs(sys.eigenvectors[0][0]));
  return sys;
}

}  // namespace

TwoModeBlock::TwoModeBlock(int n1_, int n2_, double omega1_, double omega2_,
                           CouplingConstant g1_, CouplingConstant g2_,
                           double omega_m_)
    : n1(n1_),
      n2(n2_),
      omega1(omega1_),
      omega2(omega2_),
      g1(g1_),
      g2(g2_),
      omega_m(omega_m_) {
  if (n1 < 0 || n2 < 0) {
    throw DomainError("photon numbers must be nonnegative");
  }
  if (!std::isfinite(omega1) || !std::isfinite(omega2) ||
      !std::isfinite(omega_m)) {
    throw DomainError("block frequencies must be finite");
  }
}

linalg::HermitianMatrix two_mode_matrix(const TwoModeBlock& b) {
  const double r1 = std::sqrt(static_cast<double>(b.n1) + 1.0);
  const double r2 = std::sqrt(static_cast<double>(b.n2) + 1.0);
  const std::complex<double> g1 = b.g1.value();
  const std::complex<double> g2 = b.g2.value();
  const double e_exc = b.n1 * b.omega1 + b.n2 * b.omega2 + 0.5 * b.omega_m;
  const double e_ph1 = (b.n1 + 1) * b.omega1 + b.n2 * b.omega2 - 0.5 * b.omega_m;
  const double e_ph2 = b.n1 * b.omega1 + (b.n2 + 1) * b.omega2 - 0.5 * b.omega_m;

  std::vector<std::complex<double>> m = {
      {hbar * e_exc, 0.0}, hbar * r1 * std::conj(g1), hbar * r2 * std::conj(g2),
      hbar * r1 * g1,      {hbar * e_ph1, 0.0},       {0.0, 0.0},
      hbar * r2 * g2,      {0.0, 0.0},                {hbar * e_ph2, 0.0},
  };
  return linalg::HermitianMatrix(3, std::move(m));
}

std::pair<CollectiveBasis, linalg::HermitianMatrix> collective_transform(
    const TwoModeBlock& block) {
  if (!is_degenerate(block)) {
    throw UsageError(
        "collective field states require a degenerate block "
        "(equal frequencies, couplings and photon numbers)");
  }
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  CollectiveBasis basis;
  basis.transform = {{{1.0, 0.0, 0.0},
                      {0.0, inv_rt2, -inv_rt2},
                      {0.0, inv_rt2, inv_rt2}}};
  basis.labels = {"|e,n,n>", "|g,F+>", "|g,F->"};

  const linalg::HermitianMatrix h = two_mode_matrix(block);
  const auto& t = basis.transform;
  // H' = T^T H T (T is real orthogonal)
  std::array<std::array<std::complex<double>, 3>, 3> ht{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::complex<double> sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) sum += h(i, k) * t[k][j];
      ht[i][j] = sum;
    }
  }
  std::vector<std::complex<double>> rotated(9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::complex<double> sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) sum += t[k][i] * ht[k][j];
      rotated[i * 3 + j] = sum;
    }
  }
  return {basis, linalg::HermitianMatrix(3, std::move(rotated))};
}

Eigensystem degenerate_spectrum(const TwoModeBlock& block) {
  if (!is_degenerate(block)) {
    throw UsageError("degenerate_spectrum requires a degenerate block");
  }
  const double delta = block.omega_m - block.omega1;
  const double root = std::sqrt(2.0 * (block.n1 + 1.0));
  const double rabi = std::hypot(delta, 2.0 * root * block.g1.magnitude());
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  return assemble_three_level(block, rabi, {0.0, inv_rt2, -inv_rt2});
}

Eigensystem nondegenerate_spectrum(const TwoModeBlock& block) {
  require_shared_photon_sector(block);
  const double delta = block.omega_m - block.omega1;
  const double gsum_sq = block.g1.magnitude_sq() + block.g2.magnitude_sq();
  const double rabi =
      std::hypot(delta, 2.0 * std::sqrt((block.n1 + 1.0) * gsum_sq));

  std::array<std::complex<double>, 3> decoupled = {0.0, 1.0 / std::sqrt(2.0),
                                                   -1.0 / std::sqrt(2.0)};
  const double norm = std::sqrt(gsum_sq);
  if (norm > 0.0) {
    decoupled = {0.0, std::conj(block.g2.value()) / norm,
                 -std::conj(block.g1.value()) / norm};
  }
  return assemble_three_level(block, rabi, decoupled);
}

Scenario Scenario::degenerate() { return {Kind::degenerate, 0.0}; }

Scenario Scenario::imperfect(double amplitude_ratio) {
  if (!(amplitude_ratio >= 0.0) || !(amplitude_ratio < 1.0)) {
    throw ValidationError(
        "imperfect-cavity amplitude ratio must lie in [0, 1), got " +
        std::to_string(amplitude_ratio));
  }
  return {Kind::imperfect, amplitude_ratio};
}

Scenario Scenario::near_degenerate() { return {Kind::near_degenerate, 0.0}; }

std::pair<CouplingConstant, CouplingConstant> scenario_couplings(
    const Scenario& scenario, const ChiralMolecule& molecule,
    const CavityMode& primary, double z) {
  switch (scenario.kind) {
    case Scenario::Kind::degenerate: {
      // achiral premise: both modes couple with the chi-free constant
      const ChiralMolecule achiral(molecule.name(),
                                   FrequencyValue::from_rad_per_second(
                                       molecule.omega_m()),
                                   molecule.dipole(), 0.0,
                                   molecule.orientation());
      const CouplingConstant g = coupling_at(achiral, primary, z);
      return {g, g};
    }
    case Scenario::Kind::imperfect: {
      const CavityMode secondary(primary.omega(), flipped(primary.handedness()),
                                 primary.volume());
      const CouplingConstant g1 = coupling_at(molecule, primary, z);
      const CouplingConstant weak = coupling_at(molecule, secondary, z);
      return {g1,
              CouplingConstant(scenario.amplitude_ratio * weak.value())};
    }
    case Scenario::Kind::near_degenerate: {
      const ChiralMolecule achiral(molecule.name(),
                                   FrequencyValue::from_rad_per_second(
                                       molecule.omega_m()),
                                   molecule.dipole(), 0.0,
                                   molecule.orientation());
      const std::complex<double> g =
          coupling_at(achiral, primary, z).value();
      const std::complex<double> dg = molecule.chi() * g;
      return {CouplingConstant(g + dg), CouplingConstant(g - dg)};
    }
  }
  throw UsageError("unknown scenario");
}

}  // namespace ccqed
