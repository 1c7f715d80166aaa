#include "ccqed/single_mode.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ccqed/constants.hpp"
#include "ccqed/errors.hpp"

namespace ccqed {

namespace {

using constants::hbar;

void check_state_index(int state_index) {
  if (state_index != 1 && state_index != 2) {
    throw UsageError("state index must be 1 or 2, got " +
                     std::to_string(state_index));
  }
}

}  // namespace

JCBlock::JCBlock(int n_, double omega_, double omega_m_, CouplingConstant g_)
    : n(n_), omega(omega_), omega_m(omega_m_), g(g_) {
  if (n < 0) {
    throw DomainError("photon number must be nonnegative");
  }
  if (!std::isfinite(omega) || !std::isfinite(omega_m)) {
    throw DomainError("block frequencies must be finite");
  }
}

JCBlock jc_block_avg(const ChiralMolecule& molecule, const CavityMode& mode,
                     int n) {
  return JCBlock(n, mode.omega(), molecule.omega_m(),
                 CouplingConstant::from_magnitude_sq(
                     coupling_avg_sq(molecule, mode)));
}

JCBlock jc_block_at(const ChiralMolecule& molecule, const CavityMode& mode,
                    int n, double z) {
  return JCBlock(n, mode.omega(), molecule.omega_m(),
                 coupling_at(molecule, mode, z));
}

linalg::HermitianMatrix jc_matrix(const JCBlock& block) {
  const double root = std::sqrt(static_cast<double>(block.n) + 1.0);
  const std::complex<double> g = block.g.value();
  std::vector<std::complex<double>> m = {
      {hbar * (block.n * block.omega + 0.5 * block.omega_m), 0.0},
      hbar * root * std::conj(g),
      hbar * root * g,
      {hbar * ((block.n + 1) * block.omega - 0.5 * block.omega_m), 0.0},
  };
  return linalg::HermitianMatrix(2, std::move(m));
}

double rabi_frequency(const JCBlock& block) {
  const double root = std::sqrt(static_cast<double>(block.n) + 1.0);
  return std::hypot(block.detuning(), 2.0 * root * block.g.magnitude());
}

Eigensystem eigensystem(const JCBlock& block) {
  Eigensystem sys;
  sys.rabi = rabi_frequency(block);
  const double centre = (block.n + 0.5) * hbar * block.omega;
  const double half_split = 0.5 * hbar * sys.rabi;
  sys.energies = {centre + half_split, centre - half_split};

  const linalg::EigenDecomposition eig = linalg::eigh(jc_matrix(block));
  // ascending from the solver; dressed convention is descending
  sys.eigenvectors = {eig.eigenvectors[1], eig.eigenvectors[0]};
  sys.theta = std::atan2(std::abs(sys.eigenvectors[0][1]),
                         std::abs(sys.eigenvectors[0][0]));
  return sys;
}

double cp_potential(const ChiralMolecule& molecule, const CavityMode& mode,
                    int n, double z, int state_index) {
  check_state_index(state_index);
  if (n < 0) {
    throw DomainError("photon number must be nonnegative");
  }
  const double gsq = coupling_oriented_sq(molecule, mode, z);
  const double delta = molecule.omega_m() - mode.omega();
  const double rabi =
      std::hypot(delta, 2.0 * std::sqrt((n + 1.0) * gsq));
  return (state_index == 1 ? 0.5 : -0.5) * hbar * rabi;
}

double oriented_state_energy(const ChiralMolecule& molecule,
                             const CavityMode& mode, int n, double z,
                             int state_index) {
  return (n + 0.5) * hbar * mode.omega() +
         cp_potential(molecule, mode, n, z, state_index);
}

double cp_force(const ChiralMolecule& molecule, const CavityMode& mode, int n,
                double z, int state_index) {
  check_state_index(state_index);
  if (n < 0) {
    throw DomainError("photon number must be nonnegative");
  }
  // antinode value of the oriented coupling, cos(0) = 1
  const double gsq0 = coupling_oriented_sq(molecule, mode, 0.0);
  const double k = mode.wavenumber();
  const double kz = k * z;
  const double c = std::cos(kz);
  const double s = std::sin(kz);
  const double delta = molecule.omega_m() - mode.omega();
  const double rabi =
      std::hypot(delta, 2.0 * std::sqrt((n + 1.0) * gsq0) * std::abs(c));
  if (rabi == 0.0) {
    // only reachable at zero detuning on a coupling node, where the two
    // branches cross and the adiabatic force is undefined
    throw NumericError("dressed levels are degenerate at this position; "
                       "the adiabatic force is undefined");
  }
  const double f1 = 2.0 * hbar * (n + 1.0) * k * gsq0 * s * c / rabi;
  return state_index == 1 ? f1 : -f1;
}

}  // namespace ccqed
