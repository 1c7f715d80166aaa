#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "ccqed/errors.hpp"

namespace ccqed::linalg {

/// Small dense Hermitian matrix, row-major (2x2 and 3x3 in practice, any
/// small dimension accepted).  Construction rejects inputs that deviate from
/// A = A^dagger by more than 1e-13 relative to the Frobenius norm and stores
/// the exactly Hermitian average (A + A^dagger) / 2.
class HermitianMatrix {
 public:
  HermitianMatrix(std::size_t dim, std::vector<std::complex<double>> row_major,
                  std::string units = "J");

  std::size_t dim() const { return dim_; }
  std::complex<double> operator()(std::size_t i, std::size_t j) const {
    return a_[i * dim_ + j];
  }
  const std::vector<std::complex<double>>& entries() const { return a_; }
  const std::string& units() const { return units_; }

  double trace() const;  // real by Hermiticity
  double frobenius_norm() const;

 private:
  std::size_t dim_;
  std::vector<std::complex<double>> a_;
  std::string units_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  /// eigenvectors[k] is the unit eigenvector paired with eigenvalues[k].
  /// The set is orthonormal; each vector is gauge-fixed so that its largest
  /// component (first such, on ties) is real and positive, which makes the
  /// output deterministic including inside degenerate clusters.
  std::vector<std::vector<std::complex<double>>> eigenvectors;
};

/// Hermitian eigendecomposition: closed form for dimension 2, cyclic Jacobi
/// sweeps otherwise.  Throws NumericError if the off-diagonal norm has not
/// converged after the sweep limit (50).
EigenDecomposition eigh(const HermitianMatrix& a);

/// Jacobi path for any dimension, exposed so the 2x2 closed form can be
/// cross-checked against it.
EigenDecomposition eigh_jacobi(const HermitianMatrix& a);

/// Second-order central difference (f(z+h) - f(z-h)) / (2h).
template <typename F>
double central_diff(F&& f, double z, double h) {
  if (!(h > 0.0)) {
    throw DomainError("central_diff step must be positive");
  }
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

}  // namespace ccqed::linalg
