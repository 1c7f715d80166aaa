#include "ccqed/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace ccqed::linalg {

namespace {

constexpr int kMaxSweeps = 50;

double off_diagonal_norm(const std::vector<std::complex<double>>& a,
                         std::size_t n) {
  double sum = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      sum += std::norm(a[p * n + q]);
    }
  }
  return std::sqrt(2.0 * sum);
}

/// Fix the phase of v so that its largest-magnitude component (the first one
/// on ties) is real and positive.
void gauge_fix(std::vector<std::complex<double>>& v) {
  std::size_t k = 0;
  double best = std::abs(v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double m = std::abs(v[i]);
    if (m > best) {
      best = m;
      k = i;
    }
  }
  if (best == 0.0) return;
  const std::complex<double> phase = std::conj(v[k]) / best;
  for (auto& c : v) c *= phase;
  v[k] = std::complex<double>(std::abs(v[k]), 0.0);
}

EigenDecomposition collect(std::vector<std::complex<double>>&& a,
                           std::vector<std::complex<double>>&& q,
                           std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * n + i].real() < a[j * n + j].real();
  });

  EigenDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t col : order) {
    out.eigenvalues.push_back(a[col * n + col].real());
    std::vector<std::complex<double>> v(n);
    for (std::size_t row = 0; row < n; ++row) v[row] = q[row * n + col];
    gauge_fix(v);
    out.eigenvectors.push_back(std::move(v));
  }
  return out;
}

EigenDecomposition eigh2_closed(const HermitianMatrix& m) {
  const double alpha = m(0, 0).real();
  const double beta = m(1, 1).real();
  const std::complex<double> gamma = m(0, 1);
  const double g = std::abs(gamma);

  if (g == 0.0) {
    EigenDecomposition out;
    if (alpha <= beta) {
      out.eigenvalues = {alpha, beta};
      out.eigenvectors = {{1.0, 0.0}, {0.0, 1.0}};
    } else {
      out.eigenvalues = {beta, alpha};
      out.eigenvectors = {{0.0, 1.0}, {1.0, 0.0}};
    }
    return out;
  }

  const double mean = 0.5 * (alpha + beta);
  const double half = 0.5 * (alpha - beta);
  const double r = std::hypot(half, g);

  // Eigenvector of the eigenvalue farther from alpha is (gamma, lambda-alpha)
  // with |lambda - alpha| = r + |half|, which has no cancellation; the other
  // vector is its orthogonal complement.
  std::vector<std::complex<double>> far(2), near(2);
  const double away = (half >= 0.0) ? -(r + half) : (r - half);
  far = {gamma, std::complex<double>(away, 0.0)};
  const double norm = std::hypot(g, away);
  far[0] /= norm;
  far[1] /= norm;
  near = {-std::conj(far[1]), std::conj(far[0])};
  gauge_fix(far);
  gauge_fix(near);

  EigenDecomposition out;
  out.eigenvalues = {mean - r, mean + r};
  if (half >= 0.0) {
    // alpha is the larger diagonal: the lower eigenvalue sits away from it
    out.eigenvectors = {std::move(far), std::move(near)};
  } else {
    out.eigenvectors = {std::move(near), std::move(far)};
  }
  return out;
}

}  // namespace

HermitianMatrix::HermitianMatrix(std::size_t dim,
                                 std::vector<std::complex<double>> row_major,
                                 std::string units)
    : dim_(dim), a_(std::move(row_major)), units_(std::move(units)) {
  if (dim_ == 0 || a_.size() != dim_ * dim_) {
    throw UsageError("matrix storage size does not match dimension");
  }
  double fro = 0.0;
  for (const auto& c : a_) fro += std::norm(c);
  fro = std::sqrt(fro);

  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs(a_[i * dim_ + j] -
                                       std::conj(a_[j * dim_ + i])));
    }
  }
  if (worst > 1e-13 * std::max(fro, 1e-300)) {
    throw ValidationError("matrix is not Hermitian: max |A - A^dagger| = " +
                          std::to_string(worst));
  }
  // store the exactly Hermitian average
  for (std::size_t i = 0; i < dim_; ++i) {
    a_[i * dim_ + i] = std::complex<double>(a_[i * dim_ + i].real(), 0.0);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const std::complex<double> avg =
          0.5 * (a_[i * dim_ + j] + std::conj(a_[j * dim_ + i]));
      a_[i * dim_ + j] = avg;
      a_[j * dim_ + i] = std::conj(avg);
    }
  }
}

double HermitianMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i].real();
  return t;
}

double HermitianMatrix::frobenius_norm() const {
  double fro = 0.0;
  for (const auto& c : a_) fro += std::norm(c);
  return std::sqrt(fro);
}

EigenDecomposition eigh_jacobi(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::complex<double>> a = m.entries();
  std::vector<std::complex<double>> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;

  const double scale = m.frobenius_norm();
  if (scale == 0.0 || n == 1) {
    return collect(std::move(a), std::move(q), n);
  }
  const double tol = 1e-15 * scale;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= tol) {
      return collect(std::move(a), std::move(q), n);
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t qx = p + 1; qx < n; ++qx) {
        const std::complex<double> apq = a[p * n + qx];
        const double g = std::abs(apq);
        if (g == 0.0) continue;

        const double alpha = a[p * n + p].real();
        const double beta = a[qx * n + qx].real();
        const std::complex<double> phase = apq / g;  // e^{i phi}

        // tan(2 theta) = 2|apq| / (alpha - beta), smaller-angle root
        const double tau = (alpha - beta) / (2.0 * g);
        double t;
        if (std::isinf(tau)) {
          t = 0.0;
        } else {
          t = ((tau >= 0.0) ? 1.0 : -1.0) /
              (std::abs(tau) + std::hypot(1.0, tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Unitary V: V_pp = c, V_pq = -s e^{i phi}, V_qp = s e^{-i phi},
        // V_qq = c.  Update A <- V^dagger A V and Q <- Q V.
        const std::complex<double> sp = s * phase;
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> akp = a[k * n + p];
          const std::complex<double> akq = a[k * n + qx];
          a[k * n + p] = c * akp + std::conj(sp) * akq;
          a[k * n + qx] = -sp * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> apk = a[p * n + k];
          const std::complex<double> aqk = a[qx * n + k];
          a[p * n + k] = c * apk + sp * aqk;
          a[qx * n + k] = -std::conj(sp) * apk + c * aqk;
        }
        a[p * n + qx] = 0.0;
        a[qx * n + p] = 0.0;
        a[p * n + p] = std::complex<double>(a[p * n + p].real(), 0.0);
        a[qx * n + qx] = std::complex<double>(a[qx * n + qx].real(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
          const std::complex<double> qkp = q[k * n + p];
          const std::complex<double> qkq = q[k * n + qx];
          q[k * n + p] = c * qkp + std::conj(sp) * qkq;
          q[k * n + qx] = -sp * qkp + c * qkq;
        }
      }
    }
  }

  const double off = off_diagonal_norm(a, n);
  if (off <= tol) {
    return collect(std::move(a), std::move(q), n);
  }
  throw NumericError("Jacobi eigensolver did not converge after " +
                     std::to_string(kMaxSweeps) +
                     " sweeps; off-diagonal norm = " + std::to_string(off));
}

EigenDecomposition eigh(const HermitianMatrix& a) {
  if (a.dim() == 2) {
    return eigh2_closed(a);
  }
  return eigh_jacobi(a);
}

}  // namespace ccqed::linalg
