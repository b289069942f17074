#pragma once

// Test-only reference computations. Nothing here goes through the library's
// eigen-decomposition path: matrix functions use Eigen's Schur-Parlett
// MatrixFunctions module, partial traces are written out for two factors,
// and classical entropies come straight from the joint probability table.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "negent/complex_matrix.hpp"

namespace negent::testing {

using Dense = Eigen::MatrixXcd;

inline Dense to_eigen(const ComplexMatrix& m) {
  Dense out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

inline ComplexMatrix from_eigen(const Dense& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  return worst;
}

/// Tr_B for a two-factor operator on C^{d_a} (x) C^{d_b}.
inline ComplexMatrix trace_out_second(const ComplexMatrix& m, std::size_t d_a, std::size_t d_b) {
  ComplexMatrix out(d_a, d_a);
  for (std::size_t a = 0; a < d_a; ++a)
    for (std::size_t a2 = 0; a2 < d_a; ++a2)
      for (std::size_t b = 0; b < d_b; ++b) out(a, a2) += m(a * d_b + b, a2 * d_b + b);
  return out;
}

/// Tr_A for a two-factor operator.
inline ComplexMatrix trace_out_first(const ComplexMatrix& m, std::size_t d_a, std::size_t d_b) {
  ComplexMatrix out(d_b, d_b);
  for (std::size_t b = 0; b < d_b; ++b)
    for (std::size_t b2 = 0; b2 < d_b; ++b2)
      for (std::size_t a = 0; a < d_a; ++a) out(b, b2) += m(a * d_b + b, a * d_b + b2);
  return out;
}

/// Schur-Parlett log / exp (independent of any eigendecomposition).
inline Dense oracle_log(const Dense& m) { return m.log(); }
inline Dense oracle_exp(const Dense& m) { return m.exp(); }

/// exp(log X - log Y) for positive definite X, Y.
inline Dense oracle_exp_log(const Dense& x, const Dense& y) {
  return oracle_exp(oracle_log(x) - oracle_log(y));
}

inline std::complex<double> gaussian_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

/// G G^dagger / Tr for a d x rank Ginibre G; full rank when rank == d.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t d, std::size_t rank) {
  Dense g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(rank));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = gaussian_complex(rng);
  Dense rho = g * g.adjoint();
  rho /= rho.trace().real();
  Dense herm = 0.5 * (rho + rho.adjoint());
  return from_eigen(herm);
}

/// Haar unitary from the QR decomposition of a Ginibre matrix, phases fixed.
inline ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t d) {
  Dense g(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) = gaussian_complex(rng);
  Eigen::HouseholderQR<Dense> qr(g);
  Dense q = qr.householderQ();
  Dense r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const auto diag = r(j, j);
    q.col(j) *= diag / std::abs(diag);
  }
  return from_eigen(q);
}

/// Sorted real eigenvalues of a Hermitian matrix via Eigen's generic
/// ComplexEigenSolver (not the self-adjoint path the library uses).
inline std::vector<double> oracle_spectrum(const ComplexMatrix& m) {
  Eigen::ComplexEigenSolver<Dense> solver(to_eigen(m));
  std::vector<double> out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k)
    out.push_back(solver.eigenvalues()(k).real());
  std::sort(out.begin(), out.end());
  return out;
}

// Classical information theory on a joint table p[i][j] (i: A, j: B).

using JointTable = std::vector<std::vector<double>>;

inline double classical_conditional(const JointTable& p) {
  // H(A|B) = -sum p_ij log2 p_{i|j},  p_{i|j} = p_ij / p_j
  std::vector<double> pb(p.front().size(), 0.0);
  for (const auto& row : p)
    for (std::size_t j = 0; j < row.size(); ++j) pb[j] += row[j];
  double h = 0.0;
  for (const auto& row : p)
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] > 0.0) h -= row[j] * std::log2(row[j] / pb[j]);
  return h;
}

inline double classical_mutual(const JointTable& p) {
  // H(A:B) = -sum p_ij log2 p_{i:j},  p_{i:j} = p_i p_j / p_ij
  std::vector<double> pa(p.size(), 0.0);
  std::vector<double> pb(p.front().size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j) {
      pa[i] += p[i][j];
      pb[j] += p[i][j];
    }
  double h = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].size(); ++j)
      if (p[i][j] > 0.0) h -= p[i][j] * std::log2(pa[i] * pb[j] / p[i][j]);
  return h;
}

inline double plain_shannon(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p)
    if (x > 0.0) h -= x * std::log2(x);
  return h;
}

}  // namespace negent::testing
