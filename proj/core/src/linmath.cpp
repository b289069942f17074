#include "negent/linmath.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "negent/error.hpp"

namespace negent::linmath {

namespace {

using Dense = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

void require_square(const ComplexMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw Error(ErrorKind::NotSquare, std::string(op) + ": matrix is " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
  }
}

std::size_t product_of(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

// strides[k] = product of dims after position k (first factor most significant).
std::vector<std::size_t> strides_for(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  return strides;
}

}  // namespace

HermitianEigen hermitian_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_eig");
  const std::size_t n = m.rows();
  const double residual = hermiticity_residual(m);
  if (residual > kHermitianTolerance * static_cast<double>(std::max<std::size_t>(n, 1))) {
    throw Error(ErrorKind::NotHermitian,
                "hermitian_eig: ||m - m^dagger||_F = " + std::to_string(residual));
  }
  HermitianEigen out;
  if (n == 0) return out;

  const auto dim = static_cast<Eigen::Index>(n);
  Dense a(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  Eigen::SelfAdjointEigenSolver<Dense> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::DomainError, "hermitian_eig: eigensolver did not converge");
  }
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (Eigen::Index j = 0; j < dim; ++j) {
    out.eigenvalues[j] = solver.eigenvalues()(j);
    for (Eigen::Index i = 0; i < dim; ++i) out.eigenvectors(i, j) = solver.eigenvectors()(i, j);
  }
  return out;
}

std::vector<double> hermitian_spectrum(const ComplexMatrix& m) {
  return hermitian_eig(m).eigenvalues;
}

void clip_negative_round_off(std::vector<double>& eigenvalues) {
  for (double& lambda : eigenvalues) {
    if (lambda < -kNegativeClip) {
      throw Error(ErrorKind::DomainError,
                  "negative eigenvalue " + std::to_string(lambda) + " in a PSD spectral function");
    }
    if (lambda < 0.0) lambda = 0.0;
  }
}

ComplexMatrix matrix_function(const HermitianEigen& eig, const ScalarFunction& f,
                              SpectralOptions options) {
  std::vector<double> lambdas = eig.eigenvalues;
  if (options.nonnegative) clip_negative_round_off(lambdas);

  const std::size_t n = lambdas.size();
  std::vector<double> mapped(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (options.support_only && std::abs(lambdas[k]) <= options.support_cutoff) continue;
    const double value = f(lambdas[k]);
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::DomainError,
                  "matrix_function: f undefined at eigenvalue " + std::to_string(lambdas[k]));
    }
    mapped[k] = value;
  }

  // V diag(mapped) V†
  const ComplexMatrix& v = eig.eigenvectors;
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) scaled(i, k) = v(i, k) * mapped[k];
  return scaled * v.adjoint();
}

ComplexMatrix matrix_function(const ComplexMatrix& m, const ScalarFunction& f,
                              SpectralOptions options) {
  return matrix_function(hermitian_eig(m), f, options);
}

ComplexMatrix matrix_exp(const ComplexMatrix& m) {
  return matrix_function(m, [](double x) { return std::exp(x); });
}

ComplexMatrix matrix_log(const ComplexMatrix& m) {
  SpectralOptions options;
  options.nonnegative = true;
  return matrix_function(m, [](double x) { return x > 0.0 ? std::log(x) : NAN; }, options);
}

ComplexMatrix matrix_log2_support(const ComplexMatrix& m) {
  SpectralOptions options;
  options.nonnegative = true;
  options.support_only = true;
  return matrix_function(m, [](double x) { return std::log2(x); }, options);
}

ComplexMatrix matrix_power(const ComplexMatrix& m, double p) {
  SpectralOptions options;
  options.nonnegative = true;
  options.support_only = p < 0.0;
  return matrix_function(m, [p](double x) { return std::pow(x, p); }, options);
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& m) {
  SpectralOptions options;
  options.nonnegative = true;
  options.support_only = true;
  return matrix_function(m, [](double x) { return 1.0 / x; }, options);
}

ComplexMatrix support_projector(const ComplexMatrix& m) {
  SpectralOptions options;
  options.nonnegative = true;
  options.support_only = true;
  return matrix_function(m, [](double) { return 1.0; }, options);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows();
  const std::size_t bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out(i * br + k, j * bc + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  require_square(m, "partial_trace");
  const std::size_t total = product_of(dims);
  if (dims.empty() || total != m.rows()) {
    throw Error(ErrorKind::DimMismatch, "partial_trace: subsystem dims multiply to " +
                                            std::to_string(total) + ", matrix dim is " +
                                            std::to_string(m.rows()));
  }
  if (keep.empty()) throw Error(ErrorKind::EmptyKeep, "partial_trace: nothing to keep");

  std::vector<bool> kept(dims.size(), false);
  for (std::size_t pos : keep) {
    if (pos >= dims.size()) {
      throw Error(ErrorKind::DimMismatch,
                  "partial_trace: position " + std::to_string(pos) + " out of range");
    }
    if (kept[pos]) {
      throw Error(ErrorKind::InvalidArgument,
                  "partial_trace: position " + std::to_string(pos) + " repeated");
    }
    kept[pos] = true;
  }

  // Split every full index into (kept index, traced index), each in
  // first-most-significant order over its own factors.
  std::vector<std::size_t> kept_index(total, 0);
  std::vector<std::size_t> traced_index(total, 0);
  const std::vector<std::size_t> strides = strides_for(dims);
  std::size_t kept_dim = 1;
  for (std::size_t full = 0; full < total; ++full) {
    std::size_t k_idx = 0;
    std::size_t t_idx = 0;
    for (std::size_t pos = 0; pos < dims.size(); ++pos) {
      const std::size_t digit = (full / strides[pos]) % dims[pos];
      if (kept[pos]) {
        k_idx = k_idx * dims[pos] + digit;
      } else {
        t_idx = t_idx * dims[pos] + digit;
      }
    }
    kept_index[full] = k_idx;
    traced_index[full] = t_idx;
  }
  for (std::size_t pos = 0; pos < dims.size(); ++pos)
    if (kept[pos]) kept_dim *= dims[pos];

  ComplexMatrix out(kept_dim, kept_dim);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j)
      if (traced_index[i] == traced_index[j]) out(kept_index[i], kept_index[j]) += m(i, j);
  return out;
}

ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> order) {
  require_square(m, "permute_subsystems");
  const std::size_t total = product_of(dims);
  if (total != m.rows() || order.size() != dims.size()) {
    throw Error(ErrorKind::DimMismatch, "permute_subsystems: dims/order do not match matrix");
  }
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t pos : order) {
    if (pos >= dims.size() || seen[pos]) {
      throw Error(ErrorKind::InvalidArgument, "permute_subsystems: order is not a permutation");
    }
    seen[pos] = true;
  }

  const std::vector<std::size_t> strides = strides_for(dims);
  std::vector<std::size_t> new_dims(dims.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = dims[order[k]];

  std::vector<std::size_t> mapped(total, 0);
  for (std::size_t full = 0; full < total; ++full) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const std::size_t digit = (full / strides[order[k]]) % dims[order[k]];
      idx = idx * new_dims[k] + digit;
    }
    mapped[full] = idx;
  }

  ComplexMatrix out(total, total);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) out(mapped[i], mapped[j]) = m(i, j);
  return out;
}

double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator_norm");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimMismatch, "commutator_norm: operands differ in shape");
  }
  return (a * b - b * a).frobenius_norm();
}

ComplexMatrix integer_power(ComplexMatrix m, std::size_t n) {
  require_square(m, "integer_power");
  ComplexMatrix result = ComplexMatrix::identity(m.rows());
  while (n > 0) {
    if (n & 1U) result = result * m;
    n >>= 1U;
    if (n > 0) m = m * m;
  }
  return result;
}

}  // namespace negent::linmath
