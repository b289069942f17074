#include <algorithm>
#include <cmath>
#include <string>

#include "negent/entcalc.hpp"
#include "negent/error.hpp"
#include "negent/linmath.hpp"
#include "negent/number_format.hpp"

namespace negent::entcalc {

namespace {

// The two operators whose "product limit" defines the amplitude:
//   conditional: X = rho_AB,            Y = 1_A (x) rho_B
//   mutual:      X = rho_A (x) rho_B,   Y = rho_AB
struct LimitOperands {
  ComplexMatrix x;
  ComplexMatrix y;
};

// rho restricted to the partition's labels, factors ordered side_a then side_b.
DensityMatrix partition_ordered(const DensityMatrix& rho, const Partition& part) {
  validate(part, rho.shape());
  const std::vector<std::string> joint = part.joint();
  if (joint.size() == rho.shape().size()) return reorder(rho, joint);
  return reorder(reduce(rho, joint), joint);
}

LimitOperands operands(const DensityMatrix& joint, const Partition& part, AmplitudeKind kind) {
  const DensityMatrix rho_b = reduce(joint, part.side_b);
  if (kind == AmplitudeKind::conditional) {
    std::size_t d_a = joint.dim() / rho_b.dim();
    return {joint.matrix(), linmath::kron(ComplexMatrix::identity(d_a), rho_b.matrix())};
  }
  const DensityMatrix rho_a = reduce(joint, part.side_a);
  return {linmath::kron(rho_a.matrix(), rho_b.matrix()), joint.matrix()};
}

DensityMatrix regularized(const DensityMatrix& joint) {
  const std::size_t d = joint.dim();
  ComplexMatrix mat = joint.matrix() * Complex(1.0 - kRegularization);
  mat += ComplexMatrix::identity(d) * Complex(kRegularization / static_cast<double>(d));
  return DensityMatrix(joint.shape(), std::move(mat));
}

// exp(log X - log Y) together with its spectrum, read off the exponent so
// that positivity does not depend on re-diagonalising a large-norm result.
struct SpectralResult {
  ComplexMatrix mat;
  std::vector<double> eigenvalues;
};

SpectralResult exp_log_limit(const LimitOperands& ops) {
  const ComplexMatrix exponent =
      hermitian_part(linmath::matrix_log(ops.x) - linmath::matrix_log(ops.y));
  const linmath::HermitianEigen eig = linmath::hermitian_eig(exponent);
  SpectralResult out{linmath::matrix_function(eig, [](double l) { return std::exp(l); }), {}};
  out.eigenvalues.reserve(eig.eigenvalues.size());
  for (double l : eig.eigenvalues) out.eigenvalues.push_back(std::exp(l));
  return out;
}

ConditionalAmplitude amplitude(const DensityMatrix& rho, const Partition& part,
                               AmplitudeKind kind) {
  const DensityMatrix joint = partition_ordered(rho, part);
  const LimitOperands ops = operands(joint, part, kind);

  ConditionalAmplitude out{ComplexMatrix(), {}, joint.shape(), kind,
                           AmplitudeMethod::commuting, linmath::commutator_norm(ops.x, ops.y)};
  ComplexMatrix raw;
  if (out.commutator <= kCommutingThreshold) {
    raw = ops.x * linmath::pseudo_inverse(ops.y);
  } else {
    out.method = AmplitudeMethod::exp_log;
    SpectralResult limit = exp_log_limit(operands(regularized(joint), part, kind));
    raw = std::move(limit.mat);
    out.eigenvalues = std::move(limit.eigenvalues);
  }

  // Round-off in the raw product scales with its norm, which reaches 1/eps
  // for singular inputs on the exp-log path.
  const double dim = static_cast<double>(raw.rows());
  const double herm = hermiticity_residual(raw);
  if (herm > kAmplitudeHermitianTolerance * dim * std::max(1.0, raw.frobenius_norm())) {
    throw Error(ErrorKind::NotHermitian, std::string(to_string(kind)) +
                                             " amplitude: Hermiticity residual " + format_g17(herm));
  }
  out.mat = hermitian_part(raw);
  if (out.eigenvalues.empty()) out.eigenvalues = linmath::hermitian_spectrum(out.mat);

  if (!out.eigenvalues.empty() && out.eigenvalues.front() < -kAmplitudePositivityTolerance) {
    throw Error(ErrorKind::PositivityError, std::string(to_string(kind)) +
                                                " amplitude: eigenvalue " +
                                                format_g17(out.eigenvalues.front()));
  }
  return out;
}

}  // namespace

std::string_view to_string(AmplitudeKind kind) noexcept {
  return kind == AmplitudeKind::conditional ? "conditional" : "mutual";
}

std::string_view to_string(AmplitudeMethod method) noexcept {
  return method == AmplitudeMethod::commuting ? "commuting" : "exp-log";
}

ConditionalAmplitude conditional_amplitude(const DensityMatrix& rho, const Partition& part) {
  return amplitude(rho, part, AmplitudeKind::conditional);
}

ConditionalAmplitude mutual_amplitude(const DensityMatrix& rho, const Partition& part) {
  return amplitude(rho, part, AmplitudeKind::mutual);
}

Bits entropy_via_operator(const DensityMatrix& rho, const ConditionalAmplitude& amp) {
  const std::vector<std::string> order = amp.shape.labels();
  const DensityMatrix joint = order.size() == rho.shape().size()
                                  ? reorder(rho, order)
                                  : reorder(reduce(rho, order), order);
  if (joint.shape() != amp.shape || joint.dim() != amp.mat.rows()) {
    throw Error(ErrorKind::DimMismatch, "entropy_via_operator: state and operator shapes differ");
  }

  const linmath::HermitianEigen eig = linmath::hermitian_eig(amp.mat);
  const std::size_t d = joint.dim();
  const ComplexMatrix& v = eig.eigenvectors;

  // Spectral pieces restricted to the support of amp.
  ComplexMatrix projector_cols(d, d);
  ComplexMatrix log_cols(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const double lambda = eig.eigenvalues[k];
    if (lambda <= linmath::kSupportCutoff) continue;
    const double l2 = std::log2(lambda);
    for (std::size_t i = 0; i < d; ++i) {
      projector_cols(i, k) = v(i, k);
      log_cols(i, k) = v(i, k) * l2;
    }
  }
  const ComplexMatrix projector = projector_cols * v.adjoint();
  const ComplexMatrix log_amp = log_cols * v.adjoint();

  const double inside = (joint.matrix() * projector).trace().real();
  const double leak = 1.0 - inside;
  if (leak > kSupportLeakTolerance) {
    throw Error(ErrorKind::SupportError,
                "entropy_via_operator: state has weight " + format_g17(leak) +
                    " outside the operator's support");
  }
  return -(joint.matrix() * log_amp).trace().real() + 0.0;
}

std::vector<std::size_t> power_of_two_schedule(std::size_t n_max) {
  if (n_max == 0 || n_max > kTrotterHardCap || (n_max & (n_max - 1)) != 0) {
    throw Error(ErrorKind::InvalidArgument,
                "Trotter n-max " + std::to_string(n_max) + " must be a power of two <= 2^20");
  }
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; n *= 2) out.push_back(n);
  return out;
}

std::vector<TrotterStep> trotter_sequence(const DensityMatrix& rho, const Partition& part,
                                          std::span<const std::size_t> n_list,
                                          AmplitudeKind kind) {
  for (std::size_t n : n_list) {
    if (n == 0 || n > kTrotterHardCap) {
      throw Error(ErrorKind::InvalidArgument,
                  "Trotter n = " + std::to_string(n) + " outside [1, 2^20]");
    }
  }
  const DensityMatrix joint = regularized(partition_ordered(rho, part));
  const LimitOperands ops = operands(joint, part, kind);
  const ComplexMatrix limit = exp_log_limit(ops).mat;

  const linmath::HermitianEigen eig_x = linmath::hermitian_eig(ops.x);
  const linmath::HermitianEigen eig_y = linmath::hermitian_eig(ops.y);
  linmath::SpectralOptions psd;
  psd.nonnegative = true;

  std::vector<TrotterStep> steps;
  steps.reserve(n_list.size());
  for (std::size_t n : n_list) {
    const double inv_n = 1.0 / static_cast<double>(n);
    const ComplexMatrix x_root =
        linmath::matrix_function(eig_x, [inv_n](double l) { return std::pow(l, inv_n); }, psd);
    const ComplexMatrix y_root =
        linmath::matrix_function(eig_y, [inv_n](double l) { return std::pow(l, -inv_n); }, psd);
    TrotterStep step;
    step.n = n;
    step.product = linmath::integer_power(x_root * y_root, n);
    step.distance = (step.product - limit).frobenius_norm();
    steps.push_back(std::move(step));
  }
  return steps;
}

bool trotter_trend_non_increasing(std::span<const TrotterStep> steps, double slack,
                                  std::size_t from_n, double floor) {
  for (std::size_t k = 0; k + 1 < steps.size(); ++k) {
    const TrotterStep& cur = steps[k];
    const TrotterStep& next = steps[k + 1];
    if (cur.n < from_n || next.n != 2 * cur.n) continue;
    if (next.distance > (1.0 + slack) * cur.distance + floor) return false;
  }
  return true;
}

}  // namespace negent::entcalc
