#include <cmath>
#include <numeric>
#include <string>

#include "negent/error.hpp"
#include "negent/linmath.hpp"
#include "negent/number_format.hpp"
#include "negent/qstate.hpp"

namespace negent {

DensityMatrix::DensityMatrix(SystemShape shape, ComplexMatrix mat)
    : shape_(std::move(shape)), mat_(std::move(mat)) {
  if (!mat_.is_square() || mat_.rows() != shape_.total_dim()) {
    throw Error(ErrorKind::DimMismatch, "DensityMatrix: matrix is " + std::to_string(mat_.rows()) +
                                            "x" + std::to_string(mat_.cols()) +
                                            ", shape needs dim " +
                                            std::to_string(shape_.total_dim()));
  }
  const double dim = static_cast<double>(mat_.rows());

  const double herm = hermiticity_residual(mat_);
  if (herm > tolerance::kHermitian * dim) {
    throw InvariantError("hermiticity", herm,
                         "DensityMatrix: not Hermitian, ||rho - rho^dagger||_F = " + format_g17(herm));
  }
  const double tr = mat_.trace().real();
  if (std::abs(tr - 1.0) > tolerance::kTrace) {
    throw InvariantError("trace", tr, "DensityMatrix: trace is " + format_g17(tr) + ", expected 1");
  }
  const std::vector<double> spectrum = linmath::hermitian_spectrum(mat_);
  if (!spectrum.empty() && spectrum.front() < -tolerance::kPositivity) {
    throw InvariantError("positivity", spectrum.front(),
                         "DensityMatrix: negative eigenvalue " + format_g17(spectrum.front()));
  }
}

std::vector<double> DensityMatrix::spectrum() const {
  std::vector<double> lambdas = linmath::hermitian_spectrum(mat_);
  linmath::clip_negative_round_off(lambdas);
  return lambdas;
}

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw InvariantError("sum", 0.0, "ProbabilityVector: empty");
  for (std::size_t k = 0; k < probs_.size(); ++k) {
    const double p = probs_[k];
    if (!std::isfinite(p) || p < -tolerance::kProbabilityRange ||
        p > 1.0 + tolerance::kProbabilityRange) {
      throw InvariantError("range", p,
                           "ProbabilityVector: entry " + std::to_string(k) + " = " + format_g17(p) +
                               " outside [0, 1]");
    }
  }
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(sum - 1.0) > tolerance::kProbabilitySum) {
    throw InvariantError("sum", sum, "ProbabilityVector: sums to " + format_g17(sum));
  }
}

}  // namespace negent
