#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "negent/complex_matrix.hpp"

namespace negent::linmath {

/// Eigenvalues with |lambda| at or below this are outside the support.
inline constexpr double kSupportCutoff = 1e-12;
/// Eigenvalues in (-kNegativeClip, 0) count as round-off and are clipped to 0.
inline constexpr double kNegativeClip = 1e-9;
/// Hermiticity precondition: ||m - m†||_F <= kHermitianTolerance * dim.
inline constexpr double kHermitianTolerance = 1e-9;

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column j pairs with eigenvalues[j]
};

/// Throws NotSquare / NotHermitian on precondition failure.
HermitianEigen hermitian_eig(const ComplexMatrix& m);

/// Sorted eigenvalues only.
std::vector<double> hermitian_spectrum(const ComplexMatrix& m);

struct SpectralOptions {
  /// Apply f only where |lambda| > support_cutoff; map the rest to 0.
  bool support_only = false;
  double support_cutoff = kSupportCutoff;
  /// Treat the input as positive semidefinite: clip eigenvalues in
  /// (-kNegativeClip, 0) to 0 and reject anything more negative.
  bool nonnegative = false;
};

using ScalarFunction = std::function<double(double)>;

/// V diag(f(lambda)) V†. DomainError when f is non-finite at a retained
/// eigenvalue.
ComplexMatrix matrix_function(const ComplexMatrix& m, const ScalarFunction& f,
                              SpectralOptions options = {});
ComplexMatrix matrix_function(const HermitianEigen& eig, const ScalarFunction& f,
                              SpectralOptions options = {});

ComplexMatrix matrix_exp(const ComplexMatrix& m);
/// Natural log of a strictly positive definite matrix.
ComplexMatrix matrix_log(const ComplexMatrix& m);
/// log2 on the support of a PSD matrix, 0 elsewhere.
ComplexMatrix matrix_log2_support(const ComplexMatrix& m);
/// m^p for PSD m; on the support only when p < 0.
ComplexMatrix matrix_power(const ComplexMatrix& m, double p);
/// Moore-Penrose inverse of a PSD matrix via its support.
ComplexMatrix pseudo_inverse(const ComplexMatrix& m);
/// Orthogonal projector onto the support of a PSD matrix.
ComplexMatrix support_projector(const ComplexMatrix& m);

/// Applies the PSD clipping rule in place; throws DomainError below
/// -kNegativeClip.
void clip_negative_round_off(std::vector<double>& eigenvalues);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace over every subsystem whose position is not in `keep`.
/// Subsystem 0 is the most significant tensor index. Kept factors stay in
/// their original relative order.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);

/// Reorders tensor factors: factor k of the result is factor order[k] of m.
ComplexMatrix permute_subsystems(const ComplexMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> order);

/// ||ab - ba||_F.
double commutator_norm(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square matrix power by repeated squaring (no Hermiticity assumed).
ComplexMatrix integer_power(ComplexMatrix m, std::size_t n);

}  // namespace negent::linmath
