#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negent/complex_matrix.hpp"

namespace negent {

struct Subsystem {
  std::string label;
  std::size_t dim = 2;

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

/// Ordered, labelled tensor factors. The first part is the most significant
/// index: |i_A i_B> is row i_A * d_B + i_B.
class SystemShape {
 public:
  static constexpr std::size_t kDefaultDimLimit = 4096;

  explicit SystemShape(std::vector<Subsystem> parts, std::size_t dim_limit = kDefaultDimLimit);

  /// n parts of dimension `dim` labelled A, B, C, ...
  static SystemShape uniform(std::size_t n, std::size_t dim = 2,
                             std::size_t dim_limit = kDefaultDimLimit);

  const std::vector<Subsystem>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t total_dim() const noexcept { return total_dim_; }
  std::size_t dim_limit() const noexcept { return dim_limit_; }
  std::vector<std::size_t> dims() const;
  std::vector<std::string> labels() const;

  bool contains(std::string_view label) const noexcept;
  /// UnknownLabel if absent.
  std::size_t position(std::string_view label) const;
  /// Positions of `labels`, sorted into shape order. UnknownLabel, EmptyKeep,
  /// or LabelClash on repeats.
  std::vector<std::size_t> positions(std::span<const std::string> labels) const;

  SystemShape select(std::span<const std::size_t> positions) const;

  friend bool operator==(const SystemShape& a, const SystemShape& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Subsystem> parts_;
  std::size_t total_dim_ = 1;
  std::size_t dim_limit_ = kDefaultDimLimit;
};

/// Default label for the k-th subsystem: A..Z, then S26, S27, ...
std::string default_label(std::size_t k);

namespace tolerance {
inline constexpr double kHermitian = 1e-9;   // times dim, Frobenius
inline constexpr double kTrace = 1e-9;
inline constexpr double kPositivity = 1e-9;  // eigenvalues >= -kPositivity
inline constexpr double kNorm = 1e-9;
inline constexpr double kProbabilityRange = 1e-12;
inline constexpr double kProbabilitySum = 1e-9;
}  // namespace tolerance

/// Hermitian, unit-trace, positive semidefinite operator over a SystemShape.
/// Every constructor validates; a DensityMatrix that exists is valid.
class DensityMatrix {
 public:
  /// InvariantError names the violated invariant (hermiticity, trace,
  /// positivity) with the measured value. DimMismatch if sizes disagree.
  DensityMatrix(SystemShape shape, ComplexMatrix mat);

  const SystemShape& shape() const noexcept { return shape_; }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.rows(); }

  /// Ascending, with round-off negatives clipped to zero.
  std::vector<double> spectrum() const;

 private:
  SystemShape shape_;
  ComplexMatrix mat_;
};

class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs);

  const std::vector<double>& probs() const noexcept { return probs_; }
  std::size_t size() const noexcept { return probs_.size(); }

 private:
  std::vector<double> probs_;
};

// Constructors -------------------------------------------------------------

/// |psi><psi|. NormError if ||psi|| deviates from 1 by more than 1e-9.
DensityMatrix from_pure(std::span<const Complex> amplitudes, const SystemShape& shape);

/// 0: Phi+, 1: Phi-, 2: Psi+, 3: Psi- (the singlet (|01> - |10>)/sqrt 2).
DensityMatrix bell_state(int index);

/// (|0...0> + ... + |d-1...d-1>)/sqrt d over `parties` parts labelled A, B, ...
DensityMatrix ghz_state(std::size_t parties, std::size_t dim = 2,
                        std::size_t dim_limit = SystemShape::kDefaultDimLimit);

using MultiIndex = std::vector<std::size_t>;

/// Diagonal state with probs[k] on computational basis ket indices[k].
DensityMatrix classical_mixture(const ProbabilityVector& probs,
                                std::span<const MultiIndex> indices, const SystemShape& shape);

/// Tensor product of the factors' operators with shapes concatenated.
DensityMatrix product_state(std::span<const DensityMatrix> factors);

/// sum_k w_k |a_k><a_k| (x) |b_k><b_k| with Haar-random pure factors and
/// weights from normalised uniform samples. `shape` must have two parts.
DensityMatrix random_separable(std::mt19937_64& rng, std::size_t terms, const SystemShape& shape);
DensityMatrix random_separable(std::uint64_t seed, std::size_t terms, const SystemShape& shape);

/// Haar-random unit vector (normalised complex Gaussian).
std::vector<Complex> random_pure_vector(std::mt19937_64& rng, std::size_t dim);

/// Marginal on `keep`; kept parts stay in the original shape order.
DensityMatrix reduce(const DensityMatrix& rho, std::span<const std::string> keep);
DensityMatrix reduce(const DensityMatrix& rho, std::initializer_list<std::string> keep);

/// Same state with tensor factors reordered to `order` (a permutation of the
/// labels).
DensityMatrix reorder(const DensityMatrix& rho, std::span<const std::string> order);

// State files -----------------------------------------------------------------

/// JSON text: {"version": 1, "shape": [...], "matrix_re": [[...]], "matrix_im": [[...]]},
/// numbers with 17 significant digits.
std::string state_to_json(const DensityMatrix& rho);
/// `source` names the input in error messages.
DensityMatrix state_from_json(std::string_view text, std::string_view source = "<memory>");

void save_state(const DensityMatrix& rho, const std::string& path);
DensityMatrix load_state(const std::string& path);

}  // namespace negent
