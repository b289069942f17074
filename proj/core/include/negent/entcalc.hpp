#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negent/complex_matrix.hpp"
#include "negent/qstate.hpp"

namespace negent::entcalc {

/// All entropies are in bits.
using Bits = double;

/// Frobenius threshold under which joint and marginal operators are treated
/// as commuting.
inline constexpr double kCommutingThreshold = 1e-10;
/// Weight moved toward the maximally mixed state before taking logarithms of
/// a possibly singular, non-commuting input.
inline constexpr double kRegularization = 1e-10;
inline constexpr double kAmplitudeHermitianTolerance = 1e-8;  // times dim
inline constexpr double kAmplitudePositivityTolerance = 1e-7;
inline constexpr double kSupportLeakTolerance = 1e-8;
inline constexpr double kNegativeTolerance = 1e-8;
inline constexpr double kClassicalBoundTolerance = 1e-8;
inline constexpr double kArakiLiebTolerance = 1e-7;
inline constexpr std::size_t kTrotterDefaultMax = std::size_t{1} << 8;
inline constexpr std::size_t kTrotterHardCap = std::size_t{1} << 20;

/// A bipartition A|B of (some of) a state's labels. Labels not mentioned on
/// either side are traced out before anything is computed.
struct Partition {
  std::vector<std::string> side_a;
  std::vector<std::string> side_b;

  /// "A|B", "A,B|C". PartitionError on malformed text.
  static Partition parse(std::string_view text);
  std::string to_string() const;
  /// The labels of side_a followed by those of side_b.
  std::vector<std::string> joint() const;
  Partition swapped() const { return {side_b, side_a}; }
};

/// PartitionError unless both sides are nonempty, disjoint, and present in
/// `shape`.
void validate(const Partition& part, const SystemShape& shape);

/// Concatenated labels, e.g. {"A","B"} -> "AB"; joined with ',' if any
/// label is longer than one character.
std::string side_name(std::span<const std::string> labels);

// Entropies -------------------------------------------------------------------

Bits shannon_entropy(const ProbabilityVector& p);
/// -sum p log2 p over entries above the support cutoff; no validation.
Bits shannon_entropy(std::span<const double> p);

Bits von_neumann_entropy(const DensityMatrix& rho);
/// Entropy of the marginal on `labels`.
Bits entropy_of(const DensityMatrix& rho, std::span<const std::string> labels);

/// S(AB) - S(B); negative for some entangled states.
Bits conditional_entropy(const DensityMatrix& rho, const Partition& part);
/// S(A) + S(B) - S(AB).
Bits mutual_entropy(const DensityMatrix& rho, const Partition& part);

// Amplitude operators ---------------------------------------------------------

enum class AmplitudeKind { conditional, mutual };
enum class AmplitudeMethod { commuting, exp_log };

std::string_view to_string(AmplitudeKind kind) noexcept;
std::string_view to_string(AmplitudeMethod method) noexcept;

/// rho_{A|B} or rho_{A:B}. Positive and Hermitian, but not a density
/// matrix: eigenvalues above 1 are allowed. The operator acts on `shape`,
/// which lists the side_a factors first, then side_b.
struct ConditionalAmplitude {
  ComplexMatrix mat;
  /// Ascending. On the exp-log path these are exp of the exponent's
  /// eigenvalues rather than a second decomposition of `mat`.
  std::vector<double> eigenvalues;
  SystemShape shape;
  AmplitudeKind kind = AmplitudeKind::conditional;
  AmplitudeMethod method = AmplitudeMethod::commuting;
  /// Frobenius commutator of the two operators whose limit was taken.
  double commutator = 0.0;

  const std::vector<double>& spectrum() const noexcept { return eigenvalues; }
};

/// lim_n [rho_AB^{1/n} (1_A (x) rho_B)^{-1/n}]^n.
///
/// When rho_AB and 1_A (x) rho_B commute (to kCommutingThreshold) the limit
/// is rho_AB times the support pseudo-inverse of 1_A (x) rho_B, exactly.
/// Otherwise the limit is the Lie-Trotter closed form
///     exp(log rho'_AB - log(1_A (x) rho'_B)),
/// evaluated on rho' = (1 - eps) rho + eps 1/d so both logarithms exist.
ConditionalAmplitude conditional_amplitude(const DensityMatrix& rho, const Partition& part);

/// lim_n [(rho_A (x) rho_B)^{1/n} rho_AB^{-1/n}]^n, with the same method
/// selection and regularisation as conditional_amplitude.
ConditionalAmplitude mutual_amplitude(const DensityMatrix& rho, const Partition& part);

/// -Tr[rho_AB log2 amp] over the support of amp. SupportError if rho_AB has
/// more than kSupportLeakTolerance weight outside that support.
Bits entropy_via_operator(const DensityMatrix& rho, const ConditionalAmplitude& amp);

struct TrotterStep {
  std::size_t n = 1;
  ComplexMatrix product;  // [X^{1/n} Y^{-1/n}]^n, not Hermitian in general
  double distance = 0.0;  // Frobenius distance to the exp-log form
};

/// Finite-n products for each entry of n_list, always on the regularised
/// state, each compared with the exp-log limit at the same eps.
std::vector<TrotterStep> trotter_sequence(const DensityMatrix& rho, const Partition& part,
                                          std::span<const std::size_t> n_list,
                                          AmplitudeKind kind = AmplitudeKind::conditional);

/// 1, 2, 4, ..., n_max. InvalidArgument unless n_max is a power of two
/// within kTrotterHardCap.
std::vector<std::size_t> power_of_two_schedule(std::size_t n_max);

/// True when every doubling from n >= from_n satisfies
/// d(2n) <= (1 + slack) d(n) + floor.
bool trotter_trend_non_increasing(std::span<const TrotterStep> steps, double slack = 0.10,
                                  std::size_t from_n = 4, double floor = 0.0);

// Diagrams --------------------------------------------------------------------

struct EntropyDiagram {
  Bits s_a_given_b = 0.0;
  Bits s_mutual = 0.0;
  Bits s_b_given_a = 0.0;
  Bits s_a = 0.0;
  Bits s_b = 0.0;
  Bits s_ab = 0.0;

  /// (S(A|B), S(A:B), S(B|A)).
  std::array<Bits, 3> regions() const { return {s_a_given_b, s_mutual, s_b_given_a}; }
};

EntropyDiagram bipartite_diagram(const DensityMatrix& rho, const Partition& part);

using TernaryLabels = std::array<std::string, 3>;

/// Seven-region Venn diagram of X, Y, Z = labels[0..2].
struct TernaryDiagram {
  TernaryLabels labels;
  // singles: S(X|YZ), S(Y|XZ), S(Z|XY)
  std::array<Bits, 3> conditional{};
  // pairs: S(X:Y|Z), S(X:Z|Y), S(Y:Z|X)
  std::array<Bits, 3> pair_mutual{};
  Bits center = 0.0;  // S(X:Y:Z)

  std::array<Bits, 3> s_single{};  // S(X), S(Y), S(Z)
  std::array<Bits, 3> s_pair{};    // S(XY), S(XZ), S(YZ)
  Bits s_all = 0.0;                // S(XYZ)
};

/// S(X)+S(Y)+S(Z)-S(XY)-S(XZ)-S(YZ)+S(XYZ).
Bits ternary_mutual_entropy(const DensityMatrix& rho, const TernaryLabels& labels);
TernaryDiagram ternary_diagram(const DensityMatrix& rho, const TernaryLabels& labels);

// Checks ----------------------------------------------------------------------

struct BoundsReport {
  EntropyDiagram values;
  bool classical_mutual_bound_violated = false;  // S(A:B) > min(S(A), S(B))
  bool araki_lieb_satisfied = true;              // S(A:B) <= 2 min(S(A), S(B))
  bool araki_lieb_saturated = false;             // equality within 1e-9
  bool negative_a_given_b = false;
  bool negative_b_given_a = false;
  bool entanglement_witnessed = false;
};

/// ArakiLiebViolation if the inequality fails by more than
/// kArakiLiebTolerance; that can only be a numerical fault.
BoundsReport check_bounds(const DensityMatrix& rho, const Partition& part);

enum class WitnessVerdict { entangled, inconclusive };
std::string_view to_string(WitnessVerdict verdict) noexcept;

/// Negative conditional entropy in either direction certifies entanglement.
/// Non-negative values are necessary for separability but not sufficient,
/// so the witness never reports "separable".
struct WitnessResult {
  WitnessVerdict verdict = WitnessVerdict::inconclusive;
  Bits s_a_given_b = 0.0;
  Bits s_b_given_a = 0.0;

  bool witnessed() const noexcept { return verdict == WitnessVerdict::entangled; }
};

WitnessResult entanglement_witness(const DensityMatrix& rho, const Partition& part);

}  // namespace negent::entcalc
