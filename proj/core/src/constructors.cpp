#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "negent/error.hpp"
#include "negent/linmath.hpp"
#include "negent/number_format.hpp"
#include "negent/qstate.hpp"

namespace negent {

DensityMatrix from_pure(std::span<const Complex> amplitudes, const SystemShape& shape) {
  if (amplitudes.size() != shape.total_dim()) {
    throw Error(ErrorKind::DimMismatch, "from_pure: " + std::to_string(amplitudes.size()) +
                                            " amplitudes for dimension " +
                                            std::to_string(shape.total_dim()));
  }
  double norm_sq = 0.0;
  for (const Complex& a : amplitudes) norm_sq += std::norm(a);
  const double norm = std::sqrt(norm_sq);
  if (std::abs(norm - 1.0) > tolerance::kNorm) {
    throw Error(ErrorKind::NormError, "from_pure: state norm is " + format_g17(norm));
  }
  return DensityMatrix(shape, ComplexMatrix::outer(amplitudes));
}

DensityMatrix bell_state(int index) {
  const double h = 1.0 / std::sqrt(2.0);
  std::vector<Complex> psi(4, 0.0);
  switch (index) {
    case 0: psi[0] = h; psi[3] = h; break;
    case 1: psi[0] = h; psi[3] = -h; break;
    case 2: psi[1] = h; psi[2] = h; break;
    case 3: psi[1] = h; psi[2] = -h; break;
    default:
      throw Error(ErrorKind::IndexError,
                  "bell_state: index " + std::to_string(index) + " not in 0..3");
  }
  return from_pure(psi, SystemShape::uniform(2));
}

DensityMatrix ghz_state(std::size_t parties, std::size_t dim, std::size_t dim_limit) {
  if (parties < 2) {
    throw Error(ErrorKind::InvalidArgument, "ghz_state: needs at least 2 parties");
  }
  const SystemShape shape = SystemShape::uniform(parties, dim, dim_limit);
  // index of |k k ... k> is k * (1 + d + d^2 + ...)
  std::size_t repunit = 0;
  for (std::size_t p = 0; p < parties; ++p) repunit = repunit * dim + 1;
  std::vector<Complex> psi(shape.total_dim(), 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t k = 0; k < dim; ++k) psi[k * repunit] = amp;
  return from_pure(psi, shape);
}

DensityMatrix classical_mixture(const ProbabilityVector& probs,
                                std::span<const MultiIndex> indices, const SystemShape& shape) {
  if (probs.size() != indices.size()) {
    throw Error(ErrorKind::DimMismatch, "classical_mixture: " + std::to_string(probs.size()) +
                                            " probabilities for " +
                                            std::to_string(indices.size()) + " basis indices");
  }
  const std::vector<std::size_t> dims = shape.dims();
  std::set<std::size_t> used;
  ComplexMatrix mat(shape.total_dim(), shape.total_dim());
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const MultiIndex& digits = indices[k];
    if (digits.size() != dims.size()) {
      throw Error(ErrorKind::DimMismatch, "classical_mixture: index " + std::to_string(k) +
                                              " has " + std::to_string(digits.size()) +
                                              " digits, shape has " + std::to_string(dims.size()));
    }
    std::size_t flat = 0;
    for (std::size_t pos = 0; pos < dims.size(); ++pos) {
      if (digits[pos] >= dims[pos]) {
        throw Error(ErrorKind::DimMismatch, "classical_mixture: digit " +
                                                std::to_string(digits[pos]) + " out of range for '" +
                                                shape.parts()[pos].label + "'");
      }
      flat = flat * dims[pos] + digits[pos];
    }
    if (!used.insert(flat).second) {
      throw Error(ErrorKind::DuplicateIndex,
                  "classical_mixture: basis index " + std::to_string(k) + " repeats an earlier one");
    }
    mat(flat, flat) = probs.probs()[k];
  }
  return DensityMatrix(shape, std::move(mat));
}

DensityMatrix product_state(std::span<const DensityMatrix> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "product_state: no factors");
  std::vector<Subsystem> parts;
  for (const auto& factor : factors)
    parts.insert(parts.end(), factor.shape().parts().begin(), factor.shape().parts().end());
  SystemShape shape(std::move(parts), factors.front().shape().dim_limit());

  ComplexMatrix mat = factors.front().matrix();
  for (std::size_t k = 1; k < factors.size(); ++k) mat = linmath::kron(mat, factors[k].matrix());
  return DensityMatrix(std::move(shape), std::move(mat));
}

std::vector<Complex> random_pure_vector(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(dim);
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (Complex& z : v) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z = Complex(re, im);
      norm_sq += re * re + im * im;
    }
  } while (norm_sq == 0.0);
  const double scale = 1.0 / std::sqrt(norm_sq);
  for (Complex& z : v) z *= scale;
  return v;
}

DensityMatrix random_separable(std::mt19937_64& rng, std::size_t terms, const SystemShape& shape) {
  if (shape.size() != 2) {
    throw Error(ErrorKind::InvalidArgument, "random_separable: shape must have two parts");
  }
  if (terms == 0) throw Error(ErrorKind::InvalidArgument, "random_separable: terms must be >= 1");

  const std::size_t d_a = shape.parts()[0].dim;
  const std::size_t d_b = shape.parts()[1].dim;
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  std::vector<ComplexMatrix> products;
  std::vector<double> weights;
  products.reserve(terms);
  weights.reserve(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    const auto a = random_pure_vector(rng, d_a);
    const auto b = random_pure_vector(rng, d_b);
    products.push_back(linmath::kron(ComplexMatrix::outer(a), ComplexMatrix::outer(b)));
    weights.push_back(uniform(rng));
  }
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total == 0.0) {
    weights.assign(terms, 1.0);
    total = static_cast<double>(terms);
  }

  ComplexMatrix mat(shape.total_dim(), shape.total_dim());
  for (std::size_t k = 0; k < terms; ++k) mat += products[k] * Complex(weights[k] / total);
  return DensityMatrix(shape, std::move(mat));
}

DensityMatrix random_separable(std::uint64_t seed, std::size_t terms, const SystemShape& shape) {
  std::mt19937_64 rng(seed);
  return random_separable(rng, terms, shape);
}

DensityMatrix reduce(const DensityMatrix& rho, std::span<const std::string> keep) {
  const std::vector<std::size_t> positions = rho.shape().positions(keep);
  const std::vector<std::size_t> dims = rho.shape().dims();
  return DensityMatrix(rho.shape().select(positions),
                       linmath::partial_trace(rho.matrix(), dims, positions));
}

DensityMatrix reduce(const DensityMatrix& rho, std::initializer_list<std::string> keep) {
  return reduce(rho, std::span<const std::string>(keep.begin(), keep.size()));
}

DensityMatrix reorder(const DensityMatrix& rho, std::span<const std::string> order) {
  const SystemShape& shape = rho.shape();
  if (order.size() != shape.size()) {
    throw Error(ErrorKind::InvalidArgument, "reorder: order must list every subsystem once");
  }
  std::vector<std::size_t> positions;
  positions.reserve(order.size());
  for (const auto& label : order) {
    const std::size_t pos = shape.position(label);
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      throw Error(ErrorKind::LabelClash, "reorder: label '" + label + "' given twice");
    }
    positions.push_back(pos);
  }
  const std::vector<std::size_t> dims = shape.dims();
  return DensityMatrix(shape.select(positions),
                       linmath::permute_subsystems(rho.matrix(), dims, positions));
}

}  // namespace negent
