#include <benchmark/benchmark.h>

#include <random>

#include "negent/entcalc.hpp"
#include "negent/linmath.hpp"
#include "negent/qstate.hpp"

using namespace negent;
namespace ent = negent::entcalc;

namespace {

// Full-rank state on n qubits: a separable mixture blended with a GHZ state.
DensityMatrix sample_state(std::size_t qubits) {
  const SystemShape shape = SystemShape::uniform(qubits);
  const std::size_t d = shape.total_dim();
  const ComplexMatrix ghz = ghz_state(qubits).matrix();
  ComplexMatrix mat = ghz * Complex(0.7) + ComplexMatrix::identity(d) * Complex(0.3 / static_cast<double>(d));
  std::mt19937_64 rng(42);
  const auto v = random_pure_vector(rng, d);
  mat = mat * Complex(0.9) + ComplexMatrix::outer(v) * Complex(0.1);
  return DensityMatrix(shape, hermitian_part(mat));
}

ent::Partition first_vs_rest(std::size_t qubits) {
  std::vector<std::string> rest;
  for (std::size_t k = 1; k < qubits; ++k) rest.push_back(default_label(k));
  return ent::Partition{{default_label(0)}, rest};
}

void BM_HermitianEig(benchmark::State& state) {
  const auto rho = sample_state(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(linmath::hermitian_eig(rho.matrix()));
}
BENCHMARK(BM_HermitianEig)->DenseRange(2, 7);

void BM_PartialTrace(benchmark::State& state) {
  const std::size_t qubits = static_cast<std::size_t>(state.range(0));
  const auto rho = sample_state(qubits);
  const std::vector<std::size_t> dims(qubits, 2);
  const std::vector<std::size_t> keep{0, qubits - 1};
  for (auto _ : state) benchmark::DoNotOptimize(linmath::partial_trace(rho.matrix(), dims, keep));
}
BENCHMARK(BM_PartialTrace)->DenseRange(2, 8);

void BM_ConditionalAmplitude(benchmark::State& state) {
  const std::size_t qubits = static_cast<std::size_t>(state.range(0));
  const auto rho = sample_state(qubits);
  const auto part = first_vs_rest(qubits);
  for (auto _ : state) benchmark::DoNotOptimize(ent::conditional_amplitude(rho, part));
}
BENCHMARK(BM_ConditionalAmplitude)->DenseRange(2, 6);

void BM_TrotterSequence(benchmark::State& state) {
  const auto rho = sample_state(2);
  const auto part = first_vs_rest(2);
  const auto schedule = ent::power_of_two_schedule(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ent::trotter_sequence(rho, part, schedule, ent::AmplitudeKind::conditional));
  }
}
BENCHMARK(BM_TrotterSequence)->RangeMultiplier(16)->Range(4, 4096);

}  // namespace

BENCHMARK_MAIN();
