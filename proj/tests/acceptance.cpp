// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "negent/entcalc.hpp"
#include "negent/error.hpp"
#include "negent/linmath.hpp"
#include "negent/number_format.hpp"
#include "negent/qstate.hpp"
#include "support/oracles.hpp"

#ifdef NEGENT_WITH_CLI
#include "qitool/cli.hpp"
#endif

using namespace negent;
namespace ent = negent::entcalc;
namespace oracle = negent::testing;

namespace {

// Tolerances, fixed here rather than taken from the library.
constexpr double kExact = 1e-9;
constexpr double kOperatorEntropy = 1e-8;
constexpr double kReduction = 1e-12;
constexpr double kArakiLieb = 1e-7;
constexpr double kSeparable = 1e-8;
constexpr double kSpectrum = 1e-7;
constexpr double kTrotterSlack = 0.10;
constexpr double kCommutingTrotter = 1e-12;
constexpr double kConcavity = 1e-7;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed check; keeps the first few messages.
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass || detail.size() < 300) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
  void near(double got, double want, double tol, const std::string& what) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s = %.12g, want %.12g +- %.0e", what.c_str(), got, want, tol);
    expect(std::abs(got - want) <= tol, buf);
  }
};

const ent::Partition kAB = ent::Partition::parse("A|B");
const SystemShape kQubits = SystemShape::uniform(2);

DensityMatrix singlet() { return bell_state(3); }

DensityMatrix random_mixed(std::mt19937_64& rng, std::size_t rank) {
  return DensityMatrix(kQubits, oracle::random_density(rng, 4, rank));
}

Outcome epr_fixture() {
  Outcome o;
  const auto d = ent::bipartite_diagram(singlet(), kAB);
  o.near(d.s_a, 1, kExact, "S(A)");
  o.near(d.s_b, 1, kExact, "S(B)");
  o.near(d.s_ab, 0, kExact, "S(AB)");
  o.near(ent::conditional_entropy(singlet(), kAB), -1, kExact, "S(A|B)");
  o.near(ent::conditional_entropy(singlet(), kAB.swapped()), -1, kExact, "S(B|A)");
  o.near(ent::mutual_entropy(singlet(), kAB), 2, kExact, "S(A:B)");
  const auto r = d.regions();
  o.near(r[0], -1, kExact, "region A|B");
  o.near(r[1], 2, kExact, "region A:B");
  o.near(r[2], -1, kExact, "region B|A");
  return o;
}

Outcome singlet_operator() {
  Outcome o;
  const auto amp = ent::conditional_amplitude(singlet(), kAB);
  const ComplexMatrix printed = ComplexMatrix::from_rows({{0, 0, 0, 0}, {0, 1, -1, 0}, {0, -1, 1, 0}, {0, 0, 0, 0}});
  o.near((amp.mat - printed).max_abs(), 0, kExact, "max entry deviation");
  const std::vector<double> want{0, 0, 0, 2};
  for (std::size_t k = 0; k < 4; ++k) o.near(amp.eigenvalues[k], want[k], kExact, "eigenvalue " + std::to_string(k));
  const auto above_one = std::count_if(amp.eigenvalues.begin(), amp.eigenvalues.end(), [](double l) { return l > 1.0; });
  o.expect(above_one == 1, "eigenvalues > 1: " + std::to_string(above_one));
  return o;
}

Outcome operator_entropy() {
  Outcome o;
  const auto amp = ent::conditional_amplitude(singlet(), kAB);
  o.near(ent::entropy_via_operator(singlet(), amp), -1, kOperatorEntropy, "-Tr[rho log2 amp]");
  return o;
}

Outcome ghz_fixture() {
  Outcome o;
  const DensityMatrix ghz = ghz_state(3);
  o.near(ent::von_neumann_entropy(ghz), 0, kExact, "S(ABC)");
  const DensityMatrix ab = reduce(ghz, {"A", "B"});
  o.near((ab.matrix() - ComplexMatrix::diagonal({0.5, 0, 0, 0.5})).max_abs(), 0, kReduction, "AB marginal deviation");
  const std::vector<std::string> labels_ab{"A", "B"};
  const double s_ab = ent::entropy_of(ghz, labels_ab);
  const double c_given_ab = ent::conditional_entropy(ghz, ent::Partition::parse("C|A,B"));
  o.near(s_ab, 1, kExact, "S(AB)");
  o.near(c_given_ab, -1, kExact, "S(C|AB)");
  o.near(s_ab + c_given_ab, 0, kExact, "S(AB)+S(C|AB)");
  o.near(ent::ternary_mutual_entropy(ghz, {"A", "B", "C"}), 0, kExact, "S(A:B:C)");
  return o;
}

Outcome triptych() {
  Outcome o;
  const DensityMatrix case_one(kQubits, ComplexMatrix::identity(4) * Complex(0.25));
  const DensityMatrix case_two(kQubits, ComplexMatrix::diagonal({0.5, 0, 0, 0.5}));
  const std::vector<std::pair<std::string, std::pair<DensityMatrix, std::array<double, 3>>>> cases{
      {"I", {case_one, {1, 0, 1}}}, {"II", {case_two, {0, 1, 0}}}, {"III", {singlet(), {-1, 2, -1}}}};
  for (const auto& [name, c] : cases) {
    const auto r = ent::bipartite_diagram(c.first, kAB).regions();
    for (int k = 0; k < 3; ++k) o.near(r[k], c.second[k], kExact, "case " + name + " region " + std::to_string(k));
  }
  return o;
}

Outcome classical_reduction() {
  Outcome o;
  std::mt19937_64 rng(601);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> p(4);
    for (auto& x : p) x = u(rng);
    if (t % 5 == 0) p[t % 4] = 0.0;  // some states off full support
    double total = 0;
    for (double x : p) total += x;
    for (auto& x : p) x /= total;
    const DensityMatrix rho(kQubits, ComplexMatrix::diagonal(p));
    const oracle::JointTable table{{p[0], p[1]}, {p[2], p[3]}};
    const std::string tag = "state " + std::to_string(t);
    o.near(ent::conditional_entropy(rho, kAB), oracle::classical_conditional(table), kExact, tag + " H(A|B)");
    o.near(ent::mutual_entropy(rho, kAB), oracle::classical_mutual(table), kExact, tag + " H(A:B)");
  }
  return o;
}

Outcome bounds() {
  Outcome o;
  const auto r = ent::check_bounds(singlet(), kAB);
  o.expect(r.classical_mutual_bound_violated, "singlet does not violate the classical bound");
  const double min_single = std::min(r.values.s_a, r.values.s_b);
  o.near(r.values.s_mutual, 2 * min_single, kExact, "singlet S(A:B) vs 2 min");
  std::mt19937_64 rng(701);
  for (int t = 0; t < 200; ++t) {
    const DensityMatrix rho = random_mixed(rng, 1 + t % 4);
    const auto d = ent::bipartite_diagram(rho, kAB);
    o.expect(d.s_mutual <= 2 * std::min(d.s_a, d.s_b) + kArakiLieb, "Araki-Lieb fails on state " + std::to_string(t));
  }
  return o;
}

Outcome separable_corpus() {
  Outcome o;
  std::mt19937_64 rng(801);
  for (int t = 0; t < 100; ++t) {
    const DensityMatrix rho = random_separable(rng, 1 + t % 6, kQubits);
    const std::string tag = "state " + std::to_string(t);
    o.expect(ent::conditional_entropy(rho, kAB) >= -kSeparable, tag + " S(A|B) negative");
    o.expect(ent::conditional_entropy(rho, kAB.swapped()) >= -kSeparable, tag + " S(B|A) negative");
  }
  return o;
}

Outcome local_unitary_invariance() {
  Outcome o;
  std::mt19937_64 rng(901);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix rho = oracle::random_density(rng, 4, 4);
    const ComplexMatrix u = linmath::kron(oracle::random_unitary(rng, 2), oracle::random_unitary(rng, 2));
    const ComplexMatrix rotated = u * rho * u.adjoint();
    const auto before = ent::conditional_amplitude(DensityMatrix(kQubits, rho), kAB).spectrum();
    const auto after = ent::conditional_amplitude(DensityMatrix(kQubits, hermitian_part(rotated)), kAB).spectrum();
    for (std::size_t k = 0; k < before.size(); ++k) {
      o.near(after[k], before[k], kSpectrum, "pair " + std::to_string(t) + " eigenvalue " + std::to_string(k));
    }
  }
  return o;
}

Outcome trotter_convergence() {
  Outcome o;
  const auto schedule = ent::power_of_two_schedule(256);
  std::mt19937_64 rng(1001);
  int accepted = 0;
  while (accepted < 10) {
    const DensityMatrix rho = random_mixed(rng, 4);
    const ComplexMatrix rho_b = linmath::kron(ComplexMatrix::identity(2), reduce(rho, {"B"}).matrix());
    if (linmath::commutator_norm(rho.matrix(), rho_b) <= 1e-6) continue;
    const auto steps = ent::trotter_sequence(rho, kAB, schedule, ent::AmplitudeKind::conditional);
    const std::string tag = "state " + std::to_string(accepted);
    o.expect(steps.back().distance < steps.front().distance, tag + ": d(256) not below d(1)");
    o.expect(ent::trotter_trend_non_increasing(steps, kTrotterSlack, 4, 0.0), tag + ": distance grows across a doubling");
    ++accepted;
  }
  const std::vector<std::pair<std::string, DensityMatrix>> commuting{
      {"singlet", singlet()},
      {"ghz marginal", reduce(ghz_state(3), {"A", "B"})},
      {"maximally mixed", DensityMatrix(kQubits, ComplexMatrix::identity(4) * Complex(0.25))},
      {"diagonal", DensityMatrix(kQubits, ComplexMatrix::diagonal({0.1, 0.2, 0.3, 0.4}))}};
  for (const auto& [name, rho] : commuting) {
    const std::vector<std::size_t> first{1};
    const auto steps = ent::trotter_sequence(rho, kAB, first, ent::AmplitudeKind::conditional);
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: d(1) = %.3g", name.c_str(), steps.front().distance);
    o.expect(steps.front().distance <= kCommutingTrotter, buf);
  }
  return o;
}

Outcome concavity() {
  Outcome o;
  std::mt19937_64 rng(1101);
  std::uniform_real_distribution<double> lambda_dist(0.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix r1 = oracle::random_density(rng, 4, 1 + t % 4);
    const ComplexMatrix r2 = oracle::random_density(rng, 4, 1 + (t / 4) % 4);
    double lambda = lambda_dist(rng);
    if (lambda == 0.0) lambda = 0.5;
    const ComplexMatrix mix = r1 * Complex(lambda) + r2 * Complex(1 - lambda);
    const double lhs = ent::conditional_entropy(DensityMatrix(kQubits, mix), kAB);
    const double rhs = lambda * ent::conditional_entropy(DensityMatrix(kQubits, r1), kAB) +
                       (1 - lambda) * ent::conditional_entropy(DensityMatrix(kQubits, r2), kAB);
    o.expect(lhs >= rhs - kConcavity, "triple " + std::to_string(t) + " breaks concavity");
  }
  return o;
}

#ifdef NEGENT_WITH_CLI

struct CliRun {
  int code;
  std::string out;
};

CliRun qitool_run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qitool::run(args, out, err);
  return {code, out.str()};
}

// "  S(A|B)  -1.000000" rows of a text table, keyed by label.
std::map<std::string, std::string> table_rows(const std::string& text) {
  std::map<std::string, std::string> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string label;
    std::string value;
    if (fields >> label >> value && label.rfind("S(", 0) == 0) rows[label] = value;
  }
  return rows;
}

Outcome cli_round_trip() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "negent_acceptance";
  std::filesystem::create_directories(dir);
  const std::string bell = (dir / "bell3.json").string();
  const std::string ghz = (dir / "ghz3.json").string();
  const std::string ab = (dir / "ghz_ab.json").string();

  o.expect(qitool_run({"make", "bell3", "--out", bell}).code == 0, "make bell3 failed");
  o.expect(qitool_run({"make", "ghz3", "--out", ghz}).code == 0, "make ghz3 failed");
  if (!o.pass) return o;
  o.expect(load_state(bell).matrix() == singlet().matrix(), "bell3 file does not reload to the singlet");
  o.expect(load_state(ghz).matrix() == ghz_state(3).matrix(), "ghz3 file does not reload to GHZ");

  auto same = [&o](const std::map<std::string, std::string>& rows, const std::string& label, double library,
                   double exact) {
    const auto it = rows.find(label);
    if (it == rows.end()) {
      o.expect(false, label + " missing from CLI output");
      return;
    }
    o.expect(it->second == format_fixed(library), label + ": CLI " + it->second + " vs library " + format_fixed(library));
    o.expect(it->second == format_fixed(exact), label + ": CLI " + it->second + " vs expected " + format_fixed(exact));
  };

  const DensityMatrix s = load_state(bell);
  const auto bell_rows = table_rows(qitool_run({"entropy", "--in", bell, "--partition", "A|B"}).out);
  same(bell_rows, "S(A)", ent::entropy_of(s, std::vector<std::string>{"A"}), 1);
  same(bell_rows, "S(B)", ent::entropy_of(s, std::vector<std::string>{"B"}), 1);
  same(bell_rows, "S(AB)", ent::von_neumann_entropy(s), 0);
  same(bell_rows, "S(A|B)", ent::conditional_entropy(s, kAB), -1);
  same(bell_rows, "S(B|A)", ent::conditional_entropy(s, kAB.swapped()), -1);
  same(bell_rows, "S(A:B)", ent::mutual_entropy(s, kAB), 2);
  const auto bell_diagram = table_rows(qitool_run({"diagram", "--in", bell}).out);
  const auto regions = ent::bipartite_diagram(s, kAB).regions();
  same(bell_diagram, "S(A|B)", regions[0], -1);
  same(bell_diagram, "S(A:B)", regions[1], 2);
  same(bell_diagram, "S(B|A)", regions[2], -1);

  const DensityMatrix g = load_state(ghz);
  const auto c_ab = ent::Partition::parse("C|A,B");
  const auto ghz_rows = table_rows(qitool_run({"entropy", "--in", ghz, "--partition", "C|A,B"}).out);
  same(ghz_rows, "S(AB)", ent::entropy_of(g, std::vector<std::string>{"A", "B"}), 1);
  same(ghz_rows, "S(C|AB)", ent::conditional_entropy(g, c_ab), -1);
  same(ghz_rows, "S(CAB)", ent::von_neumann_entropy(g), 0);
  const auto ghz_diagram = table_rows(qitool_run({"diagram", "--in", ghz}).out);
  same(ghz_diagram, "S(ABC)", ent::von_neumann_entropy(g), 0);
  same(ghz_diagram, "S(A:B:C)", ent::ternary_mutual_entropy(g, {"A", "B", "C"}), 0);
  same(ghz_diagram, "S(C|AB)", ent::conditional_entropy(g, c_ab), -1);

  o.expect(qitool_run({"reduce", "--in", ghz, "--keep", "A,B", "--out", ab}).code == 0, "reduce failed");
  o.near((load_state(ab).matrix() - ComplexMatrix::diagonal({0.5, 0, 0, 0.5})).max_abs(), 0, kReduction,
         "reduced file deviation");

  const std::string garbage = (dir / "garbage.json").string();
  { std::ofstream(garbage) << "[1, 2"; }
  const std::vector<std::pair<std::vector<std::string>, int>> forced{
      {{"check", "--in", bell, "--expect", "entangled"}, qitool::kSuccess},
      {{"check", "--in", ab, "--expect", "entangled"}, qitool::kCheckFailed},
      {{"make", "nosuchstate", "--out", garbage}, qitool::kUsageError},
      {{"entropy", "--in", bell, "--partition", "A|Q"}, qitool::kUsageError},
      {{"entropy", "--in", bell, "--partition", "A,B"}, qitool::kUsageError},
      {{"frobnicate"}, qitool::kUsageError},
      {{"trotter", "--in", bell, "--n-max", "3"}, qitool::kUsageError},
      {{"entropy", "--in", (dir / "absent.json").string()}, qitool::kDataError},
      {{"entropy", "--in", garbage}, qitool::kDataError}};
  for (const auto& [args, want] : forced) {
    const int got = qitool_run(args).code;
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    o.expect(got == want, "qitool" + joined + " exited " + std::to_string(got) + ", want " + std::to_string(want));
  }
  return o;
}

#endif

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"EPR fixture entropies and diagram", epr_fixture},
      {"singlet conditional amplitude matrix and spectrum", singlet_operator},
      {"operator form of S(A|B) on the singlet", operator_entropy},
      {"GHZ fixture", ghz_fixture},
      {"diagram triptych for cases I, II, III", triptych},
      {"classical reduction on 50 diagonal states", classical_reduction},
      {"classical bound violation and Araki-Lieb", bounds},
      {"non-negative conditionals on 100 separable states", separable_corpus},
      {"local-unitary spectral invariance, 20 pairs", local_unitary_invariance},
      {"Trotter convergence", trotter_convergence},
      {"concavity of S(A|B), 100 triples", concavity},
#ifdef NEGENT_WITH_CLI
      {"CLI round trip and exit codes", cli_round_trip},
#endif
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome result;
    try {
      result = run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("threw: ") + e.what());
    }
    std::printf("%-4s criterion %2d: %s%s%s\n", result.pass ? "PASS" : "FAIL", index, name.c_str(),
                result.pass ? "" : "  -- ", result.detail.c_str());
    if (!result.pass) ++failures;
  }
#ifndef NEGENT_WITH_CLI
  std::printf("SKIP criterion 12: CLI round trip (built without tools)\n");
  ++failures;
#endif
  std::printf("%d of %d criteria failed\n", failures, 12);
  return failures == 0 ? 0 : 1;
}
