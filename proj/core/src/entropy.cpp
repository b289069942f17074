#include <algorithm>
#include <cmath>
#include <string>

#include "negent/entcalc.hpp"
#include "negent/error.hpp"
#include "negent/linmath.hpp"

namespace negent::entcalc {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> parse_side(std::string_view text, std::string_view whole) {
  std::vector<std::string> labels;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string label = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (label.empty()) {
      throw Error(ErrorKind::PartitionError,
                  "partition '" + std::string(whole) + "': empty label");
    }
    labels.push_back(std::move(label));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return labels;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

Partition Partition::parse(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorKind::PartitionError,
                "partition '" + std::string(text) + "': expected exactly one '|', e.g. A,B|C");
  }
  Partition part{parse_side(text.substr(0, bar), text), parse_side(text.substr(bar + 1), text)};
  const std::vector<std::string> all = part.joint();
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (all[j] == all[k]) {
        throw Error(ErrorKind::PartitionError,
                    "partition '" + std::string(text) + "': label '" + all[k] + "' repeated");
      }
  return part;
}

std::string Partition::to_string() const {
  auto join = [](const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + v[k];
    return out;
  };
  return join(side_a) + "|" + join(side_b);
}

std::vector<std::string> Partition::joint() const {
  std::vector<std::string> all = side_a;
  all.insert(all.end(), side_b.begin(), side_b.end());
  return all;
}

void validate(const Partition& part, const SystemShape& shape) {
  if (part.side_a.empty() || part.side_b.empty()) {
    throw Error(ErrorKind::PartitionError, "partition '" + part.to_string() + "': empty side");
  }
  std::vector<std::string> seen;
  for (const auto& label : part.joint()) {
    if (!shape.contains(label)) {
      throw Error(ErrorKind::PartitionError,
                  "partition '" + part.to_string() + "': state has no subsystem '" + label + "'");
    }
    if (contains(seen, label)) {
      throw Error(ErrorKind::PartitionError,
                  "partition '" + part.to_string() + "': label '" + label + "' on both sides");
    }
    seen.push_back(label);
  }
}

std::string side_name(std::span<const std::string> labels) {
  const bool short_labels =
      std::all_of(labels.begin(), labels.end(), [](const std::string& l) { return l.size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0 && !short_labels) out += ',';
    out += labels[k];
  }
  return out;
}

Bits shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p)
    if (x > linmath::kSupportCutoff) h -= x * std::log2(x);
  return h + 0.0;
}

Bits shannon_entropy(const ProbabilityVector& p) { return shannon_entropy(p.probs()); }

Bits von_neumann_entropy(const DensityMatrix& rho) { return shannon_entropy(rho.spectrum()); }

Bits entropy_of(const DensityMatrix& rho, std::span<const std::string> labels) {
  const std::vector<std::size_t> positions = rho.shape().positions(labels);
  if (positions.size() == rho.shape().size()) return von_neumann_entropy(rho);
  return von_neumann_entropy(reduce(rho, labels));
}

Bits conditional_entropy(const DensityMatrix& rho, const Partition& part) {
  validate(part, rho.shape());
  return entropy_of(rho, part.joint()) - entropy_of(rho, part.side_b);
}

Bits mutual_entropy(const DensityMatrix& rho, const Partition& part) {
  validate(part, rho.shape());
  return entropy_of(rho, part.side_a) + entropy_of(rho, part.side_b) -
         entropy_of(rho, part.joint());
}

}  // namespace negent::entcalc
