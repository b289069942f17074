#include <algorithm>
#include <string>

#include "negent/error.hpp"
#include "negent/qstate.hpp"

namespace negent {

std::string default_label(std::size_t k) {
  if (k < 26) return std::string(1, static_cast<char>('A' + k));
  return "S" + std::to_string(k);
}

SystemShape::SystemShape(std::vector<Subsystem> parts, std::size_t dim_limit)
    : parts_(std::move(parts)), dim_limit_(dim_limit) {
  if (parts_.empty()) throw Error(ErrorKind::InvalidArgument, "SystemShape: no subsystems");
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    const Subsystem& part = parts_[k];
    if (part.label.empty()) {
      throw Error(ErrorKind::InvalidArgument, "SystemShape: empty label at position " + std::to_string(k));
    }
    if (part.label.find_first_of(",|") != std::string::npos) {
      throw Error(ErrorKind::InvalidArgument, "SystemShape: label '" + part.label +
                                                  "' contains a partition separator");
    }
    if (part.dim < 2) {
      throw Error(ErrorKind::InvalidArgument,
                  "SystemShape: subsystem '" + part.label + "' has dim " + std::to_string(part.dim));
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (parts_[j].label == part.label) {
        throw Error(ErrorKind::LabelClash, "SystemShape: duplicate label '" + part.label + "'");
      }
    }
    if (total_dim_ > dim_limit_ / part.dim) {
      throw Error(ErrorKind::LimitExceeded, "SystemShape: total dimension exceeds limit " +
                                                std::to_string(dim_limit_));
    }
    total_dim_ *= part.dim;
  }
}

SystemShape SystemShape::uniform(std::size_t n, std::size_t dim, std::size_t dim_limit) {
  std::vector<Subsystem> parts;
  parts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) parts.push_back({default_label(k), dim});
  return SystemShape(std::move(parts), dim_limit);
}

std::vector<std::size_t> SystemShape::dims() const {
  std::vector<std::size_t> out;
  out.reserve(parts_.size());
  for (const auto& part : parts_) out.push_back(part.dim);
  return out;
}

std::vector<std::string> SystemShape::labels() const {
  std::vector<std::string> out;
  out.reserve(parts_.size());
  for (const auto& part : parts_) out.push_back(part.label);
  return out;
}

bool SystemShape::contains(std::string_view label) const noexcept {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const Subsystem& p) { return p.label == label; });
}

std::size_t SystemShape::position(std::string_view label) const {
  for (std::size_t k = 0; k < parts_.size(); ++k)
    if (parts_[k].label == label) return k;
  throw Error(ErrorKind::UnknownLabel, "unknown subsystem label '" + std::string(label) + "'");
}

std::vector<std::size_t> SystemShape::positions(std::span<const std::string> labels) const {
  if (labels.empty()) throw Error(ErrorKind::EmptyKeep, "no subsystem labels given");
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (const auto& label : labels) {
    const std::size_t pos = position(label);
    if (std::find(out.begin(), out.end(), pos) != out.end()) {
      throw Error(ErrorKind::LabelClash, "subsystem label '" + label + "' given twice");
    }
    out.push_back(pos);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SystemShape SystemShape::select(std::span<const std::size_t> positions) const {
  std::vector<Subsystem> parts;
  parts.reserve(positions.size());
  for (std::size_t pos : positions) parts.push_back(parts_.at(pos));
  return SystemShape(std::move(parts), dim_limit_);
}

}  // namespace negent
