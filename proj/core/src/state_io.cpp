#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "negent/error.hpp"
#include "negent/number_format.hpp"
#include "negent/qstate.hpp"

namespace negent {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

std::string quoted(const std::string& s) { return json(s).dump(); }

void write_matrix(std::ostringstream& out, const ComplexMatrix& m, bool imaginary) {
  out << "[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ", ";
      out << format_g17(imaginary ? m(i, j).imag() : m(i, j).real());
    }
    out << (i + 1 < m.rows() ? "],\n" : "]\n");
  }
  out << "  ]";
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  std::size_t line = 1;
  for (std::size_t k = 0; k < end; ++k)
    if (text[k] == '\n') ++line;
  return line;
}

[[noreturn]] void field_error(std::string_view source, const std::string& field,
                              const std::string& problem) {
  throw ParseError(0, field, std::string(source) + ": field '" + field + "': " + problem);
}

const json& require(const json& obj, const char* key, std::string_view source) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(source, key, "missing");
  return *it;
}

std::vector<std::vector<double>> read_rows(const json& value, const std::string& field,
                                           std::size_t dim, std::string_view source) {
  if (!value.is_array()) field_error(source, field, "expected an array of rows");
  if (value.size() != dim) {
    field_error(source, field, "expected " + std::to_string(dim) + " rows, found " +
                                   std::to_string(value.size()));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const json& row = value[i];
    const std::string row_field = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != dim) {
      field_error(source, row_field, "expected an array of " + std::to_string(dim) + " numbers");
    }
    std::vector<double> parsed;
    parsed.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!row[j].is_number()) {
        field_error(source, row_field + "[" + std::to_string(j) + "]", "expected a number");
      }
      parsed.push_back(row[j].get<double>());
    }
    rows.push_back(std::move(parsed));
  }
  return rows;
}

}  // namespace

std::string state_to_json(const DensityMatrix& rho) {
  std::ostringstream out;
  out << "{\n  \"version\": " << kFormatVersion << ",\n  \"shape\": [";
  const auto& parts = rho.shape().parts();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out << ", ";
    out << "{\"label\": " << quoted(parts[k].label) << ", \"dim\": " << parts[k].dim << "}";
  }
  out << "],\n  \"matrix_re\": ";
  write_matrix(out, rho.matrix(), false);
  out << ",\n  \"matrix_im\": ";
  write_matrix(out, rho.matrix(), true);
  out << "\n}\n";
  return out.str();
}

DensityMatrix state_from_json(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(line, "", std::string(source) + ":" + std::to_string(line) +
                                   ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) field_error(source, "<root>", "expected a JSON object");

  const json& version = require(doc, "version", source);
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion) {
    field_error(source, "version", "unsupported version " + version.dump());
  }

  const json& shape_json = require(doc, "shape", source);
  if (!shape_json.is_array() || shape_json.empty()) {
    field_error(source, "shape", "expected a non-empty array");
  }
  std::vector<Subsystem> parts;
  for (std::size_t k = 0; k < shape_json.size(); ++k) {
    const json& part = shape_json[k];
    const std::string field = "shape[" + std::to_string(k) + "]";
    if (!part.is_object()) field_error(source, field, "expected an object");
    const auto label = part.find("label");
    const auto dim = part.find("dim");
    if (label == part.end() || !label->is_string()) {
      field_error(source, field + ".label", "expected a string");
    }
    if (dim == part.end() || !dim->is_number_unsigned()) {
      field_error(source, field + ".dim", "expected a positive integer");
    }
    parts.push_back({label->get<std::string>(), dim->get<std::size_t>()});
  }

  std::optional<SystemShape> shape;
  try {
    shape.emplace(std::move(parts));
  } catch (const Error& e) {
    field_error(source, "shape", e.what());
  }

  const std::size_t dim = shape->total_dim();
  const auto re = read_rows(require(doc, "matrix_re", source), "matrix_re", dim, source);
  const auto im = read_rows(require(doc, "matrix_im", source), "matrix_im", dim, source);

  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) entries.emplace_back(re[i][j], im[i][j]);

  return DensityMatrix(std::move(*shape), ComplexMatrix(dim, dim, std::move(entries)));
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out << state_to_json(rho);
  out.close();
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path + "'");
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return state_from_json(buffer.str(), path);
}

}  // namespace negent
