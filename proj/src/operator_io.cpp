// SPDX-License-Identifier: Apache-2.0
#include "wignerkit/operator_io.hpp"

#include <cmath>
#include <fstream>

namespace wignerkit {

nlohmann::json superop_to_json(const SuperOperator& op) {
  if (!op.all_finite()) fail(errc::non_finite, "refusing to serialize non-finite operator");
  const int d = op.size();
  nlohmann::json rows = nlohmann::json::array();
  for (int r = 0; r < d; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < d; ++c) row.push_back(op.at(r, c));
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"format", kOperatorFormatVersion}, {"dim", op.dim()}, {"matrix", rows}};
}

SuperOperator superop_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(errc::format_error, "operator document is not a JSON object");
  if (!j.contains("format") || !j["format"].is_string())
    fail(errc::format_error, "missing format string");
  if (j["format"].get<std::string>() != kOperatorFormatVersion)
    fail(errc::format_error, "unknown format string '" + j["format"].get<std::string>() + "'");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    fail(errc::format_error, "missing integer dim");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > kMaxDim)
    fail(errc::format_error, "dim " + std::to_string(n) + " outside supported range 1.." +
                                 std::to_string(kMaxDim));
  const int d = n * n;
  if (!j.contains("matrix") || !j["matrix"].is_array())
    fail(errc::format_error, "missing matrix rows");
  const auto& rows = j["matrix"];
  if (static_cast<int>(rows.size()) != d)
    fail(errc::format_error, "expected " + std::to_string(d) + " rows, got " +
                                 std::to_string(rows.size()));
  SuperOperator op(n);
  for (int r = 0; r < d; ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || static_cast<int>(row.size()) != d)
      fail(errc::format_error, "row " + std::to_string(r) + " does not hold " +
                                   std::to_string(d) + " entries");
    for (int c = 0; c < d; ++c) {
      const auto& cell = row[c];
      if (!cell.is_number())
        fail(errc::format_error, "non-numeric entry at row " + std::to_string(r) + ", col " +
                                     std::to_string(c));
      const double v = cell.get<double>();
      if (!std::isfinite(v))
        fail(errc::format_error, "non-finite entry at row " + std::to_string(r) + ", col " +
                                     std::to_string(c));
      op.at(r, c) = v;
    }
  }
  return op;
}

void save_superop(const SuperOperator& op, const std::string& path) {
  save_json_file(superop_to_json(op), path);
}

SuperOperator load_superop(const std::string& path) {
  return superop_from_json(load_json_file(path));
}

nlohmann::json complex_matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      out.push_back(nlohmann::json::array({m(i, j).real(), m(i, j).imag()}));
  return out;
}

ComplexMatrix complex_matrix_from_json(const nlohmann::json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    fail(errc::format_error, "complex matrix entry count mismatch");
  ComplexMatrix m(rows, cols);
  int k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c, ++k) {
      const auto& pair = j[k];
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
        fail(errc::format_error, "complex entry is not a [re, im] pair");
      m(i, c) = cplx{pair[0].get<double>(), pair[1].get<double>()};
      if (!std::isfinite(m(i, c).real()) || !std::isfinite(m(i, c).imag()))
        fail(errc::format_error, "non-finite complex entry");
    }
  return m;
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::format_error, "cannot open '" + path + "' for reading");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    fail(errc::format_error, std::string("JSON parse failure in '") + path + "': " + e.what());
  }
}

void save_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::format_error, "cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
  if (!out) fail(errc::format_error, "write failure on '" + path + "'");
}

}  // namespace wignerkit
