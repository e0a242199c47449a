// Copyright 2026 The chronoflip developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chronoflip/io.hpp"

#include <fstream>

namespace chronoflip {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("complex scalar must be a [re, im] array");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw std::invalid_argument("matrix must be a nested array");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Eigen::Index>(j[r].size()) != cols)
      throw std::invalid_argument("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = complex_from_json(j[i]);
  return v;
}

json channel_to_json(const Channel& c) {
  json kraus = json::array();
  for (const auto& k : c.kraus) kraus.push_back(matrix_to_json(k));
  return json{{"d_in", c.d_in}, {"d_out", c.d_out}, {"kraus", std::move(kraus)}};
}

Channel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus"))
    throw std::invalid_argument("channel must have d_in, d_out and kraus fields");
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  return Channel(std::move(kraus), j.at("d_in").get<int>(), j.at("d_out").get<int>());
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return json::parse(in);
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

Channel load_channel(const std::string& path) {
  return channel_from_json(load_json_file(path));
}

void save_channel(const std::string& path, const Channel& c) {
  save_json_file(path, channel_to_json(c));
}

ComplexMatrix load_matrix(const std::string& path) {
  const json j = load_json_file(path);
  return matrix_from_json(j.is_object() && j.contains("matrix") ? j.at("matrix") : j);
}

}  // namespace chronoflip
