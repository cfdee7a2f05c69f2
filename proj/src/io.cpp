// Copyright 2026 The qmet authors
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

#include "qmet/io.hpp"

#include <cstdint>
#include <cstdio>

namespace qmet {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row_re = nlohmann::json::array();
    nlohmann::json row_im = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row_re.push_back(m(i, j).real());
      row_im.push_back(m(i, j).imag());
    }
    re.push_back(std::move(row_re));
    im.push_back(std::move(row_im));
  }
  return {{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im")) {
    throw InvalidOperatorError("matrix JSON needs dim/re/im fields");
  }
  const int dim = j.at("dim").get<int>();
  if (dim < 1) {
    throw InvalidOperatorError("matrix JSON has non-positive dim");
  }
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<int>(re.size()) != dim || static_cast<int>(im.size()) != dim) {
    throw InvalidOperatorError("matrix JSON row count does not match dim");
  }
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(re[r].size()) != dim ||
        static_cast<int>(im[r].size()) != dim) {
      throw InvalidOperatorError("matrix JSON column count does not match dim");
    }
    for (int c = 0; c < dim; ++c) {
      m(r, c) = Complex(re[r][c].get<double>(), im[r][c].get<double>());
    }
  }
  return m;
}

nlohmann::json operator_to_json(const HermitianOperator& h) {
  return matrix_to_json(h.matrix());
}

HermitianOperator operator_from_json(const nlohmann::json& j) {
  return HermitianOperator(matrix_from_json(j));
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  return matrix_to_json(rho.matrix());
}

DensityMatrix density_from_json(const nlohmann::json& j) {
  return DensityMatrix(matrix_from_json(j));
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::string(buf);
}

}  // namespace qmet
