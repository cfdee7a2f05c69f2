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

#include "qmet/targets.hpp"

#include <cmath>
#include <random>

namespace qmet {

DensityMatrix gen_target_pure(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Matrix m(2, 2);
  m << c * c, s * c, s * c, s * s;
  return DensityMatrix(std::move(m));
}

const char* target_kind_name(TargetKind kind) {
  return kind == TargetKind::Pure ? "pure" : "mixed";
}

TargetKind target_kind_from_name(const std::string& name) {
  if (name == "pure") return TargetKind::Pure;
  if (name == "mixed") return TargetKind::Mixed;
  throw ParameterError("unknown target kind '" + name +
                       "' (expected pure or mixed)");
}

DensityMatrix gen_target_random(int dim, TargetKind kind, std::uint64_t seed) {
  if (dim < 2) {
    throw ParameterError("target dimension must be at least 2");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  if (kind == TargetKind::Pure) {
    Eigen::VectorXcd psi(dim);
    for (int i = 0; i < dim; ++i) {
      psi[i] = Complex(gauss(rng), gauss(rng));
    }
    psi.normalize();
    return DensityMatrix(Matrix(psi * psi.adjoint()));
  }

  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Matrix w = g * g.adjoint();
  return DensityMatrix(Matrix(w / w.trace().real()));
}

}  // namespace qmet
