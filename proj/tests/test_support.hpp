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

#pragma once

#include <random>

#include "qmet/operators.hpp"

namespace qmet::test {

// Random Hermitian with spectrum roughly in [-scale, scale].
inline HermitianOperator random_hermitian(std::mt19937_64& rng, int dim,
                                          double scale = 1.0) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Matrix h = 0.5 * (m + m.adjoint().eval());
  h *= scale / std::max(1.0, h.norm());
  return HermitianOperator(std::move(h));
}

// Full-rank random density matrix (test-local Ginibre sampler, kept
// independent of the library's target generator).
inline DensityMatrix random_density(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  Matrix w = g * g.adjoint();
  w += 1e-6 * Matrix::Identity(dim, dim);
  return DensityMatrix(Matrix(w / w.trace().real()));
}

}  // namespace qmet::test
