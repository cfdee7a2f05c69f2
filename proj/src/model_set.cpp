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

#include "qmet/model_set.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qmet {

namespace {

constexpr double kFullRankTol = 1e-12;
constexpr double kCommuteTol = 1e-10;

HermitianOperator negative_log(const DensityMatrix& rho) {
  return func_hermitian(rho.op(), [](double x) {
    if (x <= kFullRankTol) {
      throw DomainError("model eigenvalue too small for -ln: " +
                            std::to_string(x),
                        x);
    }
    return -std::log(x);
  });
}

}  // namespace

ModelSet custom_models(std::vector<DensityMatrix> states) {
  if (states.empty()) {
    throw ParameterError("model set needs at least one state");
  }
  const int dim = states.front().dim();
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw DimensionError("model " + std::to_string(i) + " has dimension " +
                           std::to_string(states[i].dim()) + ", expected " +
                           std::to_string(dim));
    }
    const Spectrum s = eig_hermitian(states[i].op());
    const double min_eig = s.eigenvalues[s.eigenvalues.size() - 1];
    if (min_eig <= kFullRankTol) {
      throw RankError("model " + std::to_string(i) +
                          " is rank deficient (smallest eigenvalue " +
                          std::to_string(min_eig) + ")",
                      static_cast<int>(i));
    }
  }

  ModelSet ms;
  ms.dim_ = dim;
  ms.etas_.push_back(HermitianOperator::identity(dim));
  for (const DensityMatrix& rho : states) {
    ms.etas_.push_back(negative_log(rho));
  }
  ms.models_ = std::move(states);
  return ms;
}

ModelSet pauli_smoothed_models(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1), got " +
                         std::to_string(epsilon));
  }
  const double e = epsilon;
  const Complex i(0, 1);

  Matrix z_plus(2, 2), z_minus(2, 2), x_plus(2, 2), x_minus(2, 2),
      y_plus(2, 2), y_minus(2, 2);
  z_plus << (2 - e) / 2, 0, 0, e / 2;
  z_minus << e / 2, 0, 0, (2 - e) / 2;
  x_plus << 0.5, (1 - e) / 2, (1 - e) / 2, 0.5;
  x_minus << 0.5, -(1 - e) / 2, -(1 - e) / 2, 0.5;
  y_plus << 0.5, -i * (1 - e) / 2.0, i * (1 - e) / 2.0, 0.5;
  y_minus << 0.5, i * (1 - e) / 2.0, -i * (1 - e) / 2.0, 0.5;

  std::vector<DensityMatrix> states;
  states.reserve(6);
  for (const Matrix& m :
       {z_plus, z_minus, x_plus, x_minus, y_plus, y_minus}) {
    states.emplace_back(m);
  }
  ModelSet ms = custom_models(std::move(states));
  ms.epsilon_ = epsilon;
  return ms;
}

bool is_commuting(const ModelSet& ms) {
  for (int a = 0; a < ms.size(); ++a) {
    for (int b = a + 1; b < ms.size(); ++b) {
      if (commutator(ms.model(a).op(), ms.model(b).op()).norm() >=
          kCommuteTol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qmet
