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

#include <optional>
#include <vector>

#include "qmet/operators.hpp"

namespace qmet {

// An ordered set of full-rank model states rho_1..rho_m together with the
// derived operators eta_0 = I and eta_i = -ln(rho_i). The eta operators are
// the sufficient statistics of the max-entropy family built on the models.
class ModelSet {
 public:
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(models_.size()); }

  const std::vector<DensityMatrix>& models() const { return models_; }
  const DensityMatrix& model(int i) const { return models_.at(i); }

  // etas()[0] is the identity; etas()[i] = -ln(models()[i-1]).
  const std::vector<HermitianOperator>& etas() const { return etas_; }
  const HermitianOperator& eta(int i) const { return etas_.at(i); }

  std::optional<double> epsilon() const { return epsilon_; }

  friend ModelSet custom_models(std::vector<DensityMatrix> states);
  friend ModelSet pauli_smoothed_models(double epsilon);

 private:
  ModelSet() = default;

  int dim_ = 0;
  std::vector<DensityMatrix> models_;
  std::vector<HermitianOperator> etas_;
  std::optional<double> epsilon_;
};

// The six smoothed qubit models: the near-eigenstates of sigma_z, sigma_x
// and sigma_y in that order (z+, z-, x+, x-, y+, y-), mixed toward full
// rank by epsilon in (0, 1).
ModelSet pauli_smoothed_models(double epsilon);

// Arbitrary user-supplied models; every state must share one dimension and
// be full rank (smallest eigenvalue > 1e-12), else RankError with the index.
ModelSet custom_models(std::vector<DensityMatrix> states);

// True iff every pair of models commutes (Frobenius norm of the commutator
// below 1e-10). Commuting sets reduce to classical geometric mixing.
bool is_commuting(const ModelSet& ms);

}  // namespace qmet
