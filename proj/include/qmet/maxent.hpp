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

#include <vector>

#include "qmet/model_set.hpp"

namespace qmet {

// Parameter vector (omega_0, omega_1, ..., omega_m) of the max-entropy
// family rho(omega) = exp(omega_0 I + sum_i omega_i eta_i).
struct ParamVector {
  double omega0 = 0.0;
  std::vector<double> omegas;
};

// How omega_0 is treated when evaluating the family.
//   FixedZero: omega_0 = 0, the trace of rho(omega) floats freely.
//   Analytic:  omega_0 = -ln tr exp(sum omega_i eta_i), so tr rho = 1.
//   Free:      omega_0 is a search variable supplied by the caller.
enum class Omega0Mode { FixedZero, Analytic, Free };

const char* omega0_mode_name(Omega0Mode mode);
Omega0Mode omega0_mode_from_name(const std::string& name);

// sum_i omega_i eta_i over the model etas (omega_0 excluded); the exponent
// of the family up to the identity shift.
HermitianOperator eta_weighted_sum(const ModelSet& ms,
                                   const std::vector<double>& omegas);

// exp(omega_0 I + sum_i omega_i eta_i). Always positive definite for
// finite parameters; the trace is unconstrained.
HermitianOperator rho_unnormalized(const ModelSet& ms, const ParamVector& w);

// The normalizing omega_0: substituting it makes tr rho(omega) = 1.
double omega0_normalizing(const ModelSet& ms,
                          const std::vector<double>& omegas);

// rho(omega) / tr rho(omega); invariant under shifts of omega_0.
DensityMatrix rho_normalized(const ModelSet& ms, const ParamVector& w);

}  // namespace qmet
