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

#include "qmet/maxent.hpp"

namespace qmet {

// -sum lambda ln lambda over the spectrum, with 0 ln 0 = 0. In [0, ln dim].
double von_neumann_entropy(const DensityMatrix& rho);

// Cross term -tr(mu ln rho_pos). rho_pos may be unnormalized but must be
// positive definite (DomainError otherwise).
double cross_term_D(const DensityMatrix& mu, const HermitianOperator& rho_pos);

// tr(mu ln mu) - tr(mu ln rho); >= 0, and 0 iff rho = mu. Requires the
// support of mu to lie inside the support of rho (DomainError otherwise).
double relative_entropy(const DensityMatrix& mu, const DensityMatrix& rho);

// Uhlmann fidelity [tr sqrt(sqrt(mu) rho sqrt(mu))]^2 in [0, 1].
double fidelity(const DensityMatrix& mu, const DensityMatrix& rho);

// The minimization target: cross term plus a quadratic penalty keeping the
// parameterized state normalized.
struct ObjectiveSpec {
  ModelSet models;
  DensityMatrix target;
  double alpha = 100.0;
  Omega0Mode omega0_mode = Omega0Mode::FixedZero;
};

// Resolves omega_0 per the spec's mode: FixedZero forces 0, Analytic
// computes the normalizing value, Free passes `omega0_free` through.
double resolve_omega0(const ObjectiveSpec& spec,
                      const std::vector<double>& omegas, double omega0_free);

// E(omega) = D(mu; rho(omega)) + alpha (tr rho(omega) - 1)^2, with omega_0
// resolved per the spec's mode.
double objective_E(const ObjectiveSpec& spec, const std::vector<double>& omegas,
                   double omega0_free = 0.0);

}  // namespace qmet
