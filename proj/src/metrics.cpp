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

#include "qmet/metrics.hpp"

#include <cmath>
#include <string>

namespace qmet {

namespace {

constexpr double kZeroEigTol = 1e-14;
constexpr double kSupportTol = 1e-12;

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
  const Spectrum s = eig_hermitian(rho.op());
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lambda = s.eigenvalues[i];
    if (lambda > kZeroEigTol) {
      entropy -= lambda * std::log(lambda);
    }
  }
  return entropy;
}

double cross_term_D(const DensityMatrix& mu,
                    const HermitianOperator& rho_pos) {
  if (mu.dim() != rho_pos.dim()) {
    throw DimensionError("cross_term_D: dimension mismatch");
  }
  const HermitianOperator log_rho = log_hermitian(rho_pos);
  return -(mu.matrix() * log_rho.matrix()).trace().real();
}

double relative_entropy(const DensityMatrix& mu, const DensityMatrix& rho) {
  if (mu.dim() != rho.dim()) {
    throw DimensionError("relative_entropy: dimension mismatch");
  }
  // tr(mu ln rho) in rho's eigenbasis; directions outside rho's support
  // must carry no weight of mu.
  const Spectrum s = eig_hermitian(rho.op());
  double mu_log_rho = 0.0;
  for (Eigen::Index k = 0; k < s.eigenvalues.size(); ++k) {
    const double lambda = s.eigenvalues[k];
    const Eigen::VectorXcd v = s.eigenvectors.col(k);
    const double weight = (v.adjoint() * mu.matrix() * v)(0, 0).real();
    if (lambda > kZeroEigTol) {
      mu_log_rho += weight * std::log(lambda);
    } else if (weight > kSupportTol) {
      throw DomainError(
          "support of mu exceeds support of rho (weight " +
              std::to_string(weight) + " on a null direction)",
          lambda);
    }
  }
  return -von_neumann_entropy(mu) - mu_log_rho;
}

double fidelity(const DensityMatrix& mu, const DensityMatrix& rho) {
  if (mu.dim() != rho.dim()) {
    throw DimensionError("fidelity: dimension mismatch");
  }
  const HermitianOperator sqrt_mu = sqrt_hermitian_clamped(mu.op());
  const HermitianOperator inner(
      Matrix(sqrt_mu.matrix() * rho.matrix() * sqrt_mu.matrix()));
  const Spectrum s = eig_hermitian(inner);
  double root_sum = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i] > 0.0) {
      root_sum += std::sqrt(s.eigenvalues[i]);
    }
  }
  return root_sum * root_sum;
}

double resolve_omega0(const ObjectiveSpec& spec,
                      const std::vector<double>& omegas, double omega0_free) {
  switch (spec.omega0_mode) {
    case Omega0Mode::FixedZero:
      return 0.0;
    case Omega0Mode::Analytic:
      return omega0_normalizing(spec.models, omegas);
    case Omega0Mode::Free:
      return omega0_free;
  }
  throw ParameterError("unhandled omega0 mode");
}

double objective_E(const ObjectiveSpec& spec, const std::vector<double>& omegas,
                   double omega0_free) {
  if (spec.alpha < 0.0) {
    throw ParameterError("alpha must be non-negative");
  }
  if (spec.target.dim() != spec.models.dim()) {
    throw DimensionError("objective_E: target dimension " +
                         std::to_string(spec.target.dim()) +
                         " does not match models");
  }
  // ln rho(omega) is the exponent itself, so the cross term is linear in
  // omega and needs no matrix exponential; the trace penalty needs only
  // the exponent's eigenvalues.
  const HermitianOperator exponent = eta_weighted_sum(spec.models, omegas);
  const double omega0 = resolve_omega0(spec, omegas, omega0_free);

  const double cross =
      -omega0 - (spec.target.matrix() * exponent.matrix()).trace().real();

  const Spectrum s = eig_hermitian(exponent);
  double trace_rho = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    trace_rho += std::exp(omega0 + s.eigenvalues[i]);
  }
  const double defect = trace_rho - 1.0;
  return cross + spec.alpha * defect * defect;
}

}  // namespace qmet
