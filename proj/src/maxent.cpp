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

#include "qmet/maxent.hpp"

#include <cmath>
#include <string>

namespace qmet {

namespace {

void check_params(const ModelSet& ms, const std::vector<double>& omegas,
                  double omega0) {
  if (static_cast<int>(omegas.size()) != ms.size()) {
    throw ParameterError("expected " + std::to_string(ms.size()) +
                         " omegas, got " + std::to_string(omegas.size()));
  }
  if (!std::isfinite(omega0)) {
    throw ParameterError("omega0 is not finite");
  }
  for (double w : omegas) {
    if (!std::isfinite(w)) {
      throw ParameterError("omega entry is not finite");
    }
  }
}

}  // namespace

HermitianOperator eta_weighted_sum(const ModelSet& ms,
                                   const std::vector<double>& omegas) {
  check_params(ms, omegas, 0.0);
  Matrix sum = Matrix::Zero(ms.dim(), ms.dim());
  for (int i = 0; i < ms.size(); ++i) {
    if (omegas[i] != 0.0) {
      sum += omegas[i] * ms.eta(i + 1).matrix();
    }
  }
  return HermitianOperator(std::move(sum));
}

const char* omega0_mode_name(Omega0Mode mode) {
  switch (mode) {
    case Omega0Mode::FixedZero:
      return "fixed0";
    case Omega0Mode::Analytic:
      return "analytic";
    case Omega0Mode::Free:
      return "free";
  }
  return "unknown";
}

Omega0Mode omega0_mode_from_name(const std::string& name) {
  if (name == "fixed0") return Omega0Mode::FixedZero;
  if (name == "analytic") return Omega0Mode::Analytic;
  if (name == "free") return Omega0Mode::Free;
  throw ParameterError("unknown omega0 mode '" + name +
                       "' (expected fixed0, analytic or free)");
}

HermitianOperator rho_unnormalized(const ModelSet& ms, const ParamVector& w) {
  check_params(ms, w.omegas, w.omega0);
  Matrix exponent = eta_weighted_sum(ms, w.omegas).matrix();
  exponent += w.omega0 * Matrix::Identity(ms.dim(), ms.dim());
  return exp_hermitian(HermitianOperator(std::move(exponent)));
}

double omega0_normalizing(const ModelSet& ms,
                          const std::vector<double>& omegas) {
  return -std::log(exp_hermitian(eta_weighted_sum(ms, omegas)).trace());
}

DensityMatrix rho_normalized(const ModelSet& ms, const ParamVector& w) {
  check_params(ms, w.omegas, w.omega0);
  // omega0 drops out of the quotient, so evaluate it at zero and avoid
  // overflow for large user-supplied shifts.
  const HermitianOperator rho =
      exp_hermitian(eta_weighted_sum(ms, w.omegas));
  return DensityMatrix(Matrix(rho.matrix() / rho.trace()));
}

}  // namespace qmet
