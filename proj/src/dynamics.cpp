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

#include "qmet/dynamics.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace qmet {

namespace {

constexpr int kRegisterBitGuard = 12;
constexpr Eigen::Index kMaxDenseDim = 4096;
constexpr double kExpOverflowGuard = 700.0;

// Number of coded parameters the register must carry for the mode.
int expected_num_params(const ModelSet& ms, Omega0Mode mode) {
  return mode == Omega0Mode::Free ? ms.size() + 1 : ms.size();
}

void check_register_arity(const ModelSet& ms, const RegisterSpec& reg,
                          Omega0Mode mode) {
  if (reg.scheme.num_params != expected_num_params(ms, mode)) {
    throw ParameterError(
        "register codes " + std::to_string(reg.scheme.num_params) +
        " parameters, mode '" + omega0_mode_name(mode) + "' with " +
        std::to_string(ms.size()) + " models expects " +
        std::to_string(expected_num_params(ms, mode)));
  }
}

// Model weights for row j (omega_0 stripped off in Free mode).
std::vector<double> row_weights(const RegisterSpec& reg, Omega0Mode mode,
                                int j) {
  const std::vector<double>& row = reg.decode_table[j];
  if (mode == Omega0Mode::Free) {
    return std::vector<double>(row.begin() + 1, row.end());
  }
  return row;
}

double row_omega0(const ModelSet& ms, const RegisterSpec& reg,
                  Omega0Mode mode, int j) {
  switch (mode) {
    case Omega0Mode::FixedZero:
      return 0.0;
    case Omega0Mode::Analytic:
      return omega0_normalizing(ms, reg.decode_table[j]);
    case Omega0Mode::Free:
      return reg.decode_table[j][0];
  }
  throw ParameterError("unhandled omega0 mode");
}

Matrix block_matrix(const ModelSet& ms, const RegisterSpec& reg,
                    Omega0Mode mode, int j) {
  Matrix b = eta_weighted_sum(ms, row_weights(reg, mode, j)).matrix();
  const double w0 = row_omega0(ms, reg, mode, j);
  if (w0 != 0.0) {
    b += w0 * Matrix::Identity(ms.dim(), ms.dim());
  }
  return b;
}

void check_dense_guard(Eigen::Index dim, const char* what) {
  if (dim > kMaxDenseDim) {
    throw SizeError(std::string(what) + " would need a dense dimension of " +
                    std::to_string(dim) + " (guard " +
                    std::to_string(kMaxDenseDim) + ")");
  }
}

// W exp(-i * t * lambda) W^dagger.
Matrix phase_exp(const Spectrum& s, double t) {
  const Eigen::Index n = s.eigenvalues.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    phases[i] = std::exp(Complex(0.0, -t * s.eigenvalues[i]));
  }
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

void check_step_args(double delta_t, long steps) {
  if (!(delta_t > 0.0) || !std::isfinite(delta_t)) {
    throw ParameterError("delta_t must be positive and finite");
  }
  if (steps < 0) {
    throw ParameterError("steps must be non-negative");
  }
}

// Shared per-step machinery of the collision protocols; the step
// unitaries are fixed because partners are re-prepared identically at
// every interval.
class CollisionEngine {
 public:
  CollisionEngine(const ModelSet& ms, const RegisterSpec& reg,
                  Omega0Mode mode, double alpha, double beta, double delta_t)
      : reg_dim_(reg.register_dim), sys_dim_(ms.dim()) {
    check_dense_guard(Eigen::Index(reg_dim_) * sys_dim_ * sys_dim_,
                      "constraint-term simulation");
    if (alpha < 0.0) {
      throw ParameterError("alpha must be non-negative");
    }
    const InteractionHamiltonian h = build_H_D(ms, reg, mode);

    first_step_u_ = phase_exp(eig_hermitian(h.op()), -delta_t);

    const auto [xi1, z1] = thermal_partner(h.op(), beta);
    const double lambda1 = -2.0 * alpha * z1 * sys_dim_;
    partner_a_u_ = phase_exp(eig_hermitian(xi1.op()), lambda1 * delta_t);

    const HermitianOperator h2 = two_copy_interaction(h);
    const auto [xi2, z2] = thermal_partner(h2, beta);
    const double lambda2 = alpha * z2 * sys_dim_ * sys_dim_;
    partner_b_u_ = phase_exp(eig_hermitian(xi2.op()), lambda2 * delta_t);

    mixed1_ = Matrix::Identity(sys_dim_, sys_dim_) / double(sys_dim_);
    mixed2_ = Matrix::Identity(sys_dim_ * sys_dim_, sys_dim_ * sys_dim_) /
              double(sys_dim_ * sys_dim_);
  }

  void step_first_term(Matrix& chi, const Matrix& mu) const {
    Matrix x = kron(chi, mu);
    x = first_step_u_ * x * first_step_u_.adjoint();
    chi = partial_trace(x, reg_dim_, sys_dim_, Keep::First);
  }

  // Ingredients (a) and (b); (c) is the global phase alpha I and leaves
  // the state untouched.
  void step_constraint_term(Matrix& chi) const {
    Matrix x = kron(chi, mixed1_);
    x = partner_a_u_ * x * partner_a_u_.adjoint();
    chi = partial_trace(x, reg_dim_, sys_dim_, Keep::First);

    Matrix x2 = kron(chi, mixed2_);
    x2 = partner_b_u_ * x2 * partner_b_u_.adjoint();
    chi = partial_trace(x2, reg_dim_, sys_dim_ * sys_dim_, Keep::First);
  }

 private:
  int reg_dim_;
  int sys_dim_;
  Matrix first_step_u_;
  Matrix partner_a_u_;
  Matrix partner_b_u_;
  Matrix mixed1_;
  Matrix mixed2_;
};

}  // namespace

RegisterSpec make_register_spec(const CodingScheme& scheme) {
  validate_scheme(scheme);
  if (scheme.total_bits() > kRegisterBitGuard) {
    throw SizeError("register of " + std::to_string(scheme.total_bits()) +
                    " qubits exceeds the dense simulation guard of " +
                    std::to_string(kRegisterBitGuard));
  }
  RegisterSpec reg;
  reg.scheme = scheme;
  reg.register_dim = 1 << scheme.total_bits();
  reg.decode_table.reserve(reg.register_dim);
  for (int j = 0; j < reg.register_dim; ++j) {
    reg.decode_table.push_back(
        decode(code_from_index(scheme, static_cast<std::uint64_t>(j))));
  }
  return reg;
}

Matrix InteractionHamiltonian::block(int j) const {
  if (j < 0 || j >= register_dim()) {
    throw DimensionError("block index out of range");
  }
  const int d = system_dim();
  return op_.matrix().block(Eigen::Index(j) * d, Eigen::Index(j) * d, d, d);
}

InteractionHamiltonian build_H_D(const ModelSet& ms, const RegisterSpec& reg,
                                 Omega0Mode mode) {
  if (reg.scheme.total_bits() > kRegisterBitGuard) {
    throw SizeError("register of " + std::to_string(reg.scheme.total_bits()) +
                    " qubits exceeds the dense simulation guard of " +
                    std::to_string(kRegisterBitGuard));
  }
  check_register_arity(ms, reg, mode);
  const int r = reg.register_dim;
  const int d = ms.dim();
  Matrix h = Matrix::Zero(Eigen::Index(r) * d, Eigen::Index(r) * d);
  for (int j = 0; j < r; ++j) {
    h.block(Eigen::Index(j) * d, Eigen::Index(j) * d, d, d) =
        block_matrix(ms, reg, mode, j);
  }
  return InteractionHamiltonian(HermitianOperator(std::move(h)), ms, reg,
                                mode);
}

HermitianOperator two_copy_interaction(const InteractionHamiltonian& h) {
  const int r = h.register_dim();
  const int d = h.system_dim();
  check_dense_guard(Eigen::Index(r) * d * d, "two-copy interaction");
  const Matrix eye = Matrix::Identity(d, d);
  Matrix out = Matrix::Zero(Eigen::Index(r) * d * d, Eigen::Index(r) * d * d);
  for (int j = 0; j < r; ++j) {
    const Matrix b = h.block(j);
    out.block(Eigen::Index(j) * d * d, Eigen::Index(j) * d * d, d * d, d * d) =
        kron(b, eye) + kron(eye, b);
  }
  return HermitianOperator(std::move(out));
}

HermitianOperator reduced_first_term_generator(const InteractionHamiltonian& h,
                                               const DensityMatrix& mu) {
  if (mu.dim() != h.system_dim()) {
    throw DimensionError("target dimension does not match the coupling");
  }
  const int r = h.register_dim();
  const int d = h.system_dim();
  const Matrix weighted =
      h.op().matrix() * kron(Matrix::Identity(r, r), mu.matrix());
  return HermitianOperator(Matrix(-partial_trace(weighted, r, d, Keep::First)));
}

std::pair<DensityMatrix, CopyLedger> repeated_interaction_evolve(
    const DensityMatrix& chi0, const DensityMatrix& mu,
    const InteractionHamiltonian& h, double delta_t, long steps) {
  check_step_args(delta_t, steps);
  if (chi0.dim() != h.register_dim() || mu.dim() != h.system_dim()) {
    throw DimensionError("state dimensions do not match the coupling");
  }
  check_dense_guard(Eigen::Index(h.register_dim()) * h.system_dim(),
                    "repeated-interaction simulation");

  // Coupling through -H_D, i.e. U = exp(+i H_D dt).
  const Matrix u = phase_exp(eig_hermitian(h.op()), -delta_t);
  Matrix chi = chi0.matrix();
  for (long s = 0; s < steps; ++s) {
    Matrix x = kron(chi, mu.matrix());
    x = u * x * u.adjoint();
    chi = partial_trace(x, h.register_dim(), h.system_dim(), Keep::First);
  }
  CopyLedger ledger;
  ledger.target_copies_used = steps;
  return {DensityMatrix(HermitianOperator(std::move(chi))), ledger};
}

std::pair<DensityMatrix, double> thermal_partner(const HermitianOperator& h,
                                                 double beta) {
  if (!std::isfinite(beta)) {
    throw ParameterError("beta must be finite");
  }
  const Spectrum s = eig_hermitian(h);
  const double radius =
      std::max(std::abs(s.eigenvalues[0]),
               std::abs(s.eigenvalues[s.eigenvalues.size() - 1]));
  if (std::abs(beta) * radius > kExpOverflowGuard) {
    throw NumericalError("exp(beta H) overflows: |beta| * spectral radius = " +
                         std::to_string(std::abs(beta) * radius));
  }
  RealVector boltzmann = (beta * s.eigenvalues.array()).exp();
  const double z = boltzmann.sum();
  Matrix gibbs = s.eigenvectors * (boltzmann / z).asDiagonal() *
                 s.eigenvectors.adjoint();
  return {DensityMatrix(std::move(gibbs)), z};
}

HermitianOperator constraint_diagonal_C1(const InteractionHamiltonian& h) {
  check_dense_guard(Eigen::Index(h.register_dim()) * h.system_dim(),
                    "constraint diagonal");
  const HermitianOperator expd = exp_hermitian(h.op());
  return partial_trace(expd, h.register_dim(), h.system_dim(), Keep::First);
}

HermitianOperator constraint_diagonal_C2(const InteractionHamiltonian& h) {
  const HermitianOperator two = two_copy_interaction(h);
  const HermitianOperator expd = exp_hermitian(two);
  return partial_trace(expd, h.register_dim(),
                       h.system_dim() * h.system_dim(), Keep::First);
}

std::pair<DensityMatrix, CopyLedger> constraint_term_evolve(
    const DensityMatrix& chi0, const ModelSet& ms, const RegisterSpec& reg,
    double alpha, double delta_t, long steps, Omega0Mode mode, double beta) {
  check_step_args(delta_t, steps);
  if (chi0.dim() != reg.register_dim) {
    throw DimensionError("chi0 dimension does not match the register");
  }
  const CollisionEngine engine(ms, reg, mode, alpha, beta, delta_t);
  Matrix chi = chi0.matrix();
  CopyLedger ledger;
  for (long s = 0; s < steps; ++s) {
    engine.step_constraint_term(chi);
    ledger.partner_states_used += 3;
  }
  return {DensityMatrix(HermitianOperator(std::move(chi))), ledger};
}

std::pair<DensityMatrix, CopyLedger> combined_effective_evolve(
    const DensityMatrix& chi0, const DensityMatrix& mu, const ModelSet& ms,
    const RegisterSpec& reg, double alpha, double delta_t, long steps,
    Omega0Mode mode, double beta) {
  check_step_args(delta_t, steps);
  if (chi0.dim() != reg.register_dim) {
    throw DimensionError("chi0 dimension does not match the register");
  }
  if (mu.dim() != ms.dim()) {
    throw DimensionError("target dimension does not match the models");
  }
  const CollisionEngine engine(ms, reg, mode, alpha, beta, delta_t);
  Matrix chi = chi0.matrix();
  CopyLedger ledger;
  for (long s = 0; s < steps; ++s) {
    engine.step_first_term(chi, mu.matrix());
    engine.step_constraint_term(chi);
    ledger.target_copies_used += 1;
    ledger.partner_states_used += 3;
  }
  return {DensityMatrix(HermitianOperator(std::move(chi))), ledger};
}

HermitianOperator build_H_eff_exact(const ObjectiveSpec& spec,
                                    const RegisterSpec& reg) {
  check_register_arity(spec.models, reg, spec.omega0_mode);
  const int r = reg.register_dim;
  Matrix h = Matrix::Zero(r, r);
  for (int j = 0; j < r; ++j) {
    const std::vector<double>& row = reg.decode_table[j];
    if (spec.omega0_mode == Omega0Mode::Free) {
      h(j, j) = objective_E(
          spec, std::vector<double>(row.begin() + 1, row.end()), row[0]);
    } else {
      h(j, j) = objective_E(spec, row);
    }
  }
  return HermitianOperator(std::move(h));
}

DensityMatrix conjugate_evolve(const DensityMatrix& chi,
                               const HermitianOperator& h, double t) {
  if (chi.dim() != h.dim()) {
    throw DimensionError("conjugate_evolve: dimension mismatch");
  }
  const Matrix u = phase_exp(eig_hermitian(h), t);
  return DensityMatrix(
      HermitianOperator(Matrix(u * chi.matrix() * u.adjoint())));
}

HermitianOperator make_transverse_driver(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kRegisterBitGuard) {
    throw ParameterError("driver qubit count must be in [1, " +
                         std::to_string(kRegisterBitGuard) + "]");
  }
  const int dim = 1 << num_qubits;
  Matrix v = Matrix::Zero(dim, dim);
  for (int q = 0; q < num_qubits; ++q) {
    const int mask = 1 << (num_qubits - 1 - q);
    for (int i = 0; i < dim; ++i) {
      v(i, i ^ mask) -= 1.0;
    }
  }
  return HermitianOperator(std::move(v));
}

DensityMatrix register_plus_state(int register_dim) {
  if (register_dim < 1) {
    throw ParameterError("register dimension must be positive");
  }
  Matrix m = Matrix::Constant(register_dim, register_dim,
                              Complex(1.0 / register_dim, 0.0));
  return DensityMatrix(std::move(m));
}

AnnealSchedule make_anneal_schedule(double total_time, long steps,
                                    HermitianOperator driver,
                                    bool split_steps) {
  if (!(total_time >= 0.0) || !std::isfinite(total_time)) {
    throw ParameterError("total_time must be non-negative and finite");
  }
  if (steps < 1) {
    throw ParameterError("steps must be at least 1");
  }
  const Spectrum s = eig_hermitian(driver);
  const Eigen::Index n = s.eigenvalues.size();
  if (n < 2 || s.eigenvalues[n - 2] - s.eigenvalues[n - 1] <= 1e-10) {
    throw ScheduleError("driver ground state is degenerate");
  }
  return AnnealSchedule{total_time, steps, std::move(driver), split_steps};
}

std::pair<DensityMatrix, double> quantum_anneal(const HermitianOperator& h_eff,
                                                const AnnealSchedule& sched) {
  const int r = h_eff.dim();
  if (sched.driver.dim() != r) {
    throw DimensionError("driver dimension does not match the problem");
  }
  const RealVector diag = h_eff.matrix().diagonal().real();
  double offdiag = 0.0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i != j) {
        offdiag = std::max(offdiag, std::abs(h_eff.matrix()(i, j)));
      }
    }
  }
  if (offdiag > 1e-12 * std::max(1.0, diag.cwiseAbs().maxCoeff())) {
    throw ParameterError("problem Hamiltonian must be diagonal");
  }

  const Spectrum driver_spec = eig_hermitian(sched.driver);
  if (driver_spec.eigenvalues[r - 2] - driver_spec.eigenvalues[r - 1] <=
      1e-10) {
    throw ScheduleError("driver ground state is degenerate");
  }
  const Eigen::VectorXcd ground = driver_spec.eigenvectors.col(r - 1);
  Matrix chi = ground * ground.adjoint();

  const double t_total = sched.total_time;
  const double dt = sched.delta_t();
  for (long s = 0; s < sched.steps; ++s) {
    const double t_mid = (double(s) + 0.5) * dt;
    const double frac = t_total > 0.0 ? t_mid / t_total : 0.0;
    if (sched.split_steps) {
      Eigen::VectorXcd phases(r);
      for (int j = 0; j < r; ++j) {
        phases[j] = std::exp(Complex(0.0, -frac * dt * diag[j]));
      }
      chi = phases.asDiagonal() * chi;
      chi = chi * phases.conjugate().asDiagonal();
      const Matrix u_driver = phase_exp(driver_spec, (1.0 - frac) * dt);
      chi = u_driver * chi * u_driver.adjoint();
    } else {
      const HermitianOperator h_step(
          Matrix(frac * h_eff.matrix() + (1.0 - frac) * sched.driver.matrix()));
      const Matrix u = phase_exp(eig_hermitian(h_step), dt);
      chi = u * chi * u.adjoint();
    }
  }

  // Population on the minimizing code(s).
  const double e_min = diag.minCoeff();
  const double tol = 1e-9 * std::max(1.0, std::abs(e_min));
  double success = 0.0;
  for (int j = 0; j < r; ++j) {
    if (diag[j] <= e_min + tol) {
      success += chi(j, j).real();
    }
  }
  return {DensityMatrix(HermitianOperator(std::move(chi))), success};
}

}  // namespace qmet
