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

#include <utility>
#include <vector>

#include "qmet/search.hpp"

namespace qmet {

// Qubit register whose computational basis states label the discretized
// parameter vectors. Basis index j carries the code bits of j, most
// significant bit first, so the first register qubit is the coarsest
// tensor factor.
struct RegisterSpec {
  CodingScheme scheme;
  int register_dim = 0;
  // decode_table[j] = decode(bits of j); rows have scheme.num_params
  // entries.
  std::vector<std::vector<double>> decode_table;
};

// Guarded at scheme.total_bits() <= 12 (dense register simulation).
RegisterSpec make_register_spec(const CodingScheme& scheme);

// The register-copy coupling H_D = sum_i w_i (x) eta_i, block diagonal
// over the register basis: block(j) = omega_0(j) I + sum_i omega_i(j)
// eta_i. With Free mode the leading coded parameter supplies omega_0(j);
// Analytic folds the normalizing omega_0 into every block; FixedZero
// leaves it out.
class InteractionHamiltonian {
 public:
  InteractionHamiltonian(HermitianOperator op, ModelSet models,
                         RegisterSpec reg, Omega0Mode mode)
      : op_(std::move(op)),
        models_(std::move(models)),
        reg_(std::move(reg)),
        mode_(mode) {}

  const HermitianOperator& op() const { return op_; }
  const ModelSet& models() const { return models_; }
  const RegisterSpec& reg() const { return reg_; }
  Omega0Mode omega0_mode() const { return mode_; }

  int register_dim() const { return reg_.register_dim; }
  int system_dim() const { return models_.dim(); }

  // The system-space block coupled to register basis state j.
  Matrix block(int j) const;

 private:
  HermitianOperator op_;
  ModelSet models_;
  RegisterSpec reg_;
  Omega0Mode mode_;
};

InteractionHamiltonian build_H_D(const ModelSet& ms, const RegisterSpec& reg,
                                 Omega0Mode mode = Omega0Mode::FixedZero);

// Same coupling acting on two fresh system copies at once: block(j)
// becomes B_j (x) I + I (x) B_j on the doubled system space.
HermitianOperator two_copy_interaction(const InteractionHamiltonian& h);

// Consumption bookkeeping for the repeated-interaction protocols. Target
// copies are the scarce resource; maximally mixed partners can be
// prepared without access to the target.
struct CopyLedger {
  long target_copies_used = 0;
  long partner_states_used = 0;
};

// Diagonal register operator whose entry j is the cross term
// D(mu; rho(omega(j))), obtained by tracing the fresh copy out of the
// coupling. The copy couples through -H_D: that sign makes the reduced
// generator equal the cross-term diagonal that the objective minimizes.
HermitianOperator reduced_first_term_generator(const InteractionHamiltonian& h,
                                               const DensityMatrix& mu);

// Collision protocol for the cross term: chi <- tr_sys[U (chi (x) mu) U*]
// with U = exp(+i H_D dt) (the -H_D coupling above), one fresh copy of mu
// per step. Tracks copies in the ledger. First-order accurate in dt
// against the reduced generator.
std::pair<DensityMatrix, CopyLedger> repeated_interaction_evolve(
    const DensityMatrix& chi0, const DensityMatrix& mu,
    const InteractionHamiltonian& h, double delta_t, long steps);

// Gibbs state exp(beta h)/Z with Z = tr exp(beta h). Throws
// NumericalError when beta * spectral radius would overflow.
std::pair<DensityMatrix, double> thermal_partner(const HermitianOperator& h,
                                                 double beta);

// Diagonal register operators tr_sys exp(H_D) and the two-copy analogue;
// entry j is tr exp(B_j) (resp. its square), i.e. the trace of the
// unnormalized family member at code j.
HermitianOperator constraint_diagonal_C1(const InteractionHamiltonian& h);
HermitianOperator constraint_diagonal_C2(const InteractionHamiltonian& h);

// Collision protocol for the trace penalty. Per step, three ingredients:
// (a) thermal-partner dynamics with one system copy in the maximally
//     mixed state, coupling lambda = -2 alpha Z1 d;
// (b) the two-copy variant with lambda = +alpha Z2 d^2;
// (c) the trivial Hamiltonian alpha I, a global phase and hence a no-op
//     on density matrices.
// The lambdas carry the partner-space dimension factors so the reduced
// per-step map matches exp(-i alpha (C1 - I)^2 dt) to first order, up to
// the global alpha I shift. Partners are refreshed every step.
std::pair<DensityMatrix, CopyLedger> constraint_term_evolve(
    const DensityMatrix& chi0, const ModelSet& ms, const RegisterSpec& reg,
    double alpha, double delta_t, long steps,
    Omega0Mode mode = Omega0Mode::FixedZero, double beta = 1.0);

// Interleaves one cross-term collision and one constraint-term round per
// step; the reduced dynamics approximates exp(-i H_eff t) with H_eff
// diagonal at the objective values (up to a global alpha shift).
std::pair<DensityMatrix, CopyLedger> combined_effective_evolve(
    const DensityMatrix& chi0, const DensityMatrix& mu, const ModelSet& ms,
    const RegisterSpec& reg, double alpha, double delta_t, long steps,
    Omega0Mode mode = Omega0Mode::FixedZero, double beta = 1.0);

// Ground truth: diagonal register operator with entry j = E(omega(j)).
HermitianOperator build_H_eff_exact(const ObjectiveSpec& spec,
                                    const RegisterSpec& reg);

// exp(-i h t) chi exp(+i h t); the exact evolution oracle.
DensityMatrix conjugate_evolve(const DensityMatrix& chi,
                               const HermitianOperator& h, double t);

// Transverse-field driver -sum_q X_q on num_qubits register qubits; its
// ground state is the uniform superposition and is non-degenerate.
HermitianOperator make_transverse_driver(int num_qubits);

// Uniform-superposition register state |+...+><+...+|.
DensityMatrix register_plus_state(int register_dim);

// Linear interpolation schedule from the driver to the problem
// Hamiltonian over total_time, integrated in `steps` piecewise-constant
// midpoint steps. With split_steps, each step applies the problem phase
// and the driver separately (mirroring the per-interval refresh protocol)
// instead of the exact exponential of the interpolated Hamiltonian.
struct AnnealSchedule {
  double total_time = 1.0;
  long steps = 1;
  HermitianOperator driver;
  bool split_steps = false;

  double delta_t() const { return total_time / double(steps); }
};

// Validates the schedule; throws ScheduleError when the driver ground
// state is degenerate.
AnnealSchedule make_anneal_schedule(double total_time, long steps,
                                    HermitianOperator driver,
                                    bool split_steps = false);

// Anneals from the driver ground state under
// H_QA(t) = (t/T) H_eff + (1 - t/T) V and returns the final register
// state together with the population on the minimizing code(s) of the
// diagonal problem Hamiltonian.
std::pair<DensityMatrix, double> quantum_anneal(const HermitianOperator& h_eff,
                                                const AnnealSchedule& sched);

}  // namespace qmet
