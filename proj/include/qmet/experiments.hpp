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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qmet/dynamics.hpp"
#include "qmet/targets.hpp"

namespace qmet {

// Model selection shared by all experiment runners: either the six-model
// qubit preset (optionally restricted to a 1-based index subset in paper
// order z+, z-, x+, x-, y+, y-) or a JSON file of custom states.
struct ModelConfig {
  std::string preset = "pauli6";
  double epsilon = 0.1;
  std::vector<int> indices;  // empty = all preset models
  std::string models_file;   // non-empty overrides the preset
};

ModelSet resolve_models(const ModelConfig& cfg);

// Target selection: a pure great-circle state by angle, a seeded random
// state, or a JSON matrix file.
struct TargetConfig {
  enum class Source { Theta, Random, File };
  Source source = Source::Random;
  double theta = 0.0;
  TargetKind kind = TargetKind::Pure;
  int dim = 2;
  std::string target_file;
};

DensityMatrix resolve_target(const TargetConfig& cfg, std::uint64_t seed);

struct LandscapeConfig {
  double theta = 0.0;
  ModelConfig models;
  double alpha = 100.0;
  Omega0Mode omega0_mode = Omega0Mode::Analytic;
  ScanGrid grid;
  std::uint64_t seed = 0;
};

// Fidelity/objective scan over the (omega_z, omega_x) plane; CSV columns
// omega_z, omega_x, fidelity, objective, omega0.
void run_landscape(const LandscapeConfig& cfg, std::ostream& out);

// The normalizing omega_0 surface over the same plane; CSV columns
// omega_z, omega_x, omega0, trace_check (tr of the family member with the
// normalizing omega_0 substituted, 1 up to rounding).
void run_omega0_surface(const LandscapeConfig& cfg, std::ostream& out);

struct OptimizeConfig {
  TargetConfig target;
  ModelConfig models;
  double alpha = 100.0;
  Omega0Mode omega0_mode = Omega0Mode::Analytic;
  int bits = 12;
  double omega_max = 4.0;
  long budget = 20000;
  std::uint64_t seed = 1;
};

struct OptimizeOutcome {
  SearchResult search;
  double entropy = 0.0;         // S(mu)
  double fidelity_best = 0.0;   // F(mu, rho_R at the minimizer)
  double fidelity_mixed = 0.0;  // F(mu, I/dim) baseline
};

OptimizeOutcome run_optimize(const OptimizeConfig& cfg);
void write_optimize_csv(const OptimizeConfig& cfg,
                        const OptimizeOutcome& outcome, std::ostream& out);

struct BatchConfig {
  OptimizeConfig base;
  int targets = 100;
  int threads = 0;  // 0 = hardware concurrency
};

struct BatchRow {
  int index = 0;
  std::uint64_t target_seed = 0;
  double entropy = 0.0;
  double best_E = 0.0;
  double fidelity_best = 0.0;
  double fidelity_mixed = 0.0;
  long evaluations = 0;
};

// Independent targets run concurrently with per-target derived seeds
// (seed xor index for the target, a salted stream for the search); rows
// come back in target order regardless of completion order.
std::vector<BatchRow> run_batch(const BatchConfig& cfg);
void write_batch_csv(const BatchConfig& cfg, const std::vector<BatchRow>& rows,
                     std::ostream& out);

enum class DynamicsTerm { First, Constraint, Combined };

const char* dynamics_term_name(DynamicsTerm term);
DynamicsTerm dynamics_term_from_name(const std::string& name);

// The defaults keep every code's trace penalty moderate; large
// omega_max * alpha products push corner codes out of the first-order
// collision regime and the convergence table goes flat.
struct DynamicsConfig {
  DynamicsTerm term = DynamicsTerm::Combined;
  TargetConfig target;
  ModelConfig models;
  double alpha = 0.25;
  Omega0Mode omega0_mode = Omega0Mode::FixedZero;
  double beta = 1.0;
  int bits = 2;
  double omega_max = 0.25;
  double tau = 1.0;
  std::vector<double> dt_list = {0.1, 0.05, 0.025, 0.0125};
  std::uint64_t seed = 1;
};

struct DynamicsRow {
  double delta_t = 0.0;
  long steps = 0;
  double error = 0.0;  // Frobenius distance to the exact reduced evolution
  CopyLedger ledger;
};

// Convergence study of the collision protocols against the exact
// generator at fixed total time tau.
std::vector<DynamicsRow> run_dynamics(const DynamicsConfig& cfg);
void write_dynamics_csv(const DynamicsConfig& cfg,
                        const std::vector<DynamicsRow>& rows,
                        std::ostream& out);
void write_dynamics_records(const DynamicsConfig& cfg,
                            const std::vector<DynamicsRow>& rows,
                            std::ostream& out);

enum class StepsRule { Quadratic, Linear, Fixed };

const char* steps_rule_name(StepsRule rule);
StepsRule steps_rule_from_name(const std::string& name);

struct AnnealConfig {
  TargetConfig target;
  ModelConfig models;
  double alpha = 100.0;
  Omega0Mode omega0_mode = Omega0Mode::Analytic;
  int bits = 2;
  double omega_max = 1.0;
  std::vector<double> T_list = {1.0, 4.0, 16.0, 64.0};
  StepsRule steps_rule = StepsRule::Quadratic;
  double steps_scale = 1.0;
  long fixed_steps = 128;
  bool split_steps = false;
  std::uint64_t seed = 1;
};

struct AnnealRow {
  double total_time = 0.0;
  long steps = 0;
  double delta_t = 0.0;
  double success_prob = 0.0;
};

long steps_for_time(const AnnealConfig& cfg, double total_time);

std::vector<AnnealRow> run_anneal(const AnnealConfig& cfg);
void write_anneal_csv(const AnnealConfig& cfg,
                      const std::vector<AnnealRow>& rows, std::ostream& out);
void write_anneal_records(const AnnealConfig& cfg,
                          const std::vector<AnnealRow>& rows,
                          std::ostream& out);

}  // namespace qmet
