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

#include "qmet/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "qmet/io.hpp"
#include "qmet/version.hpp"

namespace qmet {

namespace {

// Salt separating the search stream from the target-generation stream
// derived from the same user seed.
constexpr std::uint64_t kSearchSalt = 0x517cc1b727220a95ull;

// Ordered key=value pairs stamped into every output file, hashed so a
// result can be traced back to its exact configuration.
class Metadata {
 public:
  explicit Metadata(std::string tool) : tool_(std::move(tool)) {}

  void add(const std::string& key, const std::string& value) {
    pairs_.emplace_back(key, value);
  }
  void add(const std::string& key, double value) {
    add(key, format_double(value));
  }
  void add(const std::string& key, long value) {
    add(key, std::to_string(value));
  }
  void add(const std::string& key, int value) {
    add(key, std::to_string(value));
  }

  std::string canonical() const {
    std::ostringstream os;
    for (const auto& [k, v] : pairs_) {
      os << k << '=' << v << '\n';
    }
    return os.str();
  }

  void write(std::ostream& out, std::uint64_t seed) const {
    out << "# qmet " << tool_ << " v" << kVersion << "\n";
    out << "# config_hash=" << fnv1a_hex(canonical()) << " seed=" << seed
        << "\n";
    out << "#";
    for (const auto& [k, v] : pairs_) {
      out << ' ' << k << '=' << v;
    }
    out << "\n";
  }

 private:
  std::string tool_;
  std::vector<std::pair<std::string, std::string>> pairs_;
};

void add_model_meta(Metadata& meta, const ModelConfig& cfg) {
  if (!cfg.models_file.empty()) {
    meta.add("models", "file:" + cfg.models_file);
    return;
  }
  meta.add("models", cfg.preset);
  meta.add("epsilon", cfg.epsilon);
  if (!cfg.indices.empty()) {
    std::ostringstream os;
    for (std::size_t i = 0; i < cfg.indices.size(); ++i) {
      os << (i ? "," : "") << cfg.indices[i];
    }
    meta.add("model_indices", os.str());
  }
}

void add_target_meta(Metadata& meta, const TargetConfig& cfg) {
  switch (cfg.source) {
    case TargetConfig::Source::Theta:
      meta.add("target", "theta");
      meta.add("theta", cfg.theta);
      break;
    case TargetConfig::Source::Random:
      meta.add("target", std::string("random_") + target_kind_name(cfg.kind));
      meta.add("target_dim", cfg.dim);
      break;
    case TargetConfig::Source::File:
      meta.add("target", "file:" + cfg.target_file);
      break;
  }
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParameterError("cannot open '" + path + "'");
  }
  nlohmann::json j;
  in >> j;
  return j;
}

void parallel_for(int count, int threads, const std::function<void(int)>& fn) {
  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(1, std::min(workers, count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        if (failed.load()) {
          return;
        }
        try {
          fn(i);
        } catch (...) {
          std::scoped_lock lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (error) {
    std::rethrow_exception(error);
  }
}

}  // namespace

ModelSet resolve_models(const ModelConfig& cfg) {
  if (!cfg.models_file.empty()) {
    const nlohmann::json j = load_json_file(cfg.models_file);
    if (!j.contains("models") || !j.at("models").is_array() ||
        j.at("models").empty()) {
      throw ParameterError("models file needs a non-empty 'models' array");
    }
    std::vector<DensityMatrix> states;
    for (const auto& entry : j.at("models")) {
      states.push_back(density_from_json(entry));
    }
    return custom_models(std::move(states));
  }
  if (cfg.preset != "pauli6") {
    throw ParameterError("unknown model preset '" + cfg.preset + "'");
  }
  ModelSet full = pauli_smoothed_models(cfg.epsilon);
  if (cfg.indices.empty()) {
    return full;
  }
  std::vector<DensityMatrix> subset;
  for (int idx : cfg.indices) {
    if (idx < 1 || idx > full.size()) {
      throw ParameterError("model index " + std::to_string(idx) +
                           " outside 1.." + std::to_string(full.size()));
    }
    subset.push_back(full.model(idx - 1));
  }
  return custom_models(std::move(subset));
}

DensityMatrix resolve_target(const TargetConfig& cfg, std::uint64_t seed) {
  switch (cfg.source) {
    case TargetConfig::Source::Theta:
      return gen_target_pure(cfg.theta);
    case TargetConfig::Source::Random:
      return gen_target_random(cfg.dim, cfg.kind, seed);
    case TargetConfig::Source::File:
      return density_from_json(load_json_file(cfg.target_file));
  }
  throw ParameterError("unhandled target source");
}

void run_landscape(const LandscapeConfig& cfg, std::ostream& out) {
  const ModelSet ms = resolve_models(cfg.models);
  if (ms.size() < 4) {
    throw ParameterError("landscape scan needs at least four models");
  }
  const ObjectiveSpec spec{ms, gen_target_pure(cfg.theta), cfg.alpha,
                           cfg.omega0_mode};
  const auto [axis1, axis2] = default_qubit_plane();
  const std::vector<ScanRow> rows = landscape_scan(spec, axis1, axis2,
                                                   cfg.grid);

  Metadata meta("landscape");
  meta.add("theta", cfg.theta);
  add_model_meta(meta, cfg.models);
  meta.add("alpha", cfg.alpha);
  meta.add("omega0_mode", omega0_mode_name(cfg.omega0_mode));
  meta.add("grid_min", cfg.grid.min);
  meta.add("grid_max", cfg.grid.max);
  meta.add("grid_step", cfg.grid.step);
  meta.write(out, cfg.seed);

  out << "omega_z,omega_x,fidelity,objective,omega0\n";
  for (const ScanRow& r : rows) {
    out << format_double(r.a1) << ',' << format_double(r.a2) << ','
        << format_double(r.fidelity) << ',' << format_double(r.objective)
        << ',' << format_double(r.omega0) << "\n";
  }
}

void run_omega0_surface(const LandscapeConfig& cfg, std::ostream& out) {
  const ModelSet ms = resolve_models(cfg.models);
  if (ms.size() < 4) {
    throw ParameterError("omega0 surface needs at least four models");
  }
  const ScanGrid& grid = cfg.grid;
  if (!(grid.step > 0.0) || !(grid.max >= grid.min)) {
    throw ParameterError("scan grid must have positive step and max >= min");
  }

  Metadata meta("omega0");
  add_model_meta(meta, cfg.models);
  meta.add("grid_min", grid.min);
  meta.add("grid_max", grid.max);
  meta.add("grid_step", grid.step);
  meta.write(out, cfg.seed);

  out << "omega_z,omega_x,omega0,trace_check\n";
  const int count =
      static_cast<int>(std::llround((grid.max - grid.min) / grid.step)) + 1;
  std::vector<double> omegas(ms.size(), 0.0);
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const double z = grid.min + i * grid.step;
      const double x = grid.min + j * grid.step;
      std::fill(omegas.begin(), omegas.end(), 0.0);
      omegas[0] = z;
      omegas[1] = -z;
      omegas[2] = x;
      omegas[3] = -x;
      const double w0 = omega0_normalizing(ms, omegas);
      const double trace_check =
          rho_unnormalized(ms, ParamVector{w0, omegas}).trace();
      out << format_double(z) << ',' << format_double(x) << ','
          << format_double(w0) << ',' << format_double(trace_check) << "\n";
    }
  }
}

OptimizeOutcome run_optimize(const OptimizeConfig& cfg) {
  const ModelSet ms = resolve_models(cfg.models);
  const DensityMatrix mu = resolve_target(cfg.target, cfg.seed);
  const ObjectiveSpec spec{ms, mu, cfg.alpha, cfg.omega0_mode};
  const int coded_params =
      cfg.omega0_mode == Omega0Mode::Free ? ms.size() + 1 : ms.size();
  const CodingScheme scheme{cfg.bits, coded_params, cfg.omega_max};

  OptimizeOutcome outcome;
  outcome.search = random_search(spec, scheme, cfg.budget,
                                 cfg.seed ^ kSearchSalt);
  outcome.entropy = von_neumann_entropy(mu);

  std::vector<double> weights = outcome.search.best_omegas;
  if (cfg.omega0_mode == Omega0Mode::Free) {
    weights.erase(weights.begin());
  }
  outcome.fidelity_best =
      fidelity(mu, rho_normalized(ms, ParamVector{0.0, weights}));
  outcome.fidelity_mixed = fidelity(mu, DensityMatrix::maximally_mixed(ms.dim()));
  return outcome;
}

namespace {

void add_optimize_meta(Metadata& meta, const OptimizeConfig& cfg) {
  add_target_meta(meta, cfg.target);
  add_model_meta(meta, cfg.models);
  meta.add("alpha", cfg.alpha);
  meta.add("omega0_mode", omega0_mode_name(cfg.omega0_mode));
  meta.add("bits", cfg.bits);
  meta.add("omega_max", cfg.omega_max);
  meta.add("budget", cfg.budget);
}

}  // namespace

void write_optimize_csv(const OptimizeConfig& cfg,
                        const OptimizeOutcome& outcome, std::ostream& out) {
  Metadata meta("optimize");
  add_optimize_meta(meta, cfg);
  meta.write(out, cfg.seed);

  out << "entropy,best_E,fidelity,fidelity_mixed,evaluations,best_omegas\n";
  out << format_double(outcome.entropy) << ','
      << format_double(outcome.search.best_E) << ','
      << format_double(outcome.fidelity_best) << ','
      << format_double(outcome.fidelity_mixed) << ','
      << outcome.search.evaluations << ',';
  for (std::size_t i = 0; i < outcome.search.best_omegas.size(); ++i) {
    out << (i ? ";" : "") << format_double(outcome.search.best_omegas[i]);
  }
  out << "\n";
}

std::vector<BatchRow> run_batch(const BatchConfig& cfg) {
  if (cfg.targets < 1) {
    throw ParameterError("batch needs at least one target");
  }
  std::vector<BatchRow> rows(cfg.targets);
  parallel_for(cfg.targets, cfg.threads, [&](int index) {
    OptimizeConfig per = cfg.base;
    per.seed = cfg.base.seed ^ static_cast<std::uint64_t>(index);
    const OptimizeOutcome outcome = run_optimize(per);
    BatchRow row;
    row.index = index;
    row.target_seed = per.seed;
    row.entropy = outcome.entropy;
    row.best_E = outcome.search.best_E;
    row.fidelity_best = outcome.fidelity_best;
    row.fidelity_mixed = outcome.fidelity_mixed;
    row.evaluations = outcome.search.evaluations;
    rows[index] = row;
  });
  return rows;
}

void write_batch_csv(const BatchConfig& cfg, const std::vector<BatchRow>& rows,
                     std::ostream& out) {
  Metadata meta("batch");
  add_optimize_meta(meta, cfg.base);
  meta.add("targets", cfg.targets);
  meta.write(out, cfg.base.seed);

  out << "target,target_seed,entropy,best_E,fidelity,fidelity_mixed,"
         "evaluations\n";
  for (const BatchRow& r : rows) {
    out << r.index << ',' << r.target_seed << ',' << format_double(r.entropy)
        << ',' << format_double(r.best_E) << ','
        << format_double(r.fidelity_best) << ','
        << format_double(r.fidelity_mixed) << ',' << r.evaluations << "\n";
  }
}

const char* dynamics_term_name(DynamicsTerm term) {
  switch (term) {
    case DynamicsTerm::First:
      return "first";
    case DynamicsTerm::Constraint:
      return "constraint";
    case DynamicsTerm::Combined:
      return "combined";
  }
  return "unknown";
}

DynamicsTerm dynamics_term_from_name(const std::string& name) {
  if (name == "first") return DynamicsTerm::First;
  if (name == "constraint") return DynamicsTerm::Constraint;
  if (name == "combined") return DynamicsTerm::Combined;
  throw ParameterError("unknown dynamics term '" + name +
                       "' (expected first, constraint or combined)");
}

std::vector<DynamicsRow> run_dynamics(const DynamicsConfig& cfg) {
  const ModelSet ms = resolve_models(cfg.models);
  const DensityMatrix mu = resolve_target(cfg.target, cfg.seed);
  const int coded_params =
      cfg.omega0_mode == Omega0Mode::Free ? ms.size() + 1 : ms.size();
  const CodingScheme scheme{cfg.bits, coded_params, cfg.omega_max};
  const RegisterSpec reg = make_register_spec(scheme);
  const InteractionHamiltonian h = build_H_D(ms, reg, cfg.omega0_mode);
  const DensityMatrix chi0 = register_plus_state(reg.register_dim);

  // Exact reduced generator for the selected term. Global identity
  // shifts cancel in the conjugation, so the constraint comparison may
  // use the full alpha (C1 - I)^2 even though the protocol skips the
  // trivial alpha I evolution.
  HermitianOperator generator = HermitianOperator::zero(reg.register_dim);
  switch (cfg.term) {
    case DynamicsTerm::First:
      generator = reduced_first_term_generator(h, mu);
      break;
    case DynamicsTerm::Constraint: {
      const HermitianOperator c1 = constraint_diagonal_C1(h);
      const Matrix defect =
          c1.matrix() - Matrix::Identity(reg.register_dim, reg.register_dim);
      generator = HermitianOperator(Matrix(cfg.alpha * defect * defect));
      break;
    }
    case DynamicsTerm::Combined: {
      const ObjectiveSpec spec{ms, mu, cfg.alpha, cfg.omega0_mode};
      generator = build_H_eff_exact(spec, reg);
      break;
    }
  }

  std::vector<DynamicsRow> rows;
  for (double dt_req : cfg.dt_list) {
    if (!(dt_req > 0.0)) {
      throw ParameterError("delta_t values must be positive");
    }
    const long steps = std::max<long>(1, std::llround(cfg.tau / dt_req));
    const double dt = cfg.tau / double(steps);

    std::pair<DensityMatrix, CopyLedger> evolved = [&] {
      switch (cfg.term) {
        case DynamicsTerm::First:
          return repeated_interaction_evolve(chi0, mu, h, dt, steps);
        case DynamicsTerm::Constraint:
          return constraint_term_evolve(chi0, ms, reg, cfg.alpha, dt, steps,
                                        cfg.omega0_mode, cfg.beta);
        case DynamicsTerm::Combined:
          return combined_effective_evolve(chi0, mu, ms, reg, cfg.alpha, dt,
                                           steps, cfg.omega0_mode, cfg.beta);
      }
      throw ParameterError("unhandled dynamics term");
    }();

    const DensityMatrix exact = conjugate_evolve(chi0, generator, cfg.tau);
    DynamicsRow row;
    row.delta_t = dt;
    row.steps = steps;
    row.error = (evolved.first.matrix() - exact.matrix()).norm();
    row.ledger = evolved.second;
    rows.push_back(row);
  }
  return rows;
}

namespace {

void add_dynamics_meta(Metadata& meta, const DynamicsConfig& cfg) {
  meta.add("term", dynamics_term_name(cfg.term));
  add_target_meta(meta, cfg.target);
  add_model_meta(meta, cfg.models);
  meta.add("alpha", cfg.alpha);
  meta.add("omega0_mode", omega0_mode_name(cfg.omega0_mode));
  meta.add("beta", cfg.beta);
  meta.add("bits", cfg.bits);
  meta.add("omega_max", cfg.omega_max);
  meta.add("tau", cfg.tau);
}

}  // namespace

void write_dynamics_csv(const DynamicsConfig& cfg,
                        const std::vector<DynamicsRow>& rows,
                        std::ostream& out) {
  Metadata meta("dynamics");
  add_dynamics_meta(meta, cfg);
  meta.write(out, cfg.seed);

  out << "delta_t,steps,error,target_copies,partner_states\n";
  for (const DynamicsRow& r : rows) {
    out << format_double(r.delta_t) << ',' << r.steps << ','
        << format_double(r.error) << ',' << r.ledger.target_copies_used << ','
        << r.ledger.partner_states_used << "\n";
  }
}

void write_dynamics_records(const DynamicsConfig& cfg,
                            const std::vector<DynamicsRow>& rows,
                            std::ostream& out) {
  for (const DynamicsRow& r : rows) {
    nlohmann::json j{{"run", "dynamics"},
                     {"term", dynamics_term_name(cfg.term)},
                     {"tau", cfg.tau},
                     {"delta_t", r.delta_t},
                     {"steps", r.steps},
                     {"error", r.error},
                     {"target_copies", r.ledger.target_copies_used},
                     {"partner_states", r.ledger.partner_states_used},
                     {"alpha", cfg.alpha},
                     {"beta", cfg.beta},
                     {"bits", cfg.bits},
                     {"omega_max", cfg.omega_max},
                     {"omega0_mode", omega0_mode_name(cfg.omega0_mode)},
                     {"seed", cfg.seed}};
    out << j.dump() << "\n";
  }
}

const char* steps_rule_name(StepsRule rule) {
  switch (rule) {
    case StepsRule::Quadratic:
      return "t2";
    case StepsRule::Linear:
      return "t1";
    case StepsRule::Fixed:
      return "fixed";
  }
  return "unknown";
}

StepsRule steps_rule_from_name(const std::string& name) {
  if (name == "t2") return StepsRule::Quadratic;
  if (name == "t1") return StepsRule::Linear;
  if (name == "fixed") return StepsRule::Fixed;
  throw ParameterError("unknown steps rule '" + name +
                       "' (expected t2, t1 or fixed)");
}

long steps_for_time(const AnnealConfig& cfg, double total_time) {
  switch (cfg.steps_rule) {
    case StepsRule::Quadratic:
      return std::max<long>(
          1, std::llround(cfg.steps_scale * total_time * total_time));
    case StepsRule::Linear:
      return std::max<long>(1, std::llround(cfg.steps_scale * total_time));
    case StepsRule::Fixed:
      return std::max<long>(1, cfg.fixed_steps);
  }
  throw ParameterError("unhandled steps rule");
}

std::vector<AnnealRow> run_anneal(const AnnealConfig& cfg) {
  const ModelSet ms = resolve_models(cfg.models);
  const DensityMatrix mu = resolve_target(cfg.target, cfg.seed);
  const int coded_params =
      cfg.omega0_mode == Omega0Mode::Free ? ms.size() + 1 : ms.size();
  const CodingScheme scheme{cfg.bits, coded_params, cfg.omega_max};
  const RegisterSpec reg = make_register_spec(scheme);
  const ObjectiveSpec spec{ms, mu, cfg.alpha, cfg.omega0_mode};
  const HermitianOperator h_eff = build_H_eff_exact(spec, reg);
  const HermitianOperator driver =
      make_transverse_driver(scheme.total_bits());

  std::vector<AnnealRow> rows;
  for (double t_total : cfg.T_list) {
    const long steps = steps_for_time(cfg, t_total);
    const AnnealSchedule sched =
        make_anneal_schedule(t_total, steps, driver, cfg.split_steps);
    const auto [state, success] = quantum_anneal(h_eff, sched);
    (void)state;
    AnnealRow row;
    row.total_time = t_total;
    row.steps = steps;
    row.delta_t = sched.delta_t();
    row.success_prob = success;
    rows.push_back(row);
  }
  return rows;
}

namespace {

void add_anneal_meta(Metadata& meta, const AnnealConfig& cfg) {
  add_target_meta(meta, cfg.target);
  add_model_meta(meta, cfg.models);
  meta.add("alpha", cfg.alpha);
  meta.add("omega0_mode", omega0_mode_name(cfg.omega0_mode));
  meta.add("bits", cfg.bits);
  meta.add("omega_max", cfg.omega_max);
  meta.add("steps_rule", steps_rule_name(cfg.steps_rule));
  meta.add("steps_scale", cfg.steps_scale);
  if (cfg.steps_rule == StepsRule::Fixed) {
    meta.add("steps", cfg.fixed_steps);
  }
  meta.add("split_steps", cfg.split_steps ? 1 : 0);
}

}  // namespace

void write_anneal_csv(const AnnealConfig& cfg,
                      const std::vector<AnnealRow>& rows, std::ostream& out) {
  Metadata meta("anneal");
  add_anneal_meta(meta, cfg);
  meta.write(out, cfg.seed);

  out << "T,steps,delta_t,success_prob\n";
  for (const AnnealRow& r : rows) {
    out << format_double(r.total_time) << ',' << r.steps << ','
        << format_double(r.delta_t) << ',' << format_double(r.success_prob)
        << "\n";
  }
}

void write_anneal_records(const AnnealConfig& cfg,
                          const std::vector<AnnealRow>& rows,
                          std::ostream& out) {
  for (const AnnealRow& r : rows) {
    nlohmann::json j{{"run", "anneal"},
                     {"T", r.total_time},
                     {"steps", r.steps},
                     {"delta_t", r.delta_t},
                     {"success_prob", r.success_prob},
                     {"alpha", cfg.alpha},
                     {"bits", cfg.bits},
                     {"omega_max", cfg.omega_max},
                     {"omega0_mode", omega0_mode_name(cfg.omega0_mode)},
                     {"steps_rule", steps_rule_name(cfg.steps_rule)},
                     {"split_steps", cfg.split_steps},
                     {"seed", cfg.seed}};
    out << j.dump() << "\n";
  }
}

}  // namespace qmet
