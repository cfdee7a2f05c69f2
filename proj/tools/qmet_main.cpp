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

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmet/experiments.hpp"
#include "qmet/io.hpp"
#include "qmet/version.hpp"

namespace {

using namespace qmet;

// Writes to the path, or to stdout for "" / "-".
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw ParameterError("cannot write to '" + path + "'");
      }
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct TargetFlags {
  double theta = 0.0;
  bool theta_given = false;
  std::string kind = "pure";
  bool kind_given = false;
  int dim = 2;
  std::string file;
  // Subcommands whose natural default is the deterministic theta target
  // set this; an explicit --target-kind still selects a random target.
  bool default_theta = false;

  TargetConfig resolve() const {
    TargetConfig cfg;
    if (!file.empty()) {
      cfg.source = TargetConfig::Source::File;
      cfg.target_file = file;
    } else if (theta_given || (default_theta && !kind_given)) {
      cfg.source = TargetConfig::Source::Theta;
      cfg.theta = theta;
    } else {
      cfg.source = TargetConfig::Source::Random;
      cfg.kind = target_kind_from_name(kind);
      cfg.dim = dim;
    }
    return cfg;
  }
};

void add_target_flags(CLI::App* sub, TargetFlags& flags) {
  sub->add_option("--theta", flags.theta,
                  "pure target angle (selects the deterministic target)")
      ->trigger_on_parse()
      ->each([&flags](const std::string&) { flags.theta_given = true; });
  sub->add_option("--target-kind", flags.kind,
                  "random target ensemble: pure or mixed")
      ->trigger_on_parse()
      ->each([&flags](const std::string&) { flags.kind_given = true; });
  sub->add_option("--dim", flags.dim, "random target dimension");
  sub->add_option("--target-file", flags.file, "JSON matrix file");
}

void add_model_flags(CLI::App* sub, ModelConfig& cfg) {
  sub->add_option("--preset", cfg.preset, "model preset (pauli6)");
  sub->add_option("--epsilon", cfg.epsilon, "preset smoothing parameter");
  sub->add_option("--model-indices", cfg.indices,
                  "1-based preset subset, e.g. 1,3")
      ->delimiter(',');
  sub->add_option("--models-file", cfg.models_file,
                  "JSON file with a 'models' array (overrides the preset)");
}

int run_models_command(const ModelConfig& cfg, const std::string& in_file,
                       const std::string& out_path) {
  ModelConfig resolved = cfg;
  if (!in_file.empty()) {
    resolved.models_file = in_file;
  }
  const ModelSet ms = resolve_models(resolved);
  if (!in_file.empty()) {
    std::cout << "models: m=" << ms.size() << " dim=" << ms.dim()
              << " commuting=" << (is_commuting(ms) ? "true" : "false")
              << "\n";
    return 0;
  }
  nlohmann::json j;
  j["dim"] = ms.dim();
  if (ms.epsilon()) {
    j["epsilon"] = *ms.epsilon();
  }
  j["models"] = nlohmann::json::array();
  for (const DensityMatrix& rho : ms.models()) {
    j["models"].push_back(density_to_json(rho));
  }
  OutputStream out(out_path);
  out.get() << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximum-entropy tomography as parameter search, with a "
               "register-dynamics simulator and annealing driver"};
  app.set_version_flag("--version", std::string("qmet ") + kVersion);
  app.set_config("--config", "", "key=value config file; flags override");
  app.require_subcommand(1);

  std::string out_path;
  std::string records_path;

  // landscape / omega0
  LandscapeConfig land;
  CLI::App* landscape =
      app.add_subcommand("landscape", "fidelity/objective scan over the "
                                      "(omega_z, omega_x) plane");
  landscape->add_option("--theta", land.theta, "pure target angle");
  add_model_flags(landscape, land.models);
  landscape->add_option("--alpha", land.alpha, "constraint weight");
  std::string land_mode = "analytic";
  landscape->add_option("--omega0-mode", land_mode,
                        "fixed0, analytic or free");
  landscape->add_option("--grid-min", land.grid.min, "scan minimum");
  landscape->add_option("--grid-max", land.grid.max, "scan maximum");
  landscape->add_option("--grid-step", land.grid.step, "scan step");
  landscape->add_option("--seed", land.seed, "recorded in metadata");
  landscape->add_option("--out", out_path, "output CSV path");

  CLI::App* omega0 = app.add_subcommand(
      "omega0", "normalizing omega_0 surface over the same plane");
  add_model_flags(omega0, land.models);
  omega0->add_option("--grid-min", land.grid.min, "scan minimum");
  omega0->add_option("--grid-max", land.grid.max, "scan maximum");
  omega0->add_option("--grid-step", land.grid.step, "scan step");
  omega0->add_option("--seed", land.seed, "recorded in metadata");
  omega0->add_option("--out", out_path, "output CSV path");

  // optimize / batch
  OptimizeConfig opt;
  TargetFlags opt_target;
  std::string opt_mode = "analytic";
  int batch_targets = 100;
  int batch_threads = 0;

  auto add_optimize_flags = [&](CLI::App* sub) {
    add_target_flags(sub, opt_target);
    add_model_flags(sub, opt.models);
    sub->add_option("--alpha", opt.alpha, "constraint weight");
    sub->add_option("--omega0-mode", opt_mode, "fixed0, analytic or free");
    sub->add_option("--bits", opt.bits, "bits per parameter");
    sub->add_option("--omega-max", opt.omega_max, "coding range bound");
    sub->add_option("--budget", opt.budget, "random-search evaluations");
    sub->add_option("--seed", opt.seed, "base seed");
    sub->add_option("--out", out_path, "output CSV path");
  };

  CLI::App* optimize = app.add_subcommand(
      "optimize", "random-search reconstruction of a single target");
  add_optimize_flags(optimize);
  std::string dump_state_path;
  optimize->add_option("--dump-state", dump_state_path,
                       "write the reconstructed state as matrix JSON");

  CLI::App* batch = app.add_subcommand(
      "batch", "random-search reconstruction over many random targets");
  add_optimize_flags(batch);
  batch->add_option("--targets", batch_targets, "number of targets");
  batch->add_option("--threads", batch_threads,
                    "worker threads (0 = hardware)");

  // dynamics
  DynamicsConfig dyn;
  dyn.models.indices = {1, 3};
  TargetFlags dyn_target;
  dyn_target.theta = 0.39269908169872414;  // pi/8
  dyn_target.default_theta = true;
  std::string dyn_term = "combined";
  std::string dyn_mode = "fixed0";
  CLI::App* dynamics = app.add_subcommand(
      "dynamics", "collision-protocol convergence against the exact "
                  "reduced generator");
  dynamics->add_option("--term", dyn_term, "first, constraint or combined");
  add_target_flags(dynamics, dyn_target);
  add_model_flags(dynamics, dyn.models);
  dynamics->add_option("--alpha", dyn.alpha, "constraint weight");
  dynamics->add_option("--omega0-mode", dyn_mode, "fixed0, analytic or free");
  dynamics->add_option("--beta", dyn.beta, "thermal partner inverse "
                                           "temperature");
  dynamics->add_option("--bits", dyn.bits, "bits per parameter");
  dynamics->add_option("--omega-max", dyn.omega_max, "coding range bound");
  dynamics->add_option("--tau", dyn.tau, "total evolution time");
  dynamics->add_option("--dt-list", dyn.dt_list, "step sizes to compare")
      ->delimiter(',');
  dynamics->add_option("--seed", dyn.seed, "target seed");
  dynamics->add_option("--out", out_path, "output CSV path");
  dynamics->add_option("--records", records_path,
                       "append one JSON record per run");

  // anneal
  AnnealConfig ann;
  ann.models.indices = {1, 3};
  TargetFlags ann_target;
  ann_target.theta = 0.39269908169872414;
  ann_target.default_theta = true;
  std::string ann_mode = "analytic";
  std::string ann_rule = "t2";
  CLI::App* anneal = app.add_subcommand(
      "anneal", "success probability of the annealing schedule vs total "
                "time");
  add_target_flags(anneal, ann_target);
  add_model_flags(anneal, ann.models);
  anneal->add_option("--alpha", ann.alpha, "constraint weight");
  anneal->add_option("--omega0-mode", ann_mode, "fixed0, analytic or free");
  anneal->add_option("--bits", ann.bits, "bits per parameter");
  anneal->add_option("--omega-max", ann.omega_max, "coding range bound");
  anneal->add_option("--T-list", ann.T_list, "total anneal times")
      ->delimiter(',');
  anneal->add_option("--steps-rule", ann_rule,
                     "t2 (steps ~ T^2), t1 or fixed");
  anneal->add_option("--steps-scale", ann.steps_scale, "rule multiplier");
  anneal->add_option("--steps", ann.fixed_steps, "steps for rule 'fixed'");
  anneal->add_flag("--split-steps", ann.split_steps,
                   "apply problem and driver phases separately per step");
  anneal->add_option("--seed", ann.seed, "target seed");
  anneal->add_option("--out", out_path, "output CSV path");
  anneal->add_option("--records", records_path,
                     "append one JSON record per run");

  // models
  ModelConfig models_cfg;
  std::string models_in;
  CLI::App* models = app.add_subcommand(
      "models", "dump a model preset as JSON, or validate a models file");
  add_model_flags(models, models_cfg);
  models->add_option("--in", models_in, "validate this models file");
  models->add_option("--out", out_path, "output JSON path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (landscape->parsed()) {
      land.omega0_mode = omega0_mode_from_name(land_mode);
      OutputStream out(out_path);
      run_landscape(land, out.get());
    } else if (omega0->parsed()) {
      OutputStream out(out_path);
      run_omega0_surface(land, out.get());
    } else if (optimize->parsed()) {
      opt.target = opt_target.resolve();
      opt.omega0_mode = omega0_mode_from_name(opt_mode);
      const OptimizeOutcome outcome = run_optimize(opt);
      OutputStream out(out_path);
      write_optimize_csv(opt, outcome, out.get());
      if (!dump_state_path.empty()) {
        std::vector<double> weights = outcome.search.best_omegas;
        if (opt.omega0_mode == Omega0Mode::Free) {
          weights.erase(weights.begin());
        }
        const DensityMatrix rho_r = rho_normalized(
            resolve_models(opt.models), ParamVector{0.0, weights});
        OutputStream state_out(dump_state_path);
        state_out.get() << density_to_json(rho_r).dump(2) << "\n";
      }
    } else if (batch->parsed()) {
      opt.target = opt_target.resolve();
      opt.omega0_mode = omega0_mode_from_name(opt_mode);
      BatchConfig cfg{opt, batch_targets, batch_threads};
      const std::vector<BatchRow> rows = run_batch(cfg);
      OutputStream out(out_path);
      write_batch_csv(cfg, rows, out.get());
    } else if (dynamics->parsed()) {
      dyn.term = dynamics_term_from_name(dyn_term);
      dyn.target = dyn_target.resolve();
      dyn.omega0_mode = omega0_mode_from_name(dyn_mode);
      const std::vector<DynamicsRow> rows = run_dynamics(dyn);
      OutputStream out(out_path);
      write_dynamics_csv(dyn, rows, out.get());
      if (!records_path.empty()) {
        std::ofstream rec(records_path, std::ios::app);
        write_dynamics_records(dyn, rows, rec);
      }
    } else if (anneal->parsed()) {
      ann.target = ann_target.resolve();
      ann.omega0_mode = omega0_mode_from_name(ann_mode);
      ann.steps_rule = steps_rule_from_name(ann_rule);
      const std::vector<AnnealRow> rows = run_anneal(ann);
      OutputStream out(out_path);
      write_anneal_csv(ann, rows, out.get());
      if (!records_path.empty()) {
        std::ofstream rec(records_path, std::ios::app);
        write_anneal_records(ann, rows, rec);
      }
    } else if (models->parsed()) {
      return run_models_command(models_cfg, models_in, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "qmet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
