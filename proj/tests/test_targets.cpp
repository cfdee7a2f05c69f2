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

#include <cmath>
#include <random>

#include <doctest.h>

#include "qmet/metrics.hpp"
#include "qmet/targets.hpp"

using namespace qmet;

namespace {

double purity(const DensityMatrix& rho) {
  return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace

TEST_CASE("pure target anchors") {
  const DensityMatrix mu0 = gen_target_pure(0.0);
  CHECK((mu0.matrix() - (Matrix(2, 2) << 1, 0, 0, 0).finished()).norm() <
        1e-15);

  const DensityMatrix mu45 = gen_target_pure(M_PI / 4);
  CHECK((mu45.matrix() - Matrix::Constant(2, 2, Complex(0.5, 0.0))).norm() <
        1e-12);

  for (double theta : {-1.3, -0.4, 0.7, 2.9}) {
    const DensityMatrix mu = gen_target_pure(theta);
    CHECK(mu.op().trace() == doctest::Approx(1.0));
    CHECK(purity(mu) == doctest::Approx(1.0));
  }
}

TEST_CASE("random targets are valid and deterministic") {
  for (int dim : {2, 3, 4}) {
    for (TargetKind kind : {TargetKind::Pure, TargetKind::Mixed}) {
      const DensityMatrix a = gen_target_random(dim, kind, 123);
      const DensityMatrix b = gen_target_random(dim, kind, 123);
      const DensityMatrix c = gen_target_random(dim, kind, 124);
      CHECK((a.matrix() - b.matrix()).norm() == 0.0);
      CHECK((a.matrix() - c.matrix()).norm() > 1e-6);
    }
  }
  CHECK(von_neumann_entropy(gen_target_random(2, TargetKind::Pure, 5)) <
        1e-9);
  CHECK(von_neumann_entropy(gen_target_random(4, TargetKind::Pure, 6)) <
        1e-9);
  CHECK_THROWS_AS(gen_target_random(1, TargetKind::Pure, 0), ParameterError);
}

TEST_CASE("mixed ensemble purity matches an independent sampling oracle") {
  constexpr int kSamples = 10000;

  double lib_sum = 0.0, lib_sq = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double p = purity(gen_target_random(2, TargetKind::Mixed,
                                              1000 + std::uint64_t(i)));
    lib_sum += p;
    lib_sq += p * p;
  }
  const double lib_mean = lib_sum / kSamples;
  const double lib_var =
      (lib_sq / kSamples - lib_mean * lib_mean) / (kSamples - 1.0);

  // Test-local Ginibre sampler on its own stream.
  std::mt19937_64 rng(987654321);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double ora_sum = 0.0, ora_sq = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    Matrix g(2, 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        g(r, c) = Complex(gauss(rng), gauss(rng));
      }
    }
    Matrix w = g * g.adjoint();
    w /= w.trace().real();
    const double p = (w * w).trace().real();
    ora_sum += p;
    ora_sq += p * p;
  }
  const double ora_mean = ora_sum / kSamples;
  const double ora_var =
      (ora_sq / kSamples - ora_mean * ora_mean) / (kSamples - 1.0);

  const double se = std::sqrt(lib_var + ora_var);
  CHECK(std::abs(lib_mean - ora_mean) < 3.0 * se);
  // Known ensemble average for dim 2 is 4/5.
  CHECK(std::abs(lib_mean - 0.8) < 3.0 * std::sqrt(lib_var));
}
