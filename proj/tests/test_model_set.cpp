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

#include <doctest.h>

#include "qmet/model_set.hpp"

using namespace qmet;

TEST_CASE("pauli preset matches the smoothed entries") {
  const ModelSet ms = pauli_smoothed_models(0.1);
  REQUIRE(ms.size() == 6);
  CHECK(ms.model(0).matrix()(0, 0).real() == doctest::Approx(0.95));
  CHECK(ms.model(0).matrix()(1, 1).real() == doctest::Approx(0.05));
  CHECK(ms.model(2).matrix()(0, 1).real() == doctest::Approx(0.45));
  CHECK(ms.model(4).matrix()(0, 1) == Complex(0, -0.45));

  double trace_sum = 0.0;
  for (const DensityMatrix& rho : ms.models()) {
    CHECK(rho.op().trace() == doctest::Approx(1.0));
    trace_sum += rho.op().trace();
  }
  CHECK(trace_sum == doctest::Approx(6.0));
}

TEST_CASE("pauli preset pairs sum to the identity") {
  const ModelSet ms = pauli_smoothed_models(0.37);
  for (int pair = 0; pair < 3; ++pair) {
    const Matrix sum =
        ms.model(2 * pair).matrix() + ms.model(2 * pair + 1).matrix();
    CHECK((sum - Matrix::Identity(2, 2)).norm() < 1e-12);
  }
}

TEST_CASE("etas invert back to the models") {
  const ModelSet ms = pauli_smoothed_models(0.1);
  CHECK((ms.eta(0).matrix() - Matrix::Identity(2, 2)).norm() < 1e-15);
  for (int i = 1; i <= ms.size(); ++i) {
    const HermitianOperator back = func_hermitian(
        ms.eta(i), [](double x) { return std::exp(-x); });
    CHECK((back.matrix() - ms.model(i - 1).matrix()).norm() < 1e-9);
  }
}

TEST_CASE("epsilon bounds") {
  CHECK_THROWS_AS(pauli_smoothed_models(0.0), ParameterError);
  CHECK_THROWS_AS(pauli_smoothed_models(1.0), ParameterError);
  CHECK_THROWS_AS(pauli_smoothed_models(-0.5), ParameterError);
}

TEST_CASE("custom models") {
  Matrix a(2, 2), b(2, 2);
  a << 0.95, 0, 0, 0.05;
  b << 0.05, 0, 0, 0.95;
  const ModelSet ms = custom_models({DensityMatrix(a), DensityMatrix(b)});
  CHECK(ms.size() == 2);
  CHECK(!ms.epsilon().has_value());

  // -ln(I/2) = ln(2) I.
  const ModelSet half = custom_models({DensityMatrix::maximally_mixed(2)});
  CHECK((half.eta(1).matrix() - std::log(2.0) * Matrix::Identity(2, 2))
            .norm() < 1e-12);

  Matrix pure(2, 2);
  pure << 1, 0, 0, 0;
  try {
    custom_models({DensityMatrix(a), DensityMatrix(pure)});
    FAIL("expected RankError");
  } catch (const RankError& e) {
    CHECK(e.index() == 1);
  }

  CHECK_THROWS_AS(
      custom_models({DensityMatrix(a), DensityMatrix::maximally_mixed(4)}),
      DimensionError);
}

TEST_CASE("is_commuting") {
  Matrix a(2, 2), b(2, 2);
  a << 0.95, 0, 0, 0.05;
  b << 0.3, 0, 0, 0.7;
  CHECK(is_commuting(custom_models({DensityMatrix(a), DensityMatrix(b)})));
  CHECK(is_commuting(custom_models({DensityMatrix(a)})));
  CHECK(!is_commuting(pauli_smoothed_models(0.1)));
}
