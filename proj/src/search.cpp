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

#include "qmet/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace qmet {

namespace {

constexpr int kEnumerationBitLimit = 24;

// With Free mode the leading coded parameter is omega_0 itself.
void check_spec_arity(const ObjectiveSpec& spec, const CodingScheme& scheme) {
  const int m = spec.models.size();
  const int expected =
      spec.omega0_mode == Omega0Mode::Free ? m + 1 : m;
  if (scheme.num_params != expected) {
    throw ParameterError("coding scheme has " +
                         std::to_string(scheme.num_params) +
                         " parameters, objective expects " +
                         std::to_string(expected));
  }
}

double evaluate(const ObjectiveSpec& spec, const std::vector<double>& values) {
  if (spec.omega0_mode == Omega0Mode::Free) {
    return objective_E(
        spec, std::vector<double>(values.begin() + 1, values.end()),
        values.front());
  }
  return objective_E(spec, values);
}

void consider(SearchResult& result, const ParamCode& code,
              const std::vector<double>& values, double e, long eval_index) {
  const bool better =
      eval_index == 0 || e < result.best_E ||
      (e == result.best_E &&
       std::lexicographical_compare(code.bits.begin(), code.bits.end(),
                                    result.best_code.bits.begin(),
                                    result.best_code.bits.end()));
  if (better) {
    result.best_code = code;
    result.best_omegas = values;
    result.best_E = e;
    result.trajectory.emplace_back(eval_index, e);
  }
}

SearchResult enumerate_all(const ObjectiveSpec& spec,
                           const CodingScheme& scheme) {
  const std::uint64_t count = std::uint64_t(1) << scheme.total_bits();
  SearchResult result;
  for (std::uint64_t j = 0; j < count; ++j) {
    const ParamCode code = code_from_index(scheme, j);
    const std::vector<double> values = decode(code);
    consider(result, code, values, evaluate(spec, values),
             static_cast<long>(j));
  }
  result.evaluations = static_cast<long>(count);
  return result;
}

}  // namespace

double CodingScheme::step() const {
  if (bits_per_param < 2) {
    return 0.0;
  }
  const double levels = double((std::uint64_t(1) << (bits_per_param - 1)) - 1);
  return omega_max / levels;
}

void validate_scheme(const CodingScheme& scheme) {
  if (scheme.bits_per_param < 1) {
    throw ParameterError("bits_per_param must be positive");
  }
  if (scheme.num_params < 1) {
    throw ParameterError("num_params must be positive");
  }
  if (!(scheme.omega_max > 0.0) || !std::isfinite(scheme.omega_max)) {
    throw ParameterError("omega_max must be positive and finite");
  }
}

std::vector<double> decode(const ParamCode& code) {
  const CodingScheme& s = code.scheme;
  validate_scheme(s);
  if (static_cast<int>(code.bits.size()) != s.total_bits()) {
    throw ParameterError("code has " + std::to_string(code.bits.size()) +
                         " bits, scheme expects " +
                         std::to_string(s.total_bits()));
  }
  const double step = s.step();
  std::vector<double> values(s.num_params, 0.0);
  for (int p = 0; p < s.num_params; ++p) {
    const int base = p * s.bits_per_param;
    const bool negative = code.bits[base] != 0;
    std::uint64_t magnitude = 0;
    for (int b = 1; b < s.bits_per_param; ++b) {
      magnitude = (magnitude << 1) | code.bits[base + b];
    }
    const double v = double(magnitude) * step;
    values[p] = negative ? -v : v;
  }
  return values;
}

ParamCode encode(const CodingScheme& scheme,
                 const std::vector<double>& values) {
  validate_scheme(scheme);
  if (static_cast<int>(values.size()) != scheme.num_params) {
    throw ParameterError("expected " + std::to_string(scheme.num_params) +
                         " values to encode");
  }
  ParamCode code{scheme, std::vector<std::uint8_t>(scheme.total_bits(), 0)};
  const double step = scheme.step();
  const std::uint64_t max_mag =
      scheme.bits_per_param >= 2
          ? (std::uint64_t(1) << (scheme.bits_per_param - 1)) - 1
          : 0;
  for (int p = 0; p < scheme.num_params; ++p) {
    const double v = values[p];
    if (!std::isfinite(v)) {
      throw ParameterError("cannot encode non-finite value");
    }
    std::uint64_t magnitude = 0;
    if (step > 0.0) {
      magnitude = static_cast<std::uint64_t>(
          std::llround(std::min(std::abs(v) / step, double(max_mag))));
      magnitude = std::min(magnitude, max_mag);
    }
    const int base = p * scheme.bits_per_param;
    code.bits[base] = (v < 0.0 && magnitude > 0) ? 1 : 0;
    for (int b = 1; b < scheme.bits_per_param; ++b) {
      code.bits[base + b] =
          (magnitude >> (scheme.bits_per_param - 1 - b)) & 1u;
    }
  }
  return code;
}

ParamCode code_from_index(const CodingScheme& scheme, std::uint64_t index) {
  validate_scheme(scheme);
  const int nbits = scheme.total_bits();
  if (nbits > 63) {
    throw ParameterError("code index form requires at most 63 bits");
  }
  ParamCode code{scheme, std::vector<std::uint8_t>(nbits, 0)};
  for (int t = 0; t < nbits; ++t) {
    code.bits[t] = (index >> (nbits - 1 - t)) & 1u;
  }
  return code;
}

std::uint64_t index_from_code(const ParamCode& code) {
  const int nbits = code.scheme.total_bits();
  if (nbits > 63) {
    throw ParameterError("code index form requires at most 63 bits");
  }
  std::uint64_t index = 0;
  for (int t = 0; t < nbits; ++t) {
    index = (index << 1) | code.bits[t];
  }
  return index;
}

SearchResult random_search(const ObjectiveSpec& spec,
                           const CodingScheme& scheme, long budget,
                           std::uint64_t seed) {
  validate_scheme(scheme);
  check_spec_arity(spec, scheme);
  if (budget < 1) {
    throw ParameterError("budget must be at least 1");
  }
  // Full coverage degenerates to enumeration without replacement.
  if (scheme.total_bits() <= kEnumerationBitLimit &&
      static_cast<std::uint64_t>(budget) >=
          (std::uint64_t(1) << scheme.total_bits())) {
    return enumerate_all(spec, scheme);
  }

  std::mt19937_64 rng(seed);
  SearchResult result;
  ParamCode code{scheme, std::vector<std::uint8_t>(scheme.total_bits(), 0)};
  for (long k = 0; k < budget; ++k) {
    for (int p = 0; p < scheme.num_params; ++p) {
      const std::uint64_t word = rng();
      const int base = p * scheme.bits_per_param;
      for (int b = 0; b < scheme.bits_per_param; ++b) {
        code.bits[base + b] = (word >> (scheme.bits_per_param - 1 - b)) & 1u;
      }
    }
    const std::vector<double> values = decode(code);
    consider(result, code, values, evaluate(spec, values), k);
  }
  result.evaluations = budget;
  return result;
}

SearchResult exhaustive_search(const ObjectiveSpec& spec,
                               const CodingScheme& scheme) {
  validate_scheme(scheme);
  check_spec_arity(spec, scheme);
  if (scheme.total_bits() > kEnumerationBitLimit) {
    throw BudgetError("exhaustive search over " +
                      std::to_string(scheme.total_bits()) +
                      " bits exceeds the enumeration guard of " +
                      std::to_string(kEnumerationBitLimit));
  }
  return enumerate_all(spec, scheme);
}

std::pair<ScanAxis, ScanAxis> default_qubit_plane() {
  ScanAxis a1{{{0, 1.0}, {1, -1.0}}};
  ScanAxis a2{{{2, 1.0}, {3, -1.0}}};
  return {a1, a2};
}

std::vector<ScanRow> landscape_scan(const ObjectiveSpec& spec,
                                    const ScanAxis& axis1,
                                    const ScanAxis& axis2,
                                    const ScanGrid& grid) {
  const int m = spec.models.size();
  for (const ScanAxis* axis : {&axis1, &axis2}) {
    for (const auto& [index, coeff] : axis->assignments) {
      if (index < 0 || index >= m) {
        throw ParameterError("scan axis references parameter " +
                             std::to_string(index) + " of " +
                             std::to_string(m));
      }
      (void)coeff;
    }
  }
  if (!(grid.step > 0.0) || !(grid.max >= grid.min)) {
    throw ParameterError("scan grid must have positive step and max >= min");
  }

  const int count =
      static_cast<int>(std::llround((grid.max - grid.min) / grid.step)) + 1;
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(count) * count);
  std::vector<double> omegas(m, 0.0);
  for (int i = 0; i < count; ++i) {
    const double a1 = grid.min + i * grid.step;
    for (int j = 0; j < count; ++j) {
      const double a2 = grid.min + j * grid.step;
      std::fill(omegas.begin(), omegas.end(), 0.0);
      for (const auto& [index, coeff] : axis1.assignments) {
        omegas[index] += coeff * a1;
      }
      for (const auto& [index, coeff] : axis2.assignments) {
        omegas[index] += coeff * a2;
      }
      ScanRow row;
      row.a1 = a1;
      row.a2 = a2;
      row.omega0 = omega0_normalizing(spec.models, omegas);
      row.objective = objective_E(spec, omegas);
      row.fidelity =
          fidelity(spec.target, rho_normalized(spec.models,
                                               ParamVector{0.0, omegas}));
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace qmet
