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

#include <cstdint>
#include <utility>
#include <vector>

#include "qmet/metrics.hpp"

namespace qmet {

// Sign-magnitude fixed-point coding of the parameter vector. Each
// parameter takes n bits: one sign bit followed by an (n-1)-bit magnitude
// k, decoding to (-1)^sign * k / (2^(n-1) - 1) * omega_max. The grid is
// symmetric about zero; +0 and -0 both decode to 0 and ties between them
// are broken toward the lexicographically smaller bit string. n = 1 keeps
// only the sign bit and decodes to 0.
struct CodingScheme {
  int bits_per_param = 12;
  int num_params = 6;
  double omega_max = 4.0;

  int total_bits() const { return bits_per_param * num_params; }
  double step() const;
};

void validate_scheme(const CodingScheme& scheme);

// A bit string of scheme.total_bits() entries (each 0 or 1), most
// significant bit of the first parameter first.
struct ParamCode {
  CodingScheme scheme;
  std::vector<std::uint8_t> bits;
};

std::vector<double> decode(const ParamCode& code);

// Canonical code for the given values: magnitudes round to the nearest
// grid point and clamp to [-omega_max, omega_max]; zero gets sign bit 0.
ParamCode encode(const CodingScheme& scheme, const std::vector<double>& values);

// Code for register/enumeration index j: bit t of the string is bit
// (total_bits-1-t) of j. Requires total_bits <= 63.
ParamCode code_from_index(const CodingScheme& scheme, std::uint64_t index);
std::uint64_t index_from_code(const ParamCode& code);

struct SearchResult {
  ParamCode best_code;
  // Decoded values of best_code; in Free omega0 mode the leading entry is
  // omega_0 and the model weights follow.
  std::vector<double> best_omegas;
  double best_E = 0.0;
  long evaluations = 0;
  // (evaluation index, best-so-far E) recorded at each improvement.
  std::vector<std::pair<long, double>> trajectory;
};

// Uniform random sampling of `budget` codes from a seeded mt19937_64
// stream (one engine word per parameter, low bits used). When the budget
// covers the whole code space (and total_bits <= 24) the search instead
// enumerates every code once in lexicographic order, which makes it
// coincide with exhaustive_search. Free omega0 mode expects
// scheme.num_params == m + 1 with the leading parameter acting as omega_0.
SearchResult random_search(const ObjectiveSpec& spec,
                           const CodingScheme& scheme, long budget,
                           std::uint64_t seed);

// Exact minimum over all codes; ties break toward the lexicographically
// smallest bit string. Guarded at total_bits <= 24.
SearchResult exhaustive_search(const ObjectiveSpec& spec,
                               const CodingScheme& scheme);

// A scan axis assigns its coordinate, scaled per entry, to selected
// parameters: omega[index] = coefficient * coordinate.
struct ScanAxis {
  std::vector<std::pair<int, double>> assignments;
};

struct ScanGrid {
  double min = -3.0;
  double max = 3.0;
  double step = 0.05;
};

struct ScanRow {
  double a1 = 0.0;  // first-axis coordinate (omega_z in the qubit scans)
  double a2 = 0.0;  // second-axis coordinate (omega_x)
  double fidelity = 0.0;
  double objective = 0.0;
  double omega0 = 0.0;  // normalizing omega_0 at this point
};

// The six-model qubit plane: omega_1 = -omega_2 = a1, omega_3 = -omega_4
// = a2, omega_5 = omega_6 = 0.
std::pair<ScanAxis, ScanAxis> default_qubit_plane();

// Dense grid of fidelity(target, rho_normalized), objective value and the
// normalizing omega_0 over the plane. Rows are emitted with the first
// axis outermost, both axes ascending.
std::vector<ScanRow> landscape_scan(const ObjectiveSpec& spec,
                                    const ScanAxis& axis1,
                                    const ScanAxis& axis2,
                                    const ScanGrid& grid);

}  // namespace qmet
