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
#include <string>

#include "qmet/operators.hpp"

namespace qmet {

// The qubit pure target cos/sin projector on the Bloch great circle:
// [[cos^2 t, sin t cos t], [sin t cos t, sin^2 t]].
DensityMatrix gen_target_pure(double theta);

enum class TargetKind { Pure, Mixed };

const char* target_kind_name(TargetKind kind);
TargetKind target_kind_from_name(const std::string& name);

// Pure: Haar-random pure-state projector. Mixed: G G^dagger / tr, with G
// a square matrix of iid complex Gaussians (the Hilbert-Schmidt
// ensemble). Deterministic per seed (mt19937_64 stream).
DensityMatrix gen_target_random(int dim, TargetKind kind, std::uint64_t seed);

}  // namespace qmet
