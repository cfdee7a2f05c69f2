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

#include <string>

#include <json.hpp>

#include "qmet/operators.hpp"

namespace qmet {

// Matrices travel as {"dim": d, "re": [[..]], "im": [[..]]} so the format
// stays readable and language neutral.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json operator_to_json(const HermitianOperator& h);
HermitianOperator operator_from_json(const nlohmann::json& j);

nlohmann::json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const nlohmann::json& j);

// FNV-1a over a string; stable across platforms, used to stamp output
// files with a hash of the resolved configuration.
std::string fnv1a_hex(const std::string& data);

// Formats a double with enough digits to round-trip.
std::string format_double(double v);

}  // namespace qmet
