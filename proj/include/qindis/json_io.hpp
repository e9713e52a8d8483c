// Copyright 2026 The qindis authors
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
#include <variant>

#include <json.hpp>

#include "qindis/algebra.hpp"
#include "qindis/core.hpp"
#include "qindis/holevo.hpp"
#include "qindis/observables.hpp"
#include "qindis/scenarios.hpp"
#include "qindis/states.hpp"

namespace qindis {

using Json = nlohmann::json;

// Matrices: {"rows": r, "cols": c, "data": [[re, im], ...]} row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

// Pure states: {"amplitudes": [[re, im], ...]}.
Json pure_state_to_json(const PureState& h);
PureState pure_state_from_json(const Json& j, const Tolerance& tol = {});

/// A state file holds either a pure state or a density matrix; pure states
/// are converted to their rank-one density.
DensityMatrix state_from_json(const Json& j, const Tolerance& tol = {});

/// Optional pure-state read: throws bad_input when the file holds a mixed
/// state (for operations defined on pure states only).
PureState pure_state_required(const Json& j, const Tolerance& tol = {});

// PVMs: {"dim": d, "outcomes": [{"label": [...], "projection": {...}}]}.
// Label components are numbers, or {"re": x, "im": y} when complex.
Json pvm_to_json(const PVM& p);
PVM pvm_from_json(const Json& j, const Tolerance& tol = {});

/// Generator files: either a JSON array of matrices or
/// {"dim": d, "generators": [...]} (the dim form admits an empty list).
struct GeneratorFile {
  std::vector<Matrix> generators;
  int dim = 0;
};
GeneratorFile generators_from_json(const Json& j);

Json algebra_to_json(const AbelianAlgebra& alg);

Json holevo_point_to_json(const HolevoPoint& p);
HolevoPoint holevo_point_from_json(const Json& j, const Tolerance& tol = {});

Json grid_to_json(const GridDensity& g);
GridDensity grid_from_json(const Json& j, const Tolerance& tol = {});

ClassicalSystem classical_system_from_json(const Json& j);

Json witness_to_json(const WitnessUnitary& w);

Json outcome_label_to_json(const OutcomeLabel& label);

/// Parses a file as JSON; throws bad_input with the path in context.
Json load_json_file(const std::string& path);

/// 64-bit FNV-1a content hash, hex-encoded (manifest digests).
std::string fnv1a_hex(const std::string& bytes);

}  // namespace qindis
