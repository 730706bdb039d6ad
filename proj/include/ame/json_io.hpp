// Copyright 2026 The amecodes Authors
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

#include <nlohmann/json_fwd.hpp>

#include "ame/qecc.hpp"

namespace ame {

using json = nlohmann::json;

/// {p, m, q, irreducible, primitive, add_table, mul_table}
json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// {n, k, q, G, H, is_mds, d}
json mds_to_json(const GeneratorMatrix& g, const Mat& h, bool mds, int d);
GeneratorMatrix generator_from_json(const json& j);

/// {n, q, terms: [{word: [...], phase: e}, ...]}
json state_to_json(const SparseState& s);
SparseState state_from_json(const json& j);

/// {n, q, phase, x: [...], z: [...]}
json pauli_to_json(const PauliString& p);
PauliString pauli_from_json(const json& j);

/// Full code description; contains the field, G, M, the certified distance
/// and the stabilizer generator strings, and is accepted back by verify-code.
json code_to_json(const QeccCode& code, int certified_d);

std::string dump_json(const json& j);

}  // namespace ame
