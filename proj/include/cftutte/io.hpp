// Copyright 2026 The Authors.
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

#ifndef CFTUTTE_IO_HPP
#define CFTUTTE_IO_HPP

// JSON file formats.
//
//   matroid     {"type":"bases","n":6,"bases":[[0,1,3],...]}
//               {"type":"cyclic_flats","n":7,"flats":[{"set":[0,1,2],"rank":2},...]}
//               {"type":"uniform","n":3,"r":2}
//   config      {"nodes":[{"size":0,"rank":0},...],"leq":[[0,1],...]}
//   condensed   {"blocks":[{"size":0,"rank":0},...],"A":[[1,1],[0,1]]}
//   pmd         {"k":[0,1,3,7]}
//   group       {"n":6,"generators":[[3,4,5,0,1,2],...]}
//   polynomial  {"terms":[[dx,dy,"coeff"],...]} sorted by dx desc, dy asc

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cftutte/condensation.hpp"
#include "cftutte/configuration.hpp"
#include "cftutte/matroid.hpp"
#include "cftutte/poly.hpp"

namespace cft::io {

using Json = nlohmann::ordered_json;

enum class InputKind { kMatroid, kConfiguration, kCondensed, kPmd };

// All readers throw ValidationError on malformed input.
Json parse_json(const std::string& text);
Json read_json(std::istream& in);
InputKind detect_kind(const Json& j);

Matroid matroid_from_json(const Json& j);
Json matroid_to_json(const Matroid& m);

Configuration configuration_from_json(const Json& j);
Json configuration_to_json(const Configuration& c);

CondensedConfiguration condensed_from_json(const Json& j);
Json condensed_to_json(const CondensedConfiguration& cc);

// Accepts {"k":[...]} or a bare array.
std::vector<std::uint64_t> pmd_from_json(const Json& j);
Json pmd_to_json(const std::vector<std::uint64_t>& k);

std::vector<Permutation> group_from_json(const Json& j, unsigned n);

Json polynomial_to_json(const BivarPoly& f);
BivarPoly polynomial_from_json(const Json& j);

}  // namespace cft::io

#endif  // CFTUTTE_IO_HPP
