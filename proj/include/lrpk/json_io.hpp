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

// JSON encodings shared by the C API and the CLI.
//
//   Partition      [2,1]
//   Cell           [row, col]
//   SkewShape      {"outer":[...],"inner":[...]}
//   SkewTableau    {"outer":[...],"inner":[...],"rows":[[...],...]}
//   TensorWord     {"rank":n,"letters":[...]}
//   LrWitness      {"member":bool,"final":[...]?,"fail_at":int?}
//   TwoRowedArray  {"top":[...],"bottom":[...]}
//   Picture        {"domain":{...},"codomain":{...},"pairs":[[[i,j],[a,b]],...]}
//   CrystalPair    {"first":tableau,"second":tableau}
//   Context        {"kappa1":{...},"kappa2":{...}}
//   RskPair        {"P":tableau,"Q":tableau}

#pragma once

#include <string_view>

#include <json.hpp>

#include "lrpk/correspondence.hpp"

namespace lrpk::io {

using nlohmann::json;

/// Parses text, turning syntax errors into InvalidInput.
json parse(std::string_view text);

json to_json(const Partition& p);
json to_json(Cell c);
json to_json(const SkewShape& s);
json to_json(const SkewTableau& t);
json to_json(const TensorWord& w);
json to_json(const LrWitness& w);
json to_json(const TwoRowedArray& w);
json to_json(const Picture& p);
json to_json(const CrystalPair& p);
json to_json(const CorrespondenceContext& ctx);
json to_json(const RskPair& p);

// Readers throw InvalidInput on schema violations.
Partition partition_from(const json& j);
Cell cell_from(const json& j);
SkewShape skew_shape_from(const json& j);
SkewTableau tableau_from(const json& j);
TensorWord tensor_word_from(const json& j);
TwoRowedArray array_from(const json& j);
Picture picture_from(const json& j);
CrystalPair crystal_pair_from(const json& j);
CorrespondenceContext context_from(const json& j);
RskPair rsk_pair_from(const json& j);

/// Compact serialization used for all output.
std::string dump(const json& j);

}  // namespace lrpk::io
