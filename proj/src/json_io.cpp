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

#include "lrpk/json_io.hpp"

#include <algorithm>

namespace lrpk::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object with field \"") + name + "\"");
  const auto it = j.find(name);
  if (it == j.end()) throw InvalidInput(std::string("missing field \"") + name + "\"");
  return *it;
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw InvalidInput(std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InvalidInput(std::string(what) + " must contain only integers");
    const auto v = e.get<long long>();
    if (v < -1000000 || v > 1000000) throw InvalidInput(std::string(what) + " has an out-of-range value");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

json int_json(const std::vector<int>& v) { return json(v); }

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(); }

json to_json(const Partition& p) { return int_json(p.parts()); }
json to_json(Cell c) { return json::array({c.row, c.col}); }
json to_json(const SkewShape& s) { return json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

json to_json(const SkewTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows()) rows.push_back(int_json(r));
  return json{{"outer", to_json(t.shape().outer())}, {"inner", to_json(t.shape().inner())}, {"rows", rows}};
}

json to_json(const TensorWord& w) { return json{{"rank", w.rank()}, {"letters", int_json(w.letters())}}; }

json to_json(const LrWitness& w) {
  json j{{"member", w.member}};
  if (w.final_shape) j["final"] = to_json(*w.final_shape);
  if (w.failure_index) j["fail_at"] = *w.failure_index;
  return j;
}

json to_json(const TwoRowedArray& w) { return json{{"top", int_json(w.top)}, {"bottom", int_json(w.bottom)}}; }

json to_json(const Picture& p) {
  json pairs = json::array();
  const auto cells = p.domain.j_order_cells();
  for (std::size_t k = 0; k < cells.size() && k < p.images.size(); ++k)
    pairs.push_back(json::array({to_json(cells[k]), to_json(p.images[k])}));
  return json{{"domain", to_json(p.domain)}, {"codomain", to_json(p.codomain)}, {"pairs", pairs}};
}

json to_json(const CrystalPair& p) { return json{{"first", to_json(p.first)}, {"second", to_json(p.second)}}; }

json to_json(const CorrespondenceContext& ctx) {
  return json{{"kappa1", to_json(ctx.kappa1())}, {"kappa2", to_json(ctx.kappa2())}};
}

json to_json(const RskPair& p) { return json{{"P", to_json(p.P)}, {"Q", to_json(p.Q)}}; }

Partition partition_from(const json& j) { return Partition(int_array(j, "partition")); }

Cell cell_from(const json& j) {
  const auto v = int_array(j, "cell");
  if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw InvalidInput("cell must be [row, col] with positive entries");
  return {v[0], v[1]};
}

SkewShape skew_shape_from(const json& j) {
  const Partition outer = partition_from(field(j, "outer"));
  Partition inner;
  if (j.contains("inner")) inner = partition_from(j["inner"]);
  return SkewShape(outer, inner);
}

SkewTableau tableau_from(const json& j) {
  const SkewShape shape = skew_shape_from(j);
  const json& rows = field(j, "rows");
  if (!rows.is_array()) throw InvalidInput("tableau rows must be an array");
  std::vector<std::vector<int>> r;
  for (const auto& row : rows) r.push_back(int_array(row, "tableau row"));
  return SkewTableau(shape, std::move(r));
}

TensorWord tensor_word_from(const json& j) {
  const json& rank = field(j, "rank");
  if (!rank.is_number_integer()) throw InvalidInput("rank must be an integer");
  return TensorWord(rank.get<int>(), int_array(field(j, "letters"), "letters"));
}

TwoRowedArray array_from(const json& j) {
  TwoRowedArray w{int_array(field(j, "top"), "top"), int_array(field(j, "bottom"), "bottom")};
  if (w.top.size() != w.bottom.size()) throw InvalidInput("top and bottom rows differ in length");
  return w;
}

Picture picture_from(const json& j) {
  Picture p{skew_shape_from(field(j, "domain")), skew_shape_from(field(j, "codomain")), {}};
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) throw InvalidInput("picture pairs must be an array");
  const auto cells = p.domain.j_order_cells();
  if (pairs.size() != cells.size()) throw InvalidInput("picture must list every domain cell exactly once");
  p.images.assign(cells.size(), Cell{0, 0});
  for (const auto& pr : pairs) {
    if (!pr.is_array() || pr.size() != 2) throw InvalidInput("picture pair must be [[i,j],[a,b]]");
    const Cell from = cell_from(pr[0]);
    const auto it = std::find(cells.begin(), cells.end(), from);
    if (it == cells.end()) throw InvalidInput("picture lists a cell outside its domain");
    Cell& slot = p.images[static_cast<std::size_t>(it - cells.begin())];
    if (slot.row != 0) throw InvalidInput("picture lists a domain cell twice");
    slot = cell_from(pr[1]);
  }
  return p;
}

CrystalPair crystal_pair_from(const json& j) {
  return {tableau_from(field(j, "first")), tableau_from(field(j, "second"))};
}

CorrespondenceContext context_from(const json& j) {
  return CorrespondenceContext(skew_shape_from(field(j, "kappa1")), skew_shape_from(field(j, "kappa2")));
}

RskPair rsk_pair_from(const json& j) { return {tableau_from(field(j, "P")), tableau_from(field(j, "Q"))}; }

}  // namespace lrpk::io
