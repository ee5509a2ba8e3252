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

// Exhaustive and seeded-random checks of the bijection and the algorithms
// under it.  Each suite returns the number of instances it examined and the
// first counterexample it met, if any.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lrpk/json_io.hpp"

namespace lrpk::verify {

struct Options {
  // Context family: nu inside a box x box square with |nu| <= max_outer and
  // 0 <= |nu \ lambda| <= max_cells.
  int box = 4;
  int max_outer = 6;
  int max_cells = 5;
  // Crystal-equivalence transport is checked for skew sizes up to this.
  int transport_cells = 6;
  // Picture count of the staircase difference with n disconnected boxes.
  int staircase_max = 4;

  // bumping-lemma
  std::uint64_t seed = 1;
  int instances = 10000;
  int random_cells = 12;
  int random_max_entry = 5;

  // knuth-crystal
  int word_length = 5;
  int alphabet = 3;
  int insertion_cells = 5;

  // lr-highest
  int highest_cells = 4;
  int highest_rank = 3;
  int highest_box = 3;
  int decomposition_cells = 3;

  Limits limits{};
};

struct SuiteResult {
  std::string suite;
  bool ok = true;
  nlohmann::json payload = nlohmann::json::object();
};

const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite name.  "all" runs every suite and
/// nests their payloads by name.
SuiteResult run_suite(const std::string& name, const Options& opts);

SuiteResult run_roundtrip(const Options& opts);
SuiteResult run_cardinality(const Options& opts);
SuiteResult run_rsk_bijection(const Options& opts);
SuiteResult run_bumping_lemma(const Options& opts);
SuiteResult run_knuth_crystal(const Options& opts);
SuiteResult run_lr_highest(const Options& opts);

/// Every nu \ lambda with nu in a box x box square, |nu| <= max_outer and
/// |nu \ lambda| <= max_cells.
std::vector<SkewShape> skew_family(int box, int max_outer, int max_cells);

/// (n, n-1, ..., 1) \ (n-1, ..., 1): n pairwise incomparable boxes.
SkewShape staircase_difference(int n);

/// All lexicographic arrays of length m with entries 1..n.
std::vector<TwoRowedArray> lex_arrays(int n, int m);

/// All straight semistandard tableaux with `cells` boxes and entries <= max_entry.
std::vector<SkewTableau> straight_tableaux(int cells, int max_entry, const Limits& limits = {});

}  // namespace lrpk::verify
