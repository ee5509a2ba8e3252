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

// Tensor words in B^{⊗N} for type A_n, the signature rule for the Kashiwara
// operators, the combinatorial R matrix, Knuth/crystal equivalence and
// Littlewood-Richardson crystals.
//
// Tensor convention: in b_1 ⊗ ... ⊗ b_N a letter k at an earlier position
// cancels a letter k+1 at a later position.  With this convention
// Y_lambda's reading followed by T's reading is highest weight exactly when
// every prefix has at least as many k's as (k+1)'s.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lrpk/errors.hpp"
#include "lrpk/shapes.hpp"
#include "lrpk/tableaux.hpp"

namespace lrpk {

/// Element of B^{⊗N} for U_q(A_rank): letters in 1..rank+1.
class TensorWord {
public:
  TensorWord(int rank, Word letters);

  int rank() const noexcept { return rank_; }
  const Word& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  /// Multiplicity of letters 1..rank+1.
  std::vector<int> weight() const;
  TensorWord concat(const TensorWord& tail) const;

  friend bool operator==(const TensorWord&, const TensorWord&) = default;

private:
  int rank_;
  Word letters_;
};

enum class CrystalDirection { raise, lower };

/// ẽ_k (raise) or f̃_k (lower) by the signature rule; nullopt stands for 0.
/// Throws InvalidInput when k is outside 1..rank.
std::optional<TensorWord> apply_crystal_op(const TensorWord& w, int k, CrystalDirection dir);
/// Number of unmatched k+1's.
int epsilon(const TensorWord& w, int k);
/// Number of unmatched k's.
int phi(const TensorWord& w, int k);

bool is_highest_weight(const TensorWord& w);
/// Prefix form of the highest-weight test: for every prefix and every
/// k in 1..rank, #k >= #(k+1).
bool satisfies_prefix_condition(const TensorWord& w);

/// The R matrix on letters pos, pos+1, pos+2 (0-based pos).
Word combinatorial_r(std::span<const int> w, std::size_t pos);
TensorWord combinatorial_r(const TensorWord& w, std::size_t pos);

/// Words reachable by one fundamental Knuth transformation at window pos (0-based).
std::vector<Word> knuth_step(std::span<const int> w, std::size_t pos);

enum class EquivMode { knuth, crystal };

/// Exact breadth-first test.  Throws BoundExceeded when the words are longer
/// than limits.bfs_length.
bool equiv_check(std::span<const int> a, std::span<const int> b, EquivMode mode, const Limits& limits = {});
bool equiv_check(const TensorWord& a, const TensorWord& b, const Limits& limits = {});

/// Whole equivalence class of w under the chosen moves (BFS, bounded).
std::vector<Word> equivalence_class(std::span<const int> w, EquivMode mode, const Limits& limits = {});

/// Unbounded Knuth (or, on reversed tensors, crystal) equivalence via
/// insertion tableaux.
bool plactic_equivalent(std::span<const int> a, std::span<const int> b, EquivMode mode);

struct LrWitness {
  bool member = false;
  std::optional<Partition> final_shape;
  std::optional<int> failure_index;
};

/// Membership of a straight tableau in B(mu)^nu_lambda.  Throws InvalidInput if
/// t is not a semistandard straight tableau with entries <= rank+1.
LrWitness lr_membership(const SkewTableau& t, const Partition& lambda, const Partition& nu, int rank);

/// max(rows(nu), rows(mu) + rows(lambda)), at least 1.
int default_lr_rank(const Partition& lambda, const Partition& mu, const Partition& nu);

/// B(mu)^nu_lambda as straight tableaux, in enumerate_ssyt order.
std::vector<SkewTableau> enumerate_lr_crystal(const Partition& mu, const Partition& lambda, const Partition& nu,
                                              int rank, const Limits& limits = {});

}  // namespace lrpk
