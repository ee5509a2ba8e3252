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

// Skew tableaux and their readings.

#pragma once

#include <vector>

#include "lrpk/errors.hpp"
#include "lrpk/shapes.hpp"

namespace lrpk {

/// A finite sequence of positive letters.
using Word = std::vector<int>;

/// A filling of a skew shape.  rows[i] lists the entries of row i+1 for
/// columns inner[i]+1 .. outer[i]; straight tableaux have an empty inner shape.
class SkewTableau {
public:
  SkewTableau() = default;
  /// Throws InvalidInput if row lengths do not match the shape or an entry is < 1.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight tableau from its rows.
  explicit SkewTableau(std::vector<std::vector<int>> rows);

  /// Fills the shape's cells, listed in J-order, with `letters`.
  static SkewTableau from_j_order(const SkewShape& shape, std::span<const int> letters);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }
  bool contains(Cell c) const noexcept { return shape_.contains(c); }
  /// Entry at c; throws InvalidInput when c is outside the shape.
  int at(Cell c) const;
  int max_entry() const noexcept;
  /// Multiplicity of each letter 1..len (index 0 = letter 1).
  Composition content() const;
  std::string str() const;

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
  friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

bool validate_semistandard(const SkewTableau& t);

/// Entries in J-order: the middle-eastern reading.  Throws InvalidInput if t
/// is not semistandard.
Word me_reading(const SkewTableau& t);

/// Rows left to right, bottom row first.
Word skew_word(const SkewTableau& t);

/// Y_lambda: every entry in row k equals k.
SkewTableau highest_tableau(const Partition& lambda);

/// Cells holding entry k, rightmost first.
std::vector<Cell> level_set(const SkewTableau& t, int k);

/// 1-based rank of c among the cells of its level set, counted from the right.
int p_index(const SkewTableau& t, Cell c);

/// Every semistandard filling of `shape` with entries in 1..max_entry, ordered
/// lexicographically by middle-eastern reading.  Throws BoundExceeded when the
/// shape has more than limits.ssyt_cells cells.
std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, int max_entry, const Limits& limits = {});

}  // namespace lrpk
