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

// Column bumping and the column-type RSK correspondence.

#pragma once

#include <span>
#include <utility>

#include "lrpk/tableaux.hpp"

namespace lrpk {

/// Two-rowed array (top over bottom).
struct TwoRowedArray {
  Word top;
  Word bottom;

  std::size_t size() const noexcept { return top.size(); }
  friend bool operator==(const TwoRowedArray&, const TwoRowedArray&) = default;
  friend auto operator<=>(const TwoRowedArray&, const TwoRowedArray&) = default;
};

struct BumpOutcome {
  SkewTableau tableau;
  Cell new_cell;
};

/// x -> t.  x goes into column 1, bumping the topmost entry >= x into the next
/// column; a value larger than every entry of a column is appended below it.
/// Throws InvalidInput unless t is a semistandard straight tableau and x >= 1.
BumpOutcome column_insert(const SkewTableau& t, int x);

/// Inverse of column_insert from the corner c.  Returns the smaller tableau
/// and the letter leaving column 1.  Throws InvalidInput if c is not a
/// removable corner.
std::pair<SkewTableau, int> reverse_column_insert(const SkewTableau& t, Cell c);

/// Top weakly increasing; bottom weakly decreasing where top is constant.
bool validate_lex_array(const TwoRowedArray& w);

/// Column-insertion tableau of a word, x_1 -> (x_2 -> ... (x_m)), which is
/// Knuth equivalent to x_1 ... x_m.
SkewTableau insertion_tableau(std::span<const int> w);

struct RskPair {
  SkewTableau P;  // insertion tableau (bottom row letters)
  SkewTableau Q;  // recording tableau (top row letters)
  friend bool operator==(const RskPair&, const RskPair&) = default;
  friend auto operator<=>(const RskPair&, const RskPair&) = default;
};

/// Inserts bottom[0] first.  Throws InvalidInput on a non-lexicographic array.
RskPair rsk_forward(const TwoRowedArray& w);

/// Removes the right-most maximum of Q until empty.  Throws InvalidInput on a
/// shape mismatch or non-semistandard input.
TwoRowedArray rsk_inverse(const SkewTableau& P, const SkewTableau& Q);

}  // namespace lrpk
