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

// Partitions, skew diagrams and cell orders.
//
// Cells are 1-based (row, col) with rows numbered downward.  Two orders are
// used throughout: the product order (leq_p) and the total "J" order that
// reads rows top to bottom and each row right to left (leq_j).

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lrpk {

struct Cell {
  int row = 1;
  int col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

bool leq_p(Cell a, Cell b) noexcept;
bool leq_j(Cell a, Cell b) noexcept;

/// Strict version of leq_j; usable as a sort comparator.
inline bool less_j(Cell a, Cell b) noexcept {
  return a.row < b.row || (a.row == b.row && a.col > b.col);
}

/// A sequence of non-negative parts with no ordering requirement.
struct Composition {
  std::vector<int> parts;

  int operator[](std::size_t i) const { return i < parts.size() ? parts[i] : 0; }
  bool is_partition() const noexcept;
  /// Drops trailing zeros.
  Composition trimmed() const;

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.trimmed().parts == b.trimmed().parts;
  }
};

/// Weakly decreasing sequence of non-negative integers, stored without
/// trailing zeros so that equality is structural.
class Partition {
public:
  Partition() = default;
  /// Throws InvalidInput if parts are negative or not weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Partition from a composition, or nullopt if it is not weakly decreasing.
  static std::optional<Partition> from(const Composition& c);

  const std::vector<int>& parts() const noexcept { return parts_; }
  /// Part i (0-based); zero beyond the stored length.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
  /// Number of non-zero rows.
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  bool contains(const Partition& other) const noexcept;
  Composition as_composition() const { return Composition{parts_}; }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// The skew diagram outer \ inner.
class SkewShape {
public:
  SkewShape() = default;
  /// Throws InvalidInput unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  int rows() const noexcept { return outer_.rows(); }
  bool is_straight() const noexcept { return inner_.empty(); }
  bool contains(Cell c) const noexcept;
  /// Cells in J-order (rows top-down, each row right to left).
  std::vector<Cell> j_order_cells() const;
  std::string str() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;
  friend auto operator<=>(const SkewShape&, const SkewShape&) = default;

private:
  Partition outer_;
  Partition inner_;
};

std::vector<Cell> j_order_cells(const SkewShape& shape);

/// Row i (1-based in the math, index i-1 here) holds outer[i] - inner[i].
Composition row_lengths(const SkewShape& shape);

/// Adds one box to row i (1-based).  Never fails; the result may not be a partition.
Composition add_one(const Composition& shape, int i);

struct AdditionResult {
  Composition result;
  bool valid = false;
  /// 1-based index of the first letter whose addition breaks weak decrease.
  std::optional<int> first_failure;
  /// Final partition when valid.
  std::optional<Partition> partition() const { return valid ? Partition::from(result) : std::nullopt; }
};

/// Adds the letters of word left to right, tracking whether every
/// intermediate stays a partition.
AdditionResult add_sequence(const Partition& base, std::span<const int> word);

/// All partitions of size n (largest first in lexicographic order), optionally
/// restricted to fit in a max_rows x max_cols box.
std::vector<Partition> partitions_of(int n, int max_rows = -1, int max_cols = -1);

/// All partitions contained in `outer`.
std::vector<Partition> subpartitions(const Partition& outer);

}  // namespace lrpk
