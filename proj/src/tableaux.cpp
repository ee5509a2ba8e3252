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

#include "lrpk/tableaux.hpp"

#include <algorithm>
#include <functional>

namespace lrpk {

SkewTableau::SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  // Allow trailing empty rows in the input but store exactly shape.rows() rows.
  while (static_cast<int>(rows_.size()) > shape_.rows() && rows_.back().empty()) rows_.pop_back();
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw InvalidInput("tableau has " + std::to_string(rows_.size()) + " rows, shape " + shape_.str() + " needs " +
                       std::to_string(shape_.rows()));
  for (int i = 0; i < shape_.rows(); ++i) {
    const int want = shape_.outer()[i] - shape_.inner()[i];
    if (static_cast<int>(rows_[i].size()) != want)
      throw InvalidInput("row " + std::to_string(i + 1) + " of tableau has the wrong length for shape " + shape_.str());
    for (int e : rows_[i])
      if (e < 1) throw InvalidInput("tableau entries must be positive");
  }
}

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Partition(parts);
}

}  // namespace

SkewTableau::SkewTableau(std::vector<std::vector<int>> rows) : SkewTableau(SkewShape(shape_of_rows(rows)), rows) {}

SkewTableau SkewTableau::from_j_order(const SkewShape& shape, std::span<const int> letters) {
  if (static_cast<int>(letters.size()) != shape.size())
    throw InvalidInput("word length does not match the number of cells of " + shape.str());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  std::size_t k = 0;
  for (int i = 0; i < shape.rows(); ++i) {
    const int len = shape.outer()[i] - shape.inner()[i];
    rows[i].resize(static_cast<std::size_t>(len));
    for (int j = len - 1; j >= 0; --j) rows[i][j] = letters[k++];
  }
  return SkewTableau(shape, std::move(rows));
}

int SkewTableau::at(Cell c) const {
  if (!shape_.contains(c))
    throw InvalidInput("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is outside " + shape_.str());
  return rows_[c.row - 1][c.col - 1 - shape_.inner()[c.row - 1]];
}

int SkewTableau::max_entry() const noexcept {
  int m = 0;
  for (const auto& r : rows_)
    for (int e : r) m = std::max(m, e);
  return m;
}

Composition SkewTableau::content() const {
  Composition c;
  c.parts.assign(static_cast<std::size_t>(max_entry()), 0);
  for (const auto& r : rows_)
    for (int e : r) ++c.parts[e - 1];
  return c;
}

std::string SkewTableau::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(rows_[i][j]);
    }
    s += ']';
  }
  return s + "]@" + shape_.str();
}

bool validate_semistandard(const SkewTableau& t) {
  const auto& sh = t.shape();
  for (int i = 1; i <= sh.rows(); ++i) {
    for (int j = sh.inner()[i - 1] + 1; j <= sh.outer()[i - 1]; ++j) {
      const int e = t.at({i, j});
      if (sh.contains({i, j + 1}) && e > t.at({i, j + 1})) return false;
      if (sh.contains({i + 1, j}) && e >= t.at({i + 1, j})) return false;
    }
  }
  return true;
}

Word me_reading(const SkewTableau& t) {
  if (!validate_semistandard(t)) throw InvalidInput("middle-eastern reading needs a semistandard tableau: " + t.str());
  Word w;
  w.reserve(static_cast<std::size_t>(t.size()));
  for (const auto& row : t.rows()) w.insert(w.end(), row.rbegin(), row.rend());
  return w;
}

Word skew_word(const SkewTableau& t) {
  Word w;
  w.reserve(static_cast<std::size_t>(t.size()));
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

SkewTableau highest_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < lambda.rows(); ++i) rows.emplace_back(static_cast<std::size_t>(lambda[i]), i + 1);
  return SkewTableau(SkewShape(lambda), std::move(rows));
}

std::vector<Cell> level_set(const SkewTableau& t, int k) {
  std::vector<Cell> cells;
  for (const Cell& c : t.shape().j_order_cells())
    if (t.at(c) == k) cells.push_back(c);
  // Column-descending; ties cannot occur in a semistandard tableau but keep
  // the order total anyway.
  std::stable_sort(cells.begin(), cells.end(), [](Cell a, Cell b) { return a.col > b.col; });
  return cells;
}

int p_index(const SkewTableau& t, Cell c) {
  const int k = t.at(c);
  const auto cells = level_set(t, k);
  const auto it = std::find(cells.begin(), cells.end(), c);
  return static_cast<int>(it - cells.begin()) + 1;
}

std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, int max_entry, const Limits& limits) {
  if (shape.size() > limits.ssyt_cells)
    throw BoundExceeded("shape " + shape.str() + " has " + std::to_string(shape.size()) + " cells; bound is " +
                        std::to_string(limits.ssyt_cells));
  std::vector<SkewTableau> out;
  const auto cells = shape.j_order_cells();
  if (cells.empty()) {
    out.push_back(SkewTableau::from_j_order(shape, {}));
    return out;
  }
  if (max_entry < 1) return out;

  // Fill in J-order.  When (i,j) is reached, its right neighbour and the
  // whole row above are already filled, which is all the constraint needed;
  // the left neighbour checks against this cell when it is filled.
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
  for (int i = 0; i < shape.rows(); ++i) grid[i].assign(static_cast<std::size_t>(shape.outer()[i] + 1), 0);
  Word letters(cells.size());

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.push_back(SkewTableau::from_j_order(shape, letters));
      return;
    }
    const Cell c = cells[k];
    int lo = 1;
    int hi = max_entry;
    if (c.row >= 2 && shape.contains({c.row - 1, c.col})) lo = grid[c.row - 2][c.col] + 1;
    if (shape.contains({c.row, c.col + 1})) hi = std::min(hi, grid[c.row - 1][c.col + 1]);
    for (int v = lo; v <= hi; ++v) {
      grid[c.row - 1][c.col] = v;
      letters[k] = v;
      rec(k + 1);
    }
    grid[c.row - 1][c.col] = 0;
  };
  rec(0);
  return out;
}

}  // namespace lrpk
