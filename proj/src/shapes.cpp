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

#include "lrpk/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "lrpk/errors.hpp"

namespace lrpk {

bool leq_p(Cell a, Cell b) noexcept { return a.row <= b.row && a.col <= b.col; }

bool leq_j(Cell a, Cell b) noexcept {
  return a.row < b.row || (a.row == b.row && a.col >= b.col);
}

bool Composition::is_partition() const noexcept {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
  }
  return true;
}

Composition Composition::trimmed() const {
  Composition c{parts};
  while (!c.parts.empty() && c.parts.back() == 0) c.parts.pop_back();
  return c;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidInput("partition has a negative part");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

std::optional<Partition> Partition::from(const Composition& c) {
  if (!c.is_partition()) return std::nullopt;
  return Partition(c.parts);
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const noexcept {
  if (other.rows() > rows()) return false;
  for (int i = 0; i < other.rows(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw InvalidInput("inner partition " + inner_.str() + " is not contained in " + outer_.str());
}

bool SkewShape::contains(Cell c) const noexcept {
  if (c.row < 1 || c.col < 1) return false;
  const auto r = static_cast<std::size_t>(c.row - 1);
  return inner_[r] < c.col && c.col <= outer_[r];
}

std::vector<Cell> SkewShape::j_order_cells() const {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < outer_.rows(); ++i)
    for (int j = outer_[i]; j > inner_[i]; --j) cells.push_back({i + 1, j});
  return cells;
}

std::string SkewShape::str() const { return outer_.str() + "\\" + inner_.str(); }

std::vector<Cell> j_order_cells(const SkewShape& shape) { return shape.j_order_cells(); }

Composition row_lengths(const SkewShape& shape) {
  Composition c;
  c.parts.resize(static_cast<std::size_t>(shape.rows()));
  for (int i = 0; i < shape.rows(); ++i) c.parts[i] = shape.outer()[i] - shape.inner()[i];
  return c;
}

Composition add_one(const Composition& shape, int i) {
  if (i < 1) throw InvalidInput("addition index must be positive");
  Composition c = shape;
  if (c.parts.size() < static_cast<std::size_t>(i)) c.parts.resize(static_cast<std::size_t>(i), 0);
  ++c.parts[i - 1];
  return c;
}

AdditionResult add_sequence(const Partition& base, std::span<const int> word) {
  AdditionResult r;
  r.result = base.as_composition();
  r.valid = true;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const int i = word[k];
    r.result = add_one(r.result, i);
    // Only row i changed, so weak decrease can break only against row i-1.
    if (r.valid && i >= 2 && r.result[i - 1] > r.result[i - 2]) {
      r.valid = false;
      r.first_failure = static_cast<int>(k) + 1;
    }
  }
  return r;
}

std::vector<Partition> partitions_of(int n, int max_rows, int max_cols) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_cols >= 0 ? max_cols : n);
  return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  std::vector<int> cur(outer.parts().size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int cap) {
    if (i == cur.size()) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(cap, outer[i]); p >= 0; --p) {
      cur[i] = p;
      rec(i + 1, p);
    }
    cur[i] = 0;
  };
  rec(0, outer.empty() ? 0 : outer[0]);
  return out;
}

}  // namespace lrpk
