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

#include "lrpk/rsk.hpp"

#include <algorithm>
#include <vector>

#include "lrpk/errors.hpp"

namespace lrpk {

namespace {

using Rows = std::vector<std::vector<int>>;

void require_straight_ssyt(const SkewTableau& t, const char* what) {
  if (!t.shape().is_straight()) throw InvalidInput(std::string(what) + " must be a straight tableau");
  if (!validate_semistandard(t)) throw InvalidInput(std::string(what) + " must be semistandard: " + t.str());
}

// Number of entries in column c (1-based) of a straight tableau.
int column_height(const Rows& rows, int c) {
  int h = 0;
  while (h < static_cast<int>(rows.size()) && static_cast<int>(rows[h].size()) >= c) ++h;
  return h;
}

Cell bump(Rows& rows, int x) {
  int carry = x;
  for (int c = 1;; ++c) {
    const int h = column_height(rows, c);
    int r = 0;
    while (r < h && rows[r][c - 1] < carry) ++r;
    if (r == h) {
      if (h == static_cast<int>(rows.size())) rows.emplace_back();
      rows[h].push_back(carry);
      return {h + 1, c};
    }
    std::swap(rows[r][c - 1], carry);
  }
}

SkewTableau straight(Rows rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  return SkewTableau(std::move(rows));
}

}  // namespace

BumpOutcome column_insert(const SkewTableau& t, int x) {
  require_straight_ssyt(t, "column insertion target");
  if (x < 1) throw InvalidInput("letters must be positive");
  Rows rows = t.rows();
  const Cell c = bump(rows, x);
  return {straight(std::move(rows)), c};
}

std::pair<SkewTableau, int> reverse_column_insert(const SkewTableau& t, Cell c) {
  if (!t.shape().is_straight()) throw InvalidInput("reverse bumping needs a straight tableau");
  const auto& outer = t.shape().outer();
  const bool corner = c.row >= 1 && c.row <= outer.rows() && outer[c.row - 1] == c.col &&
                      outer[static_cast<std::size_t>(c.row)] < c.col;
  if (!corner)
    throw InvalidInput("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not a removable corner of " +
                       t.shape().str());
  Rows rows = t.rows();
  int carry = rows[c.row - 1].back();
  rows[c.row - 1].pop_back();
  for (int col = c.col - 1; col >= 1; --col) {
    const int h = column_height(rows, col);
    int r = h - 1;
    while (r >= 0 && rows[r][col - 1] > carry) --r;
    if (r < 0) throw InvalidInput("reverse bumping found no entry <= " + std::to_string(carry) + " in column " +
                                  std::to_string(col));
    std::swap(rows[r][col - 1], carry);
  }
  return {straight(std::move(rows)), carry};
}

bool validate_lex_array(const TwoRowedArray& w) {
  if (w.top.size() != w.bottom.size()) return false;
  for (std::size_t k = 0; k + 1 < w.top.size(); ++k) {
    if (w.top[k] > w.top[k + 1]) return false;
    if (w.top[k] == w.top[k + 1] && w.bottom[k] < w.bottom[k + 1]) return false;
  }
  return true;
}

SkewTableau insertion_tableau(std::span<const int> w) {
  Rows rows;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (*it < 1) throw InvalidInput("letters must be positive");
    bump(rows, *it);
  }
  return straight(std::move(rows));
}

RskPair rsk_forward(const TwoRowedArray& w) {
  if (!validate_lex_array(w)) throw InvalidInput("two-rowed array is not in lexicographic (column type) order");
  Rows p;
  Rows q;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w.bottom[k] < 1 || w.top[k] < 1) throw InvalidInput("letters must be positive");
    const Cell c = bump(p, w.bottom[k]);
    if (c.row > static_cast<int>(q.size())) q.emplace_back();
    q[c.row - 1].push_back(w.top[k]);
  }
  return {straight(std::move(p)), straight(std::move(q))};
}

TwoRowedArray rsk_inverse(const SkewTableau& P, const SkewTableau& Q) {
  require_straight_ssyt(P, "insertion tableau");
  require_straight_ssyt(Q, "recording tableau");
  if (P.shape() != Q.shape()) throw InvalidInput("insertion and recording tableaux differ in shape");

  SkewTableau p = P;
  Rows q = Q.rows();
  TwoRowedArray out;
  for (int left = P.size(); left > 0; --left) {
    // Right-most maximum: scanning rows top-down, a later equal maximum in a
    // lower row is always further left, so keep the first column-maximal hit.
    Cell best{0, 0};
    int best_val = 0;
    for (std::size_t r = 0; r < q.size(); ++r) {
      if (q[r].empty()) continue;
      const int v = q[r].back();
      const Cell c{static_cast<int>(r) + 1, static_cast<int>(q[r].size())};
      if (v > best_val || (v == best_val && c.col > best.col)) {
        best_val = v;
        best = c;
      }
    }
    auto [smaller, letter] = reverse_column_insert(p, best);
    p = std::move(smaller);
    q[best.row - 1].pop_back();
    out.top.push_back(best_val);
    out.bottom.push_back(letter);
  }
  std::reverse(out.top.begin(), out.top.end());
  std::reverse(out.bottom.begin(), out.bottom.end());
  return out;
}

}  // namespace lrpk
