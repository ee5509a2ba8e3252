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

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "lrpk/errors.hpp"
#include "lrpk/shapes.hpp"
#include "lrpk/tableaux.hpp"

using namespace lrpk;

static SkewTableau T(std::vector<std::vector<int>> rows) { return SkewTableau(std::move(rows)); }

namespace {

using Grid = std::vector<std::vector<int>>;

// Own semistandard check on explicit rows of a skew shape.
bool oracle_semistandard(const Partition& outer, const Partition& inner, const Grid& rows) {
  auto entry = [&](int r, int c) -> int {
    if (r < 1 || r > outer.rows()) return 0;
    int lo = inner[r - 1];
    if (c <= lo || c > outer[r - 1]) return 0;
    return rows[r - 1][c - lo - 1];
  };
  for (int r = 1; r <= outer.rows(); ++r)
    for (int c = inner[r - 1] + 1; c <= outer[r - 1]; ++c) {
      int e = entry(r, c);
      int right = entry(r, c + 1);
      int below = entry(r + 1, c);
      if (right != 0 && right < e) return false;
      if (below != 0 && below <= e) return false;
    }
  return true;
}

// Every filling with entries in 1..m, filtered by the oracle check.
std::size_t oracle_ssyt_count(const Partition& outer, const Partition& inner, int m) {
  Grid rows(outer.rows());
  std::vector<std::pair<int, int>> slots;
  for (int r = 0; r < outer.rows(); ++r) {
    rows[r].assign(outer[r] - inner[r], 1);
    for (int c = 0; c < outer[r] - inner[r]; ++c) slots.emplace_back(r, c);
  }
  std::size_t count = 0;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == slots.size()) {
      if (oracle_semistandard(outer, inner, rows)) ++count;
      return;
    }
    for (int v = 1; v <= m; ++v) {
      rows[slots[i].first][slots[i].second] = v;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

SkewTableau skew21_1(int a, int b) {
  return SkewTableau(SkewShape({2, 1}, {1}), {{a}, {b}});
}

}  // namespace

TEST_CASE("cell orders") {
  CHECK(leq_p({1, 1}, {2, 2}));
  CHECK_FALSE(leq_p({1, 2}, {2, 1}));
  CHECK(leq_p({1, 1}, {1, 1}));
  CHECK(leq_j({1, 2}, {1, 1}));
  CHECK(leq_j({1, 1}, {2, 5}));
  CHECK_FALSE(leq_j({2, 1}, {1, 9}));
}

TEST_CASE("leq_j is total and admissible on a 6x6 grid") {
  for (int r1 = 1; r1 <= 6; ++r1)
    for (int c1 = 1; c1 <= 6; ++c1)
      for (int r2 = 1; r2 <= 6; ++r2)
        for (int c2 = 1; c2 <= 6; ++c2) {
          Cell a{r1, c1}, b{r2, c2};
          int holds = int(less_j(a, b)) + int(less_j(b, a)) + int(a == b);
          CHECK(holds == 1);
          CHECK(leq_j(a, b) == (less_j(a, b) || a == b));
          if (r1 <= r2 && c1 >= c2) CHECK(leq_j(a, b));
        }
}

TEST_CASE("j_order_cells") {
  CHECK(j_order_cells(SkewShape({2})) == std::vector<Cell>{{1, 2}, {1, 1}});
  CHECK(j_order_cells(SkewShape({2, 1}, {1})) == std::vector<Cell>{{1, 2}, {2, 1}});
  CHECK(j_order_cells(SkewShape({1, 1})) == std::vector<Cell>{{1, 1}, {2, 1}});
  CHECK(j_order_cells(SkewShape({2, 1}, {2, 1})).empty());
}

TEST_CASE("row_lengths") {
  CHECK(row_lengths(SkewShape({2, 1}, {1})) == Composition{{1, 1}});
  CHECK(row_lengths(SkewShape({3, 2}, {1, 1})) == Composition{{2, 1}});
  Composition z = row_lengths(SkewShape({3, 1}, {3, 1}));
  CHECK(std::all_of(z.parts.begin(), z.parts.end(), [](int x) { return x == 0; }));
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidInput);
  CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
  CHECK(Partition({2, 1, 0}).rows() == 2);
  CHECK_THROWS_AS(SkewShape({2}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(SkewShape({2, 1}, {3}), InvalidInput);
  CHECK_FALSE(Partition::from(Composition{{2, 3}}).has_value());
}

TEST_CASE("add_one") {
  CHECK(add_one(Composition{{2, 2}}, 3) == Composition{{2, 2, 1}});
  CHECK(add_one(Composition{{2, 2}}, 2) == Composition{{2, 3}});
  CHECK(add_one(Composition{}, 1) == Composition{{1}});
  CHECK_THROWS_AS(add_one(Composition{{1}}, 0), InvalidInput);
}

TEST_CASE("add_sequence") {
  SUBCASE("word 31212 on (2,2)") {
    Word w{3, 1, 2, 1, 2};
    auto r = add_sequence(Partition{2, 2}, w);
    CHECK(r.valid);
    CHECK(r.result == Composition{{4, 4, 1}});
    CHECK(*r.partition() == Partition({4, 4, 1}));
    const std::vector<Composition> steps{{{2, 2, 1}}, {{3, 2, 1}}, {{3, 3, 1}}, {{4, 3, 1}}, {{4, 4, 1}}};
    for (std::size_t k = 1; k <= w.size(); ++k) {
      auto p = add_sequence(Partition{2, 2}, std::span<const int>(w.data(), k));
      CHECK(p.valid);
      CHECK(p.result == steps[k - 1]);
    }
  }
  SUBCASE("failure") {
    Word w{2};
    auto r = add_sequence(Partition{2, 2}, w);
    CHECK_FALSE(r.valid);
    CHECK(r.result == Composition{{2, 3}});
    CHECK(r.first_failure == 1);
    CHECK_FALSE(r.partition().has_value());
  }
  SUBCASE("column") {
    Word w{1, 2, 3};
    auto r = add_sequence(Partition{}, w);
    CHECK(r.valid);
    CHECK(r.result == Composition{{1, 1, 1}});
  }
  SUBCASE("a later repair does not hide the first failure") {
    Word w{2, 1};
    auto r = add_sequence(Partition{}, w);
    CHECK_FALSE(r.valid);
    CHECK(r.first_failure == 1);
    CHECK(r.result == Composition{{1, 1}});
  }
  SUBCASE("22133 follows the arithmetic") {
    Word w{2, 2, 1, 3, 3};
    auto r = add_sequence(Partition{2, 2}, w);
    CHECK(r.result == Composition{{3, 4, 2}});
    CHECK_FALSE(r.valid);
  }
}

TEST_CASE("add_sequence size and growth invariants") {
  for (const auto& base : subpartitions(Partition{3, 2, 1})) {
    for (int len = 0; len <= 4; ++len) {
      Word w(len, 1);
      for (;;) {
        auto r = add_sequence(base, w);
        int total = 0;
        for (int x : r.result.parts) total += x;
        CHECK(total == base.size() + len);
        if (r.valid) {
          Partition prev = base;
          for (int k = 1; k <= len; ++k) {
            auto step = add_sequence(base, std::span<const int>(w.data(), k));
            REQUIRE(step.valid);
            Partition cur = *step.partition();
            CHECK(cur.contains(prev));
            CHECK(cur.size() == prev.size() + 1);
            prev = cur;
          }
        }
        int i = len - 1;
        while (i >= 0 && w[i] == 4) w[i--] = 1;
        if (i < 0) break;
        ++w[i];
      }
    }
  }
}

TEST_CASE("partitions_of and subpartitions") {
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(4, 4, 2).size() == 3);
  CHECK(subpartitions(Partition{2, 1}).size() == 5);
  CHECK(subpartitions(Partition{}).size() == 1);
}

TEST_CASE("validate_semistandard") {
  CHECK(validate_semistandard(T({{1, 2}, {2}})));
  CHECK_FALSE(validate_semistandard(T({{1, 1}, {1}})));
  CHECK(validate_semistandard(skew21_1(1, 2)));
  CHECK_FALSE(validate_semistandard(T({{2, 1}})));
  CHECK_THROWS_AS(SkewTableau(SkewShape({2}), {{1}}), InvalidInput);
  CHECK_THROWS_AS(T({{0}}), InvalidInput);
}

TEST_CASE("readings") {
  CHECK(me_reading(T({{1, 2}})) == Word{2, 1});
  CHECK(me_reading(T({{1, 1}, {2}})) == Word{1, 1, 2});
  CHECK(me_reading(skew21_1(1, 2)) == Word{1, 2});
  CHECK(skew_word(T({{1, 2}, {2}})) == Word{2, 1, 2});
  CHECK(skew_word(skew21_1(1, 2)) == Word{2, 1});
  CHECK(skew_word(T({{5}})) == Word{5});
  CHECK_THROWS_AS(me_reading(T({{2, 1}})), InvalidInput);
}

TEST_CASE("highest_tableau") {
  CHECK(highest_tableau(Partition{2, 1}) == T({{1, 1}, {2}}));
  CHECK(highest_tableau(Partition{}).size() == 0);
  CHECK(highest_tableau(Partition{3}) == T({{1, 1, 1}}));
  for (const auto& lam : partitions_of(6)) {
    Word w = me_reading(highest_tableau(lam));
    CHECK(std::is_sorted(w.begin(), w.end()));
  }
}

TEST_CASE("p_index") {
  CHECK(p_index(T({{1}}), {1, 1}) == 1);
  SkewTableau y = highest_tableau(Partition{2, 1});
  CHECK(p_index(y, {1, 1}) == 2);
  CHECK(p_index(y, {1, 2}) == 1);
  CHECK(p_index(y, {2, 1}) == 1);
}

TEST_CASE("enumerate_ssyt examples") {
  CHECK(enumerate_ssyt(SkewShape({1}), 2).size() == 2);
  CHECK(enumerate_ssyt(SkewShape({1, 1}), 2).size() == 1);
  auto row = enumerate_ssyt(SkewShape({2}), 2);
  REQUIRE(row.size() == 3);
  std::vector<SkewTableau> want{T({{1, 1}}), T({{1, 2}}), T({{2, 2}})};
  std::sort(row.begin(), row.end());
  CHECK(row == want);
  CHECK(enumerate_ssyt(SkewShape({2}, {2}), 3).size() == 1);
  Limits tight;
  tight.ssyt_cells = 2;
  CHECK_THROWS_AS(enumerate_ssyt(SkewShape({3}), 2, tight), BoundExceeded);
}

TEST_CASE("enumerate_ssyt agrees with brute-force filter") {
  // Frozen oracle counts.
  CHECK(oracle_ssyt_count(Partition{2, 1}, Partition{}, 3) == 8);
  CHECK(oracle_ssyt_count(Partition{2, 2}, Partition{}, 3) == 6);
  CHECK(oracle_ssyt_count(Partition{3, 1}, Partition{1}, 2) == 6);
  for (int n = 0; n <= 5; ++n)
    for (const auto& outer : partitions_of(n, 3, 3))
      for (const auto& inner : subpartitions(outer))
        for (int m = 1; m <= 3; ++m) {
          auto got = enumerate_ssyt(SkewShape(outer, inner), m);
          CHECK(got.size() == oracle_ssyt_count(outer, inner, m));
          CHECK(std::is_sorted(got.begin(), got.end(),
                               [](const SkewTableau& a, const SkewTableau& b) { return me_reading(a) < me_reading(b); }));
        }
}

TEST_CASE("tableau family invariants") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& outer : partitions_of(n, 4, 4))
      for (const auto& inner : subpartitions(outer)) {
        SkewShape shape(outer, inner);
        if (shape.size() > 6) continue;
        for (const auto& t : enumerate_ssyt(shape, 4)) {
          Word me = me_reading(t);
          Word sw = skew_word(t);
          CHECK(int(me.size()) == shape.size());
          CHECK(Word(me.rbegin(), me.rend()) == sw);
          for (int k = 1; k <= 4; ++k) {
            auto cells = level_set(t, k);
            std::map<int, int> per_col;
            for (Cell c : cells) CHECK(++per_col[c.col] == 1);
            // p_index ranks the J-order position among cells with entry k.
            int rank = 0;
            for (Cell c : shape.j_order_cells())
              if (t.at(c) == k) CHECK(p_index(t, c) == ++rank);
          }
        }
      }
}

TEST_CASE("from_j_order and content") {
  SkewShape s({2, 1}, {1});
  Word letters{2, 1};
  auto t = SkewTableau::from_j_order(s, letters);
  CHECK(t.at({1, 2}) == 2);
  CHECK(t.at({2, 1}) == 1);
  CHECK(t.content() == Composition{{1, 1}});
  CHECK_THROWS_AS(t.at({1, 1}), InvalidInput);
  Word bad{1};
  CHECK_THROWS_AS(SkewTableau::from_j_order(s, bad), InvalidInput);
}
