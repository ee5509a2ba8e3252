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

#include "lrpk/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "lrpk/rsk.hpp"

namespace lrpk {

TensorWord::TensorWord(int rank, Word letters) : rank_(rank), letters_(std::move(letters)) {
  if (rank_ < 1) throw InvalidInput("tensor rank must be positive");
  for (int x : letters_)
    if (x < 1 || x > rank_ + 1)
      throw InvalidInput("letter " + std::to_string(x) + " is outside 1.." + std::to_string(rank_ + 1));
}

std::vector<int> TensorWord::weight() const {
  std::vector<int> wt(static_cast<std::size_t>(rank_ + 1), 0);
  for (int x : letters_) ++wt[x - 1];
  return wt;
}

TensorWord TensorWord::concat(const TensorWord& tail) const {
  Word w = letters_;
  w.insert(w.end(), tail.letters_.begin(), tail.letters_.end());
  return TensorWord(std::max(rank_, tail.rank_), std::move(w));
}

namespace {

// Bracket matching: k is '(' and k+1 is ')'.  Positions of the unmatched
// k+1's (left part of the reduced signature) and unmatched k's.
struct Signature {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> plus;
};

Signature signature(const Word& w, int k) {
  Signature s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == k) {
      s.plus.push_back(i);
    } else if (w[i] == k + 1) {
      if (!s.plus.empty())
        s.plus.pop_back();
      else
        s.minus.push_back(i);
    }
  }
  return s;
}

void check_index(const TensorWord& w, int k) {
  if (k < 1 || k > w.rank())
    throw InvalidInput("crystal index " + std::to_string(k) + " is outside 1.." + std::to_string(w.rank()));
}

}  // namespace

std::optional<TensorWord> apply_crystal_op(const TensorWord& w, int k, CrystalDirection dir) {
  check_index(w, k);
  const Signature s = signature(w.letters(), k);
  Word out = w.letters();
  if (dir == CrystalDirection::raise) {
    if (s.minus.empty()) return std::nullopt;
    out[s.minus.back()] = k;
  } else {
    if (s.plus.empty()) return std::nullopt;
    out[s.plus.front()] = k + 1;
  }
  return TensorWord(w.rank(), std::move(out));
}

int epsilon(const TensorWord& w, int k) {
  check_index(w, k);
  return static_cast<int>(signature(w.letters(), k).minus.size());
}

int phi(const TensorWord& w, int k) {
  check_index(w, k);
  return static_cast<int>(signature(w.letters(), k).plus.size());
}

bool is_highest_weight(const TensorWord& w) {
  for (int k = 1; k <= w.rank(); ++k)
    if (apply_crystal_op(w, k, CrystalDirection::raise)) return false;
  return true;
}

bool satisfies_prefix_condition(const TensorWord& w) {
  std::vector<int> count(static_cast<std::size_t>(w.rank() + 2), 0);
  for (int x : w.letters()) {
    ++count[x];
    if (x >= 2 && count[x] > count[x - 1]) return false;
  }
  return true;
}

Word combinatorial_r(std::span<const int> w, std::size_t pos) {
  if (pos + 3 > w.size()) throw InvalidInput("R-matrix window is out of range");
  Word out(w.begin(), w.end());
  const int x = w[pos];
  const int y = w[pos + 1];
  const int z = w[pos + 2];
  if ((y <= x && x < z) || (z <= x && x < y)) {
    // b⊗a⊗c <-> b⊗c⊗a, a <= b < c
    std::swap(out[pos + 1], out[pos + 2]);
  } else if ((y < z && z <= x) || (x < z && z <= y)) {
    // c⊗a⊗b <-> a⊗c⊗b, a < b <= c
    std::swap(out[pos], out[pos + 1]);
  }
  return out;
}

TensorWord combinatorial_r(const TensorWord& w, std::size_t pos) {
  return TensorWord(w.rank(), combinatorial_r(std::span<const int>(w.letters()), pos));
}

std::vector<Word> knuth_step(std::span<const int> w, std::size_t pos) {
  if (pos + 3 > w.size()) throw InvalidInput("Knuth window is out of range");
  const int p = w[pos];
  const int q = w[pos + 1];
  const int r = w[pos + 2];
  std::vector<Word> out;
  auto emit = [&](int a, int b, int c) {
    Word v(w.begin(), w.end());
    v[pos] = a;
    v[pos + 1] = b;
    v[pos + 2] = c;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  };
  // K: yxz <-> yzx, x < y <= z
  if (q < p && p <= r) emit(p, r, q);
  if (r < p && p <= q) emit(p, r, q);
  // K': xzy <-> zxy, x <= y < z
  if (p <= r && r < q) emit(q, p, r);
  if (q <= r && r < p) emit(q, p, r);
  return out;
}

std::vector<Word> equivalence_class(std::span<const int> w, EquivMode mode, const Limits& limits) {
  if (static_cast<int>(w.size()) > limits.bfs_length)
    throw BoundExceeded("BFS closure limited to words of length " + std::to_string(limits.bfs_length));
  std::set<Word> seen{Word(w.begin(), w.end())};
  std::deque<Word> queue{Word(w.begin(), w.end())};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t pos = 0; pos + 3 <= cur.size(); ++pos) {
      std::vector<Word> next;
      if (mode == EquivMode::knuth) {
        next = knuth_step(cur, pos);
      } else {
        next.push_back(combinatorial_r(std::span<const int>(cur), pos));
      }
      for (auto& v : next)
        if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return {seen.begin(), seen.end()};
}

bool equiv_check(std::span<const int> a, std::span<const int> b, EquivMode mode, const Limits& limits) {
  if (a.size() != b.size()) return false;
  if (static_cast<int>(a.size()) > limits.bfs_length)
    throw BoundExceeded("BFS closure limited to words of length " + std::to_string(limits.bfs_length));
  Word sa(a.begin(), a.end());
  Word sb(b.begin(), b.end());
  if (sa == sb) return true;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  const auto cls = equivalence_class(a, mode, limits);
  return std::binary_search(cls.begin(), cls.end(), Word(b.begin(), b.end()));
}

bool equiv_check(const TensorWord& a, const TensorWord& b, const Limits& limits) {
  return equiv_check(a.letters(), b.letters(), EquivMode::crystal, limits);
}

bool plactic_equivalent(std::span<const int> a, std::span<const int> b, EquivMode mode) {
  if (a.size() != b.size()) return false;
  if (mode == EquivMode::knuth) return insertion_tableau(a) == insertion_tableau(b);
  Word ra(a.rbegin(), a.rend());
  Word rb(b.rbegin(), b.rend());
  return insertion_tableau(ra) == insertion_tableau(rb);
}

LrWitness lr_membership(const SkewTableau& t, const Partition& lambda, const Partition& nu, int rank) {
  if (!t.shape().is_straight()) throw InvalidInput("Littlewood-Richardson crystal elements are straight tableaux");
  if (!validate_semistandard(t)) throw InvalidInput("tableau is not semistandard: " + t.str());
  if (t.max_entry() > rank + 1)
    throw InvalidInput("tableau entry " + std::to_string(t.max_entry()) + " exceeds rank+1 = " + std::to_string(rank + 1));
  const Word me = me_reading(t);
  const AdditionResult add = add_sequence(lambda, me);
  LrWitness w;
  if (!add.valid) {
    w.failure_index = add.first_failure;
    return w;
  }
  auto fin = add.partition();
  if (fin != nu) {
    // Every prefix stayed a partition but the end point is wrong.
    w.failure_index = static_cast<int>(me.size());
    return w;
  }
  w.member = true;
  w.final_shape = std::move(fin);
  return w;
}

int default_lr_rank(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return std::max({1, nu.rows(), mu.rows() + lambda.rows()});
}

std::vector<SkewTableau> enumerate_lr_crystal(const Partition& mu, const Partition& lambda, const Partition& nu,
                                              int rank, const Limits& limits) {
  std::vector<SkewTableau> out;
  if (mu.size() > limits.ssyt_cells)
    throw BoundExceeded("shape " + mu.str() + " exceeds the enumeration bound of " + std::to_string(limits.ssyt_cells));
  if (lambda.size() + mu.size() != nu.size() || !nu.contains(lambda)) return out;
  for (auto& t : enumerate_ssyt(SkewShape(mu), rank + 1, limits))
    if (lr_membership(t, lambda, nu, rank).member) out.push_back(std::move(t));
  return out;
}

}  // namespace lrpk
