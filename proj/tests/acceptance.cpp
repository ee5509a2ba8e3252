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

// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "lrpk/correspondence.hpp"
#include "lrpk/verify.hpp"

using namespace lrpk;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::vector<Word> words(int len, int m) {
  std::vector<Word> out;
  Word w(len, 1);
  for (;;) {
    out.push_back(w);
    int i = len - 1;
    while (i >= 0 && w[i] == m) w[i--] = 1;
    if (i < 0) return out;
    ++w[i];
  }
}

std::vector<Word> words_upto(int max_len, int m) {
  std::vector<Word> out;
  for (int len = 0; len <= max_len; ++len)
    for (auto& w : words(len, m)) out.push_back(std::move(w));
  return out;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

// Context pairs: nu in a 4x4 box with at most 6 cells, |kappa| <= 5.
std::vector<std::pair<SkewShape, SkewShape>> context_family() {
  auto shapes = verify::skew_family(4, 6, 5);
  std::vector<std::pair<SkewShape, SkewShape>> out;
  for (const auto& a : shapes)
    for (const auto& b : shapes)
      if (a.size() == b.size()) out.emplace_back(a, b);
  return out;
}

struct LrCounts {
  std::map<std::tuple<Partition, Partition, Partition>, std::size_t> memo;
  std::size_t operator()(const Partition& mu, const Partition& lambda, const Partition& nu) {
    auto key = std::make_tuple(mu, lambda, nu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int rank = default_lr_rank(lambda, mu, nu);
    std::size_t n = enumerate_lr_crystal(mu, lambda, nu, rank).size();
    memo.emplace(key, n);
    return n;
  }
};

Outcome roundtrip(std::string& summary, std::vector<std::pair<SkewTableau, SkewTableau>>& transport) {
  Outcome o;
  std::size_t contexts = 0, pictures = 0, pairs = 0;
  for (const auto& [k1, k2] : context_family()) {
    CorrespondenceContext ctx(k1, k2);
    ++contexts;
    for (const auto& f : enumerate_pictures(k1, k2)) {
      CrystalPair p = full_s(ctx, f);
      if (full_c(ctx, p) != f) o.fail("C(S(f)) != f for a picture on " + k1.str() + " -> " + k2.str());
      transport.emplace_back(s1_picture_to_skewtab(ctx, f), p.second);
      ++pictures;
    }
    for (const auto& p : enumerate_crystal_pairs(ctx)) {
      if (full_s(ctx, full_c(ctx, p)) != p) o.fail("S(C(pair)) != pair on " + k1.str() + " -> " + k2.str());
      ++pairs;
    }
  }
  summary = std::to_string(contexts) + " contexts, " + std::to_string(pictures) + " pictures, " +
            std::to_string(pairs) + " pairs";
  if (pictures < 100) o.fail("family too small");
  return o;
}

Outcome cardinality(std::string& summary) {
  Outcome o;
  LrCounts lr;
  std::size_t checked = 0;
  for (const auto& [k1, k2] : context_family()) {
    std::size_t lhs = count_pictures(k1, k2);
    std::size_t rhs = 0;
    for (const auto& mu : partitions_of(k1.size()))
      rhs += lr(mu, k1.inner(), k1.outer()) * lr(mu, k2.inner(), k2.outer());
    if (lhs != rhs)
      o.fail(k1.str() + " -> " + k2.str() + ": " + std::to_string(lhs) + " pictures vs " + std::to_string(rhs));
    ++checked;
  }
  summary = std::to_string(checked) + " contexts";
  return o;
}

Outcome permutations(std::string& summary) {
  Outcome o;
  const std::size_t want[] = {1, 1, 2, 6, 24};
  for (int n = 1; n <= 4; ++n) {
    SkewShape k = verify::staircase_difference(n);
    std::size_t got = count_pictures(k, k);
    summary += (n > 1 ? "," : "") + std::to_string(got);
    if (got != want[n]) o.fail("n=" + std::to_string(n) + " gave " + std::to_string(got));
  }
  return o;
}

Outcome rsk_bijection(std::string& summary) {
  Outcome o;
  for (auto [n, m] : {std::pair{3, 3}, std::pair{2, 4}}) {
    auto arrays = verify::lex_arrays(n, m);
    std::set<RskPair> images;
    for (const auto& w : arrays) {
      RskPair pq = rsk_forward(w);
      if (pq.P.shape() != pq.Q.shape() || !validate_semistandard(pq.P) || !validate_semistandard(pq.Q))
        o.fail("image is not a same-shaped semistandard pair");
      if (rsk_inverse(pq.P, pq.Q) != w) o.fail("inverse(forward(w)) != w");
      images.insert(pq);
    }
    if (images.size() != arrays.size()) o.fail("images are not pairwise distinct");
    std::set<RskPair> targets;
    for (const auto& mu : partitions_of(m, n))
      for (const auto& p : enumerate_ssyt(SkewShape(mu), n))
        for (const auto& q : enumerate_ssyt(SkewShape(mu), n)) targets.insert({p, q});
    if (targets != images) o.fail("some same-shaped pair is not hit");
    summary += (summary.empty() ? "" : ", ") + std::string("W[") + std::to_string(n) + ";" + std::to_string(m) +
               "] " + std::to_string(arrays.size()) + " arrays";
  }
  return o;
}

SkewTableau random_tableau(std::mt19937_64& rng, int max_cells, int max_entry) {
  for (;;) {
    int cells = std::uniform_int_distribution<int>(0, max_cells)(rng);
    auto shapes = partitions_of(cells, max_entry);
    const Partition& shape = shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(rng)];
    std::vector<std::vector<int>> rows;
    bool ok = true;
    for (int r = 0; r < shape.rows() && ok; ++r) {
      rows.emplace_back();
      for (int c = 0; c < shape[r]; ++c) {
        int lo = std::max(c > 0 ? rows[r][c - 1] : 1, r > 0 ? rows[r - 1][c] + 1 : 1);
        if (lo > max_entry) {
          ok = false;
          break;
        }
        rows[r].push_back(std::uniform_int_distribution<int>(lo, max_entry)(rng));
      }
    }
    if (ok) return SkewTableau(rows);
  }
}

Outcome bumping(std::string& summary) {
  Outcome o;
  std::mt19937_64 rng(7);
  const int instances = 10000;
  for (int i = 0; i < instances; ++i) {
    SkewTableau t = random_tableau(rng, 12, 5);
    int x = std::uniform_int_distribution<int>(1, 5)(rng);
    int y = std::uniform_int_distribution<int>(1, 5)(rng);
    auto first = column_insert(t, x);
    auto second = column_insert(first.tableau, y);
    Cell a = first.new_cell, b = second.new_cell;
    bool holds = x < y ? (b.col <= a.col && b.row > a.row) : (a.col < b.col && a.row >= b.row);
    if (!holds) o.fail("violated for " + t.str() + " with " + std::to_string(x) + ", " + std::to_string(y));
  }
  summary = std::to_string(instances) + " instances, seed 7";
  return o;
}

Outcome knuth_crystal(std::string& summary) {
  Outcome o;
  std::size_t classes = 0;
  for (int len = 0; len <= 5; ++len) {
    std::set<Word> seen;
    for (const auto& w : words(len, 3)) {
      if (seen.count(w)) continue;
      auto k = equivalence_class(w, EquivMode::knuth);
      std::set<Word> kset(k.begin(), k.end());
      std::set<Word> cset;
      for (const auto& v : equivalence_class(reversed(w), EquivMode::crystal)) cset.insert(reversed(v));
      if (kset != cset) o.fail("classes differ at length " + std::to_string(len));
      seen.insert(kset.begin(), kset.end());
      ++classes;
    }
  }
  std::size_t r_checks = 0;
  for (const auto& w : words_upto(5, 3)) {
    TensorWord b(2, w);
    for (std::size_t pos = 0; pos + 3 <= w.size(); ++pos) {
      TensorWord b2 = combinatorial_r(b, pos);
      for (int k = 1; k <= 2; ++k)
        for (auto dir : {CrystalDirection::raise, CrystalDirection::lower}) {
          auto x = apply_crystal_op(b, k, dir);
          auto y = apply_crystal_op(b2, k, dir);
          if (bool(x) != bool(y) || (x && !equiv_check(*x, *y))) o.fail("R does not commute with a crystal operator");
          ++r_checks;
        }
    }
  }
  std::size_t insertions = 0;
  for (int cells = 0; cells <= 5; ++cells)
    for (const auto& t : verify::straight_tableaux(cells, 3))
      for (int x = 1; x <= 3; ++x) {
        Word xw{x};
        for (int a : skew_word(t)) xw.push_back(a);
        if (!equiv_check(skew_word(column_insert(t, x).tableau), xw, EquivMode::knuth))
          o.fail("insertion word not Knuth equivalent for " + t.str());
        ++insertions;
      }
  summary = std::to_string(classes) + " classes, " + std::to_string(r_checks) + " R checks, " +
            std::to_string(insertions) + " insertions";
  return o;
}

Outcome highest_weight(std::string& summary) {
  Outcome o;
  std::size_t checked = 0;
  for (int rank = 1; rank <= 3; ++rank)
    for (int m = 0; m <= 4; ++m)
      for (const auto& mu : partitions_of(m))
        for (const auto& t : enumerate_ssyt(SkewShape(mu), rank + 1))
          for (const auto& lam : subpartitions(Partition{3, 3, 3})) {
            if (lam.rows() > rank + 1) continue;
            Word me = me_reading(t);
            auto add = add_sequence(lam, me);
            bool member = add.valid && lr_membership(t, lam, *add.partition(), rank).member;
            TensorWord tw = TensorWord(rank, me_reading(highest_tableau(lam))).concat(TensorWord(rank, me));
            if (member != is_highest_weight(tw)) o.fail("mismatch for " + t.str() + " over " + lam.str());
            ++checked;
          }
  summary = std::to_string(checked) + " (T, lambda, n) triples";
  return o;
}

Outcome transport_check(const std::vector<std::pair<SkewTableau, SkewTableau>>& items, std::string& summary) {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& [s, t2] : items) {
    if (s.size() > 6) continue;
    if (!equiv_check(me_reading(s), me_reading(t2), EquivMode::crystal))
      o.fail("ME(S) not crystal equivalent to ME(T2) for " + s.str());
    ++checked;
  }
  summary = std::to_string(checked) + " skew tableaux";
  if (checked == 0) o.fail("nothing checked");
  return o;
}

Outcome lr_triples(std::string& summary) {
  Outcome o;
  std::size_t triples = 0;
  for (int n = 0; n <= 6; ++n)
    for (const auto& nu : partitions_of(n, 4, 4))
      for (const auto& lam : subpartitions(nu))
        for (const auto& mu : partitions_of(nu.size() - lam.size())) {
          auto r = lr_coefficient(lam, mu, nu, true);
          if (!r.routes_agree)
            o.fail("routes disagree for " + lam.str() + ", " + mu.str() + ", " + nu.str());
          ++triples;
        }
  auto spot = lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, true);
  if (spot.coefficient != 2 || !spot.routes_agree) o.fail("c(321; 21, 21) = " + std::to_string(spot.coefficient));
  summary = std::to_string(triples) + " triples, c(321; 21, 21) = " + std::to_string(spot.coefficient);
  return o;
}

Outcome decomposition(std::string& summary) {
  Outcome o;
  std::size_t checked = 0;
  for (int rank = 2; rank <= 3; ++rank) {
    std::map<Partition, std::size_t> dim;
    auto b = [&](const Partition& p) {
      auto it = dim.find(p);
      if (it == dim.end()) it = dim.emplace(p, enumerate_ssyt(SkewShape(p), rank + 1).size()).first;
      return it->second;
    };
    for (int a = 0; a <= 3; ++a)
      for (int c = 0; c <= 3; ++c)
        for (const auto& lam : partitions_of(a, rank))
          for (const auto& mu : partitions_of(c, rank)) {
            std::size_t rhs = 0;
            for (const auto& t : enumerate_ssyt(SkewShape(mu), rank + 1)) {
              auto add = add_sequence(lam, me_reading(t));
              if (add.valid) rhs += b(*add.partition());
            }
            if (b(lam) * b(mu) != rhs) o.fail("n=" + std::to_string(rank) + " " + lam.str() + " x " + mu.str());
            ++checked;
          }
  }
  summary = std::to_string(checked) + " (lambda, mu, n) cases";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome(std::string&)>& run) {
    auto t0 = std::chrono::steady_clock::now();
    std::string summary;
    Outcome o;
    try {
      o = run(summary);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%s criterion %2d %-30s %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", id, name, summary.c_str(), ms,
                o.ok ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  };

  std::vector<std::pair<SkewTableau, SkewTableau>> transport;
  report(1, "round-trip bijection", [&](std::string& s) { return roundtrip(s, transport); });
  report(2, "cardinality identity", cardinality);
  report(3, "permutation specialization", permutations);
  report(4, "rsk bijectivity", rsk_bijection);
  report(5, "column bumping lemma", bumping);
  report(6, "knuth-crystal equivalence", knuth_crystal);
  report(7, "highest-weight membership", highest_weight);
  report(8, "crystal-equivalence transport", [&](std::string& s) { return transport_check(transport, s); });
  report(9, "lr coefficient agreement", lr_triples);
  report(10, "decomposition dimensions", decomposition);
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
