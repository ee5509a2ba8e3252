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

#include "lrpk/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace lrpk::verify {

using nlohmann::json;

namespace {

// Records the first counterexample of a suite.
struct Failures {
  bool ok = true;
  json first = nullptr;

  void fail(json what) {
    if (ok) first = std::move(what);
    ok = false;
  }
};

SuiteResult finish(std::string name, json payload, const Failures& f) {
  payload["counterexample"] = f.first;
  return {std::move(name), f.ok, std::move(payload)};
}

// Caches B(mu)^nu_lambda per (mu, lambda, nu, rank).
class LrCache {
public:
  explicit LrCache(const Limits& limits) : limits_(limits) {}

  const std::vector<SkewTableau>& get(const Partition& mu, const Partition& lambda, const Partition& nu, int rank) {
    auto key = std::make_tuple(mu, lambda, nu, rank);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, enumerate_lr_crystal(mu, lambda, nu, rank, limits_)).first;
    return it->second;
  }

private:
  Limits limits_;
  std::map<std::tuple<Partition, Partition, Partition, int>, std::vector<SkewTableau>> cache_;
};

std::vector<CrystalPair> cached_pairs(LrCache& cache, const CorrespondenceContext& ctx) {
  std::vector<CrystalPair> out;
  for (const Partition& mu : partitions_of(ctx.size(), ctx.rank() + 1)) {
    const auto& left = cache.get(mu, ctx.lambda1(), ctx.nu1(), ctx.rank());
    if (left.empty()) continue;
    const auto& right = cache.get(mu, ctx.lambda2(), ctx.nu2(), ctx.rank());
    for (const auto& a : left)
      for (const auto& b : right) out.push_back({a, b});
  }
  return out;
}

json context_json(const CorrespondenceContext& ctx) { return io::to_json(ctx); }

std::map<int, std::vector<SkewShape>> family_by_size(const Options& o) {
  std::map<int, std::vector<SkewShape>> by;
  for (auto& s : skew_family(o.box, o.max_outer, o.max_cells)) by[s.size()].push_back(std::move(s));
  return by;
}

std::vector<Word> all_words(int length, int alphabet) {
  std::vector<Word> out;
  Word w(static_cast<std::size_t>(length), 1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == w.size()) {
      out.push_back(w);
      return;
    }
    for (int a = 1; a <= alphabet; ++a) {
      w[k] = a;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"roundtrip",    "cardinality",  "rsk-bijection", "bumping-lemma",
                                              "knuth-crystal", "lr-highest", "all"};
  return names;
}

std::vector<SkewShape> skew_family(int box, int max_outer, int max_cells) {
  std::vector<SkewShape> out;
  for (int size = 0; size <= max_outer; ++size)
    for (const Partition& nu : partitions_of(size, box, box))
      for (const Partition& lambda : subpartitions(nu))
        if (size - lambda.size() <= max_cells) out.emplace_back(nu, lambda);
  return out;
}

SkewShape staircase_difference(int n) {
  std::vector<int> outer;
  std::vector<int> inner;
  for (int k = n; k >= 1; --k) {
    outer.push_back(k);
    inner.push_back(k - 1);
  }
  return SkewShape(Partition(outer), Partition(inner));
}

std::vector<TwoRowedArray> lex_arrays(int n, int m) {
  // Column-type order on pairs: top ascending, then bottom descending.
  std::vector<std::pair<int, int>> letters;
  for (int u = 1; u <= n; ++u)
    for (int v = n; v >= 1; --v) letters.emplace_back(u, v);
  std::vector<TwoRowedArray> out;
  TwoRowedArray cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      cur.top.push_back(letters[i].first);
      cur.bottom.push_back(letters[i].second);
      rec(i, left - 1);
      cur.top.pop_back();
      cur.bottom.pop_back();
    }
  };
  rec(0, m);
  return out;
}

std::vector<SkewTableau> straight_tableaux(int cells, int max_entry, const Limits& limits) {
  std::vector<SkewTableau> out;
  for (const Partition& mu : partitions_of(cells, max_entry))
    for (auto& t : enumerate_ssyt(SkewShape(mu), max_entry, limits)) out.push_back(std::move(t));
  return out;
}

SuiteResult run_roundtrip(const Options& o) {
  Failures f;
  LrCache cache(o.limits);
  std::uint64_t contexts = 0;
  std::uint64_t pictures = 0;
  std::uint64_t pairs = 0;
  std::uint64_t transport = 0;
  std::set<std::pair<Word, Word>> transport_seen;

  for (const auto& [n, shapes] : family_by_size(o)) {
    for (const SkewShape& k1 : shapes) {
      for (const SkewShape& k2 : shapes) {
        const CorrespondenceContext ctx(k1, k2);
        ++contexts;
        try {
          for (const Picture& p : enumerate_pictures(k1, k2, o.limits)) {
            ++pictures;
            const SkewTableau s = s1_picture_to_skewtab(ctx, p);
            const CrystalPair pair = full_s(ctx, p);
            const Picture back = full_c(ctx, pair);
            if (back != p)
              f.fail({{"check", "C(S(f)) = f"}, {"context", context_json(ctx)}, {"picture", io::to_json(p)},
                      {"got", io::to_json(back)}});
            if (n <= o.transport_cells) {
              const Word a = me_reading(s);
              const Word b = me_reading(pair.second);
              if (transport_seen.insert({a, b}).second) {
                ++transport;
                if (!equiv_check(a, b, EquivMode::crystal, o.limits))
                  f.fail({{"check", "ME(S) ~c ME(T2)"}, {"context", context_json(ctx)}, {"skew", io::to_json(s)},
                          {"t2", io::to_json(pair.second)}});
              }
            }
          }
          for (const CrystalPair& pair : cached_pairs(cache, ctx)) {
            ++pairs;
            const Picture p = full_c(ctx, pair);
            const CrystalPair back = full_s(ctx, p);
            if (back != pair)
              f.fail({{"check", "S(C(T)) = T"}, {"context", context_json(ctx)}, {"pair", io::to_json(pair)},
                      {"got", io::to_json(back)}});
          }
        } catch (const InternalError& e) {
          f.fail({{"check", "stage membership"}, {"context", context_json(ctx)}, {"error", e.what()}});
        }
      }
    }
  }
  return finish("roundtrip",
                {{"contexts", contexts},
                 {"pictures_checked", pictures},
                 {"pairs_checked", pairs},
                 {"transport_checked", transport}},
                f);
}

SuiteResult run_cardinality(const Options& o) {
  Failures f;
  LrCache cache(o.limits);
  std::uint64_t contexts = 0;
  std::uint64_t total_pictures = 0;
  std::map<std::pair<SkewShape, SkewShape>, std::uint64_t> picture_counts;

  for (const auto& [n, shapes] : family_by_size(o)) {
    for (const SkewShape& k1 : shapes) {
      for (const SkewShape& k2 : shapes) {
        const CorrespondenceContext ctx(k1, k2);
        ++contexts;
        const auto key = std::make_pair(k1, k2);
        const std::uint64_t lhs = count_pictures(k1, k2, o.limits);
        picture_counts[key] = lhs;
        std::uint64_t rhs = 0;
        for (const Partition& mu : partitions_of(n, ctx.rank() + 1))
          rhs += cache.get(mu, ctx.lambda1(), ctx.nu1(), ctx.rank()).size() *
                 cache.get(mu, ctx.lambda2(), ctx.nu2(), ctx.rank()).size();
        total_pictures += lhs;
        if (lhs != rhs)
          f.fail({{"check", "|P(k1,k2)| = sum_mu |B1|*|B2|"},
                  {"context", context_json(ctx)},
                  {"pictures", lhs},
                  {"crystal_pairs", rhs}});
      }
    }
  }

  std::uint64_t symmetric = 0;
  for (const auto& [key, count] : picture_counts) {
    const auto it = picture_counts.find({key.second, key.first});
    if (it == picture_counts.end()) continue;
    ++symmetric;
    if (it->second != count)
      f.fail({{"check", "|P(k1,k2)| = |P(k2,k1)|"}, {"kappa1", io::to_json(key.first)}, {"kappa2", io::to_json(key.second)}});
  }

  json staircase = json::array();
  std::uint64_t factorial = 1;
  for (int n = 1; n <= o.staircase_max; ++n) {
    factorial *= static_cast<std::uint64_t>(n);
    const SkewShape k = staircase_difference(n);
    const std::uint64_t c = count_pictures(k, k, o.limits);
    staircase.push_back(c);
    if (c != factorial) f.fail({{"check", "staircase n!"}, {"n", n}, {"pictures", c}});
  }

  std::uint64_t triples = 0;
  for (int size = 0; size <= o.max_outer; ++size) {
    for (const Partition& nu : partitions_of(size, o.box, o.box)) {
      for (const Partition& lambda : subpartitions(nu)) {
        for (const Partition& mu : partitions_of(size - lambda.size())) {
          ++triples;
          const LrCoefficientReport r = lr_coefficient(lambda, mu, nu, true, o.limits);
          if (!r.routes_agree)
            f.fail({{"check", "LR routes agree"},
                    {"lambda", io::to_json(lambda)},
                    {"mu", io::to_json(mu)},
                    {"nu", io::to_json(nu)},
                    {"crystal", r.coefficient},
                    {"pictures", *r.pictures},
                    {"skew_tableaux", *r.skew_tableaux}});
        }
      }
    }
  }

  return finish("cardinality",
                {{"contexts", contexts},
                 {"pictures_counted", total_pictures},
                 {"symmetry_checked", symmetric},
                 {"staircase", staircase},
                 {"lr_triples_checked", triples}},
                f);
}

SuiteResult run_rsk_bijection(const Options& o) {
  Failures f;
  json payload = json::object();
  for (auto [n, m] : {std::pair{3, 3}, std::pair{2, 4}}) {
    const auto arrays = lex_arrays(n, m);
    std::set<RskPair> images;
    for (const auto& w : arrays) {
      const RskPair pq = rsk_forward(w);
      if (!validate_semistandard(pq.P) || !validate_semistandard(pq.Q) || pq.P.shape() != pq.Q.shape())
        f.fail({{"check", "image is a same-shaped semistandard pair"}, {"array", io::to_json(w)}});
      if (rsk_inverse(pq.P, pq.Q) != w)
        f.fail({{"check", "inverse(forward(w)) = w"}, {"array", io::to_json(w)}});
      if (!images.insert(pq).second) f.fail({{"check", "images distinct"}, {"array", io::to_json(w)}});
    }
    std::uint64_t targets = 0;
    bool all_hit = true;
    for (const Partition& mu : partitions_of(m, n)) {
      const auto tabs = enumerate_ssyt(SkewShape(mu), n, o.limits);
      for (const auto& p : tabs) {
        for (const auto& q : tabs) {
          ++targets;
          if (!images.contains({p, q})) {
            all_hit = false;
            f.fail({{"check", "surjective"}, {"P", io::to_json(p)}, {"Q", io::to_json(q)}});
          }
        }
      }
    }
    if (targets != images.size()) f.fail({{"check", "|W| = |P|"}, {"arrays", arrays.size()}, {"pairs", targets}});
    payload["W[" + std::to_string(n) + ";" + std::to_string(m) + "]"] = {
        {"arrays", arrays.size()}, {"distinct_images", images.size()}, {"target_pairs", targets}, {"all_hit", all_hit}};
  }
  return finish("rsk-bijection", payload, f);
}

SuiteResult run_bumping_lemma(const Options& o) {
  Failures f;
  std::mt19937_64 rng(o.seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::uint64_t smaller_first = 0;
  for (int it = 0; it < o.instances; ++it) {
    Word seed_word(static_cast<std::size_t>(uniform(0, o.random_cells)));
    for (int& x : seed_word) x = uniform(1, o.random_max_entry);
    const SkewTableau t = insertion_tableau(seed_word);
    const int x = uniform(1, o.random_max_entry);
    const int x2 = uniform(1, o.random_max_entry);
    const BumpOutcome first = column_insert(t, x);
    const BumpOutcome second = column_insert(first.tableau, x2);
    const Cell a = first.new_cell;   // New(x)
    const Cell b = second.new_cell;  // New(x')
    bool holds;
    if (x < x2) {
      ++smaller_first;
      holds = b.col <= a.col && b.row > a.row;
    } else {
      holds = a.col < b.col && a.row >= b.row;
    }
    if (!holds)
      f.fail({{"check", x < x2 ? "x < x' => New(x') weakly left, strictly below"
                               : "x >= x' => New(x) strictly left, weakly below"},
              {"tableau", io::to_json(t)},
              {"x", x},
              {"x_prime", x2}});
  }
  return finish("bumping-lemma",
                {{"instances", o.instances}, {"seed", o.seed}, {"increasing_pairs", smaller_first}}, f);
}

SuiteResult run_knuth_crystal(const Options& o) {
  Failures f;
  std::uint64_t words = 0;
  std::uint64_t classes = 0;
  std::uint64_t commutations = 0;
  std::uint64_t insertions = 0;
  std::uint64_t new_box_swaps = 0;

  for (int len = 0; len <= o.word_length; ++len) {
    std::set<Word> covered;
    std::set<SkewTableau> class_tableaux;
    for (const Word& w : all_words(len, o.alphabet)) {
      ++words;
      if (covered.contains(w)) continue;
      ++classes;
      const auto knuth = equivalence_class(w, EquivMode::knuth, o.limits);
      const Word rw(w.rbegin(), w.rend());
      const auto crystal = equivalence_class(rw, EquivMode::crystal, o.limits);
      std::set<Word> reversed;
      for (const Word& v : knuth) reversed.insert(Word(v.rbegin(), v.rend()));
      if (reversed != std::set<Word>(crystal.begin(), crystal.end()))
        f.fail({{"check", "Knuth class reversed = crystal class"}, {"word", w}});
      const SkewTableau p = insertion_tableau(w);
      if (!class_tableaux.insert(p).second) f.fail({{"check", "distinct classes have distinct tableaux"}, {"word", w}});
      for (const Word& v : knuth) {
        covered.insert(v);
        if (insertion_tableau(v) != p) f.fail({{"check", "Knuth class shares one insertion tableau"}, {"word", v}});
      }
    }
  }

  // R commutes with the crystal operators up to crystal equivalence.
  for (int len = 3; len <= o.word_length; ++len) {
    for (const Word& w : all_words(len, o.alphabet)) {
      const TensorWord b(o.alphabet - 1, w);
      for (std::size_t pos = 0; pos + 3 <= w.size(); ++pos) {
        const TensorWord b2 = combinatorial_r(b, pos);
        for (int k = 1; k <= b.rank(); ++k) {
          for (auto dir : {CrystalDirection::raise, CrystalDirection::lower}) {
            ++commutations;
            const auto x = apply_crystal_op(b, k, dir);
            const auto y = apply_crystal_op(b2, k, dir);
            const bool good = (!x && !y) || (x && y && equiv_check(*x, *y, o.limits));
            if (!good) f.fail({{"check", "R commutes with e/f"}, {"word", w}, {"window", pos}, {"k", k}});
          }
        }
        // Sequential column bumping of b and of R(b) gives the same tableau.
        // When R exchanges the last two letters of its window (the fixed
        // letter is inserted first), the exchanged letters' new boxes swap.
        // When it exchanges the first two, the intermediate shapes differ and
        // only the window's boxes agree as a set.
        if (b2 != b) {
          ++new_box_swaps;
          auto grow = [](const Word& letters) {
            SkewTableau t;
            std::vector<Cell> boxes;
            for (int x : letters) {
              auto out = column_insert(t, x);
              t = std::move(out.tableau);
              boxes.push_back(out.new_cell);
            }
            return std::make_pair(t, boxes);
          };
          auto [t1, boxes1] = grow(b.letters());
          auto [t2, boxes2] = grow(b2.letters());
          const bool last_two = b.letters()[pos] == b2.letters()[pos];
          if (last_two) {
            std::swap(boxes2[pos + 1], boxes2[pos + 2]);
          } else {
            std::sort(boxes1.begin() + static_cast<std::ptrdiff_t>(pos), boxes1.begin() + static_cast<std::ptrdiff_t>(pos) + 3);
            std::sort(boxes2.begin() + static_cast<std::ptrdiff_t>(pos), boxes2.begin() + static_cast<std::ptrdiff_t>(pos) + 3);
          }
          if (t1 != t2 || boxes1 != boxes2)
            f.fail({{"check", "R move keeps the tableau and moves new boxes with their letters"},
                     {"word", w},
                     {"window", pos}});
        }
      }
    }
  }

  for (int cells = 0; cells <= o.insertion_cells; ++cells) {
    for (const SkewTableau& t : straight_tableaux(cells, o.alphabet, o.limits)) {
      for (int x = 1; x <= o.alphabet; ++x) {
        ++insertions;
        const Word lhs = skew_word(column_insert(t, x).tableau);
        const Word rhs = concat(Word{x}, skew_word(t));
        if (!equiv_check(lhs, rhs, EquivMode::knuth, o.limits))
          f.fail({{"check", "w(x -> T) ~k x.w(T)"}, {"tableau", io::to_json(t)}, {"x", x}});
      }
    }
  }

  return finish("knuth-crystal",
                {{"words_checked", words},
                 {"classes", classes},
                 {"r_commutation_checked", commutations},
                 {"r_new_box_swaps_checked", new_box_swaps},
                 {"insertions_checked", insertions}},
                f);
}

SuiteResult run_lr_highest(const Options& o) {
  Failures f;
  std::uint64_t highest = 0;
  for (int rank = 1; rank <= o.highest_rank; ++rank) {
    std::vector<Partition> lambdas;
    for (int size = 0; size <= o.highest_box * o.highest_box; ++size)
      for (const Partition& l : partitions_of(size, std::min(o.highest_box, rank + 1), o.highest_box)) lambdas.push_back(l);
    for (int cells = 0; cells <= o.highest_cells; ++cells) {
      for (const SkewTableau& t : straight_tableaux(cells, rank + 1, o.limits)) {
        const Word me = me_reading(t);
        for (const Partition& lambda : lambdas) {
          ++highest;
          const AdditionResult add = add_sequence(lambda, me);
          const TensorWord full(rank, concat(me_reading(highest_tableau(lambda)), me));
          const bool hw = is_highest_weight(full);
          const bool member = add.valid && lr_membership(t, lambda, *add.partition(), rank).member;
          if (add.valid != hw || member != hw || satisfies_prefix_condition(full) != hw)
            f.fail({{"check", "addition condition <=> highest weight"},
                    {"rank", rank},
                    {"tableau", io::to_json(t)},
                    {"lambda", io::to_json(lambda)}});
        }
      }
    }
  }

  std::uint64_t decompositions = 0;
  for (int rank : {2, 3}) {
    std::vector<Partition> shapes;
    for (int size = 0; size <= o.decomposition_cells; ++size)
      for (const Partition& p : partitions_of(size, rank)) shapes.push_back(p);
    auto dim = [&](const Partition& p) { return enumerate_ssyt(SkewShape(p), rank + 1, o.limits).size(); };
    for (const Partition& lambda : shapes) {
      for (const Partition& mu : shapes) {
        ++decompositions;
        std::uint64_t sum = 0;
        for (const SkewTableau& t : enumerate_ssyt(SkewShape(mu), rank + 1, o.limits)) {
          const AdditionResult add = add_sequence(lambda, me_reading(t));
          if (add.valid) sum += dim(*add.partition());
        }
        const std::uint64_t product = dim(lambda) * dim(mu);
        if (sum != product)
          f.fail({{"check", "|B(lambda)||B(mu)| = sum |B(lambda[ME(T)])|"},
                  {"rank", rank},
                  {"lambda", io::to_json(lambda)},
                  {"mu", io::to_json(mu)},
                  {"product", product},
                  {"sum", sum}});
      }
    }
  }

  // LR counts do not depend on the rank once it covers the row counts.
  std::uint64_t stability = 0;
  for (int size = 0; size <= std::min(o.max_outer, 5); ++size) {
    for (const Partition& nu : partitions_of(size, o.box, o.box)) {
      for (const Partition& lambda : subpartitions(nu)) {
        for (const Partition& mu : partitions_of(size - lambda.size(), o.box)) {
          ++stability;
          const int n = default_lr_rank(lambda, mu, nu);
          if (enumerate_lr_crystal(mu, lambda, nu, n, o.limits).size() !=
              enumerate_lr_crystal(mu, lambda, nu, n + 1, o.limits).size())
            f.fail({{"check", "rank stability"}, {"lambda", io::to_json(lambda)}, {"mu", io::to_json(mu)}, {"nu", io::to_json(nu)}});
        }
      }
    }
  }

  return finish("lr-highest",
                {{"highest_weight_checked", highest},
                 {"decompositions_checked", decompositions},
                 {"rank_stability_checked", stability}},
                f);
}

SuiteResult run_suite(const std::string& name, const Options& opts) {
  if (name == "roundtrip") return run_roundtrip(opts);
  if (name == "cardinality") return run_cardinality(opts);
  if (name == "rsk-bijection") return run_rsk_bijection(opts);
  if (name == "bumping-lemma") return run_bumping_lemma(opts);
  if (name == "knuth-crystal") return run_knuth_crystal(opts);
  if (name == "lr-highest") return run_lr_highest(opts);
  if (name == "all") {
    SuiteResult all{"all", true, json::object()};
    for (const auto& n : suite_names()) {
      if (n == "all") continue;
      SuiteResult r = run_suite(n, opts);
      all.ok = all.ok && r.ok;
      all.payload[n] = {{"ok", r.ok}, {"payload", std::move(r.payload)}};
    }
    return all;
  }
  throw InvalidInput("unknown verification suite \"" + name + "\"");
}

}  // namespace lrpk::verify
