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

#include "lrpk/correspondence.hpp"

#include <algorithm>

namespace lrpk {

CorrespondenceContext::CorrespondenceContext(SkewShape kappa1, SkewShape kappa2, std::optional<int> rank)
    : kappa1_(std::move(kappa1)), kappa2_(std::move(kappa2)) {
  if (kappa1_.size() != kappa2_.size())
    throw InvalidInput("kappa1 and kappa2 must have the same number of cells (" + std::to_string(kappa1_.size()) +
                       " vs " + std::to_string(kappa2_.size()) + ")");
  const int natural = std::max({1, kappa1_.rows(), kappa2_.rows()});
  rank_ = rank.value_or(natural);
  if (rank_ < natural) throw InvalidInput("rank is too small for the context's diagrams");
}

namespace {

bool content_matches(const SkewTableau& t, const Composition& want) { return t.content() == want; }

Composition word_content(const Word& w) {
  Composition c;
  for (int x : w) {
    if (x > static_cast<int>(c.parts.size())) c.parts.resize(static_cast<std::size_t>(x), 0);
    ++c.parts[x - 1];
  }
  return c;
}

bool lr_member(const SkewTableau& t, const Partition& lambda, const Partition& nu, int rank) {
  if (!t.shape().is_straight() || !validate_semistandard(t) || t.max_entry() > rank + 1) return false;
  return lr_membership(t, lambda, nu, rank).member;
}

[[noreturn]] void internal(const std::string& stage, const std::string& what) {
  throw InternalError(stage + ": " + what);
}

}  // namespace

bool in_s_set(const CorrespondenceContext& ctx, const SkewTableau& s) {
  if (s.shape() != ctx.kappa1())
    throw InvalidInput("skew tableau shape " + s.shape().str() + " differs from kappa1 " + ctx.kappa1().str());
  if (!validate_semistandard(s)) return false;
  if (!content_matches(s, row_lengths(ctx.kappa2()))) return false;
  const AdditionResult add = add_sequence(ctx.lambda2(), me_reading(s));
  return add.valid && add.partition() == ctx.nu2();
}

bool in_w_set(const CorrespondenceContext& ctx, const TwoRowedArray& w) {
  if (w.top.size() != static_cast<std::size_t>(ctx.size()) || w.bottom.size() != w.top.size()) return false;
  if (!validate_lex_array(w)) return false;
  for (int x : w.top)
    if (x < 1) return false;
  for (int x : w.bottom)
    if (x < 1) return false;
  if (word_content(w.top) != row_lengths(ctx.kappa1())) return false;
  if (word_content(w.bottom) != row_lengths(ctx.kappa2())) return false;
  const RskPair pq = rsk_forward(w);
  return lr_member(pq.P, ctx.lambda2(), ctx.nu2(), ctx.rank()) && lr_member(pq.Q, ctx.lambda1(), ctx.nu1(), ctx.rank());
}

bool is_crystal_pair(const CorrespondenceContext& ctx, const CrystalPair& pair) {
  if (pair.first.shape() != pair.second.shape()) return false;
  if (pair.first.size() != ctx.size()) return false;
  return lr_member(pair.first, ctx.lambda1(), ctx.nu1(), ctx.rank()) &&
         lr_member(pair.second, ctx.lambda2(), ctx.nu2(), ctx.rank());
}

SkewTableau s1_picture_to_skewtab(const CorrespondenceContext& ctx, const Picture& f) {
  if (f.domain != ctx.kappa1() || f.codomain != ctx.kappa2())
    throw InvalidInput("picture does not map kappa1 to kappa2");
  if (!validate_picture(f)) throw InvalidInput("not a picture");
  std::vector<int> rows_of_images;
  rows_of_images.reserve(f.images.size());
  for (const Cell& d : f.images) rows_of_images.push_back(d.row);
  SkewTableau s = SkewTableau::from_j_order(ctx.kappa1(), rows_of_images);
  if (!in_s_set(ctx, s)) internal("s1", "image " + s.str() + " is not an LR skew tableau");
  return s;
}

TwoRowedArray s2_skewtab_to_array(const CorrespondenceContext& ctx, const SkewTableau& s) {
  if (!in_s_set(ctx, s)) throw InvalidInput("skew tableau " + s.str() + " is not an LR skew tableau for the context");
  TwoRowedArray w;
  for (const Cell& c : ctx.kappa1().j_order_cells()) {
    w.top.push_back(c.row);
    w.bottom.push_back(s.at(c));
  }
  if (!validate_lex_array(w)) internal("s2", "array is not lexicographic");
  return w;
}

CrystalPair s3_array_to_pair(const CorrespondenceContext& ctx, const TwoRowedArray& w) {
  if (!in_w_set(ctx, w)) throw InvalidInput("two-rowed array is not in W(kappa1, kappa2)");
  RskPair pq = rsk_forward(w);
  CrystalPair pair{std::move(pq.Q), std::move(pq.P)};
  if (!is_crystal_pair(ctx, pair)) internal("s3", "tableaux are not a pair of LR crystal elements");
  return pair;
}

TwoRowedArray c3_pair_to_array(const CorrespondenceContext& ctx, const CrystalPair& pair) {
  if (pair.first.shape() != pair.second.shape()) throw InvalidInput("crystal pair tableaux differ in shape");
  if (!is_crystal_pair(ctx, pair)) throw InvalidInput("tableaux are not a pair of LR crystal elements");
  TwoRowedArray w = rsk_inverse(pair.second, pair.first);
  if (!in_w_set(ctx, w)) internal("c3", "array is not in W(kappa1, kappa2)");
  return w;
}

SkewTableau c2_array_to_skewtab(const CorrespondenceContext& ctx, const TwoRowedArray& w) {
  if (!in_w_set(ctx, w)) throw InvalidInput("two-rowed array is not in W(kappa1, kappa2)");
  SkewTableau s = SkewTableau::from_j_order(ctx.kappa1(), w.bottom);
  if (!validate_semistandard(s)) internal("c2", "filling " + s.str() + " is not semistandard");
  if (!in_s_set(ctx, s)) internal("c2", "filling " + s.str() + " is not an LR skew tableau");
  return s;
}

Picture c1_skewtab_to_picture(const CorrespondenceContext& ctx, const SkewTableau& s) {
  if (!in_s_set(ctx, s)) throw InvalidInput("skew tableau " + s.str() + " is not an LR skew tableau for the context");
  Picture f{ctx.kappa1(), ctx.kappa2(), {}};
  for (const Cell& c : ctx.kappa1().j_order_cells()) {
    const int k = s.at(c);
    f.images.push_back({k, ctx.lambda2()[static_cast<std::size_t>(k - 1)] + p_index(s, c)});
  }
  if (!validate_picture(f)) internal("c1", "map is not a picture");
  return f;
}

CrystalPair full_s(const CorrespondenceContext& ctx, const Picture& f) {
  return s3_array_to_pair(ctx, s2_skewtab_to_array(ctx, s1_picture_to_skewtab(ctx, f)));
}

Picture full_c(const CorrespondenceContext& ctx, const CrystalPair& pair) {
  return c1_skewtab_to_picture(ctx, c2_array_to_skewtab(ctx, c3_pair_to_array(ctx, pair)));
}

std::vector<CrystalPair> enumerate_crystal_pairs(const CorrespondenceContext& ctx, const Limits& limits) {
  std::vector<CrystalPair> out;
  for (const Partition& mu : partitions_of(ctx.size(), ctx.rank() + 1)) {
    const auto left = enumerate_lr_crystal(mu, ctx.lambda1(), ctx.nu1(), ctx.rank(), limits);
    if (left.empty()) continue;
    const auto right = enumerate_lr_crystal(mu, ctx.lambda2(), ctx.nu2(), ctx.rank(), limits);
    for (const auto& a : left)
      for (const auto& b : right) out.push_back({a, b});
  }
  return out;
}

std::uint64_t crystal_pair_count(const CorrespondenceContext& ctx, const Limits& limits) {
  std::uint64_t total = 0;
  for (const Partition& mu : partitions_of(ctx.size(), ctx.rank() + 1)) {
    const auto left = enumerate_lr_crystal(mu, ctx.lambda1(), ctx.nu1(), ctx.rank(), limits).size();
    if (left == 0) continue;
    total += left * enumerate_lr_crystal(mu, ctx.lambda2(), ctx.nu2(), ctx.rank(), limits).size();
  }
  return total;
}

LrCoefficientReport lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, bool cross_check,
                                   const Limits& limits) {
  LrCoefficientReport r;
  const bool compatible = lambda.size() + mu.size() == nu.size() && nu.contains(lambda);
  if (compatible)
    r.coefficient = enumerate_lr_crystal(mu, lambda, nu, default_lr_rank(lambda, mu, nu), limits).size();
  if (!cross_check) return r;

  r.pictures = 0;
  r.skew_tableaux = 0;
  if (compatible) {
    const SkewShape target(nu, lambda);
    r.pictures = count_pictures(SkewShape(mu), target, limits);
    // Classical LR rule: fillings of nu \ lambda with content mu whose
    // middle-eastern reading builds mu from the empty diagram.
    const CorrespondenceContext swapped(target, SkewShape(mu));
    std::uint64_t n = 0;
    for (const auto& s : enumerate_ssyt(target, std::max(1, mu.rows()), limits))
      if (in_s_set(swapped, s)) ++n;
    r.skew_tableaux = n;
  }
  r.routes_agree = *r.pictures == r.coefficient && *r.skew_tableaux == r.coefficient;
  return r;
}

}  // namespace lrpk
