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

// The bijection between pictures P(kappa1, kappa2) and pairs of
// Littlewood-Richardson crystals, factored through LR skew tableaux S and
// lexicographic two-rowed arrays W:
//
//   picture --s1--> skew tableau --s2--> array --s3--> (T1, T2)
//   picture <--c1-- skew tableau <--c2-- array <--c3-- (T1, T2)
//
// Each stage checks that its output lies in the target set and throws
// InternalError otherwise; inputs outside the source set throw InvalidInput.

#pragma once

#include <cstdint>
#include <optional>

#include "lrpk/crystal.hpp"
#include "lrpk/pictures.hpp"
#include "lrpk/rsk.hpp"

namespace lrpk {

/// kappa_i = nu_i \ lambda_i, so lambda_i and nu_i are the inner and outer
/// shapes.  The rank defaults to max(rows(nu1), rows(nu2)).
class CorrespondenceContext {
public:
  CorrespondenceContext(SkewShape kappa1, SkewShape kappa2, std::optional<int> rank = std::nullopt);

  const SkewShape& kappa1() const noexcept { return kappa1_; }
  const SkewShape& kappa2() const noexcept { return kappa2_; }
  const Partition& lambda1() const noexcept { return kappa1_.inner(); }
  const Partition& lambda2() const noexcept { return kappa2_.inner(); }
  const Partition& nu1() const noexcept { return kappa1_.outer(); }
  const Partition& nu2() const noexcept { return kappa2_.outer(); }
  int rank() const noexcept { return rank_; }
  int size() const noexcept { return kappa1_.size(); }

private:
  SkewShape kappa1_;
  SkewShape kappa2_;
  int rank_;
};

/// Same-shaped straight tableaux (T1, T2) with T1 in B(mu)^{nu1}_{lambda1}
/// and T2 in B(mu)^{nu2}_{lambda2}.
struct CrystalPair {
  SkewTableau first;
  SkewTableau second;

  const Partition& mu() const noexcept { return first.shape().outer(); }
  friend bool operator==(const CrystalPair&, const CrystalPair&) = default;
  friend auto operator<=>(const CrystalPair&, const CrystalPair&) = default;
};

bool in_s_set(const CorrespondenceContext& ctx, const SkewTableau& s);
bool in_w_set(const CorrespondenceContext& ctx, const TwoRowedArray& w);
bool is_crystal_pair(const CorrespondenceContext& ctx, const CrystalPair& pair);

SkewTableau s1_picture_to_skewtab(const CorrespondenceContext& ctx, const Picture& f);
TwoRowedArray s2_skewtab_to_array(const CorrespondenceContext& ctx, const SkewTableau& s);
CrystalPair s3_array_to_pair(const CorrespondenceContext& ctx, const TwoRowedArray& w);

TwoRowedArray c3_pair_to_array(const CorrespondenceContext& ctx, const CrystalPair& pair);
SkewTableau c2_array_to_skewtab(const CorrespondenceContext& ctx, const TwoRowedArray& w);
Picture c1_skewtab_to_picture(const CorrespondenceContext& ctx, const SkewTableau& s);

CrystalPair full_s(const CorrespondenceContext& ctx, const Picture& f);
Picture full_c(const CorrespondenceContext& ctx, const CrystalPair& pair);

/// Every element of the disjoint union over mu of B(mu)^{nu1}_{lambda1} x
/// B(mu)^{nu2}_{lambda2}, grouped by mu in partitions_of order.
std::vector<CrystalPair> enumerate_crystal_pairs(const CorrespondenceContext& ctx, const Limits& limits = {});

/// Sum over mu of |B(mu)^{nu1}_{lambda1}| * |B(mu)^{nu2}_{lambda2}|.
std::uint64_t crystal_pair_count(const CorrespondenceContext& ctx, const Limits& limits = {});

struct LrCoefficientReport {
  std::uint64_t coefficient = 0;          // |B(mu)^nu_lambda|
  std::optional<std::uint64_t> pictures;  // |P(mu, nu \ lambda)|
  std::optional<std::uint64_t> skew_tableaux;  // LR skew tableaux of shape nu \ lambda, content mu
  bool routes_agree = true;
};

/// c^nu_{lambda mu}.  With cross_check the picture count and the classical
/// skew-tableau count are computed too and compared.
LrCoefficientReport lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu,
                                   bool cross_check = false, const Limits& limits = {});

}  // namespace lrpk
