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

// Pictures: bijections between skew diagrams that are PJ-standard in both
// directions.

#pragma once

#include <span>
#include <vector>

#include "lrpk/errors.hpp"
#include "lrpk/shapes.hpp"

namespace lrpk {

/// images[k] is the image of the k-th cell of domain.j_order_cells().
struct Picture {
  SkewShape domain;
  SkewShape codomain;
  std::vector<Cell> images;

  /// Image of c; throws InvalidInput when c is not a domain cell.
  Cell operator()(Cell c) const;
  /// The inverse map, stored against the codomain's J-order.  Requires a bijection.
  Picture inverse() const;

  friend bool operator==(const Picture&, const Picture&) = default;
  friend auto operator<=>(const Picture&, const Picture&) = default;
};

/// For every c <=_P c' in `cells`, f(c) <=_J f(c').
bool is_pj_standard(std::span<const Cell> cells, std::span<const Cell> images);

/// Bijective onto the codomain, and both directions PJ-standard.
bool validate_picture(const Picture& p);

/// All pictures from kappa1 to kappa2 by pruned backtracking, ordered
/// lexicographically by image sequence in the codomain's J-order.  Throws
/// InvalidInput on a size mismatch and BoundExceeded above
/// limits.picture_cells.
std::vector<Picture> enumerate_pictures(const SkewShape& kappa1, const SkewShape& kappa2, const Limits& limits = {});

/// Same enumeration, counting only.
std::size_t count_pictures(const SkewShape& kappa1, const SkewShape& kappa2, const Limits& limits = {});

}  // namespace lrpk
