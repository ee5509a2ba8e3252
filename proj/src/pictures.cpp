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

#include "lrpk/pictures.hpp"

#include <algorithm>
#include <functional>

namespace lrpk {

Cell Picture::operator()(Cell c) const {
  const auto cells = domain.j_order_cells();
  const auto it = std::find(cells.begin(), cells.end(), c);
  if (it == cells.end() || images.size() != cells.size()) throw InvalidInput("cell is not in the picture's domain");
  return images[static_cast<std::size_t>(it - cells.begin())];
}

Picture Picture::inverse() const {
  const auto from = domain.j_order_cells();
  const auto to = codomain.j_order_cells();
  if (from.size() != images.size() || to.size() != images.size()) throw InvalidInput("picture is not a bijection");
  Picture inv{codomain, domain, std::vector<Cell>(to.size(), Cell{0, 0})};
  for (std::size_t k = 0; k < images.size(); ++k) {
    const auto it = std::find(to.begin(), to.end(), images[k]);
    if (it == to.end()) throw InvalidInput("picture image is outside the codomain");
    Cell& slot = inv.images[static_cast<std::size_t>(it - to.begin())];
    if (slot.row != 0) throw InvalidInput("picture is not injective");
    slot = from[k];
  }
  return inv;
}

bool is_pj_standard(std::span<const Cell> cells, std::span<const Cell> images) {
  if (cells.size() != images.size()) return false;
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = 0; b < cells.size(); ++b)
      if (leq_p(cells[a], cells[b]) && !leq_j(images[a], images[b])) return false;
  return true;
}

bool validate_picture(const Picture& p) {
  const auto from = p.domain.j_order_cells();
  const auto to = p.codomain.j_order_cells();
  if (from.size() != p.images.size() || to.size() != p.images.size()) return false;
  std::vector<Cell> sorted = p.images;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Cell> target = to;
  std::sort(target.begin(), target.end());
  if (sorted != target) return false;
  if (!is_pj_standard(from, p.images)) return false;
  const Picture inv = p.inverse();
  return is_pj_standard(to, inv.images);
}

namespace {

template <class Visit>
void backtrack(const SkewShape& kappa1, const SkewShape& kappa2, const Limits& limits, Visit&& visit) {
  if (kappa1.size() != kappa2.size())
    throw InvalidInput("pictures need equal sizes, got " + std::to_string(kappa1.size()) + " and " +
                       std::to_string(kappa2.size()));
  if (kappa1.size() > limits.picture_cells)
    throw BoundExceeded("picture enumeration limited to " + std::to_string(limits.picture_cells) + " cells");

  const auto from = kappa1.j_order_cells();
  const auto to = kappa2.j_order_cells();
  const std::size_t n = from.size();
  std::vector<Cell> images(n);
  std::vector<char> used(n, 0);

  // Checking each new pair against every assigned pair in both directions
  // covers all pairs once the assignment is complete.
  auto compatible = [&](std::size_t k, Cell d) {
    const Cell c = from[k];
    for (std::size_t m = 0; m < k; ++m) {
      const Cell c2 = from[m];
      const Cell d2 = images[m];
      if (leq_p(c2, c) && !leq_j(d2, d)) return false;
      if (leq_p(c, c2) && !leq_j(d, d2)) return false;
      if (leq_p(d2, d) && !leq_j(c2, c)) return false;
      if (leq_p(d, d2) && !leq_j(c, c2)) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      visit(images);
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || !compatible(k, to[t])) continue;
      used[t] = 1;
      images[k] = to[t];
      rec(k + 1);
      used[t] = 0;
    }
  };
  rec(0);
}

}  // namespace

std::vector<Picture> enumerate_pictures(const SkewShape& kappa1, const SkewShape& kappa2, const Limits& limits) {
  std::vector<Picture> out;
  backtrack(kappa1, kappa2, limits, [&](const std::vector<Cell>& images) {
    Picture p{kappa1, kappa2, images};
    if (!validate_picture(p)) throw InternalError("picture enumeration produced an invalid picture");
    out.push_back(std::move(p));
  });
  return out;
}

std::size_t count_pictures(const SkewShape& kappa1, const SkewShape& kappa2, const Limits& limits) {
  std::size_t count = 0;
  backtrack(kappa1, kappa2, limits, [&](const std::vector<Cell>&) { ++count; });
  return count;
}

}  // namespace lrpk
