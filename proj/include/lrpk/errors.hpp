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

#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace lrpk {

/// Malformed or out-of-contract input supplied by a caller.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration or BFS closure would exceed its configured size.
class BoundExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A stage produced an object outside the set it is proven to land in.
/// Always an implementation defect, never a user error.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Size limits for the brute-force parts of the engine.
struct Limits {
  int ssyt_cells = 12;     // enumerate_ssyt / enumerate_lr_crystal
  int picture_cells = 8;   // enumerate_pictures
  int bfs_length = 8;      // equiv_check closures

  /// Defaults, with LRPK_MAX_CELLS overriding both cell bounds when set.
  static Limits from_env() {
    Limits l;
    if (const char* s = std::getenv("LRPK_MAX_CELLS"); s != nullptr && *s != '\0') {
      char* end = nullptr;
      long v = std::strtol(s, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0 && v < 64) {
        l.ssyt_cells = static_cast<int>(v);
        l.picture_cells = static_cast<int>(v);
      }
    }
    return l;
  }
};

}  // namespace lrpk
