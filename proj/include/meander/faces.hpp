// Copyright 2026 The meander Authors.
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

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "meander/combinatorics.hpp"
#include "meander/shape.hpp"

namespace meander {

/// A copy of `shape` translated so that its leftmost vertex sits at `start`.
struct Placement {
  const Shape* shape;
  int start;

  int end() const { return start + shape->base_size() - 1; }
};

enum class PlacementConflict { none, shared_vertex, upper_crossing, lower_crossing };

inline const char* conflict_name(PlacementConflict c) {
  switch (c) {
    case PlacementConflict::none: return "none";
    case PlacementConflict::shared_vertex: return "shared vertex";
    case PlacementConflict::upper_crossing: return "upper arcs cross";
    case PlacementConflict::lower_crossing: return "lower arcs cross";
  }
  return "unknown";
}

/// Free-vertex counts per face of one or more placed loops.
///
/// A free vertex is a vertex of some placement's base that lies on no loop.
/// Its face in a half-plane is the innermost arc enclosing it (keyed by that
/// arc's endpoints), or the unbounded face when no arc encloses it. Bounded
/// faces with no free vertex are kept with count 0.
struct FaceDecomposition {
  int base_left = 0;
  int base_right = 0;
  std::vector<int> free_vertices;
  std::map<Arc, int> upper_bounded;
  std::map<Arc, int> lower_bounded;
  int upper_unbounded = 0;
  int lower_unbounded = 0;

  bool bounded_faces_even() const {
    auto even = [](const std::map<Arc, int>& faces) {
      return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.second % 2 == 0; });
    };
    return even(upper_bounded) && even(lower_bounded);
  }

  /// Product of Cat_{v/2} over every bounded face; requires even counts.
  BigInt catalan_product() const {
    BigInt k = 1;
    for (const auto* faces : {&upper_bounded, &lower_bounded})
      for (const auto& [arc, count] : *faces) k *= catalan(count / 2);
    return k;
  }
};

namespace detail {

inline std::optional<FaceDecomposition> decompose(std::span<const Placement> placements,
                                                  PlacementConflict& conflict) {
  conflict = PlacementConflict::none;
  if (placements.empty()) throw std::invalid_argument("face_decomposition: no placements");
  FaceDecomposition out;
  out.base_left = placements.front().start;
  out.base_right = placements.front().end();
  for (const auto& p : placements) {
    if (p.start < 1) throw std::invalid_argument("face_decomposition: placement starts before vertex 1");
    out.base_left = std::min(out.base_left, p.start);
    out.base_right = std::max(out.base_right, p.end());
  }
  const int width = out.base_right - out.base_left + 1;
  auto at = [&](int v) { return static_cast<std::size_t>(v - out.base_left); };
  std::vector<int> up(static_cast<std::size_t>(width), 0);
  std::vector<int> lo(static_cast<std::size_t>(width), 0);
  std::vector<char> in_base(static_cast<std::size_t>(width), 0);
  for (const auto& p : placements) {
    const int shift = p.start - 1;
    for (int v = p.start; v <= p.end(); ++v) in_base[at(v)] = 1;
    for (int s : p.shape->support()) {
      const int v = s + shift;
      if (up[at(v)] != 0) {
        conflict = PlacementConflict::shared_vertex;
        return std::nullopt;
      }
      up[at(v)] = p.shape->upper_partner(s) + shift;
      lo[at(v)] = p.shape->lower_partner(s) + shift;
    }
  }

  auto sweep = [&](const std::vector<int>& partner, std::map<Arc, int>& bounded, int& unbounded) {
    std::vector<Arc> open;
    for (int v = out.base_left; v <= out.base_right; ++v) {
      const int w = partner[at(v)];
      if (w == 0) {
        if (!in_base[at(v)]) continue;
        if (open.empty()) ++unbounded;
        else ++bounded[open.back()];
      } else if (w > v) {
        open.emplace_back(v, w);
        bounded.emplace(Arc{v, w}, 0);
      } else {
        if (open.empty() || open.back() != Arc{w, v}) return false;
        open.pop_back();
      }
    }
    return true;
  };
  if (!sweep(up, out.upper_bounded, out.upper_unbounded)) {
    conflict = PlacementConflict::upper_crossing;
    return std::nullopt;
  }
  if (!sweep(lo, out.lower_bounded, out.lower_unbounded)) {
    conflict = PlacementConflict::lower_crossing;
    return std::nullopt;
  }
  for (int v = out.base_left; v <= out.base_right; ++v)
    if (up[at(v)] == 0 && in_base[at(v)]) out.free_vertices.push_back(v);
  return out;
}

}  // namespace detail

/// Face decomposition, or nullopt when the placements share a vertex or their
/// arcs cross in some half-plane.
inline std::optional<FaceDecomposition> try_face_decomposition(std::span<const Placement> placements,
                                                               PlacementConflict* why = nullptr) {
  PlacementConflict conflict;
  auto result = detail::decompose(placements, conflict);
  if (why) *why = conflict;
  return result;
}

inline FaceDecomposition face_decomposition(std::span<const Placement> placements) {
  PlacementConflict conflict;
  auto result = detail::decompose(placements, conflict);
  if (!result)
    throw std::invalid_argument(std::string("face_decomposition: incompatible placements (") +
                                conflict_name(conflict) + ")");
  return *std::move(result);
}

inline FaceDecomposition face_decomposition(const Shape& shape) {
  const Placement p{&shape, 1};
  return face_decomposition(std::span<const Placement>(&p, 1));
}

}  // namespace meander
