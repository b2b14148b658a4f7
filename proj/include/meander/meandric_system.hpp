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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "meander/combinatorics.hpp"
#include "meander/shape.hpp"

namespace meander {

/// Non-owning view of a meandric system: partner tables of the upper and lower
/// matchings, entry v-1 holding the partner of vertex v.
struct SystemView {
  std::span<const int> upper;
  std::span<const int> lower;

  int size() const { return static_cast<int>(upper.size() / 2); }
  int up(int v) const { return upper[static_cast<std::size_t>(v - 1)]; }
  int lo(int v) const { return lower[static_cast<std::size_t>(v - 1)]; }
};

/// An (upper, lower) pair of non-crossing matchings of [2n], n >= 1.
class MeandricSystem {
 public:
  MeandricSystem(NonCrossingMatching upper, NonCrossingMatching lower)
      : upper_(std::move(upper)), lower_(std::move(lower)) {
    if (upper_.size() != lower_.size())
      throw std::invalid_argument("MeandricSystem: matchings have different sizes");
    if (upper_.size() < 1) throw std::invalid_argument("MeandricSystem: size must be >= 1");
  }

  int size() const { return upper_.size(); }
  const NonCrossingMatching& upper() const { return upper_; }
  const NonCrossingMatching& lower() const { return lower_; }
  SystemView view() const { return {upper_.partners(), lower_.partners()}; }

 private:
  NonCrossingMatching upper_;
  NonCrossingMatching lower_;
};

/// One loop of a meandric system.
struct Component {
  std::vector<int> support;  // sorted ascending

  int left() const { return support.front(); }
  int right() const { return support.back(); }
  int half_length() const { return (right() - left() + 1) / 2; }

  friend bool operator==(const Component&, const Component&) = default;
};

/// Follows upper then lower partners from v until returning to v.
inline Component trace_loop(SystemView sys, int v) {
  if (v < 1 || v > 2 * sys.size()) throw std::out_of_range("trace_loop: vertex out of range");
  Component c;
  int w = v;
  do {
    c.support.push_back(w);
    w = sys.up(w);
    c.support.push_back(w);
    w = sys.lo(w);
  } while (w != v);
  std::sort(c.support.begin(), c.support.end());
  return c;
}

inline Component trace_loop(const MeandricSystem& sys, int v) { return trace_loop(sys.view(), v); }

/// Calls visit(leftmost, loop_vertex_count, rightmost) once per loop, in
/// increasing order of leftmost vertex. `seen` is scratch of size >= 2n.
template <class Visit>
void for_each_loop(SystemView sys, std::vector<char>& seen, Visit&& visit) {
  const int size = 2 * sys.size();
  seen.assign(static_cast<std::size_t>(size) + 1, 0);
  for (int v = 1; v <= size; ++v) {
    if (seen[v]) continue;
    int count = 0;
    int right = v;
    int w = v;
    do {
      seen[w] = 1;
      right = std::max(right, w);
      w = sys.up(w);
      seen[w] = 1;
      right = std::max(right, w);
      w = sys.lo(w);
      count += 2;
    } while (w != v);
    visit(v, count, right);
  }
}

/// Partition of [2n] into loop supports, ordered by leftmost vertex.
inline std::vector<Component> components(SystemView sys) {
  std::vector<Component> out;
  std::vector<char> seen;
  for_each_loop(sys, seen, [&](int left, int, int) { out.push_back(trace_loop(sys, left)); });
  return out;
}

inline std::vector<Component> components(const MeandricSystem& sys) { return components(sys.view()); }

/// True iff a translate of `shape` starting at vertex i is a loop of sys.
///
/// Because a shape is connected, matching every translated support vertex's
/// partners forces the loop through i to be exactly the translate.
inline bool indicator_y(SystemView sys, int i, const Shape& shape) {
  const int offset = i - 1;
  if (i < 1 || offset + shape.base_size() > 2 * sys.size()) return false;
  for (int s : shape.support()) {
    if (sys.up(s + offset) != shape.upper_partner(s) + offset) return false;
    if (sys.lo(s + offset) != shape.lower_partner(s) + offset) return false;
  }
  return true;
}

inline bool indicator_y(const MeandricSystem& sys, int i, const Shape& shape) {
  return indicator_y(sys.view(), i, shape);
}

/// Normalized shape of a component of sys.
inline Shape component_shape(const Component& c, SystemView sys) {
  const int shift = 1 - c.left();
  std::vector<Arc> upper, lower;
  for (int v : c.support) {
    if (sys.up(v) > v) upper.emplace_back(v + shift, sys.up(v) + shift);
    if (sys.lo(v) > v) lower.emplace_back(v + shift, sys.lo(v) + shift);
  }
  return Shape::from_arcs(std::move(upper), std::move(lower));
}

inline Shape component_shape(const Component& c, const MeandricSystem& sys) {
  return component_shape(c, sys.view());
}

/// X_{S,n}: the number of loops of sys whose shape is S. Traces every loop
/// once and shape-checks those with the right vertex count and span.
inline int count_shape(SystemView sys, const Shape& shape, std::vector<char>& seen) {
  const auto loop_size = static_cast<int>(shape.support().size());
  int count = 0;
  for_each_loop(sys, seen, [&](int left, int vertices, int right) {
    if (vertices == loop_size && right - left + 1 == shape.base_size() && indicator_y(sys, left, shape))
      ++count;
  });
  return count;
}

inline int count_shape(SystemView sys, const Shape& shape) {
  std::vector<char> seen;
  return count_shape(sys, shape, seen);
}

inline int count_shape(const MeandricSystem& sys, const Shape& shape) {
  return count_shape(sys.view(), shape);
}

/// Same count as count_shape, as a sum of indicators over start positions.
/// Needs no scratch; rejects most positions on the first partner lookup.
inline int count_shape_by_indicator(SystemView sys, const Shape& shape) {
  int count = 0;
  const int last_start = 2 * sys.size() - shape.base_size() + 1;
  for (int i = 1; i <= last_start; ++i) count += indicator_y(sys, i, shape) ? 1 : 0;
  return count;
}

inline constexpr int kDefaultShapeHalfLengthCap = 5;

/// Every shape of half-length exactly ell.
///
/// Order: supports ascending lexicographically, then upper matching, then
/// lower matching, each in Dyck-word order of its index sequence.
inline std::vector<Shape> enumerate_shapes(int ell, int max_half_length = kDefaultShapeHalfLengthCap) {
  if (ell < 1) throw std::invalid_argument("enumerate_shapes: half-length must be >= 1");
  if (ell > max_half_length)
    throw std::invalid_argument("enumerate_shapes: half-length " + std::to_string(ell) +
                                " exceeds the configured cap " + std::to_string(max_half_length));
  const int last = 2 * ell;
  std::vector<std::vector<int>> supports;
  std::vector<int> current{1};
  auto extend = [&](auto&& self) -> void {
    const int tail = current.back();
    if (tail == last) {
      supports.push_back(current);
      return;
    }
    for (int next = tail + 1; next <= last; next += 2) {
      current.push_back(next);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  std::sort(supports.begin(), supports.end());

  std::vector<Shape> shapes;
  for (const auto& supp : supports) {
    const int k = static_cast<int>(supp.size()) / 2;
    const auto matchings = enumerate_matchings(k);
    auto arcs_of = [&](const NonCrossingMatching& m) {
      std::vector<Arc> arcs;
      for (auto [a, b] : m.pairs()) arcs.emplace_back(supp[a - 1], supp[b - 1]);
      return arcs;
    };
    for (const auto& up : matchings) {
      for (const auto& lo : matchings) {
        // Single cycle through all 2k points?
        int visited = 0;
        int v = 1;
        do {
          v = lo.partner(up.partner(v));
          visited += 2;
        } while (v != 1);
        if (visited != 2 * k) continue;
        shapes.push_back(Shape::from_arcs(arcs_of(up), arcs_of(lo)));
      }
    }
  }
  return shapes;
}

/// All shapes with half-length 1..max_ell, in increasing half-length.
inline std::vector<Shape> enumerate_shapes_up_to(int max_ell,
                                                 int max_half_length = kDefaultShapeHalfLengthCap) {
  std::vector<Shape> all;
  for (int ell = 1; ell <= max_ell; ++ell) {
    auto level = enumerate_shapes(ell, max_half_length);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace meander
