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
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meander/combinatorics.hpp"

namespace meander {

using Arc = std::pair<int, int>;

/// Which defining property of a shape a candidate violates.
enum class ShapeInvariant {
  grammar,        // text does not follow supp=..;up=..;lo=..
  matching,       // arcs are not a perfect matching of the support
  normalization,  // leftmost support vertex is not 1
  odd_gap,        // consecutive support vertices differ by an even amount
  crossing,       // arcs of one half-plane cross
  connectivity,   // upper and lower arcs form more than one loop
};

inline const char* invariant_name(ShapeInvariant inv) {
  switch (inv) {
    case ShapeInvariant::grammar: return "grammar";
    case ShapeInvariant::matching: return "matching";
    case ShapeInvariant::normalization: return "normalization";
    case ShapeInvariant::odd_gap: return "odd-gap";
    case ShapeInvariant::crossing: return "crossing";
    case ShapeInvariant::connectivity: return "connectivity";
  }
  return "unknown";
}

class ShapeError : public std::invalid_argument {
 public:
  ShapeError(ShapeInvariant inv, const std::string& detail)
      : std::invalid_argument(std::string("shape violates ") + invariant_name(inv) + ": " + detail),
        invariant_(inv) {}
  ShapeInvariant invariant() const { return invariant_; }

 private:
  ShapeInvariant invariant_;
};

/// A connected non-crossing loop normalized so its leftmost vertex is 1.
///
/// The support is {1 = i_1 < ... < i_2k = 2 ell} with every gap i_{j+1} - i_j
/// odd. Arcs are stored as (a, b), a < b, ascending in a; dense partner tables
/// index vertices 1..2 ell with 0 marking vertices off the loop.
///
/// Two shapes are equal iff their supports and arc sets coincide; translation
/// is the only symmetry, so no isomorphism test is needed.
class Shape {
 public:
  Shape() = default;

  /// Builds and validates a shape from its upper and lower arcs. The support
  /// is the set of arc endpoints.
  static Shape from_arcs(std::vector<Arc> upper, std::vector<Arc> lower) {
    Shape s;
    s.upper_ = normalize_arcs(std::move(upper));
    s.lower_ = normalize_arcs(std::move(lower));
    for (auto [a, b] : s.upper_) {
      s.support_.push_back(a);
      s.support_.push_back(b);
    }
    std::sort(s.support_.begin(), s.support_.end());
    s.finish();
    return s;
  }

  /// Parses "supp=1,4,7,12;up=1-4,7-12;lo=1-12,4-7".
  static Shape parse(std::string_view text) {
    auto fields = detail::split(text, ';');
    if (fields.size() != 3 || !fields[0].starts_with("supp=") || !fields[1].starts_with("up=") ||
        !fields[2].starts_with("lo="))
      throw ShapeError(ShapeInvariant::grammar, "expected 'supp=...;up=...;lo=...'");
    Shape s;
    try {
      for (std::string_view item : detail::split(fields[0].substr(5), ','))
        s.support_.push_back(detail::parse_positive_int(item, "supp"));
      s.upper_ = normalize_arcs(detail::parse_arcs(fields[1].substr(3), "up"));
      s.lower_ = normalize_arcs(detail::parse_arcs(fields[2].substr(3), "lo"));
    } catch (const ShapeError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ShapeError(ShapeInvariant::grammar, e.what());
    }
    if (!std::is_sorted(s.support_.begin(), s.support_.end()))
      throw ShapeError(ShapeInvariant::grammar, "support must be listed in ascending order");
    s.finish();
    return s;
  }

  std::string to_string() const {
    std::string out = "supp=";
    for (std::size_t j = 0; j < support_.size(); ++j) {
      if (j) out.push_back(',');
      out += std::to_string(support_[j]);
    }
    auto arcs = [&](const std::vector<Arc>& list) {
      std::string s;
      for (auto [a, b] : list) {
        if (!s.empty()) s.push_back(',');
        s += std::to_string(a) + "-" + std::to_string(b);
      }
      return s;
    };
    out += ";up=" + arcs(upper_) + ";lo=" + arcs(lower_);
    return out;
  }

  int half_length() const { return half_length_; }
  int base_size() const { return 2 * half_length_; }
  std::span<const int> support() const { return support_; }
  std::span<const Arc> upper_arcs() const { return upper_; }
  std::span<const Arc> lower_arcs() const { return lower_; }

  /// Partner of support vertex v in the upper (lower) half-plane; 0 if v is
  /// not on the loop. Valid for 1 <= v <= 2 ell.
  int upper_partner(int v) const { return upper_partner_[v]; }
  int lower_partner(int v) const { return lower_partner_[v]; }
  bool on_loop(int v) const { return v >= 1 && v <= base_size() && upper_partner_[v] != 0; }

  friend bool operator==(const Shape& a, const Shape& b) {
    return a.support_ == b.support_ && a.upper_ == b.upper_ && a.lower_ == b.lower_;
  }
  friend auto operator<=>(const Shape& a, const Shape& b) {
    if (auto c = a.support_ <=> b.support_; c != 0) return c;
    if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
    return a.lower_ <=> b.lower_;
  }

 private:
  static std::vector<Arc> normalize_arcs(std::vector<Arc> arcs) {
    for (auto& [a, b] : arcs)
      if (a > b) std::swap(a, b);
    std::sort(arcs.begin(), arcs.end());
    return arcs;
  }

  void finish() {
    if (support_.empty()) throw ShapeError(ShapeInvariant::matching, "empty support");
    if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
      throw ShapeError(ShapeInvariant::matching, "support lists a vertex twice");
    if (support_.front() != 1)
      throw ShapeError(ShapeInvariant::normalization, "leftmost support vertex must be 1");
    for (std::size_t j = 0; j + 1 < support_.size(); ++j) {
      if ((support_[j + 1] - support_[j]) % 2 == 0)
        throw ShapeError(ShapeInvariant::odd_gap, "gap between " + std::to_string(support_[j]) +
                                                      " and " + std::to_string(support_[j + 1]) +
                                                      " is even");
    }
    // With odd gaps and i_1 = 1, an even support size forces an even last vertex.
    if (support_.size() % 2 != 0)
      throw ShapeError(ShapeInvariant::matching, "support has an odd number of vertices");
    half_length_ = support_.back() / 2;
    upper_partner_ = fill_partners(upper_, "up");
    lower_partner_ = fill_partners(lower_, "lo");
    check_non_crossing(upper_, "up");
    check_non_crossing(lower_, "lo");

    // Connectivity: alternate upper and lower partners starting from 1.
    std::size_t visited = 0;
    int v = 1;
    do {
      v = upper_partner_[v];
      v = lower_partner_[v];
      visited += 2;
    } while (v != 1);
    if (visited != support_.size())
      throw ShapeError(ShapeInvariant::connectivity,
                       "arcs form more than one loop (loop through 1 visits " +
                           std::to_string(visited) + " of " + std::to_string(support_.size()) +
                           " vertices)");
  }

  std::vector<int> fill_partners(const std::vector<Arc>& arcs, const char* side) const {
    std::vector<int> partner(static_cast<std::size_t>(base_size() + 1), 0);
    auto in_support = [&](int v) { return std::binary_search(support_.begin(), support_.end(), v); };
    for (auto [a, b] : arcs) {
      if (a == b || !in_support(a) || !in_support(b))
        throw ShapeError(ShapeInvariant::matching,
                         std::string(side) + " arc " + std::to_string(a) + "-" + std::to_string(b) +
                             " has an endpoint outside the support");
      if (partner[a] != 0 || partner[b] != 0)
        throw ShapeError(ShapeInvariant::matching,
                         std::string(side) + " arcs use a vertex twice near " + std::to_string(a));
      partner[a] = b;
      partner[b] = a;
    }
    if (arcs.size() * 2 != support_.size())
      throw ShapeError(ShapeInvariant::matching,
                       std::string(side) + " arcs do not cover every support vertex");
    return partner;
  }

  static void check_non_crossing(const std::vector<Arc>& arcs, const char* side) {
    // arcs are sorted by left endpoint; (a,b) and (c,d) with a < c cross iff c < b < d.
    std::vector<int> open_right;
    for (auto [a, b] : arcs) {
      while (!open_right.empty() && open_right.back() < a) open_right.pop_back();
      if (!open_right.empty() && open_right.back() < b)
        throw ShapeError(ShapeInvariant::crossing,
                         std::string(side) + " arc " + std::to_string(a) + "-" + std::to_string(b) +
                             " crosses an enclosing arc");
      open_right.push_back(b);
    }
  }

  int half_length_ = 0;
  std::vector<int> support_;
  std::vector<Arc> upper_;
  std::vector<Arc> lower_;
  std::vector<int> upper_partner_;
  std::vector<int> lower_partner_;
};

/// The loop on {1, 2} with the same arc above and below.
inline Shape simple_loop() { return Shape::from_arcs({{1, 2}}, {{1, 2}}); }

/// Half-length 6 loop on {1, 4, 7, 12} with four bounded faces: K = 10,
/// c+ = 1, c- = 0.
inline Shape four_face_loop() { return Shape::parse("supp=1,4,7,12;up=1-4,7-12;lo=1-12,4-7"); }

/// Half-length 5 loop whose copies at 1 and 7 can coexist, making it weak.
inline Shape interleaving_loop() { return Shape::parse("supp=1,2,5,6,9,10;up=1-6,2-5,9-10;lo=1-2,5-10,6-9"); }

}  // namespace meander
