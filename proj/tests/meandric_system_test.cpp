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

#include <map>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "meander/meandric_system.hpp"
#include "meander/shape.hpp"

namespace meander {
namespace {

MeandricSystem system_of(const std::string& up, const std::string& lo) {
  return MeandricSystem(NonCrossingMatching::parse(up), NonCrossingMatching::parse(lo));
}

// The four-face loop on 1..12 with its free vertices closed off as simple loops.
MeandricSystem four_face_system() {
  return system_of("1-4,2-3,5-6,7-12,8-9,10-11", "1-12,2-3,4-7,5-6,8-9,10-11");
}

// Two interleaving loops starting at 1 and 7, free vertices 3, 4, 13, 14.
MeandricSystem interleaving_pair_system() {
  return system_of("1-6,2-5,3-4,7-12,8-11,9-10,13-14,15-16", "1-2,3-4,5-10,6-9,7-8,11-16,12-15,13-14");
}

TEST(TraceLoop, Examples) {
  const auto single = system_of("1-2", "1-2");
  const Component c = trace_loop(single, 1);
  EXPECT_EQ(c.support, (std::vector<int>{1, 2}));
  EXPECT_EQ(c.half_length(), 1);

  const auto one = system_of("1-2,3-4", "1-4,2-3");
  EXPECT_EQ(components(one).size(), 1u);
  EXPECT_EQ(trace_loop(one, 3).support, (std::vector<int>{1, 2, 3, 4}));

  EXPECT_EQ(components(system_of("1-2,3-4", "1-2,3-4")).size(), 2u);
  EXPECT_THROW(trace_loop(one, 5), std::out_of_range);
}

TEST(Components, PartitionEveryVertexOnce) {
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_matchings(n);
    for (const auto& up : all)
      for (const auto& lo : all) {
        const MeandricSystem sys(up, lo);
        std::vector<int> hits(static_cast<std::size_t>(2 * n + 1), 0);
        std::size_t total = 0;
        for (const auto& c : components(sys)) {
          EXPECT_EQ(c.support.size() % 2, 0u);
          EXPECT_EQ((c.right() - c.left() + 1) % 2, 0);
          total += c.support.size();
          for (int v : c.support) ++hits[v];
        }
        EXPECT_EQ(total, static_cast<std::size_t>(2 * n));
        for (int v = 1; v <= 2 * n; ++v) ASSERT_EQ(hits[v], 1);
      }
  }
}

TEST(ComponentShape, SimpleLoopAwayFromOrigin) {
  const auto sys = system_of("1-6,2-5,3-4", "1-6,2-5,3-4");
  const Shape s = component_shape(trace_loop(sys, 3), sys);
  EXPECT_EQ(s, simple_loop());
  EXPECT_EQ(s.half_length(), 1);
}

TEST(ComponentShape, ReferenceShapes) {
  const auto four = four_face_system();
  const Shape s1 = component_shape(trace_loop(four, 1), four);
  EXPECT_EQ(s1.to_string(), "supp=1,4,7,12;up=1-4,7-12;lo=1-12,4-7");
  EXPECT_EQ(s1, four_face_loop());

  const auto pair = interleaving_pair_system();
  const Shape s2 = component_shape(trace_loop(pair, 1), pair);
  EXPECT_EQ(s2.to_string(), "supp=1,2,5,6,9,10;up=1-6,2-5,9-10;lo=1-2,5-10,6-9");
  EXPECT_EQ(s2.half_length(), 5);
  EXPECT_EQ(component_shape(trace_loop(pair, 7), pair), s2);
}

TEST(CountShape, Examples) {
  for (int n = 1; n <= 6; ++n) {
    std::string adjacent;
    for (int j = 1; j <= n; ++j) adjacent += (j > 1 ? "," : "") + std::to_string(2 * j - 1) + "-" + std::to_string(2 * j);
    EXPECT_EQ(count_shape(system_of(adjacent, adjacent), simple_loop()), n);
  }
  EXPECT_EQ(count_shape(interleaving_pair_system(), interleaving_loop()), 2);
  EXPECT_EQ(count_shape(interleaving_pair_system(), simple_loop()), 2);
  EXPECT_EQ(count_shape(four_face_system(), four_face_loop()), 1);
  EXPECT_EQ(count_shape(four_face_system(), simple_loop()), 4);
}

// Upper = lower = the rainbow (j, 2n+1-j) splits into n two-vertex loops; the
// innermost one, on {n, n+1}, is a simple loop.
TEST(CountShape, RainbowHasExactlyOneSimpleLoop) {
  for (int n = 2; n <= 8; ++n) {
    std::string rainbow;
    for (int j = 1; j <= n; ++j) rainbow += (j > 1 ? "," : "") + std::to_string(j) + "-" + std::to_string(2 * n + 1 - j);
    const auto sys = system_of(rainbow, rainbow);
    EXPECT_EQ(components(sys).size(), static_cast<std::size_t>(n));
    EXPECT_EQ(count_shape(sys, simple_loop()), 1) << "n=" << n;
  }
}

TEST(Indicator, LeftmostOnly) {
  const auto sys = system_of("1-4,2-3", "1-4,2-3");
  EXPECT_TRUE(indicator_y(sys, 2, simple_loop()));
  EXPECT_FALSE(indicator_y(sys, 3, simple_loop()));
  EXPECT_FALSE(indicator_y(sys, 1, simple_loop()));
  const auto pair = interleaving_pair_system();
  EXPECT_TRUE(indicator_y(pair, 1, interleaving_loop()));
  EXPECT_TRUE(indicator_y(pair, 7, interleaving_loop()));
  EXPECT_FALSE(indicator_y(pair, 2, interleaving_loop()));
}

TEST(Indicator, SumEqualsTracedCount) {
  const auto shapes = enumerate_shapes_up_to(3);
  for (int n = 1; n <= 5; ++n) {
    const auto all = enumerate_matchings(n);
    for (const auto& up : all)
      for (const auto& lo : all) {
        const MeandricSystem sys(up, lo);
        for (const auto& s : shapes) {
          int sum = 0;
          for (int i = 1; i <= 2 * n; ++i) sum += indicator_y(sys, i, s);
          ASSERT_EQ(sum, count_shape(sys, s));
          ASSERT_EQ(count_shape_by_indicator(sys.view(), s), sum);
        }
      }
  }
}

// Every loop has exactly one shape: summed over every shape that fits, the
// counts add up to the number of loops.
TEST(CountShape, SumOverShapesIsComponentCount) {
  for (int n = 1; n <= 4; ++n) {
    const auto shapes = enumerate_shapes_up_to(n);
    const auto all = enumerate_matchings(n);
    for (const auto& up : all)
      for (const auto& lo : all) {
        const MeandricSystem sys(up, lo);
        int total = 0;
        for (const auto& s : shapes) total += count_shape(sys, s);
        ASSERT_EQ(static_cast<std::size_t>(total), components(sys).size());
      }
  }
}

TEST(CountShape, EveryComponentShapeIsEnumeratedUpToSix) {
  for (int n = 5; n <= 6; ++n) {
    const auto list = enumerate_shapes_up_to(n, n);
    const std::set<Shape> known(list.begin(), list.end());
    const auto all = enumerate_matchings(n);
    for (const auto& up : all)
      for (const auto& lo : all) {
        const MeandricSystem sys(up, lo);
        std::map<Shape, int> multiplicity;
        for (const auto& c : components(sys)) ++multiplicity[component_shape(c, sys)];
        for (const auto& [shape, count] : multiplicity) {
          ASSERT_TRUE(known.count(shape)) << shape.to_string();
          ASSERT_EQ(count_shape(sys, shape), count);
        }
      }
  }
}

// Every shape of half-length l fits in a system of size l (its free vertices
// pair up inside their faces), so the shapes seen in those systems are all of them.
TEST(EnumerateShapes, MatchesShapesSeenInSystems) {
  for (int ell = 1; ell <= 5; ++ell) {
    std::set<Shape> seen;
    const auto all = enumerate_matchings(ell);
    for (const auto& up : all)
      for (const auto& lo : all) {
        const MeandricSystem sys(up, lo);
        for (const auto& c : components(sys))
          if (c.half_length() == ell) seen.insert(component_shape(c, sys));
      }
    const auto listed = enumerate_shapes(ell);
    EXPECT_EQ(std::set<Shape>(listed.begin(), listed.end()), seen) << "ell=" << ell;
    EXPECT_EQ(listed.size(), seen.size());
  }
}

TEST(EnumerateShapes, SmallCounts) {
  EXPECT_EQ(enumerate_shapes(1).size(), 1u);
  EXPECT_EQ(enumerate_shapes(1).front(), simple_loop());
  EXPECT_EQ(enumerate_shapes(2).size(), 3u);
  EXPECT_THROW(enumerate_shapes(6), std::invalid_argument);
  EXPECT_THROW(enumerate_shapes(0), std::invalid_argument);
  for (const auto& s : enumerate_shapes(4)) EXPECT_EQ(Shape::parse(s.to_string()), s);
}

// Shifting a system inside a larger one (padding with simple loops on both
// sides) leaves the extracted shapes unchanged.
TEST(Translation, PaddingPreservesShapes) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 5);
    const int left = static_cast<int>(rng() % 3);
    const int right = static_cast<int>(rng() % 3);
    const auto all = enumerate_matchings(m);
    const auto& up = all[rng() % all.size()];
    const auto& lo = all[rng() % all.size()];
    const MeandricSystem inner(up, lo);
    const int n = m + left + right;
    auto embed = [&](const NonCrossingMatching& x) {
      std::vector<int> partner(static_cast<std::size_t>(2 * n));
      for (int j = 1; j <= left; ++j) {
        partner[2 * j - 2] = 2 * j;
        partner[2 * j - 1] = 2 * j - 1;
      }
      for (int v = 1; v <= 2 * m; ++v) partner[2 * left + v - 1] = x.partner(v) + 2 * left;
      for (int j = 0; j < right; ++j) {
        const int a = 2 * (left + m + j) + 1;
        partner[a - 1] = a + 1;
        partner[a] = a;
      }
      return NonCrossingMatching(std::move(partner));
    };
    const MeandricSystem outer(embed(up), embed(lo));
    std::multiset<Shape> before, after;
    for (const auto& c : components(inner)) before.insert(component_shape(c, inner));
    for (const auto& c : components(outer))
      if (c.left() > 2 * left && c.right() <= 2 * (left + m)) after.insert(component_shape(c, outer));
    ASSERT_EQ(before, after);
  }
}

TEST(ShapeParse, NamedInvariants) {
  auto invariant_of = [](const std::string& text) {
    try {
      Shape::parse(text);
    } catch (const ShapeError& e) {
      return std::string(invariant_name(e.invariant()));
    }
    return std::string("valid");
  };
  EXPECT_EQ(invariant_of("supp=1,2,5,6,9,10;up=1-6,2-5,9-10;lo=1-2,5-10,6-9"), "valid");
  EXPECT_EQ(invariant_of("supp=1,3;up=1-3;lo=1-3"), "odd-gap");
  EXPECT_EQ(invariant_of("supp=1,2,3,4;up=1-2,3-4;lo=1-2,3-4"), "connectivity");
  EXPECT_EQ(invariant_of("supp=1,2,3,4;up=1-3,2-4;lo=1-4,2-3"), "crossing");
  EXPECT_EQ(invariant_of("supp=2,3;up=2-3;lo=2-3"), "normalization");
  EXPECT_EQ(invariant_of("supp=1,2;up=1-2"), "grammar");
  EXPECT_EQ(invariant_of("supp=1,x;up=1-2;lo=1-2"), "grammar");
  EXPECT_EQ(invariant_of("supp=1,2;up=1-2;lo=1-4"), "matching");
}

TEST(ShapeParse, NormalizesArcOrder) {
  const Shape s = Shape::parse("supp=1,4,7,12;up=12-7,1-4;lo=7-4,1-12");
  EXPECT_EQ(s, four_face_loop());
  EXPECT_EQ(s.half_length(), 6);
  EXPECT_EQ(s.upper_partner(7), 12);
  EXPECT_FALSE(s.on_loop(2));
}

}  // namespace
}  // namespace meander
