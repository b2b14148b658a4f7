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

#include <gtest/gtest.h>

#include "meander/json_io.hpp"

namespace meander {
namespace {

TEST(JsonIo, RationalRoundTripKeepsEveryDigit) {
  const Rational q = Rational(catalan(200), catalan(201) * 7);
  const Json j = to_json(q);
  EXPECT_TRUE(j["num"].is_string());
  EXPECT_EQ(rational_from_json(Json::parse(j.dump())), q);
  EXPECT_EQ(to_json(Rational(-3, 6)).dump(), R"({"num":"-1","den":"2"})");
}

TEST(JsonIo, ConstantsLayout) {
  const Json j = constants_json(shape_constants(interleaving_loop()));
  EXPECT_EQ(j["shape"], "supp=1,2,5,6,9,10;up=1-6,2-5,9-10;lo=1-2,5-10,6-9");
  EXPECT_EQ(j["ell"], 5);
  EXPECT_EQ(j["K"], "1");
  EXPECT_EQ(j["strong"], false);
  bool seven = false;
  for (const auto& o : j["overlaps"]) {
    if (o["i"] == 7) {
      seven = true;
      EXPECT_EQ(o["twoEllI"], 16);
      EXPECT_EQ(o["bI"]["num"], "16");
      EXPECT_EQ(o["bI"]["den"], "1");
    }
  }
  EXPECT_TRUE(seven);
  const Json s = constants_json(shape_constants(simple_loop()));
  EXPECT_EQ(rational_from_json(s["mu"]), Rational(1, 8));
  EXPECT_EQ(rational_from_json(s["sigma2"]), Rational(13, 128));
  EXPECT_TRUE(s["overlaps"].empty());
}

TEST(JsonIo, MomentReportNullFormulaForWeak) {
  MomentReport m;
  m.n = 8;
  m.r = 2;
  m.shape = "x";
  m.exact = Rational(1, 3);
  m.lower_bound = 0;
  const Json j = moment_report_json(m);
  EXPECT_TRUE(j["formulaMoment"].is_null());
  EXPECT_EQ(j["exactMoment"]["den"], "3");
}

}  // namespace
}  // namespace meander
