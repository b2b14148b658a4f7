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

#include "meander/combinatorics.hpp"
#include "meander/exact_oracle.hpp"
#include "meander/experiment.hpp"
#include "meander/faces.hpp"
#include "meander/json_io.hpp"
#include "meander/meandric_system.hpp"
#include "meander/philox.hpp"
#include "meander/rational.hpp"
#include "meander/sampler.hpp"
#include "meander/shape.hpp"
#include "meander/shape_analysis.hpp"
#include "meander/statistics.hpp"
#include "meander/verify.hpp"

namespace meander {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace meander
