// Copyright 2026 The knotdensity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kd/bigint.hpp"
#include "kd/diagram.hpp"
#include "kd/real.hpp"

namespace kd {

struct CensusEntry {
  std::string name;
  int crossings = 0;
  std::string dt;  // space-separated DT code
  bool alternating = false;
  std::optional<BigInt> determinant;
  std::optional<Real> volume;  // 0 marks a non-hyperbolic knot

  Diagram diagram() const;
  bool volume_missing() const { return !volume.has_value(); }
  bool hyperbolic() const { return volume && volume->sign() > 0; }
};

struct CensusOptions {
  // Recompute every stated determinant and reject mismatches.
  bool check_determinants = true;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

// Header: name,crossings,dt,alternating,determinant,volume. The last two
// cells may be empty; the dt cell may be quoted.
std::vector<CensusEntry> parse_census(std::string_view text, const CensusOptions& options = {});
std::vector<CensusEntry> load_census(const std::string& path, const CensusOptions& options = {});

}  // namespace kd
