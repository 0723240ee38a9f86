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

#include <string>
#include <vector>

#include "kd/diagram.hpp"
#include "kd/laurent.hpp"
#include "kd/real.hpp"

namespace kd {

enum class Field { kRationals, kTwo };

struct KhovanovOptions {
  Field field = Field::kRationals;
  int max_crossings = 14;
};

struct BidegreeRank {
  int homological = 0;
  int quantum = 0;
  long generators = 0;
  long boundary_rank = 0;  // rank of the differential leaving this bidegree
  long homology = 0;
};

// Reduced Khovanov complex of a diagram, base point on arc 1. Quantum
// gradings are shifted so the unknot sits in bidegree (0, 0).
struct ChainComplexSummary {
  Field field = Field::kRationals;
  std::vector<BidegreeRank> table;  // sorted by (homological, quantum)

  long total_rank() const;
  // Sum of (-1)^r q^j dim C^{r,j}, as a polynomial in t^(1/2) with q = -t^(1/2);
  // equals the Jones polynomial.
  LaurentPolynomial euler_characteristic() const;
  // "homological,quantum,rank" rows for nonzero homology.
  std::string to_csv() const;
};

// Cube of resolutions with exact sparse elimination per bidegree. Throws
// ResourceError above the crossing cap.
ChainComplexSummary reduced_khovanov(const Diagram& d, const KhovanovOptions& options = {});
long reduced_kh_rank(const Diagram& d, const KhovanovOptions& options = {});
// 2 pi ln(rank) / c. Throws DomainError for crossingless diagrams.
Real kh_density(const Diagram& d, const KhovanovOptions& options = {},
                mpfr_prec_t bits = Real::kDefaultBits);

const char* to_string(Field f);
// "Q" or "F2" (case-insensitive aliases "rationals", "two"). Throws DomainError.
Field parse_field(const std::string& text);

}  // namespace kd
