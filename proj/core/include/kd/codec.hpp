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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kd/diagram.hpp"

namespace kd {

// Whitespace-separated `X(a,b,c,d)` terms; empty text is the crossingless
// unknot. Throws SyntaxError or ValidationError.
Diagram parse_pd(std::string_view text);
std::string format_pd(const Diagram& d);

// Dowker-Thistlethwaite code: entry i is the even label paired with odd
// label 2i+1; a negative entry marks a crossing whose even pass is under.
Diagram parse_dt(std::span<const int> code);
// Comma- or space-separated signed even integers, brackets optional.
std::vector<int> parse_dt_text(std::string_view text);
// Knot diagrams only; traversal starts where arc 1 leaves its crossing.
std::vector<int> to_dt(const Diagram& d);
std::string format_dt(std::span<const int> code);

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +i for sigma_i, -i for its inverse
};

// `n: s1 -s2 s1`; the `s` prefix is optional.
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& w);
// Closure of the braid. Throws ValidationError for out-of-range letters or
// when the closure is split.
Diagram from_braid(const BraidWord& w);

}  // namespace kd
