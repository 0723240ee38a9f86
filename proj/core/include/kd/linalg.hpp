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

#include <vector>

#include "kd/bigint.hpp"

namespace kd {

// Dense square matrix of exact integers, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int n = 0) : n_(n), data_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<size_t>(r) * n_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * n_ + c]; }
  // Drops row and column k.
  IntMatrix minor(int k) const;

 private:
  int n_;
  std::vector<BigInt> data_;
};

// Fraction-free Gaussian elimination; exact. The empty matrix has det 1.
BigInt bareiss_determinant(IntMatrix m);

}  // namespace kd
