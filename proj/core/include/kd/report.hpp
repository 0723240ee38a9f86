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

#include "kd/kashaev.hpp"
#include "kd/real.hpp"
#include "kd/spectra.hpp"

namespace kd {

// Reals in reports carry 12 significant digits; integers print exactly.
std::string format_real(const Real& v);

std::string density_csv(std::span<const DensityRecord> records);
std::string density_json(const DensityRecord& record);

std::string sequence_csv(const SequenceReport& report);
std::string sequence_json(const SequenceReport& report);

std::string verification_csv(const VerificationReport& report);
// Summary only: counts, minimum margin, skip reasons, statistics.
std::string verification_json(const VerificationReport& report);

// Header line only when with_header is set, so per-knot blocks concatenate.
std::string kashaev_csv(const std::string& id, std::span<const KashaevValue> values,
                        bool with_header = true);
std::string kashaev_json(const std::string& id, std::span<const KashaevValue> values);

}  // namespace kd
