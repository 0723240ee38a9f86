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

#include <array>
#include <span>
#include <vector>

namespace kd {

// One end of an arc: crossing index and tuple position (0..3).
struct Slot {
  int crossing = 0;
  int position = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

// Arc labels listed counterclockwise from the incoming under-strand, so the
// under strand runs from position 0 to position 2.
struct Crossing {
  std::array<int, 4> arcs{};
  int over_in = 1;  // position (1 or 3) where the over strand enters

  int sign() const { return over_in == 3 ? 1 : -1; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// Connected, oriented link diagram with arcs labelled 1..2c. Immutable
// after construction; all derived structure is computed eagerly.
class Diagram {
 public:
  // The crossingless unknot.
  Diagram();

  // Oriented tuples (position 0 is the incoming under-strand). Labels are
  // renumbered to 1..2c preserving order. Throws ValidationError.
  static Diagram from_pd(std::span<const std::array<int, 4>> tuples);
  // Tuples whose first entry is either end of the under strand. Every
  // component is oriented so that its lowest label leaves the crossing where
  // that label first occurs.
  static Diagram from_unoriented(std::span<const std::array<int, 4>> tuples);
  // Fully specified crossings with labels already numbered 1..2c.
  static Diagram from_crossings(std::vector<Crossing> crossings);

  int crossing_number() const { return static_cast<int>(crossings_.size()); }
  int num_arcs() const { return 2 * crossing_number(); }
  int num_components() const { return num_components_; }
  std::span<const Crossing> crossings() const { return crossings_; }
  const Crossing& crossing(int i) const { return crossings_.at(i); }
  int writhe() const;

  int arc_at(Slot s) const { return crossings_[s.crossing].arcs[s.position]; }
  Slot tail(int arc) const { return tails_.at(arc - 1); }
  Slot head(int arc) const { return heads_.at(arc - 1); }
  Slot other_end(Slot s) const;
  int component_of(int arc) const { return component_.at(arc - 1); }

  // Regions of the complement. Corner k of a crossing lies between tuple
  // positions k and k+1.
  int num_faces() const { return num_faces_; }
  int face_at(int crossing, int corner) const { return corner_face_.at(4 * crossing + corner); }
  int left_face(int arc) const;
  int right_face(int arc) const;
  // Checkerboard colour (0 or 1); colour 0 contains corner 0 of crossing 0.
  int face_color(int face) const { return face_color_.at(face); }
  // +1 when corners 0 and 2 of the crossing are in colour-0 faces.
  int goeritz_type(int crossing) const;

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.crossings_ == b.crossings_;
  }

 private:
  std::vector<Crossing> crossings_;
  std::vector<Slot> tails_;
  std::vector<Slot> heads_;
  std::vector<int> component_;
  int num_components_ = 1;
  std::vector<int> corner_face_;
  std::vector<int> face_color_;
  int num_faces_ = 2;
};

int crossing_number(const Diagram& d);
bool is_alternating(const Diagram& d);
// False when some crossing is nugatory (one region meets it twice).
bool is_reduced(const Diagram& d);
// Swap over and under at the listed crossings.
Diagram change_crossings(const Diagram& d, std::span<const int> subset);
Diagram mirror(const Diagram& d);

}  // namespace kd
