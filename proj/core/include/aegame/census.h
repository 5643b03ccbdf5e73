// Copyright 2026 The aegame Authors
//
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


// Isomorphism classes of small linear hypergraphs with 2- and 3-edges,
// generated by vertex extension and deduplicated by a canonical form.

#ifndef AEGAME_CENSUS_H_
#define AEGAME_CENSUS_H_

#include <cstdint>
#include <vector>

#include "aegame/hypergraph.h"

namespace aegame {

inline constexpr int kMaxCensusVertices = 8;
inline constexpr int kMaxUniformCensusVertices = 9;

struct CanonicalForm {
  // Bit i set iff slot i (2-subsets, then 3-subsets, colex order) is an
  // edge of the canonically relabelled hypergraph.
  std::uint64_t low = 0;
  std::uint64_t high = 0;
  std::uint64_t automorphisms = 0;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.low == b.low && a.high == b.high;
  }
};

// Needs edges of size 2 or 3 and at most kMaxUniformCensusVertices vertices.
CanonicalForm canonical_form(const Hypergraph& h);

struct CensusClass {
  Hypergraph representative;
  // Number of labeled hypergraphs in the class: n! / |Aut|.
  std::uint64_t labeled_count = 0;
};

// One class list per vertex count 0..n_max. With `uniform3` only 3-edges
// are used and n_max may reach kMaxUniformCensusVertices.
std::vector<std::vector<CensusClass>> linear_rank3_census(int n_max,
                                                          bool uniform3 = false);

}  // namespace aegame

#endif  // AEGAME_CENSUS_H_
