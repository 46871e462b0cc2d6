// Copyright 2026 The Authors.
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

#ifndef RML_CHAIN_HPP_
#define RML_CHAIN_HPP_

#include <vector>

#include "rml/groundset.hpp"

namespace rml {

/// A family of nonempty subsets of a ground set, with closure flags.
/// "Intersection-closed" is empty-tolerant throughout: for members A, B
/// the intersection must be in the family or empty.
struct SetFamily {
  GroundSet ground;
  std::vector<Mask> members;  // distinct, nonempty, ascending by mask
  bool union_closed = false;
  bool intersection_closed = false;
};

/// Builds a family from raw masks (deduplicated, sorted; the empty set is
/// rejected). With verify == true the closure flags are computed by
/// checking every pair; otherwise both are left false.
SetFamily make_family(const GroundSet& g, std::vector<Mask> members,
                      bool verify = true);

/// The smallest union- and (empty-tolerantly) intersection-closed family
/// containing the given sets: pairwise unions/intersections are added to a
/// fixpoint, empty intersections dropped.
SetFamily close_family(const GroundSet& g, std::vector<Mask> members);

/// dim span { characteristic vectors of members } over Q, by Gaussian
/// elimination. Independent of extract_chain (it shares no code path), so
/// the two can cross-check each other.
int span_dimension(const SetFamily& fam);

/// A chain A_1 < A_2 < ... < A_t of strictly nested nonempty sets.
using Chain = std::vector<Mask>;

/// Extracts from a union- and intersection-closed family a chain of
/// members whose characteristic vectors span the same subspace as the
/// whole family's. The chain is grown one set per round: take the first
/// member A (ascending mask order) with chi_A outside the current chain's
/// span; if A is not contained in the top set, append top cup A; otherwise
/// locate the first chain gap (A_{i-1}, A_i) whose block A_i minus A_{i-1}
/// meets A but is not contained in it, and insert (A cup A_{i-1}) cap A_i
/// there. Both candidate sets are members by closure, and each round
/// raises the span by one, so the final length equals span_dimension.
/// Requires both closure flags (InputError otherwise; use close_family or
/// make_family(verify=true) first). Empty family gives an empty chain.
Chain extract_chain(const SetFamily& fam);

/// True iff chain is strictly nested, nonempty sets, all members of fam,
/// and its characteristic vectors span the family's span (dimension
/// equality, since chain vectors are independent).
bool verify_chain(const Chain& chain, const SetFamily& fam);

}  // namespace rml

#endif  // RML_CHAIN_HPP_
