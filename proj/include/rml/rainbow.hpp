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

#ifndef RML_RAINBOW_HPP_
#define RML_RAINBOW_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rml/collapse.hpp"
#include "rml/polytope.hpp"

namespace rml {

/// Input to the rainbow-support search: r matroids with unit weights, a
/// target k > 0, and functions f_1..f_d, each a common fractional point
/// of the matroid polytopes with total at least k.
struct RainbowInstance {
  IntersectionSystem sys;  // weights must be identically one
  Rat k;
  std::vector<RatVec> functions;

  /// supp(f_j) as a mask.
  std::vector<Mask> supports() const;
};

struct InstanceReport {
  bool valid = true;
  std::vector<std::string> issues;
};

/// Validates: unit weights; k > 0; every f_j nonnegative of the right
/// size, inside every matroid polytope, with total >= k; and d >=
/// r*ceil(k) - r + 1 functions (the guarantee threshold — with fewer, a
/// fractional rainbow set need not exist).
InstanceReport validate_instance(const RainbowInstance& inst);

struct RainbowResult {
  /// Distinct representatives: (function index, element) with element in
  /// supp(f_j), at most one per function, all elements distinct.
  std::vector<std::pair<std::size_t, int>> choice;
  Mask rainbow = 0;   // the chosen elements R
  RatVec witness;     // f supported inside R, in every matroid polytope
  Rat witness_total;  // = nu*(R) >= k
};

/// Finds a rainbow set R (elements picked from distinct functions'
/// supports) with nu*(R) >= k, by depth-first search over the functions
/// in input order: at each level every unchosen support element is tried
/// in ascending order and skipping the function is tried last, so early
/// branches grow the rainbow fastest. Branches are pruned when even the
/// union of all remaining supports cannot reach k (nu* values memoized).
/// Deterministic. Exhaustion without success is an InvariantError — on a
/// valid instance it would contradict the existence guarantee — and the
/// message dumps the instance summary.
RainbowResult find_rainbow(const RainbowInstance& inst);

/// Exhaustive search for an integral rainbow matching: k pairwise
/// disjoint edges picked from k distinct matchings (given as edge-index
/// lists into h.edges). Returns the picks as (matching, edge) pairs in
/// increasing matching order, or nullopt if none exists.
std::optional<std::vector<std::pair<int, int>>> find_integral_rainbow(
    const Hypergraph& h, const std::vector<std::vector<int>>& matchings,
    int k);

/// Rainbow set for two-matroid systems: given at least 2k-1 common
/// independent sets of size k, runs the fractional search and rounds the
/// witness with round_two_matroids, returning k elements (ascending) of
/// the rainbow set that are independent in both matroids.
std::vector<int> kz_rainbow(const std::vector<std::vector<int>>& sets,
                            const Matroid& m1, const Matroid& m2);

/// A catalog instance. For hypergraph-backed entries, `matchings` lists
/// the edge-index sets whose indicators are the instance functions.
struct CatalogEntry {
  std::string name;
  std::string summary;
  Hypergraph hypergraph;
  std::vector<std::vector<int>> matchings;
  RainbowInstance instance;
};

/// The built-in instances:
///   cube-2x2x2  all 8 axis-triples of a 2x2x2 grid, the 4 antipodal
///               perfect matchings; no integral rainbow matching of size
///               2 exists, but a fractional rainbow set reaches 2.
///   drisko-k2, drisko-k3  the cycle C_{2k} as a bipartite graph with k
///               copies of the odd matching and k-1 of the even one (the
///               tight count 2k-1).
///   kz-k2       K_{2,2} with sets [PM1, PM2, PM1] for the two-matroid
///               rounding path.
///   kz-k3       K_{3,3} with the three diagonal matchings plus two
///               transposition matchings (five sets, k = 3).
std::vector<CatalogEntry> canonical_instances();

/// Deterministic random instance: r random loopless matroids on n
/// elements and r*k - r + 1 functions, each the canonical nu* optimizer
/// of a random support set with value >= k. Throws InputError if
/// nu*(V) < k (no such instance exists for this seed's matroids).
RainbowInstance random_instance(std::uint64_t seed, std::size_t r, int k,
                                int n);

}  // namespace rml

#endif  // RML_RAINBOW_HPP_
