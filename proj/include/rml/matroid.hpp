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

#ifndef RML_MATROID_HPP_
#define RML_MATROID_HPP_

#include <optional>
#include <string>
#include <vector>

#include "rml/groundset.hpp"

namespace rml {

enum class MatroidKind { kUniform, kPartition, kExplicit, kStar };

/// A matroid on a GroundSet, exposed exclusively through its rank function.
/// Construction validates shape; explicit rank tables on up to 16 elements
/// are additionally checked against the rank axioms eagerly, so an invalid
/// table never circulates.
class Matroid {
 public:
  static Matroid uniform(GroundSet g, int rank);

  /// Parts must be disjoint, nonempty, and cover the ground set;
  /// capacities[i] >= 0. rank(A) = sum_i min(|A ∩ parts[i]|, capacities[i]).
  static Matroid partition(GroundSet g, std::vector<Mask> parts,
                           std::vector<int> capacities);

  /// table[mask] = rank of that subset; table.size() == 2^n, n <= 16.
  static Matroid explicit_table(GroundSet g, std::vector<int> table);

  int rank(Mask a) const;
  int rank_of_ground() const { return rank(ground_.full_mask()); }

  const GroundSet& ground() const { return ground_; }
  MatroidKind kind() const { return kind_; }

  /// For partition/star matroids: the parts and their capacities.
  const std::vector<Mask>& parts() const { return parts_; }
  const std::vector<int>& capacities() const { return capacities_; }

  /// Returns true if rank({v}) = 1 for every element (no loops).
  bool loopless() const;

 private:
  Matroid(GroundSet g, MatroidKind kind) : ground_(std::move(g)), kind_(kind) {}
  friend std::vector<Matroid> star_matroids(const struct Hypergraph& h);

  GroundSet ground_;
  MatroidKind kind_;
  int uniform_rank_ = 0;
  std::vector<Mask> parts_;
  std::vector<int> capacities_;
  std::vector<int> table_;
};

/// Rank-axiom report; pass == true means no counterexample was found.
/// On failure `axiom` names the violated axiom and the witnesses identify
/// the offending subsets.
struct AxiomReport {
  bool pass = true;
  std::string axiom;
  Mask witness_a = 0;
  Mask witness_b = 0;
  std::string detail;
};

/// Checks normalization, monotone unit increase, and submodularity.
/// Up to 10 elements all pairs (A, B) are checked directly; from 11 to 16
/// elements the equivalent single-element local conditions are used
/// (rk(A+u) + rk(A+v) >= rk(A+u+v) + rk(A)). Above 16 elements: InputError.
AxiomReport check_rank_axioms(const Matroid& m);

/// An r-partite r-uniform hypergraph. Edge e = edges[j] picks one vertex
/// per side: e[i] is a vertex id on side i. The ground set of the derived
/// matroids is the edge set (element j = edge j).
struct Hypergraph {
  int arity = 0;                        // r >= 2
  std::vector<std::vector<int>> edges;  // each of length arity

  /// Validates shape (arity >= 2, every edge of length arity, vertex ids
  /// nonnegative, 1 <= |edges| <= 24, no duplicate edges).
  void validate() const;

  /// True if edges j and l share no vertex on any side.
  bool edges_disjoint(int j, int l) const;

  /// True if all edges in the mask are pairwise disjoint (a matching).
  bool is_matching(Mask edge_set) const;
};

/// The r star matroids of an r-partite hypergraph: matroid i groups edges
/// by their side-i vertex (one part per distinct vertex, capacity 1), so a
/// set of edges is independent in matroid i iff its side-i vertices are
/// pairwise distinct. A set independent in all r matroids is a matching.
std::vector<Matroid> star_matroids(const Hypergraph& h);

}  // namespace rml

#endif  // RML_MATROID_HPP_
