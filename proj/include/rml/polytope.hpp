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

#ifndef RML_POLYTOPE_HPP_
#define RML_POLYTOPE_HPP_

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "rml/lp.hpp"
#include "rml/matroid.hpp"
#include "rml/set_function.hpp"

namespace rml {

/// The skew polymatroid region P_{M,c} = { f >= 0 : f(A) <= c(A) rk(A)
/// for every nonempty A }, for a matroid M and a PDS weighting c. With
/// c == 1 this is the matroid polytope of M. Construction validates that
/// c is PDS (up to 14 elements; larger tables are trusted).
class SkewPolytope {
 public:
  SkewPolytope(Matroid matroid, SetFunction c);

  const Matroid& matroid() const { return matroid_; }
  const SetFunction& weighting() const { return c_; }
  const GroundSet& ground() const { return matroid_.ground(); }

  /// c(A) * rk(A).
  Rat bound(Mask a) const { return c_(a) * matroid_.rank(a); }

 private:
  Matroid matroid_;
  SetFunction c_;
};

struct MembershipReport {
  bool member = true;
  /// Element with f(v) < 0, if any (reported before set violations).
  std::optional<int> negative_element;
  /// Maximally violated constraint set; ties broken to the smallest mask.
  std::optional<Mask> violated_set;
  /// f(violated_set) - c * rk of it (> 0 when violated).
  Rat violation;
};

/// Exhaustive membership test of f in P_{M,c} (2^n constraint sums).
MembershipReport membership(const RatVec& f, const SkewPolytope& p);

/// A matroid intersection system: matroids M_1..M_r on one ground set
/// with a PDS tuple b (weights b^i for matroid i).
class IntersectionSystem {
 public:
  IntersectionSystem(std::vector<Matroid> matroids, PdsTuple b);

  /// All weights identically one.
  static IntersectionSystem unit(std::vector<Matroid> matroids);

  std::size_t r() const { return matroids_.size(); }
  const Matroid& matroid(std::size_t i) const { return matroids_[i]; }
  const PdsTuple& weights() const { return b_; }
  const GroundSet& ground() const { return matroids_[0].ground(); }

 private:
  std::vector<Matroid> matroids_;
  PdsTuple b_;
};

/// A sparse dual solution: weights h(i, A) >= 0 on pairs of a matroid
/// index and a nonempty subset A of V, with only the nonzero entries
/// stored, ordered by (i, A).
struct DualWeights {
  struct Entry {
    std::size_t matroid;
    Mask subset;
    Rat weight;
  };
  std::vector<Entry> entries;

  Rat total_cost(const IntersectionSystem& sys) const;
};

/// nu*_{a,b}(W) = max { a.f : f in every P_{M_i, b^i}, supp(f) subset W }
/// together with an optimizer f (a vertex of the feasible region,
/// deterministic: it is the exact dual of the canonical covering solve
/// under Bland's rule). a must be entrywise positive. W == 0 gives (0, 0).
std::pair<Rat, RatVec> nu_star(const IntersectionSystem& sys, Mask w,
                               const RatVec& a);

/// tau*_{a,b}(W) = min sum_{i,A} b^i(A) rk_i(A) h(i,A) over h >= 0 with
/// sum_{(i,A): v in A} h(i,A) >= a_v for every v in W; A ranges over all
/// nonempty subsets of V. Returns the optimal value and an optimal h.
/// Equals nu* by LP duality (asserted exactly).
std::pair<Rat, DualWeights> tau_star(const IntersectionSystem& sys, Mask w,
                                     const RatVec& a);

/// Whether the tau* optimal solution is unique. Decided exactly: the
/// candidate optimum's complementary-slackness support is probed
/// coordinate by coordinate over the optimal face.
bool is_dual_unique(const IntersectionSystem& sys, Mask w, const RatVec& a);

/// All nonempty A with f(A) == c(A) rk(A), restricted to subsets of W.
/// Requires f in P_{M,c} with supp(f) in W (InputError otherwise). Checks
/// the family is closed under union, and under intersection whenever the
/// intersection is nonempty; a violation is an InvariantError (it would
/// contradict uncrossing for PDS weightings). Returned sorted by mask.
std::vector<Mask> tight_sets(const RatVec& f, const SkewPolytope& p, Mask w);

/// Rounds a fractional common point of two matroid polytopes: returns an
/// integral g in both polytopes with supp(g) inside supp(f) and total at
/// least total(f). Its existence is the two-matroid integrality fact the
/// library leans on; failure to find one is an InvariantError.
RatVec round_two_matroids(const RatVec& f, const Matroid& m1,
                          const Matroid& m2);

}  // namespace rml

#endif  // RML_POLYTOPE_HPP_
