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

#ifndef RML_LP_HPP_
#define RML_LP_HPP_

#include <optional>
#include <vector>

#include "rml/rational.hpp"

namespace rml {

/// maximize objective . x  subject to  rows . x <= rhs,  x >= 0.
/// All data exact rationals. Minimization and >= rows are encoded by
/// negation at the call site.
struct LinearProgram {
  RatVec objective;          // size = number of columns
  std::vector<RatVec> rows;  // each of size objective.size()
  RatVec rhs;                // size = rows.size()

  std::size_t num_cols() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }
  void validate() const;  // throws InputError on shape mismatch
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;     // optimal objective value (kOptimal only)
  RatVec primal; // optimal x (kOptimal) or feasible start point (kUnbounded)
  RatVec dual;   // optimal dual y, one entry per row (kOptimal only)
  RatVec ray;    // improving recession direction (kUnbounded only)
  std::vector<int> basis;  // final basic variable indices; structural
                           // variables are 0..n-1, the slack of row i is
                           // n + i, artificials follow
};

/// Two-phase primal simplex on a dense exact-rational tableau, with
/// Bland's pivot rule throughout (entering: smallest-index column with
/// negative reduced cost; leaving: minimum ratio, ties to the smallest
/// basic variable index), so the pivot sequence is deterministic and
/// cycling is impossible. Before returning an optimum the solver verifies,
/// in exact arithmetic, primal feasibility, dual feasibility, and strong
/// duality (c.x == y.b); a failure is an InvariantError.
LpSolution solve(const LinearProgram& lp);

struct UniquenessReport {
  bool unique = true;
  /// When not unique: a second optimal solution differing from the given
  /// one in at least one coordinate.
  std::optional<RatVec> alternate;
};

/// Decides whether the optimal solution of lp is the unique optimum, by
/// probing every coordinate over the optimal face {x feasible :
/// objective.x == value} (the face is cut with one extra row). Coordinates
/// whose reduced cost is strictly negative are pinned to zero on the whole
/// face by complementary slackness and are skipped. `sol` must be an
/// optimal solution of lp (re-verified; InputError otherwise).
UniquenessReport is_optimum_unique(const LinearProgram& lp,
                                   const LpSolution& sol);

}  // namespace rml

#endif  // RML_LP_HPP_
