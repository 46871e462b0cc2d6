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

#ifndef RML_SET_FUNCTION_HPP_
#define RML_SET_FUNCTION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rml/groundset.hpp"
#include "rml/matroid.hpp"
#include "rml/rational.hpp"

namespace rml {

/// A rational set function c : 2^V -> Q stored as a dense table indexed by
/// mask. Dense tables (rather than closures) let callers hash, compare,
/// and perturb functions value by value.
class SetFunction {
 public:
  /// table.size() must equal 2^n.
  SetFunction(GroundSet g, RatVec table);

  /// The constant function c(A) = value for every A (including the empty
  /// set).
  static SetFunction constant(const GroundSet& g, const Rat& value);

  const Rat& operator()(Mask a) const {
    ground_.check_mask(a);
    return table_[a];
  }

  const GroundSet& ground() const { return ground_; }
  const RatVec& table() const { return table_; }

  /// True if c(A) equals value for every subset A.
  bool is_constant(const Rat& value) const;

  bool operator==(const SetFunction& o) const {
    return ground_ == o.ground_ && table_ == o.table_;
  }

  /// FNV-1a digest of the table, for content-addressed bookkeeping.
  std::uint64_t digest() const;

 private:
  GroundSet ground_;
  RatVec table_;
};

/// A witness pair of subsets for a failed (strict) inequality.
struct PairWitness {
  Mask a = 0;
  Mask b = 0;
};

/// Property report for positive / decreasing / submodular set functions.
/// "positive" here means nonnegative everywhere (the closed condition);
/// the strict flags require strict inequalities: value > 0 on every set,
/// strict decrease on every proper single-element extension, and strictly
/// positive submodularity defect on every incomparable pair (comparable
/// pairs are exempt, where the defect is identically attainable as 0).
struct PdsReport {
  bool positive = true;
  bool strictly_positive = true;
  bool decreasing = true;
  bool strictly_decreasing = true;
  bool submodular = true;
  bool strictly_submodular = true;

  std::optional<Mask> positivity_witness;          // c(A) < 0
  std::optional<Mask> strict_positivity_witness;   // c(A) <= 0
  std::optional<PairWitness> decrease_witness;     // c(A+v) > c(A)
  std::optional<PairWitness> strict_decrease_witness;
  std::optional<PairWitness> submodularity_witness;  // defect < 0
  std::optional<PairWitness> strict_submodularity_witness;

  bool pds() const { return positive && decreasing && submodular; }
  bool strictly_pds() const {
    return strictly_positive && strictly_decreasing && strictly_submodular;
  }
};

/// Checks all six properties in O(2^n * n^2) via the single-element local
/// characterizations: c decreasing iff c(A+v) <= c(A) for all A, v; c
/// submodular iff c(A+u) + c(A+v) >= c(A+u+v) + c(A); and the strict local
/// variants are equivalent to the strict pairwise definitions (telescoping
/// any incomparable pair through a chain of local steps preserves
/// strictness in at least one step). Requires n <= 16.
PdsReport check_pds(const SetFunction& c);

/// The canonical strictly-PDS function c(A) = (target / n^2) * (2n^2 -
/// |A|^2), scaled so that c(V) = target. Requires target > 0.
SetFunction interior_pds(const GroundSet& g, const Rat& target);

/// c(A) + c(B) - c(A u B) - c(A n B).
Rat submodularity_defect(const SetFunction& c, Mask a, Mask b);

/// Report for the product p(A) = c(A) * rk(A).
struct ProductReport {
  bool precondition_ok = true;
  std::string precondition_issue;
  bool submodular = true;
  std::optional<PairWitness> witness;
};

/// Checks that p(A) = c(A) * rk(A) is submodular, over every pair of
/// subsets. Preconditions (reported, not assumed): c is PDS. The matroid
/// rank is nonnegative, increasing, and submodular by construction.
/// Requires n <= 14 (the pair loop is 4^n).
ProductReport check_product_submodular(const SetFunction& c, const Matroid& m);

/// A tuple (b^1, ..., b^r) of PDS functions on a common ground set with
/// min_i b^i(V) > 0. Construction validates PDS-ness when n <= 14 (beyond
/// that the exhaustive check is out of budget and the caller's data is
/// trusted).
class PdsTuple {
 public:
  explicit PdsTuple(std::vector<SetFunction> functions);

  std::size_t count() const { return functions_.size(); }
  const SetFunction& operator[](std::size_t i) const { return functions_[i]; }
  const GroundSet& ground() const { return functions_[0].ground(); }

  /// b_min = min_i b^i(V).
  const Rat& min_total() const { return min_total_; }

  /// True if every b^i is the constant-one function.
  bool all_ones() const;

 private:
  std::vector<SetFunction> functions_;
  Rat min_total_;
};

/// Returns a strictly-PDS tuple b' with |b'^i(A) - b^i(A)| <= epsilon for
/// all i, A and b'^i(V) = b^i(V) exactly (so min_total is preserved).
///
/// The perturbation adds eps/2 * rho * (2n^2 - |A|^2) / (2n^2) with a
/// seeded random rho in (1 - 2^-8, 1], then subtracts the A = V value so
/// the total is untouched; the profile is a small strictly-PDS bump, and
/// keeping rho nearly constant keeps the bump's strictness dominant over
/// the randomness. If the strict check still fails, epsilon is halved and
/// fresh randomness drawn, up to 64 times (then InputError).
///
/// Deterministic for fixed (b, epsilon, seed). Requires epsilon > 0 and
/// n <= 14 (the strict check must run).
PdsTuple perturb_tuple(const PdsTuple& b, const Rat& epsilon,
                       std::uint64_t seed);

}  // namespace rml

#endif  // RML_SET_FUNCTION_HPP_
