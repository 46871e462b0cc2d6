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

#ifndef RML_GROUNDSET_HPP_
#define RML_GROUNDSET_HPP_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "rml/errors.hpp"

namespace rml {

/// A subset of a ground set of at most 24 elements, as a bitmask.
/// Element v corresponds to bit (1u << v).
using Mask = std::uint32_t;

inline int popcount(Mask a) { return std::popcount(a); }
inline bool has_element(Mask a, int v) { return (a >> v) & 1u; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

/// Elements of a mask in increasing order.
std::vector<int> mask_elements(Mask a);

/// Mask from a list of element indices (duplicates allowed).
Mask elements_mask(const std::vector<int>& elems);

/// The shared ground set V = {0, ..., n-1}. All subsets are Masks; the hard
/// cap of 24 elements keeps every 2^n table addressable and forces the
/// exhaustive routines to stay honest about their cost.
class GroundSet {
 public:
  static constexpr int kMaxElements = 24;

  /// Labels may be empty (elements are then printed as indices) or exactly
  /// n strings. Throws InputError if n is out of [1, 24] or labels mismatch.
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  Mask full_mask() const { return n_ == 32 ? ~0u : (1u << n_) - 1u; }
  std::size_t num_subsets() const { return std::size_t{1} << n_; }

  /// Throws InputError unless mask is a valid subset of this ground set.
  void check_mask(Mask a) const;

  /// Label of element v ("3" if unlabeled).
  std::string label(int v) const;

  /// Renders a mask as "{a,c,d}" using labels.
  std::string subset_str(Mask a) const;

  /// Labels are presentation only (masks are positional), so equality is
  /// agreement on size.
  bool operator==(const GroundSet& o) const { return n_ == o.n_; }

 private:
  int n_;
  std::vector<std::string> labels_;
};

}  // namespace rml

#endif  // RML_GROUNDSET_HPP_
