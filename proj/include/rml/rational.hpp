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

#ifndef RML_RATIONAL_HPP_
#define RML_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "rml/errors.hpp"

namespace rml {

/// Exact rational scalar. Every quantity the library computes (LP values,
/// optimizers, dual weights, set-function values) is a Rat; no floating
/// point is used anywhere.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

using RatVec = std::vector<Rat>;

/// Parses "p/q", "p", or a plain decimal such as "-0.25" (which becomes
/// -1/4). Surrounding whitespace is ignored; interior whitespace is not
/// accepted, and q must be nonzero. Throws InputError on malformed input.
Rat parse_rat(const std::string& text);

/// Formats a rational canonically as "p/q" with q >= 1 and gcd(|p|,q) = 1.
/// Integers are still written with an explicit denominator ("3/1") so that
/// emitted files round-trip through parse_rat without ambiguity.
std::string rat_str(const Rat& x);

/// Floor / ceiling as exact integers.
Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

/// Convenience: rat_floor / rat_ceil narrowed to long. Throws InputError if
/// the result does not fit (never the case at the library's ground-set
/// scale, but checked anyway).
long rat_floor_long(const Rat& x);
long rat_ceil_long(const Rat& x);

/// True if x is an integer.
bool rat_is_integer(const Rat& x);

/// Sum of a vector.
Rat rat_sum(const RatVec& xs);

}  // namespace rml

#endif  // RML_RATIONAL_HPP_
