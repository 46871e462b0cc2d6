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

#ifndef RML_COLLAPSE_HPP_
#define RML_COLLAPSE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rml/polytope.hpp"

namespace rml {

/// The simplicial complex X_{a,b,k} = { W subset V : nu*_{a,b}(W) < k }.
/// It is downward closed because nu* is monotone in W. Weights a must be
/// entrywise positive.
struct ComplexSpec {
  IntersectionSystem sys;
  RatVec a;
  Rat k;
};

/// One elementary collapse: every face containing `collapsor` was removed,
/// and at the time of removal `facet` was the unique maximal face
/// containing it. a_snapshot and kbar record the weights and the maximal
/// face value in force at that step, so the size bound
/// |collapsor| <= r * floor(kbar / (min(a_snapshot) * b_min)) can be
/// re-checked from the certificate alone.
struct CollapseStep {
  Mask collapsor = 0;
  Mask facet = 0;
  RatVec a_snapshot;
  Rat kbar;
};

/// A complete d-collapse transcript for X_{a0,b,k}.
struct CollapseCertificate {
  int n = 0;
  std::size_t r = 0;
  Rat k;
  Rat b_min;
  RatVec a0;
  int dim_bound = 0;  // d: every collapsor has at most d elements
  std::vector<CollapseStep> steps;
  bool final_empty = false;
};

/// All faces of X, ascending by mask. Exploits downward closure: a subset
/// is only evaluated when all its one-element-smaller subsets are faces.
/// Engine operations are capped at 12 elements (InputError beyond).
std::vector<Mask> enumerate_faces(const ComplexSpec& spec);

/// kbar = max of nu* over the faces; std::nullopt signals the collapse is
/// already complete (no faces, which happens exactly when k <= 0).
std::optional<Rat> compute_kbar(const ComplexSpec& spec);

/// Returns a spec with the same face set, the same b^i(V) totals, and
/// every face's dual optimum unique (the genericity the collapse steps
/// need). The weights b are perturbed with perturb_tuple under shrinking
/// epsilon until re-enumeration confirms the face set is unchanged, the
/// per-step size bound did not grow past the declared dimension, and
/// is_dual_unique holds on every face; 64 failures raise GenericityError.
/// Deterministic in (spec, seed). No perturbation is made if the spec is
/// already generic.
ComplexSpec ensure_genericity(const ComplexSpec& spec, std::uint64_t seed);

/// The collapsor (dagger rule): among the faces attaining kbar, an
/// inclusion-minimal one; ties broken to the smallest mask. InputError if
/// the complex is empty.
Mask pick_collapsor(const ComplexSpec& spec);

/// The facet (diamond rule): F = W cup W+ where W+ = { v not in W :
/// W + v is a face }. Asserts F is a face, every face containing W is
/// inside F (so F is the unique maximal face containing W), and
/// tau*(F) == nu*(W); any failure is a GenericityError (re-perturb and
/// retry).
Mask unique_facet(const ComplexSpec& spec, Mask w);

/// The reweighting (spade rule): lowers a_v by epsilon off W (halving
/// epsilon up to 64 times) until enumeration confirms that
/// X_{a',b,kbar} is exactly X minus the faces containing W. Returns the
/// new spec (threshold kbar). W must be a face attaining kbar.
ComplexSpec reweight(const ComplexSpec& spec, Mask w, const Rat& epsilon);

/// Runs the full collapse loop: ensure genericity, pick collapsor, find
/// its facet, record the step, reweight, repeat until the complex is
/// empty. The declared dimension bound is d = max(0, r * ceil(k /
/// (min(a) * b_min)) - r); every step's collapsor is asserted against
/// both its own kbar bound and d (violations are InvariantErrors: they
/// would contradict the size bound the collapse is built on). The
/// reweighting epsilons follow a geometric budget chosen up front so the
/// drift of min(a) can never push the per-step bound past d.
/// Deterministic in (spec, seed).
CollapseCertificate run_collapse(const ComplexSpec& spec, std::uint64_t seed);

struct VerifyResult {
  bool accepted = false;
  int failed_step = -1;  // index into steps, or -1
  std::string reason;    // empty when accepted
};

/// Replays a certificate against an explicit face list, with no nu*
/// computations: each collapsor must be a present face of size at most
/// dim_bound satisfying its recorded kbar bound, contained in exactly one
/// maximal face which must equal the recorded facet; its supersets are
/// then removed. Accepts iff the replay empties the face list and the
/// final_empty marker agrees.
VerifyResult verify_certificate(const std::vector<Mask>& faces,
                                const CollapseCertificate& cert);

/// A certificate-free probe: repeatedly removes some face of size <= d
/// contained in a unique maximal face (smallest size, then smallest mask)
/// together with its supersets. True if the complex empties. Greedy, so
/// `false` does not prove non-collapsibility.
bool greedy_collapsibility_probe(std::vector<Mask> faces, int d);

}  // namespace rml

#endif  // RML_COLLAPSE_HPP_
