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

#include "rml/collapse.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace rml {

namespace {

constexpr int kEngineCap = 12;

void check_spec(const ComplexSpec& spec) {
  const GroundSet& g = spec.sys.ground();
  if (g.size() > kEngineCap) {
    throw InputError("collapse engine operations are limited to 12 elements");
  }
  if (spec.a.size() != static_cast<std::size_t>(g.size())) {
    throw InputError("weight vector size != ground set size");
  }
  for (const Rat& av : spec.a) {
    if (av <= 0) throw InputError("element weights must be positive");
  }
}

// Face set and nu* values of the current complex. Downward closure lets
// the sweep solve only faces and their immediate boundary: a mask is
// evaluated only if all its one-element-smaller subsets are faces.
struct Epoch {
  std::vector<char> is_face;
  RatVec value;  // valid where is_face
  std::vector<Mask> faces;
  std::optional<Rat> kbar;
};

Epoch sweep(const ComplexSpec& spec) {
  check_spec(spec);
  const GroundSet& g = spec.sys.ground();
  const Mask full = g.full_mask();
  Epoch e;
  e.is_face.assign(g.num_subsets(), 0);
  e.value.resize(g.num_subsets());
  for (Mask m = 0; m <= full; ++m) {
    bool candidate = true;
    for (Mask bits = m; bits != 0; bits &= bits - 1) {
      if (!e.is_face[m ^ (bits & (~bits + 1))]) {
        candidate = false;
        break;
      }
    }
    if (!candidate) continue;
    Rat val = nu_star(spec.sys, m, spec.a).first;
    if (val < spec.k) {
      e.is_face[m] = 1;
      e.faces.push_back(m);
      if (!e.kbar || val > *e.kbar) e.kbar = val;
      e.value[m] = std::move(val);
    }
  }
  return e;
}

bool all_faces_dual_unique(const ComplexSpec& spec, const Epoch& e) {
  for (Mask w : e.faces) {
    if (!is_dual_unique(spec.sys, w, spec.a)) return false;
  }
  return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

ComplexSpec with_weights(const ComplexSpec& spec, PdsTuple b) {
  std::vector<Matroid> ms;
  ms.reserve(spec.sys.r());
  for (std::size_t i = 0; i < spec.sys.r(); ++i) {
    ms.push_back(spec.sys.matroid(i));
  }
  return ComplexSpec{IntersectionSystem(std::move(ms), std::move(b)), spec.a,
                     spec.k};
}

struct SpecEpoch {
  ComplexSpec spec;
  Epoch epoch;
};

// Perturbs b (face-preservingly) until every face has a unique dual
// optimum. `force` skips the already-generic early-out, for retries after
// a facet assertion failed even though the uniqueness screen passed.
SpecEpoch make_generic(ComplexSpec spec, Epoch e, std::uint64_t seed,
                       std::uint64_t* salt, bool force) {
  if (e.faces.empty() || (!force && all_faces_dual_unique(spec, e))) {
    return SpecEpoch{std::move(spec), std::move(e)};
  }
  // The perturbation only raises nu* values (b grows off V), so faces can
  // only leave; a small enough epsilon keeps them all strictly below k.
  Rat eps = (spec.k - *e.kbar) / 4;
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    PdsTuple b2 = [&]() -> PdsTuple {
      try {
        return perturb_tuple(spec.sys.weights(), eps,
                             mix_seed(seed, (*salt)++));
      } catch (const InputError&) {
        return spec.sys.weights();  // failed draw; retry at smaller eps
      }
    }();
    ComplexSpec cand = with_weights(spec, std::move(b2));
    Epoch e2 = sweep(cand);
    if (e2.faces == e.faces && all_faces_dual_unique(cand, e2)) {
      return SpecEpoch{std::move(cand), std::move(e2)};
    }
  }
  throw GenericityError(
      "no face-preserving perturbation made every dual optimum unique");
}

// Inclusion-minimal face attaining kbar; smallest mask on ties (the
// ascending scan returns the smallest-mask minimal attainer).
Mask pick_from_epoch(const Epoch& e) {
  std::vector<Mask> attainers;
  for (Mask w : e.faces) {
    if (e.value[w] == *e.kbar) attainers.push_back(w);
  }
  for (Mask w : attainers) {
    bool minimal = true;
    for (Mask w2 : attainers) {
      if (w2 != w && subset_of(w2, w)) {
        minimal = false;
        break;
      }
    }
    if (minimal) return w;
  }
  throw InvariantError("no minimal attainer in a nonempty attainer set");
}

Mask facet_from_epoch(const ComplexSpec& spec, const Epoch& e, Mask w) {
  const GroundSet& g = spec.sys.ground();
  Mask f = w;
  for (int v = 0; v < g.size(); ++v) {
    if (has_element(w, v)) continue;
    const Mask wv = w | (Mask{1} << v);
    if (e.is_face[wv]) f |= Mask{1} << v;
  }
  if (!e.is_face[f]) {
    throw GenericityError("W cup W+ is not itself a face");
  }
  for (Mask gface : e.faces) {
    if (subset_of(w, gface) && !subset_of(gface, f)) {
      throw GenericityError("a face containing W escapes W cup W+");
    }
  }
  if (e.value[f] != *e.kbar) {
    throw GenericityError("the facet does not attain kbar");
  }
  // Independent literal check that tau*(F) agrees (exercises the dual
  // program; a mismatch here is a duality bug, not a genericity failure).
  auto [tv, h] = tau_star(spec.sys, f, spec.a);
  if (tv != *e.kbar || h.total_cost(spec.sys) != tv) {
    throw InvariantError("tau*(facet) disagrees with nu*");
  }
  return f;
}

SpecEpoch reweight_impl(const ComplexSpec& spec, const Epoch& e, Mask w,
                        const Rat& epsilon) {
  if (epsilon <= 0) throw InputError("reweight epsilon must be positive");
  const GroundSet& g = spec.sys.ground();
  g.check_mask(w);
  if (!e.is_face[w]) throw InputError("reweight collapsor must be a face");
  if (e.value[w] != *e.kbar) {
    throw InputError("reweight collapsor must attain kbar");
  }
  std::vector<Mask> expected;
  for (Mask gface : e.faces) {
    if (!subset_of(w, gface)) expected.push_back(gface);
  }
  // Keep the lowered weights positive.
  Rat eps = epsilon;
  for (int v = 0; v < g.size(); ++v) {
    if (!has_element(w, v) && spec.a[v] / 2 < eps) eps = spec.a[v] / 2;
  }
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    ComplexSpec cand{spec.sys, spec.a, *e.kbar};
    for (int v = 0; v < g.size(); ++v) {
      if (!has_element(w, v)) cand.a[v] -= eps;
    }
    Epoch e2 = sweep(cand);
    if (e2.faces == expected) return SpecEpoch{std::move(cand), std::move(e2)};
  }
  throw GenericityError(
      "reweighting never matched the predicted face set (is W an "
      "inclusion-minimal attainer?)");
}

Int step_bound(std::size_t r, const Rat& kbar, const Rat& amin,
               const Rat& bmin) {
  const Rat ratio = kbar / (amin * bmin);
  if (ratio < 0) return 0;
  return Int(r) * rat_floor(ratio);
}

}  // namespace

std::vector<Mask> enumerate_faces(const ComplexSpec& spec) {
  return sweep(spec).faces;
}

std::optional<Rat> compute_kbar(const ComplexSpec& spec) {
  return sweep(spec).kbar;
}

ComplexSpec ensure_genericity(const ComplexSpec& spec, std::uint64_t seed) {
  std::uint64_t salt = 0;
  return make_generic(spec, sweep(spec), seed, &salt, /*force=*/false).spec;
}

Mask pick_collapsor(const ComplexSpec& spec) {
  Epoch e = sweep(spec);
  if (e.faces.empty()) throw InputError("the complex is empty");
  return pick_from_epoch(e);
}

Mask unique_facet(const ComplexSpec& spec, Mask w) {
  Epoch e = sweep(spec);
  spec.sys.ground().check_mask(w);
  if (!e.is_face[w]) throw InputError("W is not a face");
  return facet_from_epoch(spec, e, w);
}

ComplexSpec reweight(const ComplexSpec& spec, Mask w, const Rat& epsilon) {
  Epoch e = sweep(spec);
  if (e.faces.empty()) throw InputError("the complex is empty");
  return reweight_impl(spec, e, w, epsilon).spec;
}

CollapseCertificate run_collapse(const ComplexSpec& spec0,
                                 std::uint64_t seed) {
  check_spec(spec0);
  const GroundSet& g = spec0.sys.ground();
  CollapseCertificate cert;
  cert.n = g.size();
  cert.r = spec0.sys.r();
  cert.k = spec0.k;
  cert.b_min = spec0.sys.weights().min_total();
  cert.a0 = spec0.a;
  const Rat amin0 = *std::min_element(spec0.a.begin(), spec0.a.end());
  {
    const Rat ratio = spec0.k / (amin0 * cert.b_min);
    long d = ratio <= 0 ? 0
                        : static_cast<long>(cert.r) * rat_ceil_long(ratio) -
                              static_cast<long>(cert.r);
    cert.dim_bound = static_cast<int>(std::max(0L, d));
  }

  ComplexSpec spec = spec0;
  Epoch e = sweep(spec);
  std::uint64_t salt = 0;
  Rat eps_next;          // reweight epsilon schedule
  std::optional<Rat> prev_kbar;

  for (int epoch = 0; !e.faces.empty(); ++epoch) {
    if (epoch > static_cast<int>(g.num_subsets()) + 4) {
      throw InvariantError("collapse loop exceeded the face budget");
    }
    SpecEpoch se = make_generic(std::move(spec), std::move(e), seed, &salt,
                                /*force=*/false);
    spec = std::move(se.spec);
    e = std::move(se.epoch);

    Mask w = 0, f = 0;
    bool stepped = false;
    for (int retry = 0; retry < 8 && !stepped; ++retry) {
      w = pick_from_epoch(e);
      try {
        f = facet_from_epoch(spec, e, w);
        stepped = true;
      } catch (const GenericityError&) {
        if (retry == 7) throw;
        SpecEpoch fresh = make_generic(std::move(spec), std::move(e), seed,
                                       &salt, /*force=*/true);
        spec = std::move(fresh.spec);
        e = std::move(fresh.epoch);
      }
    }

    // The retries may have re-perturbed b, so read kbar only now.
    const Rat kbar = *e.kbar;
    if (epoch == 0) {
      // Cumulative reweighting budget: keeping the total drift of min(a)
      // under both amin0/2 and amin0 * (k - kbar_1) / (2k) guarantees
      // kbar_t < ceil(k / (amin0 b_min)) * min(a_t) * b_min at every later
      // step, so the per-step size bound can never exceed dim_bound.
      const Rat budget = std::min(
          Rat(amin0 / 2), Rat(amin0 * (spec.k - kbar) / (2 * spec.k)));
      eps_next = budget / 2;
    }
    if (prev_kbar && kbar >= *prev_kbar) {
      throw InvariantError("kbar failed to decrease across epochs");
    }
    prev_kbar = kbar;

    const Rat amin_t = *std::min_element(spec.a.begin(), spec.a.end());
    if (Int(popcount(w)) > step_bound(cert.r, kbar, amin_t, cert.b_min) ||
        popcount(w) > cert.dim_bound) {
      throw InvariantError("collapsor exceeds its size bound");
    }
    cert.steps.push_back(CollapseStep{w, f, spec.a, kbar});

    SpecEpoch next = reweight_impl(spec, e, w, eps_next);
    eps_next /= 2;
    spec = std::move(next.spec);
    e = std::move(next.epoch);
  }
  cert.final_empty = true;
  return cert;
}

namespace {

VerifyResult reject(int step, std::string reason) {
  VerifyResult res;
  res.accepted = false;
  res.failed_step = step;
  res.reason = std::move(reason);
  return res;
}

}  // namespace

VerifyResult verify_certificate(const std::vector<Mask>& faces,
                                const CollapseCertificate& cert) {
  if (cert.b_min <= 0) return reject(-1, "certificate b_min must be positive");
  std::set<Mask> live(faces.begin(), faces.end());
  for (std::size_t idx = 0; idx < cert.steps.size(); ++idx) {
    const CollapseStep& s = cert.steps[idx];
    const int step = static_cast<int>(idx);
    if (!live.count(s.collapsor)) {
      return reject(step, "collapsor is not a live face");
    }
    if (popcount(s.collapsor) > cert.dim_bound) {
      return reject(step, "collapsor exceeds the dimension bound");
    }
    if (s.a_snapshot.size() != static_cast<std::size_t>(cert.n)) {
      return reject(step, "weight snapshot has the wrong size");
    }
    Rat amin = s.a_snapshot[0];
    for (const Rat& av : s.a_snapshot) amin = std::min(amin, av);
    if (amin <= 0) return reject(step, "weight snapshot not positive");
    if (Int(popcount(s.collapsor)) >
        Int(cert.r) * rat_floor(s.kbar / (amin * cert.b_min))) {
      return reject(step, "collapsor exceeds its recorded kbar bound");
    }
    if (!live.count(s.facet) || !subset_of(s.collapsor, s.facet)) {
      return reject(step, "facet is not a live superset of the collapsor");
    }
    for (Mask gface : live) {
      if (subset_of(s.collapsor, gface) && !subset_of(gface, s.facet)) {
        return reject(step, "a second maximal face contains the collapsor");
      }
    }
    for (auto it = live.begin(); it != live.end();) {
      if (subset_of(s.collapsor, *it)) {
        it = live.erase(it);
      } else {
        ++it;
      }
    }
  }
  if (!live.empty()) return reject(-1, "replay left faces uncollapsed");
  if (!cert.final_empty) return reject(-1, "final-empty marker missing");
  VerifyResult res;
  res.accepted = true;
  return res;
}

bool greedy_collapsibility_probe(std::vector<Mask> faces, int d) {
  std::set<Mask> live(faces.begin(), faces.end());
  while (!live.empty()) {
    // Maximal live faces.
    std::vector<Mask> maximal;
    for (Mask gface : live) {
      bool is_max = true;
      for (Mask other : live) {
        if (other != gface && subset_of(gface, other)) {
          is_max = false;
          break;
        }
      }
      if (is_max) maximal.push_back(gface);
    }
    // Smallest (size, mask) face of size <= d under a unique maximal face.
    bool found = false;
    Mask chosen = 0;
    int chosen_size = INT_MAX;
    for (Mask s : live) {
      const int size = popcount(s);
      if (size > d || size > chosen_size ||
          (size == chosen_size && found && s >= chosen)) {
        continue;
      }
      int covers = 0;
      for (Mask m : maximal) {
        if (subset_of(s, m) && ++covers > 1) break;
      }
      if (covers == 1) {
        found = true;
        chosen = s;
        chosen_size = size;
      }
    }
    if (!found) return false;
    for (auto it = live.begin(); it != live.end();) {
      if (subset_of(chosen, *it)) {
        it = live.erase(it);
      } else {
        ++it;
      }
    }
  }
  return true;
}

}  // namespace rml
