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

// Acceptance gate: the ten headline properties of the library, each
// re-verified against independent oracles where one exists. Prints one
// "PASS <n> <name>" or "FAIL <n> <name>" line per criterion on stdout
// (nothing else); diagnostics and timings go to stderr. Exits nonzero if
// any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "rml/chain.hpp"
#include "rml/collapse.hpp"
#include "rml/errors.hpp"
#include "rml/polytope.hpp"
#include "rml/rainbow.hpp"
#include "rml/set_function.hpp"

using namespace rml;
using rml_test::matrix_rank;
using rml_test::random_matroid;
using rml_test::random_pds;
using rml_test::random_positive_vector;

namespace {

int g_failures = 0;

// Logs a diagnostic to stderr; returns false so call sites can bail.
bool note(const std::string& msg) {
  std::cerr << "  " << msg << "\n";
  return false;
}

void run_criterion(int num, const std::string& name,
                   const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cerr << "criterion " << num << " (" << name << ") time_ms " << ms
            << "\n";
  std::cout << (ok ? "PASS " : "FAIL ") << num << " " << name << std::endl;
  if (!ok) ++g_failures;
}

const CatalogEntry& entry(const std::vector<CatalogEntry>& cat,
                          const std::string& name) {
  for (const CatalogEntry& e : cat) {
    if (e.name == name) return e;
  }
  throw InputError("catalog entry missing: " + name);
}

RatVec ones(std::size_t n) { return RatVec(n, Rat(1)); }

bool in_all_unit_polytopes(const IntersectionSystem& sys, const RatVec& f) {
  for (std::size_t i = 0; i < sys.r(); ++i) {
    SkewPolytope p(sys.matroid(i),
                   SetFunction::constant(sys.ground(), Rat(1)));
    if (!membership(f, p).member) return false;
  }
  return true;
}

// Re-verifies a rainbow search result from the definitions alone.
bool rainbow_result_ok(const RainbowInstance& inst,
                       const RainbowResult& res) {
  const GroundSet& g = inst.sys.ground();
  std::set<std::size_t> funcs;
  std::set<int> elems;
  Mask r = 0;
  std::vector<Mask> supp = inst.supports();
  for (const auto& [j, v] : res.choice) {
    if (j >= inst.functions.size()) return note("choice function out of range");
    if (!funcs.insert(j).second) return note("repeated function in choice");
    if (!elems.insert(v).second) return note("repeated element in choice");
    if (!has_element(supp[j], v)) return note("choice outside support");
    r |= Mask{1} << v;
  }
  if (r != res.rainbow) return note("rainbow mask does not match choice");
  if (res.witness.size() != static_cast<std::size_t>(g.size())) {
    return note("witness has the wrong length");
  }
  Rat total = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (res.witness[v] != 0 && !has_element(res.rainbow, v)) {
      return note("witness supported outside the rainbow set");
    }
    total += res.witness[v];
  }
  if (total != res.witness_total) return note("witness total mismatch");
  if (res.witness_total < inst.k) return note("witness total below k");
  if (!in_all_unit_polytopes(inst.sys, res.witness)) {
    return note("witness escapes a matroid polytope");
  }
  return true;
}

// 1. The 2x2x2 grid with its four antipodal perfect matchings: no
// integral rainbow matching of size 2 exists (exhaustive search), yet the
// fractional search finds a rainbow set of value exactly 2.
bool crit_cube(const std::vector<CatalogEntry>& cat) {
  const CatalogEntry& cube = entry(cat, "cube-2x2x2");
  if (find_integral_rainbow(cube.hypergraph, cube.matchings, 2)) {
    return note("unexpected integral rainbow matching of size 2");
  }
  RainbowResult res = find_rainbow(cube.instance);
  if (!rainbow_result_ok(cube.instance, res)) return false;
  if (res.witness_total != 2) return note("witness total is not 2");
  if (nu_star(cube.instance.sys, res.rainbow, ones(8)).first != 2) {
    return note("nu* of the rainbow set is not 2");
  }
  return true;
}

// 2. 2k-1 matchings of size k in a bipartite graph always yield an
// integral rainbow matching of size k (two partition matroids, rounding
// path); exercised on the k=2 and k=3 catalog instances.
bool crit_drisko(const std::vector<CatalogEntry>& cat) {
  for (const auto& [name, k] :
       std::vector<std::pair<std::string, int>>{{"drisko-k2", 2},
                                                {"drisko-k3", 3}}) {
    const CatalogEntry& e = entry(cat, name);
    const Matroid& m1 = e.instance.sys.matroid(0);
    const Matroid& m2 = e.instance.sys.matroid(1);
    std::vector<int> picked = kz_rainbow(e.matchings, m1, m2);
    if (static_cast<int>(picked.size()) != k) {
      return note(name + ": wrong rainbow size");
    }
    Mask s = 0;
    for (int v : picked) s |= Mask{1} << v;
    if (popcount(s) != k) return note(name + ": repeated elements");
    if (m1.rank(s) != k || m2.rank(s) != k) {
      return note(name + ": not independent in both matroids");
    }
    if (!e.hypergraph.is_matching(s)) {
      return note(name + ": picked edges are not disjoint");
    }
  }
  return true;
}

// 3. On 100 random valid instances (r <= 3, k <= 3, n <= 10) the search
// always finds a rainbow set of value >= k; every result is re-verified
// from the definitions.
bool crit_fuzz() {
  const std::array<std::tuple<std::size_t, int, int>, 14> combos = {{
      {1, 1, 4},  {1, 2, 5}, {1, 3, 6},  {2, 1, 5}, {2, 2, 6},
      {2, 3, 6},  {3, 1, 6}, {3, 2, 7},  {3, 3, 7}, {2, 2, 8},
      {1, 3, 10}, {2, 3, 8}, {3, 3, 8},  {2, 2, 10},
  }};
  int built = 0;
  std::uint64_t seed = 0;
  std::size_t combo = 0;
  while (built < 100) {
    if (seed > 4000) return note("seed budget exhausted before 100 builds");
    const auto [r, k, n] = combos[combo % combos.size()];
    ++combo;
    std::optional<RainbowInstance> inst;
    try {
      inst = random_instance(seed++, r, k, n);
    } catch (const InputError&) {
      continue;  // this seed's matroids admit no valid instance
    }
    InstanceReport rep = validate_instance(*inst);
    if (!rep.valid) {
      return note("generator produced an invalid instance at seed " +
                  std::to_string(seed - 1));
    }
    RainbowResult res = find_rainbow(*inst);  // InvariantError on failure
    if (!rainbow_result_ok(*inst, res)) {
      return note("bad result at seed " + std::to_string(seed - 1));
    }
    ++built;
  }
  std::cerr << "  built 100 instances from " << seed << " seeds\n";
  return true;
}

// 4. nu* equals tau* exactly on every subset of every catalog instance.
bool crit_duality(const std::vector<CatalogEntry>& cat) {
  for (const CatalogEntry& e : cat) {
    const IntersectionSystem& sys = e.instance.sys;
    const int n = sys.ground().size();
    if (n > 10) return note(e.name + ": unexpected ground size");
    const RatVec a = ones(n);
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
      const Rat primal = nu_star(sys, w, a).first;
      const Rat dual = tau_star(sys, w, a).first;
      if (primal != dual) {
        return note(e.name + ": duality gap on " +
                    sys.ground().subset_str(w));
      }
    }
  }
  return true;
}

// 5. The collapse engine empties X_{1,1,2} for the K_{2,2} system within
// collapsor size 2 and for the 2x2x2 system within collapsor size 3; the
// certificates replay cleanly against independently enumerated faces.
bool crit_collapse(const std::vector<CatalogEntry>& cat) {
  const std::array<std::tuple<std::string, int, std::uint64_t>, 2> cases = {
      {{"kz-k2", 2, 3}, {"cube-2x2x2", 3, 2}}};
  for (const auto& [name, bound, seed] : cases) {
    const CatalogEntry& e = entry(cat, name);
    const int n = e.instance.sys.ground().size();
    ComplexSpec spec{e.instance.sys, ones(n), Rat(2)};
    CollapseCertificate cert = run_collapse(spec, seed);
    if (cert.dim_bound != bound) {
      return note(name + ": dim_bound is not " + std::to_string(bound));
    }
    for (const CollapseStep& s : cert.steps) {
      if (popcount(s.collapsor) > bound) {
        return note(name + ": collapsor exceeds the bound");
      }
    }
    if (!cert.final_empty) return note(name + ": complex not emptied");
    VerifyResult vr = verify_certificate(enumerate_faces(spec), cert);
    if (!vr.accepted) {
      return note(name + ": certificate rejected at step " +
                  std::to_string(vr.failed_step) + " (" + vr.reason + ")");
    }
  }
  return true;
}

// 6. c(A) * rk(A) is submodular for every decreasing-submodular c: 1000
// random (c, matroid) pairs, exhaustive pair check each.
bool crit_product() {
  std::mt19937_64 rng(601);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + trial % 7;  // 2..8
    GroundSet g(n);
    SetFunction c = random_pds(rng, g);
    Matroid m = random_matroid(rng, g);
    ProductReport rep = check_product_submodular(c, m);
    if (!rep.precondition_ok) {
      return note("generator broke the PDS precondition: " +
                  rep.precondition_issue);
    }
    if (!rep.submodular) {
      return note("product submodularity violated at trial " +
                  std::to_string(trial));
    }
  }
  return true;
}

// 7. Chains in closed families: extracted chain length always equals the
// span dimension, itself cross-checked by plain Gaussian elimination.
bool crit_chain() {
  std::mt19937_64 rng(701);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 9;  // 2..10
    GroundSet g(n);
    const Mask full = g.full_mask();
    std::vector<Mask> seeds;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      seeds.push_back(1 + static_cast<Mask>(rng()) % full);
    }
    SetFamily fam = close_family(g, seeds);
    Chain chain = extract_chain(fam);
    if (!verify_chain(chain, fam)) {
      return note("chain verification failed at trial " +
                  std::to_string(trial));
    }
    std::vector<RatVec> rows;
    for (Mask m : fam.members) {
      RatVec row(n, Rat(0));
      for (int v : mask_elements(m)) row[v] = 1;
      rows.push_back(std::move(row));
    }
    const int rank = matrix_rank(rows);
    if (static_cast<int>(chain.size()) != span_dimension(fam) ||
        span_dimension(fam) != rank) {
      return note("chain length disagrees with the span at trial " +
                  std::to_string(trial));
    }
  }
  return true;
}

// 8. Tight families of vertex optimizers are closed under unions and
// nonempty intersections; checked exhaustively, member by member.
bool crit_tight() {
  std::mt19937_64 rng(801);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    GroundSet g(n);
    const std::size_t r = 1 + rng() % 2;
    std::vector<Matroid> ms;
    std::vector<SetFunction> ws;
    for (std::size_t i = 0; i < r; ++i) {
      ms.push_back(random_matroid(rng, g));
      ws.push_back(random_pds(rng, g));
    }
    IntersectionSystem sys(ms, PdsTuple(ws));
    const Mask w = static_cast<Mask>(rng()) % g.num_subsets();
    const RatVec a = random_positive_vector(rng, n);
    const RatVec f = nu_star(sys, w, a).second;
    for (std::size_t i = 0; i < r; ++i) {
      SkewPolytope p(ms[i], ws[i]);
      std::vector<Mask> fam = tight_sets(f, p, w);
      std::set<Mask> members(fam.begin(), fam.end());
      // Definition check: members are exactly the tight subsets of w.
      for (Mask s = 1; s < g.num_subsets(); ++s) {
        if (!subset_of(s, w)) continue;
        Rat total = 0;
        for (int v : mask_elements(s)) total += f[v];
        const bool tight = total == p.bound(s);
        if (tight != (members.count(s) > 0)) {
          return note("tight_sets misclassified a set at trial " +
                      std::to_string(trial));
        }
      }
      for (Mask x : fam) {
        for (Mask y : fam) {
          if (!members.count(x | y)) {
            return note("union escaped the family at trial " +
                        std::to_string(trial));
          }
          if ((x & y) != 0 && !members.count(x & y)) {
            return note("intersection escaped the family at trial " +
                        std::to_string(trial));
          }
        }
      }
    }
  }
  return true;
}

// 9. Two-matroid rounding: every random fractional common point rounds to
// a 0/1 common point with no smaller total, supported inside supp(f).
bool crit_round() {
  std::mt19937_64 rng(901);
  const std::array<Rat, 4> scales = {Rat(1), Rat(1, 2), Rat(2, 3),
                                     Rat(3, 4)};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6
    GroundSet g(n);
    Matroid m1 = random_matroid(rng, g);
    Matroid m2 = random_matroid(rng, g);
    IntersectionSystem sys = IntersectionSystem::unit({m1, m2});
    const Mask w = static_cast<Mask>(rng()) % g.num_subsets();
    RatVec f = nu_star(sys, w, random_positive_vector(rng, n)).second;
    const Rat scale = scales[trial % scales.size()];
    Rat f_total = 0;
    for (Rat& fv : f) {
      fv *= scale;  // scaling toward 0 stays in both polytopes
      f_total += fv;
    }
    RatVec rounded = round_two_matroids(f, m1, m2);
    Mask s = 0;
    Rat r_total = 0;
    for (int v = 0; v < n; ++v) {
      if (rounded[v] != 0 && rounded[v] != 1) {
        return note("rounded point is not 0/1 at trial " +
                    std::to_string(trial));
      }
      if (rounded[v] == 1) {
        if (f[v] == 0) {
          return note("rounded support escapes supp(f) at trial " +
                      std::to_string(trial));
        }
        s |= Mask{1} << v;
      }
      r_total += rounded[v];
    }
    if (r_total < f_total) {
      return note("rounding lost mass at trial " + std::to_string(trial));
    }
    if (m1.rank(s) != popcount(s) || m2.rank(s) != popcount(s)) {
      return note("rounded set is dependent at trial " +
                  std::to_string(trial));
    }
  }
  return true;
}

// 10. The interior construction is strictly PDS on every ground size up
// to 10, and its scaling pins the total exactly.
bool crit_interior() {
  const std::array<Rat, 3> targets = {Rat(1), Rat(7, 3), Rat(100)};
  for (int n = 1; n <= 10; ++n) {
    GroundSet g(n);
    for (const Rat& target : targets) {
      SetFunction c = interior_pds(g, target);
      PdsReport rep = check_pds(c);
      if (!rep.strictly_pds()) {
        return note("not strictly PDS at n = " + std::to_string(n));
      }
      if (c(g.full_mask()) != target) {
        return note("scaled total is off at n = " + std::to_string(n));
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<CatalogEntry> cat = canonical_instances();
  run_criterion(1, "cube-counterexample", [&] { return crit_cube(cat); });
  run_criterion(2, "drisko-rainbow", [&] { return crit_drisko(cat); });
  run_criterion(3, "rainbow-fuzz", [] { return crit_fuzz(); });
  run_criterion(4, "duality-sweep", [&] { return crit_duality(cat); });
  run_criterion(5, "collapse-certificates",
                [&] { return crit_collapse(cat); });
  run_criterion(6, "product-submodularity", [] { return crit_product(); });
  run_criterion(7, "chain-extraction", [] { return crit_chain(); });
  run_criterion(8, "tight-family-closure", [] { return crit_tight(); });
  run_criterion(9, "two-matroid-rounding", [] { return crit_round(); });
  run_criterion(10, "interior-point", [] { return crit_interior(); });
  return g_failures == 0 ? 0 : 1;
}
