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

#include "rml/rainbow.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>

namespace rml {

std::vector<Mask> RainbowInstance::supports() const {
  std::vector<Mask> out;
  out.reserve(functions.size());
  for (const RatVec& f : functions) {
    Mask s = 0;
    for (std::size_t v = 0; v < f.size(); ++v) {
      if (f[v] != 0) s |= Mask{1} << v;
    }
    out.push_back(s);
  }
  return out;
}

InstanceReport validate_instance(const RainbowInstance& inst) {
  InstanceReport rep;
  auto issue = [&rep](std::string text) {
    rep.valid = false;
    rep.issues.push_back(std::move(text));
  };
  const GroundSet& g = inst.sys.ground();
  const std::size_t n = g.size();
  if (!inst.sys.weights().all_ones()) {
    issue("weights must be identically one for rainbow instances");
  }
  if (inst.k <= 0) issue("k must be positive");
  const long need =
      static_cast<long>(inst.sys.r()) * rat_ceil_long(inst.k) -
      static_cast<long>(inst.sys.r()) + 1;
  if (static_cast<long>(inst.functions.size()) < std::max(1L, need)) {
    issue("instance has " + std::to_string(inst.functions.size()) +
          " functions; the guarantee threshold is " + std::to_string(need));
  }
  std::vector<SkewPolytope> regions;
  for (std::size_t i = 0; i < inst.sys.r(); ++i) {
    regions.emplace_back(inst.sys.matroid(i),
                         SetFunction::constant(g, Rat(1)));
  }
  for (std::size_t j = 0; j < inst.functions.size(); ++j) {
    const RatVec& f = inst.functions[j];
    const std::string tag = "function " + std::to_string(j);
    if (f.size() != n) {
      issue(tag + " has the wrong length");
      continue;
    }
    bool fits = true;
    for (std::size_t i = 0; i < regions.size(); ++i) {
      const MembershipReport m = membership(f, regions[i]);
      if (!m.member) {
        fits = false;
        issue(tag + " is outside matroid polytope " + std::to_string(i) +
              (m.negative_element
                   ? " (negative at element " +
                         std::to_string(*m.negative_element) + ")"
                   : " (violates " + g.subset_str(*m.violated_set) + ")"));
      }
    }
    if (fits && rat_sum(f) < inst.k) issue(tag + " has total below k");
  }
  return rep;
}

namespace {

struct Searcher {
  const RainbowInstance& inst;
  std::vector<Mask> supports;
  std::vector<Mask> suffix_union;
  RatVec ones;
  std::unordered_map<Mask, Rat> memo;
  RainbowResult result;

  explicit Searcher(const RainbowInstance& instance) : inst(instance) {
    supports = inst.supports();
    const std::size_t d = supports.size();
    suffix_union.assign(d + 1, 0);
    for (std::size_t j = d; j-- > 0;) {
      suffix_union[j] = suffix_union[j + 1] | supports[j];
    }
    ones.assign(inst.sys.ground().size(), Rat(1));
  }

  const Rat& value(Mask u) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    return memo.emplace(u, nu_star(inst.sys, u, ones).first).first->second;
  }

  bool dfs(std::size_t j, Mask chosen,
           std::vector<std::pair<std::size_t, int>>* picks) {
    if (value(chosen) >= inst.k) {
      result.choice = *picks;
      result.rainbow = chosen;
      auto [val, f] = nu_star(inst.sys, chosen, ones);
      result.witness = std::move(f);
      result.witness_total = std::move(val);
      return true;
    }
    if (j == supports.size()) return false;
    if (value(chosen | suffix_union[j]) < inst.k) return false;  // prune
    for (int v : mask_elements(supports[j] & ~chosen)) {
      picks->emplace_back(j, v);
      if (dfs(j + 1, chosen | (Mask{1} << v), picks)) return true;
      picks->pop_back();
    }
    return dfs(j + 1, chosen, picks);  // skipping this function comes last
  }
};

}  // namespace

RainbowResult find_rainbow(const RainbowInstance& inst) {
  const InstanceReport rep = validate_instance(inst);
  if (!rep.valid) {
    std::string msg = "invalid rainbow instance:";
    for (const std::string& s : rep.issues) msg += "\n  " + s;
    throw InputError(msg);
  }
  Searcher s(inst);
  std::vector<std::pair<std::size_t, int>> picks;
  if (!s.dfs(0, 0, &picks)) {
    throw InvariantError(
        "rainbow search exhausted on a valid instance (r=" +
        std::to_string(inst.sys.r()) + ", k=" + rat_str(inst.k) +
        ", d=" + std::to_string(inst.functions.size()) +
        "); this contradicts the existence guarantee");
  }
  return std::move(s.result);
}

std::optional<std::vector<std::pair<int, int>>> find_integral_rainbow(
    const Hypergraph& h, const std::vector<std::vector<int>>& matchings,
    int k) {
  h.validate();
  if (k < 0) throw InputError("rainbow matching size must be nonnegative");
  const int ne = static_cast<int>(h.edges.size());
  for (const auto& m : matchings) {
    Mask mask = 0;
    for (int e : m) {
      if (e < 0 || e >= ne) throw InputError("edge index out of range");
      mask |= Mask{1} << e;
    }
    if (!h.is_matching(mask)) {
      throw InputError("a listed edge set is not a matching");
    }
  }
  std::vector<std::pair<int, int>> picks;
  // Choose-or-skip over matchings; edges must stay pairwise disjoint.
  auto dfs = [&](auto&& self, std::size_t j, int still) -> bool {
    if (still == 0) return true;
    if (j == matchings.size() ||
        static_cast<int>(matchings.size() - j) < still) {
      return false;
    }
    for (int e : matchings[j]) {
      bool ok = true;
      for (const auto& [mj, me] : picks) {
        if (!h.edges_disjoint(me, e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      picks.emplace_back(static_cast<int>(j), e);
      if (self(self, j + 1, still - 1)) return true;
      picks.pop_back();
    }
    return self(self, j + 1, still);
  };
  if (dfs(dfs, 0, k)) return picks;
  return std::nullopt;
}

std::vector<int> kz_rainbow(const std::vector<std::vector<int>>& sets,
                            const Matroid& m1, const Matroid& m2) {
  if (!(m1.ground() == m2.ground())) {
    throw InputError("kz_rainbow: ground set mismatch");
  }
  const GroundSet& g = m1.ground();
  if (sets.empty() || sets[0].empty()) {
    throw InputError("kz_rainbow needs nonempty independent sets");
  }
  const int k = static_cast<int>(sets[0].size());
  if (static_cast<int>(sets.size()) < 2 * k - 1) {
    throw InputError("kz_rainbow needs at least 2k-1 sets");
  }
  std::vector<RatVec> functions;
  for (const std::vector<int>& s : sets) {
    if (static_cast<int>(s.size()) != k) {
      throw InputError("kz_rainbow sets must all have size k");
    }
    const Mask mask = elements_mask(s);
    g.check_mask(mask);
    if (popcount(mask) != k) throw InputError("kz_rainbow set has repeats");
    if (m1.rank(mask) != k || m2.rank(mask) != k) {
      throw InputError("kz_rainbow sets must be independent in both matroids");
    }
    RatVec f(g.size(), Rat(0));
    for (int v : s) f[v] = 1;
    functions.push_back(std::move(f));
  }
  RainbowInstance inst{IntersectionSystem::unit({m1, m2}), Rat(k),
                       std::move(functions)};
  const RainbowResult rr = find_rainbow(inst);
  const RatVec g2 = round_two_matroids(rr.witness, m1, m2);
  std::vector<int> out;
  for (std::size_t v = 0; v < g2.size() && static_cast<int>(out.size()) < k;
       ++v) {
    if (g2[v] == 1) out.push_back(static_cast<int>(v));
  }
  const Mask picked = elements_mask(out);
  if (static_cast<int>(out.size()) != k || m1.rank(picked) != k ||
      m2.rank(picked) != k) {
    throw InvariantError("rounded rainbow set lost independence");
  }
  return out;
}

namespace {

RainbowInstance indicator_instance(const Hypergraph& h,
                                   const std::vector<std::vector<int>>& sets,
                                   int k) {
  std::vector<RatVec> functions;
  for (const auto& s : sets) {
    RatVec f(h.edges.size(), Rat(0));
    for (int e : s) f[e] = 1;
    functions.push_back(std::move(f));
  }
  return RainbowInstance{IntersectionSystem::unit(star_matroids(h)), Rat(k),
                         std::move(functions)};
}

// The cycle C_{2k} as a bipartite graph: edge 2t = (t, t), edge 2t + 1 =
// (t, t + 1 mod k); the odd edges and the even edges are its two perfect
// matchings.
CatalogEntry drisko_entry(int k) {
  Hypergraph h;
  h.arity = 2;
  std::vector<int> even, odd;
  for (int t = 0; t < k; ++t) {
    h.edges.push_back({t, t});
    even.push_back(2 * t);
    h.edges.push_back({t, (t + 1) % k});
    odd.push_back(2 * t + 1);
  }
  std::vector<std::vector<int>> ms;
  for (int c = 0; c < k; ++c) ms.push_back(odd);
  for (int c = 0; c < k - 1; ++c) ms.push_back(even);
  return CatalogEntry{
      "drisko-k" + std::to_string(k),
      "cycle C_" + std::to_string(2 * k) + " with " + std::to_string(k) +
          " odd + " + std::to_string(k - 1) +
          " even matchings (tight count 2k-1)",
      h, ms, indicator_instance(h, ms, k)};
}

}  // namespace

std::vector<CatalogEntry> canonical_instances() {
  std::vector<CatalogEntry> out;
  {
    // All axis-triples of the 2x2x2 grid; edge index 4x + 2y + z. The
    // perfect matchings are the antipodal pairs {p, 7-p}: two triples are
    // disjoint exactly when they differ in every coordinate.
    Hypergraph h;
    h.arity = 3;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        for (int z = 0; z < 2; ++z) h.edges.push_back({x, y, z});
      }
    }
    std::vector<std::vector<int>> ms;
    for (int p = 0; p < 4; ++p) ms.push_back({p, 7 - p});
    out.push_back(CatalogEntry{
        "cube-2x2x2",
        "2x2x2 triple grid, 4 antipodal matchings; fractional rainbow "
        "reaches 2 but no integral rainbow matching of size 2 exists",
        h, ms, indicator_instance(h, ms, 2)});
  }
  out.push_back(drisko_entry(2));
  out.push_back(drisko_entry(3));
  {
    // K_{2,2}: edge (i, j) at index 2i + j; sets [PM1, PM2, PM1].
    Hypergraph h;
    h.arity = 2;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) h.edges.push_back({i, j});
    }
    std::vector<std::vector<int>> ms = {{0, 3}, {1, 2}, {0, 3}};
    out.push_back(CatalogEntry{
        "kz-k2", "K_{2,2} with sets [PM1, PM2, PM1] (two-matroid rounding)",
        h, ms, indicator_instance(h, ms, 2)});
  }
  {
    // K_{3,3}: edge (i, j) at index 3i + j; the three diagonal matchings
    // D_t = {(i, i + t mod 3)} plus two transpositions.
    Hypergraph h;
    h.arity = 2;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) h.edges.push_back({i, j});
    }
    std::vector<std::vector<int>> ms;
    for (int t = 0; t < 3; ++t) {
      std::vector<int> d;
      for (int i = 0; i < 3; ++i) d.push_back(3 * i + (i + t) % 3);
      ms.push_back(d);
    }
    ms.push_back({1, 3, 8});  // (0,1) (1,0) (2,2)
    ms.push_back({0, 5, 7});  // (0,0) (1,2) (2,1)
    out.push_back(CatalogEntry{
        "kz-k3", "K_{3,3} with three diagonals and two transpositions", h,
        ms, indicator_instance(h, ms, 3)});
  }
  return out;
}

RainbowInstance random_instance(std::uint64_t seed, std::size_t r, int k,
                                int n) {
  if (r < 1 || k < 1) throw InputError("random_instance needs r, k >= 1");
  GroundSet g(n);
  std::mt19937_64 rng(seed);
  std::vector<Matroid> matroids;
  for (std::size_t i = 0; i < r; ++i) {
    if (rng() % 2 == 0) {
      matroids.push_back(
          Matroid::uniform(g, 1 + static_cast<int>(rng() % n)));
    } else {
      // Random partition with unit-or-two capacities; every element kept
      // in a capacity >= 1 part, so the matroid is loopless.
      const int nparts = 1 + static_cast<int>(rng() % n);
      std::vector<Mask> parts(nparts, 0);
      for (int v = 0; v < n; ++v) {
        parts[rng() % nparts] |= Mask{1} << v;
      }
      std::vector<Mask> kept;
      std::vector<int> caps;
      for (Mask p : parts) {
        if (p != 0) {
          kept.push_back(p);
          caps.push_back(1 + static_cast<int>(rng() % 2));
        }
      }
      matroids.push_back(Matroid::partition(g, kept, caps));
    }
  }
  IntersectionSystem sys = IntersectionSystem::unit(matroids);
  const RatVec ones(n, Rat(1));
  if (nu_star(sys, g.full_mask(), ones).first < k) {
    throw InputError(
        "random_instance: nu*(V) < k for these matroids; raise n or lower "
        "k");
  }
  const std::size_t d = r * k - r + 1;
  std::vector<RatVec> functions;
  while (functions.size() < d) {
    // Random support sets, falling back to V, so the functions differ.
    RatVec f;
    for (int attempt = 0; attempt < 32; ++attempt) {
      Mask w = 0;
      for (int v = 0; v < n; ++v) {
        if (rng() % 4 != 0) w |= Mask{1} << v;
      }
      if (attempt == 31) w = g.full_mask();
      auto [val, cand] = nu_star(sys, w, ones);
      if (val >= k) {
        f = std::move(cand);
        break;
      }
    }
    functions.push_back(std::move(f));
  }
  return RainbowInstance{std::move(sys), Rat(k), std::move(functions)};
}

}  // namespace rml
