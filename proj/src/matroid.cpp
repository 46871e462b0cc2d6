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

#include "rml/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rml {

Matroid Matroid::uniform(GroundSet g, int rank) {
  if (rank < 0 || rank > g.size()) {
    throw InputError("uniform matroid rank must be in [0, n]");
  }
  Matroid m(std::move(g), MatroidKind::kUniform);
  m.uniform_rank_ = rank;
  return m;
}

Matroid Matroid::partition(GroundSet g, std::vector<Mask> parts,
                           std::vector<int> capacities) {
  if (parts.size() != capacities.size()) {
    throw InputError("partition matroid: parts/capacities size mismatch");
  }
  Mask seen = 0;
  for (Mask p : parts) {
    g.check_mask(p);
    if (p == 0) throw InputError("partition matroid: empty part");
    if ((p & seen) != 0) throw InputError("partition matroid: parts overlap");
    seen |= p;
  }
  if (seen != g.full_mask()) {
    throw InputError("partition matroid: parts do not cover the ground set");
  }
  for (int c : capacities) {
    if (c < 0) throw InputError("partition matroid: negative capacity");
  }
  Matroid m(std::move(g), MatroidKind::kPartition);
  m.parts_ = std::move(parts);
  m.capacities_ = std::move(capacities);
  return m;
}

Matroid Matroid::explicit_table(GroundSet g, std::vector<int> table) {
  if (g.size() > 16) {
    throw InputError("explicit rank tables are limited to 16 elements");
  }
  if (table.size() != g.num_subsets()) {
    throw InputError("explicit rank table has wrong size");
  }
  Matroid m(std::move(g), MatroidKind::kExplicit);
  m.table_ = std::move(table);
  AxiomReport rep = check_rank_axioms(m);
  if (!rep.pass) {
    throw InputError("explicit rank table violates " + rep.axiom + ": " +
                     rep.detail);
  }
  return m;
}

int Matroid::rank(Mask a) const {
  ground_.check_mask(a);
  switch (kind_) {
    case MatroidKind::kUniform:
      return std::min(popcount(a), uniform_rank_);
    case MatroidKind::kPartition:
    case MatroidKind::kStar: {
      int r = 0;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        r += std::min(popcount(a & parts_[i]), capacities_[i]);
      }
      return r;
    }
    case MatroidKind::kExplicit:
      return table_[a];
  }
  throw InvariantError("unknown matroid kind");
}

bool Matroid::loopless() const {
  for (int v = 0; v < ground_.size(); ++v) {
    if (rank(Mask{1} << v) != 1) return false;
  }
  return true;
}

namespace {

AxiomReport fail(std::string axiom, Mask a, Mask b, const GroundSet& g,
                 std::string extra = "") {
  AxiomReport rep;
  rep.pass = false;
  rep.axiom = std::move(axiom);
  rep.witness_a = a;
  rep.witness_b = b;
  rep.detail = "A=" + g.subset_str(a) + " B=" + g.subset_str(b) +
               (extra.empty() ? "" : " (" + extra + ")");
  return rep;
}

}  // namespace

AxiomReport check_rank_axioms(const Matroid& m) {
  const GroundSet& g = m.ground();
  const int n = g.size();
  if (n > 16) {
    throw InputError("rank axiom check is limited to 16 elements");
  }
  const Mask full = g.full_mask();
  if (m.rank(0) != 0) {
    return fail("normalization", 0, 0, g, "rk(empty) != 0");
  }
  // Monotone unit increase, single-element form. Together with
  // normalization this implies 0 <= rk(A) <= |A| everywhere.
  for (Mask a = 0; a <= full; ++a) {
    const int ra = m.rank(a);
    for (int v = 0; v < n; ++v) {
      if (has_element(a, v)) continue;
      const Mask av = a | (Mask{1} << v);
      const int rav = m.rank(av);
      if (rav < ra) return fail("monotonicity", a, av, g);
      if (rav > ra + 1) return fail("unit increase", a, av, g);
    }
  }
  if (n <= 10) {
    // Exhaustive submodularity over all pairs.
    for (Mask a = 0; a <= full; ++a) {
      for (Mask b = a; b <= full; ++b) {
        if (m.rank(a) + m.rank(b) < m.rank(a | b) + m.rank(a & b)) {
          return fail("submodularity", a, b, g);
        }
      }
    }
  } else {
    // Local form: rk(A+u) + rk(A+v) >= rk(A+u+v) + rk(A) for u != v not in
    // A. Under monotone unit increase this is equivalent to submodularity
    // on all pairs (telescope B \ A one element at a time).
    for (Mask a = 0; a <= full; ++a) {
      const int ra = m.rank(a);
      for (int u = 0; u < n; ++u) {
        if (has_element(a, u)) continue;
        const Mask au = a | (Mask{1} << u);
        const int rau = m.rank(au);
        for (int v = u + 1; v < n; ++v) {
          if (has_element(a, v)) continue;
          const Mask av = a | (Mask{1} << v);
          if (rau + m.rank(av) < m.rank(au | av) + ra) {
            return fail("submodularity", au, av, g, "local witness");
          }
        }
      }
    }
  }
  return AxiomReport{};
}

void Hypergraph::validate() const {
  if (arity < 2) throw InputError("hypergraph arity must be at least 2");
  if (edges.empty() || edges.size() > GroundSet::kMaxElements) {
    throw InputError("hypergraph must have between 1 and 24 edges");
  }
  std::set<std::vector<int>> distinct;
  for (const auto& e : edges) {
    if (static_cast<int>(e.size()) != arity) {
      throw InputError("hypergraph edge has wrong arity");
    }
    for (int v : e) {
      if (v < 0) throw InputError("negative vertex id in hypergraph edge");
    }
    if (!distinct.insert(e).second) {
      throw InputError("duplicate hypergraph edge");
    }
  }
}

bool Hypergraph::edges_disjoint(int j, int l) const {
  for (int i = 0; i < arity; ++i) {
    if (edges[j][i] == edges[l][i]) return false;
  }
  return true;
}

bool Hypergraph::is_matching(Mask edge_set) const {
  const std::vector<int> js = mask_elements(edge_set);
  for (std::size_t x = 0; x < js.size(); ++x) {
    for (std::size_t y = x + 1; y < js.size(); ++y) {
      if (!edges_disjoint(js[x], js[y])) return false;
    }
  }
  return true;
}

std::vector<Matroid> star_matroids(const Hypergraph& h) {
  h.validate();
  const int ne = static_cast<int>(h.edges.size());
  GroundSet g(ne);
  std::vector<Matroid> out;
  out.reserve(h.arity);
  for (int i = 0; i < h.arity; ++i) {
    std::map<int, Mask> stars;  // side-i vertex -> edges through it
    for (int j = 0; j < ne; ++j) {
      stars[h.edges[j][i]] |= Mask{1} << j;
    }
    Matroid m(g, MatroidKind::kStar);
    for (const auto& [vertex, edge_mask] : stars) {
      m.parts_.push_back(edge_mask);
      m.capacities_.push_back(1);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace rml
