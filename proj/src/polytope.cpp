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

#include "rml/polytope.hpp"

#include <algorithm>
#include <string>

namespace rml {

SkewPolytope::SkewPolytope(Matroid matroid, SetFunction c)
    : matroid_(std::move(matroid)), c_(std::move(c)) {
  if (!(matroid_.ground() == c_.ground())) {
    throw InputError("skew polytope: matroid and weighting ground mismatch");
  }
  if (c_.ground().size() <= 14 && !check_pds(c_).pds()) {
    throw InputError("skew polytope weighting must be PDS");
  }
}

MembershipReport membership(const RatVec& f, const SkewPolytope& p) {
  const GroundSet& g = p.ground();
  const int n = g.size();
  if (f.size() != static_cast<std::size_t>(n)) {
    throw InputError("membership: vector size != ground set size");
  }
  MembershipReport rep;
  for (int v = 0; v < n; ++v) {
    if (f[v] < 0) {
      rep.member = false;
      rep.negative_element = v;
      return rep;
    }
  }
  const Mask full = g.full_mask();
  for (Mask a = 1; a <= full; ++a) {
    Rat sum = 0;
    for (Mask m = a; m != 0; m &= m - 1) {
      sum += f[std::countr_zero(m)];
    }
    const Rat excess = sum - p.bound(a);
    if (excess > 0 && (rep.violated_set == std::nullopt ||
                       excess > rep.violation)) {
      rep.member = false;
      rep.violated_set = a;
      rep.violation = excess;
    }
  }
  return rep;
}

IntersectionSystem::IntersectionSystem(std::vector<Matroid> matroids,
                                       PdsTuple b)
    : matroids_(std::move(matroids)), b_(std::move(b)) {
  if (matroids_.empty()) {
    throw InputError("intersection system needs at least one matroid");
  }
  for (const Matroid& m : matroids_) {
    if (!(m.ground() == matroids_[0].ground())) {
      throw InputError("intersection system: ground set mismatch");
    }
  }
  if (b_.count() != matroids_.size()) {
    throw InputError("intersection system: weight tuple size != r");
  }
  if (!(b_.ground() == matroids_[0].ground())) {
    throw InputError("intersection system: weights on wrong ground set");
  }
}

IntersectionSystem IntersectionSystem::unit(std::vector<Matroid> matroids) {
  if (matroids.empty()) {
    throw InputError("intersection system needs at least one matroid");
  }
  const GroundSet g = matroids[0].ground();
  std::vector<SetFunction> ones(matroids.size(),
                                SetFunction::constant(g, Rat(1)));
  return IntersectionSystem(std::move(matroids), PdsTuple(std::move(ones)));
}

Rat DualWeights::total_cost(const IntersectionSystem& sys) const {
  Rat total = 0;
  for (const Entry& e : entries) {
    total += e.weight * sys.weights()[e.matroid](e.subset) *
             sys.matroid(e.matroid).rank(e.subset);
  }
  return total;
}

namespace {

void check_system_args(const IntersectionSystem& sys, Mask w,
                       const RatVec& a) {
  const GroundSet& g = sys.ground();
  g.check_mask(w);
  if (a.size() != static_cast<std::size_t>(g.size())) {
    throw InputError("weight vector size != ground set size");
  }
  for (const Rat& av : a) {
    if (av <= 0) throw InputError("element weights must be positive");
  }
}

// The covering LP for tau*_{a,b}(W) collapsed by intersection pattern:
// columns (i, A) and (i, A') with A cap W == A' cap W constrain exactly
// the same rows, so only the cheapest survives; the optimal value and the
// dual (the nu* optimizer) are unchanged. Encoded for the max-form solver
// as: max -cost.h subject to -sum_{P ni v} h_P <= -a_v.
struct CollapsedSolve {
  LinearProgram lp;
  LpSolution sol;
  Rat value;   // tau* == nu*
  RatVec f;    // nu* optimizer on the full ground set, zero off W
};

CollapsedSolve solve_collapsed(const IntersectionSystem& sys, Mask w,
                               const RatVec& a) {
  check_system_args(sys, w, a);
  const GroundSet& g = sys.ground();
  const int n = g.size();
  const Mask full = g.full_mask();
  const std::vector<int> elems = mask_elements(w);
  const std::size_t nrows = elems.size();

  CollapsedSolve out;
  // Min cost per (matroid, pattern): patterns are the nonempty submasks
  // of w, and every pattern is attained (by A = P itself).
  std::vector<RatVec> pattern_cost(sys.r());
  for (std::size_t i = 0; i < sys.r(); ++i) {
    RatVec& pc = pattern_cost[i];
    pc.assign(std::size_t{1} << n, Rat(-1));  // -1 == unset
    const SetFunction& bi = sys.weights()[i];
    const Matroid& mi = sys.matroid(i);
    for (Mask aset = 1; aset <= full; ++aset) {
      const Mask p = aset & w;
      if (p == 0) continue;
      Rat cost = bi(aset) * mi.rank(aset);
      if (pc[p] < 0 || cost < pc[p]) pc[p] = std::move(cost);
    }
  }
  // Columns ordered by (i, pattern mask) ascending.
  std::vector<Mask> col_pattern;
  for (std::size_t i = 0; i < sys.r(); ++i) {
    for (Mask p = 1; p <= full; ++p) {
      if ((p & ~w) != 0 || p == 0) continue;
      out.lp.objective.push_back(-pattern_cost[i][p]);
      col_pattern.push_back(p);
    }
  }
  const std::size_t ncols = out.lp.objective.size();
  out.lp.rows.assign(nrows, RatVec(ncols, Rat(0)));
  out.lp.rhs.resize(nrows);
  for (std::size_t row = 0; row < nrows; ++row) {
    const int v = elems[row];
    for (std::size_t col = 0; col < ncols; ++col) {
      if (has_element(col_pattern[col], v)) out.lp.rows[row][col] = -1;
    }
    out.lp.rhs[row] = -a[v];
  }
  out.sol = solve(out.lp);
  if (out.sol.status != LpStatus::kOptimal) {
    throw InvariantError(
        "covering program must have an optimum (it is feasible and bounded)");
  }
  out.value = -out.sol.value;
  out.f.assign(n, Rat(0));
  for (std::size_t row = 0; row < nrows; ++row) {
    out.f[elems[row]] = out.sol.dual[row];
  }
  return out;
}

// Subset sums f(P) for all submasks P of w, dense over all masks.
RatVec subset_sums(const RatVec& f, Mask w, int n) {
  RatVec s(std::size_t{1} << n, Rat(0));
  for (Mask p = 1; p < s.size(); ++p) {
    if ((p & ~w) != 0) continue;
    const Mask low = p & (~p + 1);
    s[p] = s[p ^ low] + f[std::countr_zero(low)];
  }
  return s;
}

// The literal covering LP restricted to tight columns. Column (i, A) of
// the full program (A any nonempty subset of V) is tight for the
// optimizer f when f(A cap W) == b^i(A) rk_i(A); by complementary
// slackness every optimal h is supported on tight columns, so the optimal
// face of the restriction (padded with zeros) is the optimal face of the
// full program.
struct RestrictedDual {
  LinearProgram lp;
  LpSolution sol;
  std::vector<std::pair<std::size_t, Mask>> cols;  // (matroid, A)
};

RestrictedDual solve_restricted_dual(const IntersectionSystem& sys, Mask w,
                                     const RatVec& a, const CollapsedSolve& c) {
  const GroundSet& g = sys.ground();
  const int n = g.size();
  const Mask full = g.full_mask();
  const std::vector<int> elems = mask_elements(w);
  const RatVec fsum = subset_sums(c.f, w, n);

  RestrictedDual out;
  for (std::size_t i = 0; i < sys.r(); ++i) {
    const SetFunction& bi = sys.weights()[i];
    const Matroid& mi = sys.matroid(i);
    for (Mask aset = 1; aset <= full; ++aset) {
      if (fsum[aset & w] == bi(aset) * mi.rank(aset)) {
        out.cols.emplace_back(i, aset);
      }
    }
  }
  const std::size_t ncols = out.cols.size();
  out.lp.objective.resize(ncols);
  for (std::size_t col = 0; col < ncols; ++col) {
    const auto& [i, aset] = out.cols[col];
    out.lp.objective[col] =
        -(sys.weights()[i](aset) * sys.matroid(i).rank(aset));
  }
  out.lp.rows.assign(elems.size(), RatVec(ncols, Rat(0)));
  out.lp.rhs.resize(elems.size());
  for (std::size_t row = 0; row < elems.size(); ++row) {
    for (std::size_t col = 0; col < ncols; ++col) {
      if (has_element(out.cols[col].second, elems[row])) {
        out.lp.rows[row][col] = -1;
      }
    }
    out.lp.rhs[row] = -a[elems[row]];
  }
  out.sol = solve(out.lp);
  if (out.sol.status != LpStatus::kOptimal || -out.sol.value != c.value) {
    throw InvariantError(
        "tight-column restriction must preserve the covering optimum");
  }
  return out;
}

}  // namespace

std::pair<Rat, RatVec> nu_star(const IntersectionSystem& sys, Mask w,
                               const RatVec& a) {
  CollapsedSolve c = solve_collapsed(sys, w, a);
  return {std::move(c.value), std::move(c.f)};
}

std::pair<Rat, DualWeights> tau_star(const IntersectionSystem& sys, Mask w,
                                     const RatVec& a) {
  const CollapsedSolve c = solve_collapsed(sys, w, a);
  const RestrictedDual rd = solve_restricted_dual(sys, w, a, c);
  DualWeights h;
  for (std::size_t col = 0; col < rd.cols.size(); ++col) {
    if (rd.sol.primal[col] != 0) {
      h.entries.push_back(DualWeights::Entry{rd.cols[col].first,
                                             rd.cols[col].second,
                                             rd.sol.primal[col]});
    }
  }
  if (h.total_cost(sys) != c.value) {
    throw InvariantError("dual weights do not reproduce the optimum");
  }
  return {c.value, std::move(h)};
}

bool is_dual_unique(const IntersectionSystem& sys, Mask w, const RatVec& a) {
  const CollapsedSolve c = solve_collapsed(sys, w, a);
  const RestrictedDual rd = solve_restricted_dual(sys, w, a, c);
  return is_optimum_unique(rd.lp, rd.sol).unique;
}

std::vector<Mask> tight_sets(const RatVec& f, const SkewPolytope& p, Mask w) {
  const GroundSet& g = p.ground();
  g.check_mask(w);
  const MembershipReport rep = membership(f, p);
  if (!rep.member) {
    throw InputError("tight_sets requires a point of the polytope");
  }
  for (int v = 0; v < g.size(); ++v) {
    if (f[v] != 0 && !has_element(w, v)) {
      throw InputError("tight_sets requires supp(f) inside W");
    }
  }
  const RatVec fsum = subset_sums(f, w, g.size());
  std::vector<Mask> fam;
  for (Mask aset = 1; aset <= w; ++aset) {
    if ((aset & ~w) != 0) continue;
    if (fsum[aset] == p.bound(aset)) fam.push_back(aset);
  }
  // Uncrossing check: the tight family of a point of a skew polymatroid
  // region is closed under unions, and under intersections when nonempty.
  std::vector<bool> in_fam(g.num_subsets(), false);
  for (Mask aset : fam) in_fam[aset] = true;
  for (std::size_t x = 0; x < fam.size(); ++x) {
    for (std::size_t y = x + 1; y < fam.size(); ++y) {
      const Mask u = fam[x] | fam[y];
      const Mask i = fam[x] & fam[y];
      if (!in_fam[u] || (i != 0 && !in_fam[i])) {
        throw InvariantError("tight family is not closed under uncrossing");
      }
    }
  }
  return fam;
}

RatVec round_two_matroids(const RatVec& f, const Matroid& m1,
                          const Matroid& m2) {
  if (!(m1.ground() == m2.ground())) {
    throw InputError("round_two_matroids: ground set mismatch");
  }
  const GroundSet& g = m1.ground();
  const SetFunction ones = SetFunction::constant(g, Rat(1));
  for (const Matroid& m : {m1, m2}) {
    if (!membership(f, SkewPolytope(m, ones)).member) {
      throw InputError(
          "round_two_matroids requires a common fractional point");
    }
  }
  Mask supp = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (f[v] != 0) supp |= Mask{1} << v;
  }
  IntersectionSystem sys = IntersectionSystem::unit({m1, m2});
  const RatVec a(g.size(), Rat(1));
  auto [value, best] = nu_star(sys, supp, a);
  if (value < rat_sum(f)) {
    throw InvariantError("rounding lost mass against a feasible start");
  }
  for (const Rat& x : best) {
    if (x != 0 && x != 1) {
      throw InvariantError(
          "two-matroid intersection vertex must be integral");
    }
  }
  return best;
}

}  // namespace rml
