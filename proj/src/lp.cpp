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

#include "rml/lp.hpp"

#include <cstddef>

#include "rml/errors.hpp"

namespace rml {

void LinearProgram::validate() const {
  if (rows.size() != rhs.size()) {
    throw InputError("LP: rows/rhs size mismatch");
  }
  for (const RatVec& r : rows) {
    if (r.size() != objective.size()) {
      throw InputError("LP: row width != objective width");
    }
  }
}

namespace {

// Dense exact simplex tableau. Column layout: structural variables
// [0, n), slack of row i at n + i, artificials from n + m. Rows whose
// original rhs was negative are stored negated (slack coefficient -1)
// with an artificial basic variable, so the starting tableau rhs is
// nonnegative.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp)
      : lp_(lp),
        n_(lp.num_cols()),
        m_(lp.num_rows()),
        width_(n_ + m_),
        rows_(m_),
        rhs_(m_),
        basis_(m_) {
    std::vector<std::size_t> art_rows;
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.rhs[i] < 0) art_rows.push_back(i);
    }
    num_art_ = art_rows.size();
    width_ += num_art_;
    for (std::size_t i = 0; i < m_; ++i) {
      rows_[i].assign(width_, Rat(0));
      const bool neg = lp.rhs[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (lp.rows[i][j] != 0) {
          rows_[i][j] = neg ? Rat(-lp.rows[i][j]) : lp.rows[i][j];
        }
      }
      rows_[i][n_ + i] = neg ? Rat(-1) : Rat(1);
      rhs_[i] = neg ? Rat(-lp.rhs[i]) : lp.rhs[i];
      basis_[i] = static_cast<int>(n_ + i);
    }
    for (std::size_t t = 0; t < art_rows.size(); ++t) {
      const std::size_t i = art_rows[t];
      rows_[i][n_ + m_ + t] = 1;
      basis_[i] = static_cast<int>(n_ + m_ + t);
    }
  }

  // Runs both phases. Returns the final status.
  LpStatus optimize() {
    if (num_art_ > 0) {
      // Phase 1: maximize -(sum of artificials). All columns eligible.
      RatVec c1(width_, Rat(0));
      for (std::size_t j = n_ + m_; j < width_; ++j) c1[j] = -1;
      rebuild_objective(c1);
      run(/*ban_artificials=*/false);
      Rat art_total = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (basis_[i] >= static_cast<int>(n_ + m_)) art_total += rhs_[i];
      }
      if (art_total != 0) return LpStatus::kInfeasible;
      drive_out_artificials();
    }
    // Phase 2: the real objective on structural columns.
    RatVec c2(width_, Rat(0));
    for (std::size_t j = 0; j < n_; ++j) c2[j] = lp_.objective[j];
    rebuild_objective(c2);
    return run(/*ban_artificials=*/true);
  }

  // Accessors for solution extraction.
  RatVec primal() const {
    RatVec x(n_, Rat(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < static_cast<int>(n_)) x[basis_[i]] = rhs_[i];
    }
    return x;
  }
  RatVec dual() const {
    RatVec y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = obj_[n_ + i];
    return y;
  }
  const std::vector<int>& basis() const { return basis_; }
  std::size_t unbounded_col() const { return unbounded_col_; }

  // Recession direction on structural coordinates for an unbounded run.
  RatVec ray() const {
    RatVec d(n_, Rat(0));
    if (unbounded_col_ < n_) d[unbounded_col_] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < static_cast<int>(n_) && rows_[i][unbounded_col_] != 0) {
        d[basis_[i]] = -rows_[i][unbounded_col_];
      }
    }
    return d;
  }

 private:
  void rebuild_objective(const RatVec& c) {
    cost_ = c;
    obj_.assign(width_, Rat(0));
    for (std::size_t j = 0; j < width_; ++j) {
      Rat z = 0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (cost_[basis_[i]] != 0 && rows_[i][j] != 0) {
          z += cost_[basis_[i]] * rows_[i][j];
        }
      }
      obj_[j] = z - cost_[j];
    }
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    RatVec& pr = rows_[prow];
    const Rat pv = pr[pcol];
    if (pv == 0) throw InvariantError("simplex: zero pivot");
    for (std::size_t j = 0; j < width_; ++j) {
      if (pr[j] != 0) pr[j] /= pv;
    }
    rhs_[prow] /= pv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == prow) continue;
      const Rat f = rows_[i][pcol];
      if (f == 0) continue;
      RatVec& ri = rows_[i];
      for (std::size_t j = 0; j < width_; ++j) {
        if (pr[j] != 0) ri[j] -= f * pr[j];
      }
      rhs_[i] -= f * rhs_[prow];
    }
    const Rat fo = obj_[pcol];
    if (fo != 0) {
      for (std::size_t j = 0; j < width_; ++j) {
        if (pr[j] != 0) obj_[j] -= fo * pr[j];
      }
    }
    basis_[prow] = static_cast<int>(pcol);
  }

  LpStatus run(bool ban_artificials) {
    const std::size_t eligible_end = ban_artificials ? n_ + m_ : width_;
    for (long iter = 0;; ++iter) {
      if (iter > 10'000'000L) {
        throw InvariantError("simplex: iteration cap exceeded");
      }
      // Bland entering rule: smallest index with negative reduced cost.
      std::size_t enter = width_;
      for (std::size_t j = 0; j < eligible_end; ++j) {
        if (obj_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width_) return LpStatus::kOptimal;
      // Ratio test; ties to the smallest basic variable index.
      std::size_t leave = m_;
      Rat best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave == m_) {
        unbounded_col_ = enter;
        return LpStatus::kUnbounded;
      }
      pivot(leave, enter);
    }
  }

  // After a feasible phase 1, replace basic artificials (all at value 0)
  // with structural or slack variables via degenerate pivots. A row with
  // no nonzero non-artificial entry is a redundant constraint; its
  // artificial stays basic at zero and, since the whole row is zero there,
  // no later pivot can ever change its rhs.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < static_cast<int>(n_ + m_)) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (rows_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  const LinearProgram& lp_;
  std::size_t n_, m_, width_, num_art_ = 0;
  std::vector<RatVec> rows_;
  RatVec rhs_;
  RatVec obj_;
  RatVec cost_;
  std::vector<int> basis_;
  std::size_t unbounded_col_ = 0;
};

// Exact post-solve audit of an optimal pair; throws InvariantError.
void audit_optimal(const LinearProgram& lp, const LpSolution& sol) {
  const std::size_t n = lp.num_cols(), m = lp.num_rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (sol.primal[j] < 0) throw InvariantError("LP audit: primal negative");
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rat ax = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (lp.rows[i][j] != 0 && sol.primal[j] != 0) {
        ax += lp.rows[i][j] * sol.primal[j];
      }
    }
    if (ax > lp.rhs[i]) throw InvariantError("LP audit: primal infeasible");
    if (sol.dual[i] < 0) throw InvariantError("LP audit: dual negative");
  }
  Rat cx = 0;
  for (std::size_t j = 0; j < n; ++j) cx += lp.objective[j] * sol.primal[j];
  Rat yb = 0;
  for (std::size_t i = 0; i < m; ++i) yb += sol.dual[i] * lp.rhs[i];
  for (std::size_t j = 0; j < n; ++j) {
    Rat ya = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (sol.dual[i] != 0 && lp.rows[i][j] != 0) {
        ya += sol.dual[i] * lp.rows[i][j];
      }
    }
    if (ya < lp.objective[j]) {
      throw InvariantError("LP audit: dual infeasible");
    }
  }
  if (cx != sol.value || cx != yb) {
    throw InvariantError("LP audit: strong duality violated");
  }
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  lp.validate();
  Tableau tab(lp);
  LpSolution sol;
  sol.status = tab.optimize();
  sol.basis = tab.basis();
  switch (sol.status) {
    case LpStatus::kInfeasible:
      break;
    case LpStatus::kUnbounded:
      sol.primal = tab.primal();
      sol.ray = tab.ray();
      break;
    case LpStatus::kOptimal: {
      sol.primal = tab.primal();
      sol.dual = tab.dual();
      Rat cx = 0;
      for (std::size_t j = 0; j < lp.num_cols(); ++j) {
        cx += lp.objective[j] * sol.primal[j];
      }
      sol.value = cx;
      audit_optimal(lp, sol);
      break;
    }
  }
  return sol;
}

UniquenessReport is_optimum_unique(const LinearProgram& lp,
                                   const LpSolution& sol) {
  lp.validate();
  if (sol.status != LpStatus::kOptimal) {
    throw InputError("is_optimum_unique requires an optimal solution");
  }
  if (sol.primal.size() != lp.num_cols() || sol.dual.size() != lp.num_rows()) {
    throw InputError("is_optimum_unique: solution shape mismatch");
  }
  try {
    audit_optimal(lp, sol);
  } catch (const InvariantError& e) {
    throw InputError(std::string("is_optimum_unique: not an optimal pair: ") +
                     e.what());
  }
  const std::size_t n = lp.num_cols(), m = lp.num_rows();
  // Reduced costs from the dual certificate; rc[j] < 0 pins x_j = 0 on the
  // whole optimal face by complementary slackness.
  RatVec rc(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rat ya = 0;
    for (std::size_t i = 0; i < m; ++i) ya += sol.dual[i] * lp.rows[i][j];
    rc[j] = lp.objective[j] - ya;
  }
  // The optimal face: feasible set cut with objective.x >= value.
  LinearProgram face = lp;
  RatVec cut(n);
  for (std::size_t j = 0; j < n; ++j) cut[j] = -lp.objective[j];
  face.rows.push_back(std::move(cut));
  face.rhs.push_back(-sol.value);

  UniquenessReport rep;
  for (std::size_t j = 0; j < n; ++j) {
    if (rc[j] < 0) continue;  // pinned to zero across the face
    // Probe up.
    face.objective.assign(n, Rat(0));
    face.objective[j] = 1;
    LpSolution up = solve(face);
    if (up.status == LpStatus::kUnbounded) {
      // Walk the recession direction far enough that coordinate j strictly
      // exceeds its value in sol (the ray improves e_j, so ray[j] > 0).
      rep.unique = false;
      Rat step = 1;
      if (up.primal[j] + up.ray[j] <= sol.primal[j]) {
        step = (sol.primal[j] - up.primal[j]) / up.ray[j] + 1;
      }
      RatVec alt = up.primal;
      for (std::size_t t = 0; t < n; ++t) alt[t] += step * up.ray[t];
      rep.alternate = std::move(alt);
      return rep;
    }
    if (up.status != LpStatus::kOptimal) {
      throw InvariantError("uniqueness probe lost feasibility");
    }
    if (up.value > sol.primal[j]) {
      rep.unique = false;
      rep.alternate = up.primal;
      return rep;
    }
    // Probe down (skippable at zero, the variable bound).
    if (sol.primal[j] != 0) {
      face.objective[j] = -1;
      LpSolution down = solve(face);
      if (down.status != LpStatus::kOptimal) {
        throw InvariantError("uniqueness probe lost feasibility");
      }
      if (down.value > -sol.primal[j]) {
        rep.unique = false;
        rep.alternate = down.primal;
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace rml
