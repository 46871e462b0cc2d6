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

#include "rml/set_function.hpp"

#include <random>

namespace rml {

SetFunction::SetFunction(GroundSet g, RatVec table)
    : ground_(std::move(g)), table_(std::move(table)) {
  if (table_.size() != ground_.num_subsets()) {
    throw InputError("set function table has wrong size");
  }
}

SetFunction SetFunction::constant(const GroundSet& g, const Rat& value) {
  return SetFunction(g, RatVec(g.num_subsets(), value));
}

bool SetFunction::is_constant(const Rat& value) const {
  for (const Rat& x : table_) {
    if (x != value) return false;
  }
  return true;
}

std::uint64_t SetFunction::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  auto eat = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const Rat& x : table_) {
    eat(rat_str(x));
    eat("|");
  }
  return h;
}

PdsReport check_pds(const SetFunction& c) {
  const GroundSet& g = c.ground();
  const int n = g.size();
  if (n > 16) throw InputError("PDS check is limited to 16 elements");
  const Mask full = g.full_mask();
  PdsReport rep;
  for (Mask a = 0; a <= full; ++a) {
    if (rep.positive && c(a) < 0) {
      rep.positive = false;
      rep.positivity_witness = a;
    }
    if (rep.strictly_positive && c(a) <= 0) {
      rep.strictly_positive = false;
      rep.strict_positivity_witness = a;
    }
    for (int v = 0; v < n && (rep.decreasing || rep.strictly_decreasing);
         ++v) {
      if (has_element(a, v)) continue;
      const Mask av = a | (Mask{1} << v);
      if (rep.decreasing && c(av) > c(a)) {
        rep.decreasing = false;
        rep.decrease_witness = PairWitness{a, av};
      }
      if (rep.strictly_decreasing && c(av) >= c(a)) {
        rep.strictly_decreasing = false;
        rep.strict_decrease_witness = PairWitness{a, av};
      }
    }
    for (int u = 0; u < n && (rep.submodular || rep.strictly_submodular);
         ++u) {
      if (has_element(a, u)) continue;
      const Mask au = a | (Mask{1} << u);
      for (int v = u + 1; v < n; ++v) {
        if (has_element(a, v)) continue;
        const Mask av = a | (Mask{1} << v);
        const Rat defect = c(au) + c(av) - c(au | av) - c(a);
        if (rep.submodular && defect < 0) {
          rep.submodular = false;
          rep.submodularity_witness = PairWitness{au, av};
        }
        if (rep.strictly_submodular && defect <= 0) {
          rep.strictly_submodular = false;
          rep.strict_submodularity_witness = PairWitness{au, av};
        }
        if (!rep.submodular && !rep.strictly_submodular) break;
      }
    }
    if (!rep.positive && !rep.strictly_positive && !rep.decreasing &&
        !rep.strictly_decreasing && !rep.submodular &&
        !rep.strictly_submodular) {
      break;
    }
  }
  return rep;
}

SetFunction interior_pds(const GroundSet& g, const Rat& target) {
  if (target <= 0) throw InputError("interior_pds target must be positive");
  const int n = g.size();
  const Rat scale = target / (n * n);
  RatVec table(g.num_subsets());
  for (Mask a = 0; a < table.size(); ++a) {
    const int s = popcount(a);
    table[a] = scale * (2 * n * n - s * s);
  }
  return SetFunction(g, std::move(table));
}

Rat submodularity_defect(const SetFunction& c, Mask a, Mask b) {
  return c(a) + c(b) - c(a | b) - c(a & b);
}

ProductReport check_product_submodular(const SetFunction& c,
                                       const Matroid& m) {
  ProductReport rep;
  if (!(c.ground() == m.ground())) {
    throw InputError("set function and matroid live on different ground sets");
  }
  const GroundSet& g = c.ground();
  if (g.size() > 14) {
    throw InputError("product submodularity check is limited to 14 elements");
  }
  const PdsReport pds = check_pds(c);
  if (!pds.pds()) {
    rep.precondition_ok = false;
    rep.precondition_issue =
        !pds.positive ? "c is not nonnegative"
        : !pds.decreasing ? "c is not decreasing"
                          : "c is not submodular";
    return rep;
  }
  const Mask full = g.full_mask();
  RatVec p(g.num_subsets());
  for (Mask a = 0; a <= full; ++a) p[a] = c(a) * m.rank(a);
  for (Mask a = 0; a <= full; ++a) {
    for (Mask b = a; b <= full; ++b) {
      if (p[a] + p[b] < p[a | b] + p[a & b]) {
        rep.submodular = false;
        rep.witness = PairWitness{a, b};
        return rep;
      }
    }
  }
  return rep;
}

PdsTuple::PdsTuple(std::vector<SetFunction> functions)
    : functions_(std::move(functions)) {
  if (functions_.empty()) throw InputError("PDS tuple must be nonempty");
  const GroundSet& g = functions_[0].ground();
  for (const SetFunction& f : functions_) {
    if (!(f.ground() == g)) {
      throw InputError("PDS tuple functions live on different ground sets");
    }
  }
  if (g.size() <= 14) {
    for (std::size_t i = 0; i < functions_.size(); ++i) {
      if (!check_pds(functions_[i]).pds()) {
        throw InputError("tuple entry " + std::to_string(i) + " is not PDS");
      }
    }
  }
  min_total_ = functions_[0](g.full_mask());
  for (const SetFunction& f : functions_) {
    min_total_ = std::min(min_total_, f(g.full_mask()));
  }
  if (min_total_ <= 0) {
    throw InputError("PDS tuple requires min_i b^i(V) > 0");
  }
}

bool PdsTuple::all_ones() const {
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    if (!functions_[i].is_constant(1)) return false;
  }
  return true;
}

PdsTuple perturb_tuple(const PdsTuple& b, const Rat& epsilon,
                       std::uint64_t seed) {
  if (epsilon <= 0) throw InputError("perturbation epsilon must be positive");
  const GroundSet& g = b.ground();
  const int n = g.size();
  if (n > 14) throw InputError("perturb_tuple is limited to 14 elements");
  const Mask full = g.full_mask();
  std::mt19937_64 rng(seed);
  Rat eps = epsilon;
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    std::vector<SetFunction> out;
    out.reserve(b.count());
    bool ok = true;
    for (std::size_t i = 0; i < b.count() && ok; ++i) {
      RatVec table(g.num_subsets());
      RatVec bump(g.num_subsets());
      const int n4 = n * n * n * n;
      for (Mask a = 0; a <= full; ++a) {
        // rho in (1 - 1/(8n^4), 1]: random enough to split ties between
        // sets of equal size, close enough to constant that the quadratic
        // bump profile stays strictly PDS at any scale (its strict margins
        // are at least 1/(2n^2) relative, far above the 1/(8n^4) jitter).
        const Rat rho = 1 - Rat(rng() % 4096, 4096) / (8 * n4);
        bump[a] = eps / 2 * rho * Rat(2 * n * n - popcount(a) * popcount(a),
                                      2 * n * n);
      }
      for (Mask a = 0; a <= full; ++a) {
        table[a] = b[i](a) + bump[a] - bump[full];
      }
      SetFunction cand(g, std::move(table));
      const PdsReport rep = check_pds(cand);
      if (!rep.strictly_pds() || cand(full) != b[i](full)) {
        ok = false;
        break;
      }
      for (Mask a = 0; a <= full; ++a) {
        const Rat delta = cand(a) - b[i](a);
        if (delta > epsilon || delta < -epsilon) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(std::move(cand));
    }
    if (ok) return PdsTuple(std::move(out));
  }
  throw InputError(
      "perturb_tuple: no strictly PDS perturbation found after 64 halvings");
}

}  // namespace rml
