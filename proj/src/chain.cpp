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

#include "rml/chain.hpp"

#include <algorithm>
#include <set>

#include "rml/rational.hpp"

namespace rml {

namespace {

// Incremental row basis over Q for 0/1 characteristic vectors.
class SpanBasis {
 public:
  explicit SpanBasis(int n) : n_(n) {}

  // Reduces chi_a against the basis; true if it was independent (and is
  // then inserted).
  bool add(Mask a) {
    RatVec v = reduce(a);
    for (int j = 0; j < n_; ++j) {
      if (v[j] != 0) {
        const Rat pv = v[j];
        for (int t = 0; t < n_; ++t) v[t] /= pv;
        pivots_.push_back(j);
        rows_.push_back(std::move(v));
        return true;
      }
    }
    return false;
  }

  bool contains(Mask a) const {
    const RatVec v = reduce(a);
    for (const Rat& x : v) {
      if (x != 0) return false;
    }
    return true;
  }

  int dimension() const { return static_cast<int>(rows_.size()); }

 private:
  RatVec reduce(Mask a) const {
    RatVec v(n_, Rat(0));
    for (int j = 0; j < n_; ++j) {
      if (has_element(a, j)) v[j] = 1;
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rat f = v[pivots_[r]];
      if (f == 0) continue;
      for (int j = 0; j < n_; ++j) {
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
      }
    }
    return v;
  }

  int n_;
  std::vector<RatVec> rows_;
  std::vector<int> pivots_;
};

void check_closure(SetFamily* fam) {
  fam->union_closed = true;
  fam->intersection_closed = true;
  std::set<Mask> members(fam->members.begin(), fam->members.end());
  for (std::size_t x = 0; x < fam->members.size(); ++x) {
    for (std::size_t y = x + 1; y < fam->members.size(); ++y) {
      if (!members.count(fam->members[x] | fam->members[y])) {
        fam->union_closed = false;
      }
      const Mask i = fam->members[x] & fam->members[y];
      if (i != 0 && !members.count(i)) fam->intersection_closed = false;
      if (!fam->union_closed && !fam->intersection_closed) return;
    }
  }
}

}  // namespace

SetFamily make_family(const GroundSet& g, std::vector<Mask> members,
                      bool verify) {
  for (Mask a : members) {
    g.check_mask(a);
    if (a == 0) throw InputError("set families exclude the empty set");
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  SetFamily fam{g, std::move(members)};
  if (verify) check_closure(&fam);
  return fam;
}

SetFamily close_family(const GroundSet& g, std::vector<Mask> members) {
  SetFamily fam = make_family(g, std::move(members), /*verify=*/false);
  std::set<Mask> pool(fam.members.begin(), fam.members.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> snapshot(pool.begin(), pool.end());
    for (std::size_t x = 0; x < snapshot.size(); ++x) {
      for (std::size_t y = x + 1; y < snapshot.size(); ++y) {
        const Mask u = snapshot[x] | snapshot[y];
        const Mask i = snapshot[x] & snapshot[y];
        if (pool.insert(u).second) grew = true;
        if (i != 0 && pool.insert(i).second) grew = true;
      }
    }
  }
  fam.members.assign(pool.begin(), pool.end());
  fam.union_closed = true;
  fam.intersection_closed = true;
  return fam;
}

int span_dimension(const SetFamily& fam) {
  // Standalone Gaussian elimination over Q (deliberately not sharing the
  // incremental basis used by extract_chain, so the two are independent
  // routes to the dimension).
  const int n = fam.ground.size();
  std::vector<RatVec> rows;
  for (Mask a : fam.members) {
    RatVec v(n, Rat(0));
    for (int j = 0; j < n; ++j) {
      if (has_element(a, j)) v[j] = 1;
    }
    rows.push_back(std::move(v));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      const Rat f = rows[r][col] / rows[rank][col];
      for (int j = col; j < n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

Chain extract_chain(const SetFamily& fam) {
  if (!fam.union_closed || !fam.intersection_closed) {
    throw InputError("extract_chain requires a closed family");
  }
  const int n = fam.ground.size();
  Chain chain;
  SpanBasis basis(n);
  for (int round = 0; round <= n; ++round) {
    Mask outside = 0;
    bool found = false;
    for (Mask a : fam.members) {
      if (!basis.contains(a)) {
        outside = a;
        found = true;
        break;
      }
    }
    if (!found) return chain;
    Mask added;
    if (chain.empty()) {
      added = outside;
      chain.push_back(added);
    } else if (!subset_of(outside, chain.back())) {
      added = chain.back() | outside;  // member by union closure
      chain.push_back(added);
    } else {
      // outside is inside the top set but its vector escapes the span, so
      // some block A_i \ A_{i-1} both meets it and is not inside it.
      std::size_t pos = chain.size();
      for (std::size_t i = 0; i < chain.size(); ++i) {
        const Mask prev = (i == 0) ? Mask{0} : chain[i - 1];
        const Mask block = chain[i] & ~prev;
        if ((block & outside) != 0 && !subset_of(block, outside)) {
          pos = i;
          break;
        }
      }
      if (pos == chain.size()) {
        throw InvariantError(
            "chain extraction found no splittable block; the family's "
            "closure flags must be wrong");
      }
      const Mask prev = (pos == 0) ? Mask{0} : chain[pos - 1];
      // (outside cup prev) cap A_pos: a member (union closure, then
      // nonempty intersection closure) strictly between prev and A_pos.
      added = (outside | prev) & chain[pos];
      chain.insert(chain.begin() + pos, added);
    }
    if (!basis.add(added)) {
      throw InvariantError("chain step did not extend the span");
    }
  }
  throw InvariantError("chain extraction exceeded the dimension bound");
}

bool verify_chain(const Chain& chain, const SetFamily& fam) {
  Mask prev = 0;
  for (Mask a : chain) {
    if (a == 0) return false;
    if (!subset_of(prev, a) || prev == a) return false;
    if (!std::binary_search(fam.members.begin(), fam.members.end(), a)) {
      return false;
    }
    prev = a;
  }
  // Strictly nested nonempty sets have independent characteristic
  // vectors, so spanning is exactly a dimension count.
  return static_cast<int>(chain.size()) == span_dimension(fam);
}

}  // namespace rml
