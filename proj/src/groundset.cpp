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

#include "rml/groundset.hpp"

namespace rml {

std::vector<int> mask_elements(Mask a) {
  std::vector<int> out;
  for (Mask m = a; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

Mask elements_mask(const std::vector<int>& elems) {
  Mask a = 0;
  for (int v : elems) {
    if (v < 0 || v >= GroundSet::kMaxElements) {
      throw InputError("element index out of range: " + std::to_string(v));
    }
    a |= 1u << v;
  }
  return a;
}

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxElements) {
    throw InputError("ground set size must be in [1, " +
                     std::to_string(kMaxElements) + "], got " +
                     std::to_string(n));
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw InputError("label count does not match ground set size");
  }
}

void GroundSet::check_mask(Mask a) const {
  if ((a & ~full_mask()) != 0) {
    throw InputError("subset mask " + std::to_string(a) +
                     " has bits outside the ground set");
  }
}

std::string GroundSet::label(int v) const {
  if (v < 0 || v >= n_) {
    throw InputError("element index out of range: " + std::to_string(v));
  }
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::string GroundSet::subset_str(Mask a) const {
  check_mask(a);
  std::string out = "{";
  bool first = true;
  for (int v : mask_elements(a)) {
    if (!first) out += ",";
    out += label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace rml
