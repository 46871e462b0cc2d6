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

#ifndef RML_INSTANCE_IO_HPP_
#define RML_INSTANCE_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rml/chain.hpp"
#include "rml/collapse.hpp"
#include "rml/rainbow.hpp"

namespace rml {

/// A parsed "instance" document, kept in raw pieces so diagnostic commands
/// can report on each component even when the assembled system would be
/// rejected. Rationals are read from "p/q" / integer / decimal strings or
/// JSON integers, and always written back as "p/q".
struct ParsedInstance {
  GroundSet ground;
  std::optional<Hypergraph> hypergraph;
  std::vector<Matroid> matroids;
  std::vector<SetFunction> weights;  // b^i; defaults to all-ones
  RatVec a;                          // defaults to ones
  std::optional<Rat> k;
  std::vector<RatVec> functions;

  /// Assembles {matroids, weights} (validates the PDS tuple).
  IntersectionSystem system() const;
  /// Requires k; assembles the complex spec.
  ComplexSpec complex_spec() const;
  /// Requires k and functions; weights must be ones.
  RainbowInstance rainbow_instance() const;
};

/// Document kinds, dispatched on the "format" field: "instance",
/// "function" (a set function table), "family" (a list of subsets).
std::string document_format(const nlohmann::json& j);

ParsedInstance parse_instance(const nlohmann::json& j);
std::pair<GroundSet, SetFunction> parse_function_file(
    const nlohmann::json& j);
std::pair<GroundSet, std::vector<Mask>> parse_family_file(
    const nlohmann::json& j);

/// Loads and parses a JSON document from disk (InputError on IO or parse
/// problems).
nlohmann::json load_json(const std::string& path);

/// Canonical JSON for a catalog entry (used to generate and cross-check
/// the data/ files).
nlohmann::json catalog_entry_json(const CatalogEntry& e);

/// Subset masks from command-line text: "all", "none", or a comma list of
/// element indices like "0,3,5".
Mask parse_subset_arg(const std::string& text, const GroundSet& g);

/// FNV-1a 64-bit digest, printed as 16 lowercase hex digits.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(std::uint64_t digest);

/// Certificate text round trip. The serialization is deterministic
/// (line-oriented, masks as decimal integers, rationals as p/q), so a
/// certificate's identity is the digest of its serialization.
std::string certificate_to_text(const CollapseCertificate& cert);
CollapseCertificate certificate_from_text(const std::string& text);

}  // namespace rml

#endif  // RML_INSTANCE_IO_HPP_
