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

#include "rml/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "rml/errors.hpp"

namespace rml {
namespace {

using nlohmann::json;

Rat rat_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError(where + ": expected an integer or a rational string");
}

RatVec rat_vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  RatVec out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(rat_from_json(v, where));
  return out;
}

Mask hex_mask(const std::string& text, const GroundSet& g,
              const std::string& where) {
  unsigned long long m = 0;
  size_t pos = 0;
  try {
    m = std::stoull(text, &pos, 16);
  } catch (const std::exception&) {
    throw InputError(where + ": cannot parse hex mask \"" + text + "\"");
  }
  if (pos != text.size() || m > g.full_mask()) {
    throw InputError(where + ": hex mask \"" + text +
                     "\" is not a subset of the ground set");
  }
  return static_cast<Mask>(m);
}

Mask mask_from_json(const json& j, const GroundSet& g,
                    const std::string& where) {
  // Subsets are sorted element lists, or hex masks ("0x2b") to keep
  // large families compact.
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
      return hex_mask(s.substr(2), g, where);
    }
    throw InputError(where + ": subset strings must be hex masks like "
                     "\"0x2b\"");
  }
  if (!j.is_array()) {
    throw InputError(where + ": expected an array of element indices");
  }
  Mask m = 0;
  for (const json& v : j) {
    if (!v.is_number_integer()) {
      throw InputError(where + ": element indices must be integers");
    }
    long long e = v.get<long long>();
    if (e < 0 || e >= g.size()) {
      throw InputError(where + ": element index " + std::to_string(e) +
                       " out of range for ground set of size " +
                       std::to_string(g.size()));
    }
    m |= Mask{1} << e;
  }
  return m;
}

GroundSet ground_from_json(const json& j) {
  if (!j.contains("ground") || !j["ground"].is_object()) {
    throw InputError("document is missing the \"ground\" object");
  }
  const json& gj = j["ground"];
  if (!gj.contains("size") || !gj["size"].is_number_integer()) {
    throw InputError("\"ground\" needs an integer \"size\"");
  }
  long long n = gj["size"].get<long long>();
  if (n < 1 || n > GroundSet::kMaxElements) {
    throw InputError("ground set size must lie in [1, " +
                     std::to_string(GroundSet::kMaxElements) + "]");
  }
  std::vector<std::string> labels;
  if (gj.contains("labels")) {
    if (!gj["labels"].is_array()) {
      throw InputError("\"labels\" must be an array of strings");
    }
    for (const json& l : gj["labels"]) {
      if (!l.is_string()) throw InputError("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return GroundSet(static_cast<int>(n), labels);
}

Hypergraph hypergraph_from_json(const json& j, const GroundSet& g) {
  const json& ej = j["edges"];
  if (!ej.is_array() || ej.empty()) {
    throw InputError("\"edges\" must be a nonempty array of vertex tuples");
  }
  Hypergraph h;
  for (const json& edge : ej) {
    if (!edge.is_array()) throw InputError("each edge must be an array");
    std::vector<int> verts;
    for (const json& v : edge) {
      if (!v.is_number_integer()) {
        throw InputError("edge vertices must be integers");
      }
      verts.push_back(v.get<int>());
    }
    h.edges.push_back(std::move(verts));
  }
  h.arity = static_cast<int>(h.edges.front().size());
  if (static_cast<int>(h.edges.size()) != g.size()) {
    throw InputError("the ground set indexes edges, so \"edges\" must have "
                     "exactly ground.size entries");
  }
  h.validate();
  return h;
}

Matroid matroid_from_json(const json& j, const GroundSet& g,
                          const std::optional<Hypergraph>& h, int index,
                          const std::vector<Matroid>* stars) {
  std::string where = "matroids[" + std::to_string(index) + "]";
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError(where + ": expected an object with a \"kind\" string");
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "uniform") {
    if (!j.contains("rank") || !j["rank"].is_number_integer()) {
      throw InputError(where + ": uniform matroids need an integer \"rank\"");
    }
    return Matroid::uniform(g, j["rank"].get<int>());
  }
  if (kind == "partition") {
    if (!j.contains("parts") || !j["parts"].is_array()) {
      throw InputError(where + ": partition matroids need \"parts\"");
    }
    std::vector<Mask> parts;
    int p = 0;
    for (const json& part : j["parts"]) {
      parts.push_back(mask_from_json(
          part, g, where + ".parts[" + std::to_string(p++) + "]"));
    }
    std::vector<int> caps;
    if (j.contains("capacities")) {
      if (!j["capacities"].is_array()) {
        throw InputError(where + ": \"capacities\" must be an array");
      }
      for (const json& c : j["capacities"]) {
        if (!c.is_number_integer()) {
          throw InputError(where + ": capacities must be integers");
        }
        caps.push_back(c.get<int>());
      }
    } else {
      caps.assign(parts.size(), 1);
    }
    return Matroid::partition(g, parts, caps);
  }
  if (kind == "explicit") {
    if (!j.contains("table") || !j["table"].is_array()) {
      throw InputError(where + ": explicit matroids need a \"table\" array");
    }
    std::vector<int> table;
    for (const json& v : j["table"]) {
      if (!v.is_number_integer()) {
        throw InputError(where + ": rank table entries must be integers");
      }
      table.push_back(v.get<int>());
    }
    return Matroid::explicit_table(g, table);
  }
  if (kind == "star") {
    if (!h.has_value()) {
      throw InputError(where + ": star matroids need top-level \"edges\"");
    }
    if (!j.contains("side") || !j["side"].is_number_integer()) {
      throw InputError(where + ": star matroids need an integer \"side\"");
    }
    int side = j["side"].get<int>();
    if (side < 0 || side >= h->arity) {
      throw InputError(where + ": \"side\" must lie in [0, " +
                       std::to_string(h->arity - 1) + "]");
    }
    return (*stars)[side];
  }
  throw InputError(where + ": unknown matroid kind \"" + kind + "\"");
}

SetFunction weight_from_json(const json& j, const GroundSet& g, int index) {
  std::string where = "weights[" + std::to_string(index) + "]";
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InputError(where + ": expected an object with a \"kind\" string");
  }
  std::string kind = j["kind"].get<std::string>();
  if (kind == "ones") return SetFunction::constant(g, Rat(1));
  if (kind == "constant") {
    if (!j.contains("value")) {
      throw InputError(where + ": constant weights need a \"value\"");
    }
    return SetFunction::constant(g, rat_from_json(j["value"], where));
  }
  if (kind == "interior") {
    if (!j.contains("target")) {
      throw InputError(where + ": interior weights need a \"target\"");
    }
    return interior_pds(g, rat_from_json(j["target"], where + ".target"));
  }
  if (kind == "table") {
    if (!j.contains("values") || !j["values"].is_array()) {
      throw InputError(where + ": table weights need a \"values\" array");
    }
    RatVec values = rat_vec_from_json(j["values"], where + ".values");
    if (values.size() != static_cast<size_t>(g.num_subsets())) {
      throw InputError(where + ": \"values\" must list all " +
                       std::to_string(g.num_subsets()) +
                       " subsets in mask order");
    }
    return SetFunction(g, std::move(values));
  }
  throw InputError(where + ": unknown weight kind \"" + kind + "\"");
}

json rat_to_json(const Rat& r) { return json(rat_str(r)); }

}  // namespace

IntersectionSystem ParsedInstance::system() const {
  return IntersectionSystem(matroids, PdsTuple(weights));
}

ComplexSpec ParsedInstance::complex_spec() const {
  if (!k.has_value()) throw InputError("this command needs a \"k\" field");
  return ComplexSpec{system(), a, *k};
}

RainbowInstance ParsedInstance::rainbow_instance() const {
  if (!k.has_value()) throw InputError("this command needs a \"k\" field");
  if (functions.empty()) {
    throw InputError("this command needs a nonempty \"functions\" array");
  }
  return RainbowInstance{system(), *k, functions};
}

std::string document_format(const json& j) {
  if (!j.is_object() || !j.contains("format") || !j["format"].is_string()) {
    throw InputError("document is missing the \"format\" string");
  }
  return j["format"].get<std::string>();
}

ParsedInstance parse_instance(const json& j) {
  if (document_format(j) != "instance") {
    throw InputError("expected a document with \"format\": \"instance\"");
  }
  ParsedInstance out{ground_from_json(j), std::nullopt, {}, {}, {},
                     std::nullopt, {}};
  const GroundSet& g = out.ground;
  if (j.contains("edges")) out.hypergraph = hypergraph_from_json(j, g);
  std::vector<Matroid> stars;
  if (out.hypergraph.has_value()) stars = star_matroids(*out.hypergraph);

  if (!j.contains("matroids") || !j["matroids"].is_array() ||
      j["matroids"].empty()) {
    throw InputError("document needs a nonempty \"matroids\" array");
  }
  int idx = 0;
  for (const json& mj : j["matroids"]) {
    out.matroids.push_back(
        matroid_from_json(mj, g, out.hypergraph, idx++, &stars));
  }

  if (j.contains("weights")) {
    if (!j["weights"].is_array() ||
        j["weights"].size() != out.matroids.size()) {
      throw InputError("\"weights\" must list one entry per matroid");
    }
    int widx = 0;
    for (const json& wj : j["weights"]) {
      out.weights.push_back(weight_from_json(wj, g, widx++));
    }
  } else {
    out.weights.assign(out.matroids.size(), SetFunction::constant(g, Rat(1)));
  }

  if (j.contains("a")) {
    out.a = rat_vec_from_json(j["a"], "\"a\"");
    if (out.a.size() != static_cast<size_t>(g.size())) {
      throw InputError("\"a\" must list one weight per element");
    }
  } else {
    out.a.assign(g.size(), Rat(1));
  }

  if (j.contains("k")) out.k = rat_from_json(j["k"], "\"k\"");

  if (j.contains("functions")) {
    if (!j["functions"].is_array()) {
      throw InputError("\"functions\" must be an array of vectors");
    }
    int fidx = 0;
    for (const json& fj : j["functions"]) {
      RatVec f = rat_vec_from_json(
          fj, "functions[" + std::to_string(fidx++) + "]");
      if (f.size() != static_cast<size_t>(g.size())) {
        throw InputError("each function must list one value per element");
      }
      out.functions.push_back(std::move(f));
    }
  }
  return out;
}

std::pair<GroundSet, SetFunction> parse_function_file(const json& j) {
  if (document_format(j) != "function") {
    throw InputError("expected a document with \"format\": \"function\"");
  }
  GroundSet g = ground_from_json(j);
  if (!j.contains("values") || !j["values"].is_array()) {
    throw InputError("function documents need a \"values\" array");
  }
  RatVec values = rat_vec_from_json(j["values"], "\"values\"");
  if (values.size() != static_cast<size_t>(g.num_subsets())) {
    throw InputError("\"values\" must list all " +
                     std::to_string(g.num_subsets()) +
                     " subsets in mask order");
  }
  return {g, SetFunction(g, std::move(values))};
}

std::pair<GroundSet, std::vector<Mask>> parse_family_file(const json& j) {
  if (document_format(j) != "family") {
    throw InputError("expected a document with \"format\": \"family\"");
  }
  GroundSet g = ground_from_json(j);
  if (!j.contains("sets") || !j["sets"].is_array()) {
    throw InputError("family documents need a \"sets\" array");
  }
  std::vector<Mask> sets;
  int idx = 0;
  for (const json& sj : j["sets"]) {
    sets.push_back(
        mask_from_json(sj, g, "sets[" + std::to_string(idx++) + "]"));
  }
  return {g, std::move(sets)};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open \"" + path + "\" for reading");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("cannot parse \"" + path + "\": " + e.what());
  }
  return j;
}

json catalog_entry_json(const CatalogEntry& e) {
  const RainbowInstance& inst = e.instance;
  const GroundSet& g = inst.sys.ground();
  json j;
  j["format"] = "instance";
  j["name"] = e.name;
  j["summary"] = e.summary;
  j["ground"] = {{"size", g.size()}};
  json labels = json::array();
  for (int v = 0; v < g.size(); ++v) labels.push_back(g.label(v));
  j["ground"]["labels"] = labels;
  json edges = json::array();
  for (const std::vector<int>& edge : e.hypergraph.edges) {
    edges.push_back(json(edge));
  }
  j["edges"] = edges;
  json matroids = json::array();
  for (int side = 0; side < e.hypergraph.arity; ++side) {
    matroids.push_back({{"kind", "star"}, {"side", side}});
  }
  j["matroids"] = matroids;
  if (!e.matchings.empty()) {
    json ms = json::array();
    for (const std::vector<int>& m : e.matchings) ms.push_back(json(m));
    j["matchings"] = ms;
  }
  j["k"] = rat_to_json(inst.k);
  json fs = json::array();
  for (const RatVec& f : inst.functions) {
    json fv = json::array();
    for (const Rat& x : f) fv.push_back(rat_to_json(x));
    fs.push_back(fv);
  }
  j["functions"] = fs;
  return j;
}

Mask parse_subset_arg(const std::string& text, const GroundSet& g) {
  if (text == "all") return g.full_mask();
  if (text == "none" || text.empty()) return 0;
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    return hex_mask(text.substr(2), g, "subset");
  }
  Mask m = 0;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    int e = -1;
    try {
      e = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("cannot parse subset element \"" + tok + "\"");
    }
    if (pos != tok.size() || e < 0 || e >= g.size()) {
      throw InputError("subset element \"" + tok +
                       "\" is not an index in [0, " +
                       std::to_string(g.size() - 1) + "]");
    }
    m |= Mask{1} << e;
  }
  return m;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* kHex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kHex[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

std::string certificate_to_text(const CollapseCertificate& cert) {
  std::ostringstream out;
  out << "collapse-certificate v1\n";
  out << "n " << cert.n << "\n";
  out << "r " << cert.r << "\n";
  out << "k " << rat_str(cert.k) << "\n";
  out << "b_min " << rat_str(cert.b_min) << "\n";
  out << "dim_bound " << cert.dim_bound << "\n";
  out << "a0";
  for (const Rat& v : cert.a0) out << " " << rat_str(v);
  out << "\n";
  out << "steps " << cert.steps.size() << "\n";
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const CollapseStep& s = cert.steps[i];
    out << "step " << i << " collapsor " << s.collapsor << " facet "
        << s.facet << " kbar " << rat_str(s.kbar) << " a";
    for (const Rat& v : s.a_snapshot) out << " " << rat_str(v);
    out << "\n";
  }
  out << "final " << (cert.final_empty ? "empty" : "nonempty") << "\n";
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(const std::string& text) : in_(text) {}

  std::string next() {
    std::string line;
    if (!std::getline(in_, line)) {
      throw InputError("certificate ends unexpectedly");
    }
    return line;
  }

  bool done() {
    return in_.peek() == std::char_traits<char>::eof();
  }

 private:
  std::istringstream in_;
};

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream ss(line);
  std::string w;
  while (ss >> w) words.push_back(w);
  return words;
}

long long parse_int_word(const std::string& w, const std::string& where) {
  size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(w, &pos);
  } catch (const std::exception&) {
    throw InputError("certificate: bad integer in " + where);
  }
  if (pos != w.size()) {
    throw InputError("certificate: bad integer in " + where);
  }
  return v;
}

std::vector<std::string> expect_keyword_line(LineReader& reader,
                                             const std::string& keyword,
                                             size_t min_words) {
  std::vector<std::string> words = split_words(reader.next());
  if (words.empty() || words[0] != keyword || words.size() < min_words) {
    throw InputError("certificate: expected a \"" + keyword + "\" line");
  }
  return words;
}

}  // namespace

CollapseCertificate certificate_from_text(const std::string& text) {
  LineReader reader(text);
  if (reader.next() != "collapse-certificate v1") {
    throw InputError("certificate: unknown header");
  }
  CollapseCertificate cert;
  std::vector<std::string> words;

  words = expect_keyword_line(reader, "n", 2);
  cert.n = static_cast<int>(parse_int_word(words[1], "n"));
  words = expect_keyword_line(reader, "r", 2);
  cert.r = static_cast<int>(parse_int_word(words[1], "r"));
  words = expect_keyword_line(reader, "k", 2);
  cert.k = parse_rat(words[1]);
  words = expect_keyword_line(reader, "b_min", 2);
  cert.b_min = parse_rat(words[1]);
  words = expect_keyword_line(reader, "dim_bound", 2);
  cert.dim_bound = static_cast<int>(parse_int_word(words[1], "dim_bound"));
  if (cert.n < 1 || cert.n > GroundSet::kMaxElements || cert.r < 1 ||
      cert.dim_bound < 0) {
    throw InputError("certificate: header values out of range");
  }

  words = expect_keyword_line(reader, "a0", 1);
  for (size_t i = 1; i < words.size(); ++i) {
    cert.a0.push_back(parse_rat(words[i]));
  }
  if (cert.a0.size() != static_cast<size_t>(cert.n)) {
    throw InputError("certificate: a0 must list one weight per element");
  }

  words = expect_keyword_line(reader, "steps", 2);
  long long steps = parse_int_word(words[1], "steps");
  if (steps < 0 || steps > (1ll << cert.n)) {
    throw InputError("certificate: step count out of range");
  }
  for (long long i = 0; i < steps; ++i) {
    words = split_words(reader.next());
    // step <i> collapsor <mask> facet <mask> kbar <rat> a <n rationals>
    if (words.size() != static_cast<size_t>(9 + cert.n) ||
        words[0] != "step" || words[2] != "collapsor" || words[4] != "facet" ||
        words[6] != "kbar" || words[8] != "a") {
      throw InputError("certificate: malformed step line");
    }
    if (parse_int_word(words[1], "step index") != i) {
      throw InputError("certificate: step lines out of order");
    }
    CollapseStep s;
    long long c = parse_int_word(words[3], "collapsor");
    long long f = parse_int_word(words[5], "facet");
    Mask full = (Mask{1} << cert.n) - 1;
    if (c < 0 || f < 0 || (Mask(c) & ~full) != 0 || (Mask(f) & ~full) != 0) {
      throw InputError("certificate: step masks out of range");
    }
    s.collapsor = Mask(c);
    s.facet = Mask(f);
    s.kbar = parse_rat(words[7]);
    for (int v = 0; v < cert.n; ++v) {
      s.a_snapshot.push_back(parse_rat(words[9 + v]));
    }
    cert.steps.push_back(std::move(s));
  }

  words = expect_keyword_line(reader, "final", 2);
  if (words[1] == "empty") {
    cert.final_empty = true;
  } else if (words[1] == "nonempty") {
    cert.final_empty = false;
  } else {
    throw InputError("certificate: final line must say empty or nonempty");
  }
  while (!reader.done()) {
    if (!split_words(reader.next()).empty()) {
      throw InputError("certificate: trailing content after final line");
    }
  }
  return cert;
}

}  // namespace rml
