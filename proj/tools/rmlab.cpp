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

// rmlab: rainbow matroid laboratory. Exact-rational computation of
// fractional matchings in matroid intersections, d-collapses of the
// complexes X_{a,b,k} with replayable certificates, rainbow-set search,
// and diagnostic checks.
//
// Exit codes: 0 success, 2 input/validation failure, 3 internal
// invariant breach. All report output is exact rational text on stdout
// (byte-reproducible given the same inputs and seed); timing goes to
// stderr only.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rml/chain.hpp"
#include "rml/collapse.hpp"
#include "rml/instance_io.hpp"
#include "rml/polytope.hpp"
#include "rml/rainbow.hpp"

namespace {

using namespace rml;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open \"" + path + "\" for writing");
  out << bytes;
  if (!out) throw InputError("failed writing \"" + path + "\"");
}

struct LoadedInstance {
  ParsedInstance inst;
  std::string digest;  // of the raw file bytes
};

LoadedInstance load_instance_file(const std::string& path, int cap) {
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse \"" + path + "\": " + e.what());
  }
  ParsedInstance inst = parse_instance(j);
  if (cap > 0 && inst.ground.size() > cap) {
    throw InputError("ground set size " + std::to_string(inst.ground.size()) +
                     " exceeds --cap " + std::to_string(cap));
  }
  return LoadedInstance{std::move(inst), digest_hex(fnv1a64(bytes))};
}

std::string vec_str(const RatVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += " ";
    out += rat_str(v[i]);
  }
  return out;
}

bool terse(const std::string& format) { return format == "terse"; }

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    std::cerr << "time_ms " << ms << "\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------
// nustar

int cmd_nustar(const std::string& path, const std::string& subset,
               int cap, const std::string& format) {
  Timer timer;
  LoadedInstance li = load_instance_file(path, cap);
  IntersectionSystem sys = li.inst.system();
  const GroundSet& g = sys.ground();
  Mask w = parse_subset_arg(subset, g);

  auto [value, f] = nu_star(sys, w, li.inst.a);
  auto [dual_value, dual] = tau_star(sys, w, li.inst.a);
  if (value != dual_value) {
    throw InvariantError("nu* != tau* on " + g.subset_str(w));
  }
  if (terse(format)) {
    std::cout << rat_str(value) << "\n";
    return 0;
  }
  std::cout << "command nustar\n";
  std::cout << "input " << li.digest << "\n";
  std::cout << "subset " << g.subset_str(w) << "\n";
  std::cout << "nu_star " << rat_str(value) << "\n";
  std::cout << "tau_star " << rat_str(dual_value) << "\n";
  std::cout << "optimizer " << vec_str(f) << "\n";
  for (const DualWeights::Entry& e : dual.entries) {
    std::cout << "dual matroid " << e.matroid << " set "
              << g.subset_str(e.subset) << " weight " << rat_str(e.weight)
              << "\n";
  }
  std::cout << "dual_unique "
            << (is_dual_unique(sys, w, li.inst.a) ? "yes" : "no") << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// rainbow

int cmd_rainbow(const std::string& path, int cap,
                const std::string& format) {
  Timer timer;
  LoadedInstance li = load_instance_file(path, cap);
  RainbowInstance inst = li.inst.rainbow_instance();
  const GroundSet& g = inst.sys.ground();
  RainbowResult res = find_rainbow(inst);
  if (terse(format)) {
    std::cout << g.subset_str(res.rainbow) << "\n";
    return 0;
  }
  std::cout << "command rainbow\n";
  std::cout << "input " << li.digest << "\n";
  std::cout << "k " << rat_str(inst.k) << "\n";
  std::cout << "functions " << inst.functions.size() << "\n";
  for (const auto& [j, v] : res.choice) {
    std::cout << "choice function " << j << " element " << g.label(v)
              << "\n";
  }
  std::cout << "rainbow " << g.subset_str(res.rainbow) << "\n";
  std::cout << "witness " << vec_str(res.witness) << "\n";
  std::cout << "witness_total " << rat_str(res.witness_total) << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// collapse

void check_certificate_matches(const CollapseCertificate& cert,
                               const ComplexSpec& spec) {
  if (cert.n != spec.sys.ground().size() || cert.r != spec.sys.r() ||
      cert.k != spec.k || cert.b_min != spec.sys.weights().min_total() ||
      cert.a0 != spec.a) {
    throw InputError("certificate header does not match the instance");
  }
}

int cmd_collapse(const std::string& path, std::uint64_t seed, bool verify,
                 const std::string& cert_path, const std::string& out_dir,
                 int cap, const std::string& format) {
  Timer timer;
  LoadedInstance li = load_instance_file(path, cap);
  ComplexSpec spec = li.inst.complex_spec();

  if (!cert_path.empty()) {
    // Verification-only mode: replay an existing certificate.
    CollapseCertificate cert = certificate_from_text(read_file(cert_path));
    check_certificate_matches(cert, spec);
    VerifyResult vr = verify_certificate(enumerate_faces(spec), cert);
    if (terse(format)) {
      std::cout << (vr.accepted ? "accepted" : "rejected") << "\n";
    } else {
      std::cout << "command collapse\n";
      std::cout << "input " << li.digest << "\n";
      std::cout << "certificate " << cert_path << "\n";
      if (vr.accepted) {
        std::cout << "verified yes\n";
      } else {
        std::cout << "verified no step " << vr.failed_step << " reason "
                  << vr.reason << "\n";
      }
    }
    return 0;
  }

  CollapseCertificate cert = run_collapse(spec, seed);
  int max_collapsor = 0;
  for (const CollapseStep& s : cert.steps) {
    max_collapsor = std::max(max_collapsor, popcount(s.collapsor));
  }
  std::string text = certificate_to_text(cert);
  std::string name = "collapse-" + digest_hex(fnv1a64(text)) + ".cert";
  std::string full = out_dir.empty() ? name : out_dir + "/" + name;
  write_file(full, text);

  if (terse(format)) {
    std::cout << full << "\n";
  } else {
    std::cout << "command collapse\n";
    std::cout << "input " << li.digest << "\n";
    std::cout << "seed " << seed << "\n";
    std::cout << "dim_bound " << cert.dim_bound << "\n";
    std::cout << "steps " << cert.steps.size() << "\n";
    std::cout << "max_collapsor " << max_collapsor << "\n";
    std::cout << "certificate " << full << "\n";
  }
  if (verify) {
    VerifyResult vr = verify_certificate(enumerate_faces(spec), cert);
    if (!vr.accepted) {
      throw InvariantError("fresh certificate rejected at step " +
                           std::to_string(vr.failed_step) + ": " + vr.reason);
    }
    if (!terse(format)) std::cout << "verified yes\n";
  }
  return 0;
}

// ---------------------------------------------------------------------
// check

void print_pds_report(const std::string& prefix, const PdsReport& rep,
                      const GroundSet& g) {
  auto flag = [&](const std::string& name, bool ok) {
    std::cout << prefix << " " << name << " " << (ok ? "yes" : "no");
  };
  flag("positive", rep.positive);
  if (rep.positivity_witness) {
    std::cout << " witness " << g.subset_str(*rep.positivity_witness);
  }
  std::cout << "\n";
  flag("strictly_positive", rep.strictly_positive);
  if (rep.strict_positivity_witness) {
    std::cout << " witness " << g.subset_str(*rep.strict_positivity_witness);
  }
  std::cout << "\n";
  flag("decreasing", rep.decreasing);
  if (rep.decrease_witness) {
    std::cout << " witness " << g.subset_str(rep.decrease_witness->a)
              << " " << g.subset_str(rep.decrease_witness->b);
  }
  std::cout << "\n";
  flag("strictly_decreasing", rep.strictly_decreasing);
  if (rep.strict_decrease_witness) {
    std::cout << " witness " << g.subset_str(rep.strict_decrease_witness->a)
              << " " << g.subset_str(rep.strict_decrease_witness->b);
  }
  std::cout << "\n";
  flag("submodular", rep.submodular);
  if (rep.submodularity_witness) {
    std::cout << " witness " << g.subset_str(rep.submodularity_witness->a)
              << " " << g.subset_str(rep.submodularity_witness->b);
  }
  std::cout << "\n";
  flag("strictly_submodular", rep.strictly_submodular);
  if (rep.strict_submodularity_witness) {
    std::cout << " witness "
              << g.subset_str(rep.strict_submodularity_witness->a) << " "
              << g.subset_str(rep.strict_submodularity_witness->b);
  }
  std::cout << "\n";
  std::cout << prefix << " pds " << (rep.pds() ? "yes" : "no")
            << " strict " << (rep.strictly_pds() ? "yes" : "no") << "\n";
}

const char* kind_name(MatroidKind k) {
  switch (k) {
    case MatroidKind::kUniform: return "uniform";
    case MatroidKind::kPartition: return "partition";
    case MatroidKind::kExplicit: return "explicit";
    case MatroidKind::kStar: return "star";
  }
  return "unknown";
}

int cmd_check(const std::string& path, int cap, const std::string& format) {
  Timer timer;
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse \"" + path + "\": " + e.what());
  }
  std::string fmt = document_format(j);
  std::string digest = digest_hex(fnv1a64(bytes));
  bool all_ok = true;

  if (fmt == "instance") {
    ParsedInstance inst = parse_instance(j);
    const GroundSet& g = inst.ground;
    if (cap > 0 && g.size() > cap) {
      throw InputError("ground set size exceeds --cap");
    }
    if (!terse(format)) {
      std::cout << "command check\ninput " << digest
                << "\nformat instance\n";
    }
    for (std::size_t i = 0; i < inst.matroids.size(); ++i) {
      AxiomReport rep = check_rank_axioms(inst.matroids[i]);
      all_ok = all_ok && rep.pass;
      if (!terse(format)) {
        std::cout << "matroid " << i << " kind "
                  << kind_name(inst.matroids[i].kind()) << " axioms "
                  << (rep.pass ? "ok" : "violated " + rep.axiom + " at " +
                                            g.subset_str(rep.witness_a) +
                                            " " +
                                            g.subset_str(rep.witness_b))
                  << (inst.matroids[i].loopless() ? "" : " (has loops)")
                  << "\n";
      }
    }
    for (std::size_t i = 0; i < inst.weights.size(); ++i) {
      PdsReport rep = check_pds(inst.weights[i]);
      all_ok = all_ok && rep.pds();
      if (!terse(format)) {
        print_pds_report("weight " + std::to_string(i), rep, g);
      }
    }
    bool a_pos = true;
    for (const Rat& av : inst.a) a_pos = a_pos && av > 0;
    all_ok = all_ok && a_pos;
    if (!terse(format)) {
      std::cout << "a_positive " << (a_pos ? "yes" : "no") << "\n";
    }
    if (!inst.functions.empty()) {
      // Membership of each listed function in every skew polytope.
      std::vector<SkewPolytope> polys;
      for (std::size_t i = 0; i < inst.matroids.size(); ++i) {
        polys.emplace_back(inst.matroids[i], inst.weights[i]);
      }
      for (std::size_t fj = 0; fj < inst.functions.size(); ++fj) {
        bool inside = true;
        std::optional<Mask> bad;
        for (const SkewPolytope& p : polys) {
          MembershipReport mr = membership(inst.functions[fj], p);
          if (!mr.member) {
            inside = false;
            bad = mr.violated_set.value_or(0);
            break;
          }
        }
        all_ok = all_ok && inside;
        if (!terse(format)) {
          std::cout << "function " << fj << " member "
                    << (inside ? "yes" : "no");
          if (bad) std::cout << " violated " << g.subset_str(*bad);
          std::cout << "\n";
        }
      }
    }
  } else if (fmt == "function") {
    auto [g, fn] = parse_function_file(j);
    if (cap > 0 && g.size() > cap) {
      throw InputError("ground set size exceeds --cap");
    }
    if (!terse(format)) {
      std::cout << "command check\ninput " << digest
                << "\nformat function\n";
    }
    PdsReport rep = check_pds(fn);
    all_ok = rep.pds();
    if (!terse(format)) print_pds_report("function", rep, g);
  } else if (fmt == "family") {
    auto [g, sets] = parse_family_file(j);
    if (cap > 0 && g.size() > cap) {
      throw InputError("ground set size exceeds --cap");
    }
    SetFamily fam = make_family(g, sets, /*verify=*/true);
    if (!terse(format)) {
      std::cout << "command check\ninput " << digest << "\nformat family\n";
      std::cout << "sets " << fam.members.size() << "\n";
      std::cout << "union_closed " << (fam.union_closed ? "yes" : "no")
                << "\n";
      std::cout << "intersection_closed "
                << (fam.intersection_closed ? "yes" : "no") << "\n";
      std::cout << "dimension " << span_dimension(fam) << "\n";
    }
    all_ok = fam.union_closed && fam.intersection_closed;
  } else {
    throw InputError("unknown document format \"" + fmt + "\"");
  }

  std::cout << (all_ok ? "check ok" : "check flagged") << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// chain

int cmd_chain(const std::string& path, bool close, int cap,
              const std::string& format) {
  Timer timer;
  std::string bytes = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("cannot parse \"" + path + "\": " + e.what());
  }
  auto [g, sets] = parse_family_file(j);
  if (cap > 0 && g.size() > cap) {
    throw InputError("ground set size exceeds --cap");
  }
  SetFamily fam = make_family(g, sets, /*verify=*/true);
  bool closed_input = fam.union_closed && fam.intersection_closed;
  if (!closed_input) {
    if (!close) {
      throw InputError(
          "family is not union- and intersection-closed; rerun with "
          "--close to take its closure");
    }
    fam = close_family(g, sets);
  }
  Chain chain = extract_chain(fam);
  if (!verify_chain(chain, fam)) {
    throw InvariantError("extracted chain failed verification");
  }
  std::string chain_str;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) chain_str += " ";
    chain_str += g.subset_str(chain[i]);
  }
  if (terse(format)) {
    std::cout << chain_str << "\n";
    return 0;
  }
  std::cout << "command chain\n";
  std::cout << "input " << digest_hex(fnv1a64(bytes)) << "\n";
  std::cout << "closed " << (closed_input ? "yes" : "closure-taken") << "\n";
  std::cout << "sets " << fam.members.size() << "\n";
  std::cout << "dimension " << span_dimension(fam) << "\n";
  std::cout << "chain " << chain_str << "\n";
  std::cout << "length " << chain.size() << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// catalog

int cmd_catalog(const std::string& name) {
  std::vector<CatalogEntry> cat = canonical_instances();
  if (name.empty()) {
    for (const CatalogEntry& e : cat) {
      std::cout << e.name << "  " << e.summary << "\n";
    }
    return 0;
  }
  for (const CatalogEntry& e : cat) {
    if (e.name == name) {
      std::cout << catalog_entry_json(e).dump(2) << "\n";
      return 0;
    }
  }
  throw InputError("no catalog instance named \"" + name + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rmlab: exact fractional matchings in matroid intersections, "
      "d-collapses with replayable certificates, and rainbow-set search"};
  app.require_subcommand(1);

  std::string file, subset = "all", format = "report", cert_path,
              out_dir = ".", name;
  std::uint64_t seed = 0;
  int cap = 0;
  bool verify = false, close = false;

  CLI::App* nustar = app.add_subcommand(
      "nustar", "nu* and tau* of a subset, with optimizer and dual");
  nustar->add_option("file", file, "instance file")->required();
  nustar->add_option("--subset", subset,
                     "subset: all, none, 0,2,5 or hex 0x2b");
  nustar->add_option("--cap", cap, "reject ground sets larger than this");
  nustar->add_option("--format", format, "report or terse")
      ->check(CLI::IsMember({"report", "terse"}));

  CLI::App* rainbow = app.add_subcommand(
      "rainbow", "search for a fractional rainbow set of value >= k");
  rainbow->add_option("file", file, "instance file")->required();
  rainbow->add_option("--cap", cap, "reject ground sets larger than this");
  rainbow->add_option("--format", format, "report or terse")
      ->check(CLI::IsMember({"report", "terse"}));

  CLI::App* collapse = app.add_subcommand(
      "collapse", "run a d-collapse of X_{a,b,k} and emit a certificate");
  collapse->add_option("file", file, "instance file")->required();
  collapse->add_option("--seed", seed, "perturbation seed");
  collapse->add_flag("--verify", verify,
                     "replay the fresh certificate against the face list");
  collapse->add_option("--cert", cert_path,
                       "verify this existing certificate instead of "
                       "running");
  collapse->add_option("--out", out_dir,
                       "directory for the certificate file");
  collapse->add_option("--cap", cap, "reject ground sets larger than this");
  collapse->add_option("--format", format, "report or terse")
      ->check(CLI::IsMember({"report", "terse"}));

  CLI::App* check = app.add_subcommand(
      "check", "axiom / PDS / membership / closure diagnostics");
  check->add_option("file", file, "instance, function, or family file")
      ->required();
  check->add_option("--cap", cap, "reject ground sets larger than this");
  check->add_option("--format", format, "report or terse")
      ->check(CLI::IsMember({"report", "terse"}));

  CLI::App* chain = app.add_subcommand(
      "chain", "extract a maximal chain from a closed family");
  chain->add_option("file", file, "family file")->required();
  chain->add_flag("--close", close,
                  "take the union/intersection closure first");
  chain->add_option("--cap", cap, "reject ground sets larger than this");
  chain->add_option("--format", format, "report or terse")
      ->check(CLI::IsMember({"report", "terse"}));

  CLI::App* catalog = app.add_subcommand(
      "catalog", "list built-in instances, or print one as JSON");
  catalog->add_option("--name", name, "instance to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (nustar->parsed()) return cmd_nustar(file, subset, cap, format);
    if (rainbow->parsed()) return cmd_rainbow(file, cap, format);
    if (collapse->parsed()) {
      return cmd_collapse(file, seed, verify, cert_path, out_dir, cap,
                          format);
    }
    if (check->parsed()) return cmd_check(file, cap, format);
    if (chain->parsed()) return cmd_chain(file, close, cap, format);
    if (catalog->parsed()) return cmd_catalog(name);
  } catch (const InvariantError& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
