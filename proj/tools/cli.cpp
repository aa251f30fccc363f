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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "mhom/catalog.hpp"
#include "mhom/error.hpp"
#include "mhom/json_io.hpp"
#include "mhom/maps.hpp"
#include "mhom/matroid.hpp"
#include "mhom/structure.hpp"

namespace mhom::cli {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_sets(const GroundSet& ground, const std::vector<ElementSet>& sets) {
  std::string out;
  for (ElementSet s : sets) out += (out.empty() ? "" : " ") + ground.format(s);
  return out.empty() ? "none" : out;
}

int cmd_check(const std::string& file, std::ostream& out) {
  const Matroid m = load_matroid(file);
  out << "ok: " << (m.name() ? *m.name() : file) << " satisfies the circuit axioms ("
      << m.size() << " elements, " << m.circuits().size() << " circuits)\n";
  return kHolds;
}

int cmd_props(const std::string& file, bool json, std::ostream& out) {
  const Matroid m = load_matroid(file);
  const std::size_t r = rank(m);
  const std::size_t cr = m.size() - r;
  const bool connected = is_connected(m);
  const bool binary = is_binary(m);
  const SeriesPartition sp = series_partition(m);
  const std::string crk = connected && cr >= 1 ? "CR^" + std::to_string(cr) : "none";
  if (json) {
    Json doc = Json::object();
    if (m.name()) doc["name"] = *m.name();
    doc["elements"] = m.size();
    doc["circuits"] = m.circuits().size();
    doc["rank"] = r;
    doc["corank"] = cr;
    doc["connected"] = connected;
    doc["crk"] = connected && cr >= 1 ? Json(cr) : Json(nullptr);
    doc["binary"] = binary;
    doc["single_circuit"] = is_single_circuit(m);
    Json classes = Json::array();
    for (ElementSet c : sp.classes) classes.push_back(m.ground().labels_of(c));
    doc["series_classes"] = std::move(classes);
    doc["loops"] = m.ground().labels_of(sp.loops);
    doc["coloops"] = m.ground().labels_of(sp.coloops);
    out << doc.dump(2) << "\n";
    return kHolds;
  }
  if (m.name()) out << "name: " << *m.name() << "\n";
  out << "elements: " << m.size() << "\n"
      << "circuits: " << m.circuits().size() << "\n"
      << "rank: " << r << "\n"
      << "corank: " << cr << "\n"
      << "connected: " << yes_no(connected) << "\n"
      << "crk: " << crk << "\n"
      << "binary: " << yes_no(binary) << "\n"
      << "single_circuit: " << yes_no(is_single_circuit(m)) << "\n"
      << "series_classes: " << format_sets(m.ground(), sp.classes) << "\n"
      << "loops: " << m.ground().format(sp.loops) << "\n"
      << "coloops: " << m.ground().format(sp.coloops) << "\n";
  return kHolds;
}

int cmd_hom(const std::string& file, bool homeo, bool injection, bool json, std::ostream& out) {
  const MapDocument doc = load_map(file);
  struct Row {
    const char* name;
    bool requested;
    MapVerdict verdict;
  };
  const std::vector<Row> rows = {
      {"homomorphism", true, is_homomorphism(doc.map, doc.source, doc.target)},
      {"homeomorphism", homeo, is_homeomorphism(doc.map, doc.source, doc.target)},
      {"circuit_injection", injection, is_circuit_injection(doc.map, doc.source, doc.target)},
  };
  bool all_hold = true;
  Json report = Json::object();
  for (const Row& row : rows) {
    if (row.requested && !row.verdict.holds) all_hold = false;
    if (json) {
      Json entry = {{"holds", row.verdict.holds},
                    {"requested", row.requested},
                    {"failure", std::string(failure_name(row.verdict.failure))}};
      if (!row.verdict.holds) entry["witness"] = describe(row.verdict, doc.map);
      report[row.name] = std::move(entry);
    } else {
      out << row.name << ": " << yes_no(row.verdict.holds);
      if (!row.verdict.holds) out << " (" << describe(row.verdict, doc.map) << ")";
      out << "\n";
    }
  }
  if (json) {
    report["exit"] = all_hold ? kHolds : kFails;
    out << report.dump(2) << "\n";
  }
  return all_hold ? kHolds : kFails;
}

void write_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream file(path);
  if (!file) throw MatroidError(ErrorKind::ParseError, "cannot write " + path.string());
  file << doc.dump(2) << "\n";
}

int cmd_decompose(const std::string& file, const std::string& out_dir, bool json, std::ostream& out,
                  std::ostream& err) {
  const MapDocument doc = load_map(file);
  if (auto why = decomposition_precondition_failure(doc.map, doc.source, doc.target)) {
    err << "PreconditionViolated: " << *why << "\n";
    if (json) out << Json{{"ok", false}, {"precondition", *why}}.dump(2) << "\n";
    return kFails;
  }
  Decomposition d = [&] {
    try {
      return decompose(doc.map, doc.source, doc.target);
    } catch (const MatroidError& e) {
      if (e.kind() != ErrorKind::InternalTheoremViolation) throw;
      err << e.what() << "\n";
      throw;
    }
  }();
  const Json result = decomposition_to_json(d, doc.source, doc.target);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(std::filesystem::path(out_dir) / "H.json", result["H"]);
    write_file(std::filesystem::path(out_dir) / "g.json", result["g"]);
    write_file(std::filesystem::path(out_dir) / "h.json", result["h"]);
    write_file(std::filesystem::path(out_dir) / "certificate.json", result["certificate"]);
  }
  if (json) {
    out << result.dump(2) << "\n";
    return kHolds;
  }
  out << "H: " << d.h_matroid.format_circuits() << "\n";
  out << "g: M -> H";
  for (const auto& [from, to] : d.g.to_labels()) out << " " << from << "->" << to;
  out << "\n";
  out << "h: H -> N identity on " << d.h.source().format(d.h.source().all()) << "\n";
  const auto& c = d.certificate;
  out << "certificate: g homeomorphism=" << yes_no(c.g_homeomorphism)
      << " h circuit injection=" << yes_no(c.h_circuit_injection)
      << " h.g=f=" << yes_no(c.composition_matches)
      << " C(H) in C(N)=" << yes_no(c.circuits_contained)
      << " M ~ subdivide(H)=" << yes_no(c.subdivision_isomorphic) << "\n";
  if (!out_dir.empty()) out << "wrote H.json g.json h.json certificate.json to " << out_dir << "\n";
  return kHolds;
}

int cmd_search_homs(const std::string& source_file, const std::string& target_file,
                    std::size_t limit, bool count_only, std::ostream& out) {
  const Matroid m = load_matroid(source_file);
  const Matroid n = load_matroid(target_file);
  std::size_t count = 0;
  for_each_homomorphism(m, n, [&](const GroundMap& f) {
    ++count;
    if (!count_only) {
      Json mapping = Json::object();
      for (const auto& [from, to] : f.to_labels()) mapping[from] = to;
      out << mapping.dump() << "\n";
    }
    return limit == 0 || count < limit;
  });
  if (count_only) out << count << "\n";
  return kHolds;
}

int cmd_enumerate(const CatalogSpec& spec, bool count_only, std::ostream& out) {
  std::size_t count = 0;
  for_each_matroid(spec, [&](const Matroid& m) {
    ++count;
    if (!count_only) out << matroid_to_json(m).dump() << "\n";
    return true;
  });
  if (count_only) out << count << "\n";
  return kHolds;
}

int cmd_verify(bool facts, bool theorems, std::size_t max_n, std::optional<std::size_t> targets_max_n,
               std::size_t subdivisions, std::size_t max_fiber, bool lemma1, bool json,
               std::ostream& out) {
  if (!facts && !theorems) facts = theorems = true;
  CatalogSpec spec;
  spec.max_ground_size = max_n;
  check_spec(spec);
  std::vector<SuiteReport> reports;
  if (facts) reports.push_back(verify_facts_suite(spec));
  if (theorems) {
    TheoremSuiteOptions options;
    options.sources.max_ground_size = max_n;
    options.targets.max_ground_size = targets_max_n.value_or(std::min<std::size_t>(max_n, 4));
    check_spec(options.targets);
    options.subdivision_base_max = subdivisions;
    options.max_fiber = max_fiber;
    options.lemma1 = lemma1;
    reports.push_back(verify_theorems_suite(options));
  }
  const bool passed = std::all_of(reports.begin(), reports.end(),
                                  [](const SuiteReport& r) { return r.passed(); });
  if (json) {
    Json doc = Json::object();
    doc["passed"] = passed;
    Json suites = Json::array();
    for (const auto& r : reports) {
      Json j = report_to_json(r);
      // Keep output reproducible byte for byte.
      j.erase("seconds");
      suites.push_back(std::move(j));
    }
    doc["suites"] = std::move(suites);
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) out << r.summary();
    out << (passed ? "verified: zero failures" : "FAILED") << "\n";
  }
  return passed ? kHolds : kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circuit-set matroids, matroid homomorphisms and their decomposition", "mhom"};
  app.require_subcommand(1);

  std::string matroid_file;
  std::string map_file;
  std::string source_file;
  std::string target_file;
  std::string out_dir;
  bool json = false;
  bool homeo = false;
  bool injection = false;
  bool count_only = false;
  std::size_t limit = 0;

  auto* check = app.add_subcommand("check", "Validate the circuit axioms of a matroid file");
  check->add_option("matroid", matroid_file, "Matroid JSON file")->required();

  auto* props = app.add_subcommand("props", "Print rank, co-rank, connectivity, binarity, series classes");
  props->add_option("matroid", matroid_file, "Matroid JSON file")->required();
  props->add_flag("--json", json, "JSON output");

  auto* hom = app.add_subcommand("hom", "Test a map for homomorphism (and optionally more)");
  hom->add_option("map", map_file, "Map JSON file")->required();
  hom->add_flag("--homeo", homeo, "Also require a homeomorphism");
  hom->add_flag("--injection", injection, "Also require a circuit injection");
  hom->add_flag("--json", json, "JSON output");

  auto* decompose_cmd = app.add_subcommand("decompose", "Factor a homomorphism as h o g");
  decompose_cmd->add_option("map", map_file, "Map JSON file")->required();
  decompose_cmd->add_option("--out", out_dir, "Directory for H.json, g.json, h.json");
  decompose_cmd->add_flag("--json", json, "JSON output");

  auto* search = app.add_subcommand("search-homs", "List every homomorphism between two matroids");
  search->add_option("source", source_file, "Source matroid JSON file")->required();
  search->add_option("target", target_file, "Target matroid JSON file")->required();
  search->add_option("--limit", limit, "Stop after this many (0 = all)");
  search->add_flag("--count", count_only, "Print only the number found");

  CatalogSpec spec;
  std::optional<std::size_t> exact_n;
  std::optional<std::size_t> crk;
  bool binary = false;
  bool non_binary = false;
  auto* enumerate = app.add_subcommand("enumerate", "Dump labeled matroids as JSON lines");
  enumerate->add_option("--n", exact_n, "Exact ground-set size");
  enumerate->add_option("--max-n", spec.max_ground_size, "Largest ground-set size")->capture_default_str();
  enumerate->add_option("--min-n", spec.min_ground_size, "Smallest ground-set size")->capture_default_str();
  enumerate->add_flag("--connected", spec.connected_only, "Connected matroids only");
  enumerate->add_flag("--binary", binary, "Binary matroids only");
  enumerate->add_flag("--non-binary", non_binary, "Non-binary matroids only");
  enumerate->add_option("--crk", crk, "CR^k matroids only");
  enumerate->add_flag("--coloop-free", spec.coloop_free, "Coloop-free matroids only");
  enumerate->add_flag("--count", count_only, "Print only the number found");

  bool facts = false;
  bool theorems = false;
  std::size_t max_n = 5;
  std::optional<std::size_t> targets_max_n;
  std::size_t subdivisions = 0;
  std::size_t max_fiber = 2;
  bool no_lemma1 = false;
  auto* verify = app.add_subcommand("verify", "Run the exhaustive verification suites");
  verify->add_flag("--facts", facts, "Run the facts suite");
  verify->add_flag("--theorems", theorems, "Run the theorems suite");
  verify->add_option("--max-n", max_n, "Largest enumerated ground set (<= 6)")->capture_default_str();
  verify->add_option("--targets-max-n", targets_max_n, "Largest target ground set (default min(4, max-n))");
  verify->add_option("--subdivisions", subdivisions,
                     "Add subdivisions of connected matroids up to this size as sources")
      ->capture_default_str();
  verify->add_option("--max-fiber", max_fiber, "Largest fiber for --subdivisions")->capture_default_str();
  verify->add_flag("--no-lemma1", no_lemma1, "Skip the fiber lemma instances");
  verify->add_flag("--json", json, "JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kInvalid;
  }

  try {
    if (*check) return cmd_check(matroid_file, out);
    if (*props) return cmd_props(matroid_file, json, out);
    if (*hom) return cmd_hom(map_file, homeo, injection, json, out);
    if (*decompose_cmd) return cmd_decompose(map_file, out_dir, json, out, err);
    if (*search) return cmd_search_homs(source_file, target_file, limit, count_only, out);
    if (*enumerate) {
      if (exact_n) spec.min_ground_size = spec.max_ground_size = *exact_n;
      if (binary && non_binary) {
        throw MatroidError(ErrorKind::InvalidParameters, "--binary and --non-binary exclude each other");
      }
      if (binary) spec.binary = true;
      if (non_binary) spec.binary = false;
      spec.crk = crk;
      return cmd_enumerate(spec, count_only, out);
    }
    if (*verify) {
      return cmd_verify(facts, theorems, max_n, targets_max_n, subdivisions, max_fiber, !no_lemma1,
                        json, out);
    }
  } catch (const MatroidError& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InternalTheoremViolation ? kFails : kInvalid;
  }
  return kInvalid;
}

}  // namespace mhom::cli
