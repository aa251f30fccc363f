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

#include "mhom/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "mhom/error.hpp"

namespace mhom {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw MatroidError(ErrorKind::ParseError, what);
}

std::vector<std::string> string_array(const Json& value, const std::string& what) {
  if (!value.is_array()) parse_error(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) parse_error(what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Json labels_json(const GroundSet& ground, ElementSet s) {
  Json out = Json::array();
  for (Element e : s) out.push_back(ground.label(e));
  return out;
}

Matroid resolve_matroid(const Json& value, const std::filesystem::path& base_dir,
                        const std::string& what) {
  if (value.is_string()) {
    std::filesystem::path p = value.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_matroid(p);
  }
  if (value.is_object()) return matroid_from_json(value);
  parse_error(what + " must be a matroid object or a file path");
}

}  // namespace

Matroid matroid_from_json(const Json& doc) {
  if (!doc.is_object()) parse_error("matroid document must be an object");
  if (!doc.contains("elements")) parse_error("matroid document lacks \"elements\"");
  if (!doc.contains("circuits")) parse_error("matroid document lacks \"circuits\"");
  GroundSet ground(string_array(doc.at("elements"), "\"elements\""));
  const Json& circuits = doc.at("circuits");
  if (!circuits.is_array()) parse_error("\"circuits\" must be an array of arrays");
  std::vector<ElementSet> family;
  for (const auto& c : circuits) {
    const auto labels = string_array(c, "each circuit");
    ElementSet s;
    for (const auto& l : labels) {
      const Element e = ground.index_of(l);
      if (s.contains(e)) parse_error("circuit lists '" + l + "' twice");
      s = s.with(e);
    }
    family.push_back(s);
  }
  Matroid m = validate_circuits(std::move(ground), std::move(family));
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) parse_error("\"name\" must be a string");
    m = m.with_name(doc.at("name").get<std::string>());
  }
  return m;
}

Json matroid_to_json(const Matroid& m) {
  Json out = Json::object();
  if (m.name()) out["name"] = *m.name();
  out["elements"] = m.ground().labels();
  Json circuits = Json::array();
  for (ElementSet c : m.circuits()) circuits.push_back(labels_json(m.ground(), c));
  out["circuits"] = std::move(circuits);
  return out;
}

MapDocument map_from_json(const Json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) parse_error("map document must be an object");
  for (const char* key : {"source", "target", "map"}) {
    if (!doc.contains(key)) parse_error(std::string("map document lacks \"") + key + "\"");
  }
  Matroid source = resolve_matroid(doc.at("source"), base_dir, "\"source\"");
  Matroid target = resolve_matroid(doc.at("target"), base_dir, "\"target\"");
  const Json& mapping = doc.at("map");
  if (!mapping.is_object()) parse_error("\"map\" must be an object of label pairs");
  std::map<std::string, std::string> pairs;
  for (const auto& [from, to] : mapping.items()) {
    if (!to.is_string()) parse_error("image of '" + from + "' must be a string");
    pairs.emplace(from, to.get<std::string>());
  }
  GroundMap f = GroundMap::from_labels(source.ground(), target.ground(), pairs);
  return MapDocument{std::move(source), std::move(target), std::move(f)};
}

Json map_to_json(const GroundMap& f, const Matroid& source, const Matroid& target) {
  Json out = Json::object();
  out["source"] = matroid_to_json(source);
  out["target"] = matroid_to_json(target);
  Json mapping = Json::object();
  for (Element e = 0; e < f.source().size(); ++e) {
    mapping[f.source().label(e)] = f.target().label(f(e));
  }
  out["map"] = std::move(mapping);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Matroid load_matroid(const std::filesystem::path& path) {
  return matroid_from_json(read_json_file(path));
}

MapDocument load_map(const std::filesystem::path& path) {
  return map_from_json(read_json_file(path), path.parent_path());
}

Json witness_to_json(const Witness& w) {
  Json out = Json::object();
  out["check"] = std::string(check_name(w.kind));
  out["verdict"] = w.passed ? "pass" : "fail";
  if (w.matroid) out["matroid"] = matroid_to_json(*w.matroid);
  if (w.target) out["target"] = matroid_to_json(*w.target);
  Json sets = Json::object();
  for (const auto& s : w.sets) {
    const Matroid* owner = s.in_target && w.target ? &*w.target : w.matroid ? &*w.matroid : nullptr;
    if (owner) {
      sets[s.name] = labels_json(owner->ground(), s.set);
    } else {
      sets[s.name] = s.set.elements();
    }
  }
  out["sets"] = std::move(sets);
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

Json report_to_json(const SuiteReport& report) {
  Json out = Json::object();
  out["suite"] = report.suite;
  out["parameters"] = report.parameters;
  out["passed"] = report.passed();
  out["checks_run"] = report.checks_run;
  Json stats = Json::object();
  for (const auto& [name, s] : report.stats) {
    stats[name] = {{"run", s.run}, {"failed", s.failed}, {"skipped", s.skipped}};
  }
  out["stats"] = std::move(stats);
  out["notes"] = report.notes;
  Json failures = Json::array();
  for (const auto& w : report.failures) failures.push_back(witness_to_json(w));
  out["failures"] = std::move(failures);
  out["seconds"] = report.timing.count();
  return out;
}

Json decomposition_to_json(const Decomposition& d, const Matroid& source, const Matroid& target) {
  Json out = Json::object();
  out["H"] = matroid_to_json(d.h_matroid);
  out["g"] = map_to_json(d.g, source, d.h_matroid);
  out["h"] = map_to_json(d.h, d.h_matroid, target);
  const auto& c = d.certificate;
  out["certificate"] = {
      {"h_equals_image_family", c.h_equals_image_family},
      {"g_homeomorphism", c.g_homeomorphism},
      {"h_circuit_injection", c.h_circuit_injection},
      {"composition_matches", c.composition_matches},
      {"circuits_contained", c.circuits_contained},
      {"subdivision_isomorphic", c.subdivision_isomorphic},
  };
  return out;
}

}  // namespace mhom
