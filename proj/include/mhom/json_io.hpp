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

// JSON documents:
//   matroid  {"name": "...", "elements": [labels], "circuits": [[labels]]}
//   map      {"source": matroid | path, "target": matroid | path,
//             "map": {"srcLabel": "tgtLabel", ...}}
// Paths inside a map document are resolved relative to the document.

#ifndef MHOM_JSON_IO_HPP_
#define MHOM_JSON_IO_HPP_

#include <filesystem>
#include <ostream>
#include <string>

#include "json.hpp"
#include "mhom/catalog.hpp"
#include "mhom/ground_map.hpp"
#include "mhom/matroid.hpp"
#include "mhom/structure.hpp"

namespace mhom {

using Json = nlohmann::ordered_json;

// Throws ParseError for schema violations, DuplicateLabel, ElementNotInGround,
// DuplicateCircuit, or any circuit-axiom error.
Matroid matroid_from_json(const Json& doc);
Json matroid_to_json(const Matroid& m);

struct MapDocument {
  Matroid source;
  Matroid target;
  GroundMap map;
};

MapDocument map_from_json(const Json& doc,
                          const std::filesystem::path& base_dir = std::filesystem::path("."));
Json map_to_json(const GroundMap& f, const Matroid& source, const Matroid& target);

// Reads and parses a file; malformed JSON becomes ParseError.
Json read_json_file(const std::filesystem::path& path);
Matroid load_matroid(const std::filesystem::path& path);
MapDocument load_map(const std::filesystem::path& path);

Json witness_to_json(const Witness& w);
Json report_to_json(const SuiteReport& report);
Json decomposition_to_json(const Decomposition& d, const Matroid& source, const Matroid& target);

}  // namespace mhom

#endif  // MHOM_JSON_IO_HPP_
