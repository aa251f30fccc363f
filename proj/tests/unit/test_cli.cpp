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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "mhom/catalog.hpp"
#include "mhom/json_io.hpp"

using namespace mhom;
using namespace mhom::test;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) {
  return (std::filesystem::path(MHOM_DATA_DIR) / name).string();
}

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli check") {
  CHECK(run({"check", data("u24.json")}).code == 0);
  Run nested = run({"check", data("nested.json")});
  CHECK(nested.code == 2);
  CHECK(nested.err.find("NotAntichain") != std::string::npos);
  Run bad = run({"check", data("malformed.json")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("ParseError") != std::string::npos);
  CHECK(run({"check", data("missing.json")}).code == 2);
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"enumerate", "--binary", "--non-binary"}).code == 2);
}

TEST_CASE("cli props") {
  Run u = run({"props", "--json", data("u24.json")});
  REQUIRE(u.code == 0);
  Json j = Json::parse(u.out);
  CHECK(j["rank"] == 2);
  CHECK(j["corank"] == 2);
  CHECK(j["connected"] == true);
  CHECK(j["crk"] == 2);
  CHECK(j["binary"] == false);
  CHECK(j["series_classes"].size() == 4);

  Json t = Json::parse(run({"props", "--json", data("theta.json")}).out);
  CHECK(t["rank"] == 4);
  CHECK(t["corank"] == 2);
  CHECK(t["binary"] == true);
  CHECK(t["series_classes"] == Json::parse(R"([["a1","a2"],["b1","b2"],["c1","c2"]])"));

  Json f = Json::parse(run({"props", "--json", data("free3.json")}).out);
  CHECK(f["coloops"].size() == 3);
  CHECK(f["corank"] == 0);
  CHECK(f["connected"] == false);
  CHECK(f["crk"].is_null());

  Run text = run({"props", data("theta.json")});
  CHECK(text.out.find("crk: CR^2") != std::string::npos);
}

TEST_CASE("cli hom") {
  CHECK(run({"hom", "--homeo", data("theta_to_u13.json")}).code == 0);
  Run r = run({"hom", "--homeo", data("theta_to_u12.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("{x,y}") != std::string::npos);
  CHECK(run({"hom", data("theta_to_u12.json")}).code == 0);
  CHECK(run({"hom", "--injection", data("theta_identity.json")}).code == 0);
  CHECK(run({"hom", "--injection", data("theta_to_u13.json")}).code == 1);
  Json j = Json::parse(run({"hom", "--json", "--homeo", data("theta_to_u12.json")}).out);
  CHECK(j["homeomorphism"]["failure"] == "PreimageNotCircuit");
  CHECK(j["exit"] == 1);
}

TEST_CASE("cli decompose") {
  const auto dir = std::filesystem::temp_directory_path() / "mhom_cli_decompose";
  std::filesystem::remove_all(dir);
  Run r = run({"decompose", data("theta_to_u13.json"), "--out", dir.string()});
  CHECK(r.code == 0);
  Matroid h = load_matroid(dir / "H.json");
  CHECK(h == u13());
  MapDocument g = load_map(dir / "g.json");
  CHECK(g.target == u13());
  CHECK(std::filesystem::exists(dir / "h.json"));
  std::filesystem::remove_all(dir);

  Run single = run({"decompose", data("theta_to_u12.json")});
  CHECK(single.code == 1);
  CHECK(single.err.find("target is a single circuit") != std::string::npos);
  Run disc = run({"decompose", data("disconnected_to_u12.json")});
  CHECK(disc.code == 1);
  CHECK(disc.err.find("source disconnected") != std::string::npos);

  Json j = Json::parse(run({"decompose", "--json", data("theta_to_u13.json")}).out);
  const MapDocument d = load_map(data("theta_to_u13.json"));
  CHECK(j == decomposition_to_json(decompose(d.map, d.source, d.target), d.source, d.target));
}

TEST_CASE("cli enumerate matches the library") {
  Run r = run({"enumerate", "--max-n", "3"});
  REQUIRE(r.code == 0);
  CatalogSpec spec;
  spec.max_ground_size = 3;
  std::string expected;
  for (const Matroid& m : enumerate_matroids(spec)) expected += matroid_to_json(m).dump() + "\n";
  CHECK(r.out == expected);
  CHECK(run({"enumerate", "--n", "5", "--count"}).out == "406\n");
  CHECK(run({"enumerate", "--n", "4", "--non-binary", "--count"}).out == "1\n");
  CHECK(run({"enumerate", "--max-n", "7"}).code == 2);
}

TEST_CASE("cli search-homs") {
  Run r = run({"search-homs", data("theta.json"), data("u13.json")});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(lines, line)) {
    Json j = Json::parse(line);
    CHECK(j.size() == 6);
    ++n;
  }
  CHECK(n == 6);
  CHECK(run({"search-homs", "--count", data("u24.json"), data("u13.json")}).out == "0\n");
  CHECK(run({"search-homs", "--limit", "2", data("theta.json"), data("u13.json")}).out.size() <
        r.out.size());
}

TEST_CASE("cli verify") {
  Run facts = run({"verify", "--facts", "--max-n", "4"});
  CHECK(facts.code == 0);
  CHECK(facts.out.find("checks_run=") != std::string::npos);
  CHECK(run({"verify", "--max-n", "9"}).code == 2);
  Run j = run({"verify", "--theorems", "--max-n", "4", "--targets-max-n", "3", "--json"});
  CHECK(j.code == 0);
  Json doc = Json::parse(j.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["suites"][0]["suite"] == "theorems");
  // Deterministic output.
  CHECK(run({"verify", "--theorems", "--max-n", "4", "--targets-max-n", "3", "--json"}).out ==
        j.out);
}
