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

#ifndef MHOM_CATALOG_HPP_
#define MHOM_CATALOG_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhom/matroid.hpp"
#include "mhom/structure.hpp"

namespace mhom {

inline constexpr std::size_t kMaxEnumeratedGround = 6;

struct CatalogSpec {
  std::size_t max_ground_size = 4;
  std::size_t min_ground_size = 1;
  bool connected_only = false;
  std::optional<bool> binary;
  // Keep only CR^k matroids.
  std::optional<std::size_t> crk;
  bool coloop_free = false;

  bool accepts(const Matroid& m) const;
  std::string describe() const;
};

// Throws SpecTooLarge when max_ground_size exceeds kMaxEnumeratedGround.
void check_spec(const CatalogSpec& spec);

// Every labeled matroid on {e0..e(n-1)} for n in [min, max] that passes the
// filters, each exactly once. Order: by n, then by the depth-first order of
// the circuit search (subsets visited by size, then lexicographically;
// excluded before included). Stop early by returning false.
void for_each_matroid(const CatalogSpec& spec, const std::function<bool(const Matroid&)>& visit);
std::vector<Matroid> enumerate_matroids(const CatalogSpec& spec);

// Number of labeled matroids on n elements, unfiltered.
std::size_t count_matroids(std::size_t n);

// One representative per isomorphism class, first occurrence kept.
std::vector<Matroid> isomorphism_classes(const std::vector<Matroid>& matroids);

// Binary vector matroid: circuits are the minimal GF(2)-dependent column
// sets. Columns are bit vectors.
Matroid binary_vector_matroid(const std::vector<std::uint32_t>& columns, GroundSet labels);

// "U{r},{n}" / "U_{r,n}" / "uniform(r,n)", "theta", "MK4", "fano",
// "single_circuit(n)". Throws UnknownName.
Matroid named(std::string_view name);

// Labels used by the named theta matroid.
inline const std::vector<std::string> kThetaLabels = {"a1", "a2", "b1", "b2", "c1", "c2"};

struct CheckStats {
  std::size_t run = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  friend bool operator==(const CheckStats&, const CheckStats&) = default;
};

struct SuiteReport {
  std::string suite;
  std::string parameters;
  std::size_t checks_run = 0;
  std::vector<Witness> failures;
  std::map<std::string, CheckStats> stats;
  // Free-form observations (distributions, vacuous counts, ...).
  std::map<std::string, std::string> notes;
  std::chrono::duration<double> timing{0};

  bool passed() const { return failures.empty(); }
  // Associative and commutative up to the final canonical sort.
  void merge(const SuiteReport& other);
  // Sorts failures by their formatted text.
  void canonicalize();
  std::string summary() const;
};

// Facts 1 through 7 over every qualifying instance in the catalog: Fact 1
// over all functions between sets of size at most 4, Fact 2 over all A, x in
// connected matroids, Fact 3 and Fact 5 over CR^2 matroids, Fact 4 over all
// pairs of subsets, Facts 6 and 7 over CR^3 matroids.
SuiteReport verify_facts_suite(const CatalogSpec& spec);

struct TheoremSuiteOptions {
  CatalogSpec sources = [] {
    CatalogSpec s;
    s.max_ground_size = 5;
    s.connected_only = true;
    return s;
  }();
  CatalogSpec targets = [] {
    CatalogSpec s;
    s.max_ground_size = 3;
    s.binary = true;
    return s;
  }();
  // Also use every subdivision, with fibers of size 1..max_fiber, of the
  // connected matroids on at most this many elements (0 disables).
  std::size_t subdivision_base_max = 0;
  std::size_t max_fiber = 2;
  // Run the fiber lemma over every admissible (x1, x2, A).
  bool lemma1 = true;
};

// Lemma 1 and Theorems 1, 3, 4 over every homomorphism from a connected
// source onto a binary target.
SuiteReport verify_theorems_suite(const TheoremSuiteOptions& options);

// Sources used by verify_theorems_suite, in order.
std::vector<Matroid> theorem_sources(const TheoremSuiteOptions& options);

// Subdivisions of m with every fiber size in [1, max_fiber]; new labels are
// "<label>_<i>".
std::vector<Matroid> all_subdivisions(const Matroid& m, std::size_t max_fiber);

}  // namespace mhom

#endif  // MHOM_CATALOG_HPP_
