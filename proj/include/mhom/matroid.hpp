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

// Circuit-set matroids and the single-matroid structure queries built on
// them: rank, connectivity, series classes, binarity, and the standard
// constructions (uniform, cycle matroid, subdivision, series quotient).

#ifndef MHOM_MATROID_HPP_
#define MHOM_MATROID_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mhom/element_set.hpp"
#include "mhom/ground_map.hpp"
#include "mhom/ground_set.hpp"

namespace mhom {

namespace detail {
struct TrustedMatroid;
}  // namespace detail

// A matroid given by its ground set and circuit family. Instances can only be
// obtained through validate_circuits (or the constructions below, which go
// through it), so every Matroid satisfies the circuit axioms. The circuit
// list is kept sorted in lex_less order; equality is structural.
class Matroid {
 public:
  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  ElementSet elements() const { return ground_.all(); }
  std::span<const ElementSet> circuits() const { return circuits_; }
  bool is_circuit(ElementSet s) const;
  // Circuits containing e, in canonical order.
  std::vector<ElementSet> circuits_containing(Element e) const;

  const std::optional<std::string>& name() const { return name_; }
  Matroid with_name(std::string name) const;

  // Label form of the circuits, e.g. "{{a,b},{b,c}}".
  std::string format_circuits() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }

 private:
  Matroid(GroundSet ground, std::vector<ElementSet> circuits)
      : ground_(std::move(ground)), circuits_(std::move(circuits)) {}

  friend Matroid validate_circuits(GroundSet, std::vector<ElementSet>);
  friend struct detail::TrustedMatroid;

  GroundSet ground_;
  std::vector<ElementSet> circuits_;
  std::optional<std::string> name_;
};

// Checks the circuit axioms (no empty circuit, antichain, weak elimination)
// and returns the canonicalized matroid. Throws MatroidError with kind
// EmptyCircuit, NotAntichain (sets {A, B} with A ⊊ B), EliminationFails
// (sets {A, B}, element e), DuplicateCircuit, or ElementNotInGround.
Matroid validate_circuits(GroundSet ground, std::vector<ElementSet> family);
Matroid validate_circuits(GroundSet ground,
                          const std::vector<std::vector<std::string>>& family);

// M|A on the ground A (labels kept, order inherited from M).
Matroid restrict(const Matroid& m, ElementSet a);

// Size of a largest circuit-free subset of a.
std::size_t rank(const Matroid& m, ElementSet a);
std::size_t rank(const Matroid& m);
// |E(M)| - r(M).
std::size_t corank(const Matroid& m);
// |A| - r(A), the co-rank of M|A.
std::size_t corank(const Matroid& m, ElementSet a);

// Rank of every subset of E(M), indexed by bitmask. Requires |E(M)| <= 24.
std::vector<std::uint8_t> rank_profile(const Matroid& m);

// True iff |E(M)| <= 1 or every two distinct elements share a circuit.
bool is_connected(const Matroid& m);
// Connectivity of M|A without materializing the restriction.
bool is_connected(const Matroid& m, ElementSet a);

// Connected and of co-rank k.
bool is_crk(const Matroid& m, std::size_t k);
bool is_crk(const Matroid& m, ElementSet a, std::size_t k);

struct SeriesPartition {
  // Classes of elements with identical circuit incidence, each ordered by
  // smallest element; only elements in some circuit of size >= 2.
  std::vector<ElementSet> classes;
  ElementSet loops;
  ElementSet coloops;

  friend bool operator==(const SeriesPartition&, const SeriesPartition&) = default;
};

SeriesPartition series_partition(const Matroid& m);
// Every circuit contains both or neither of x, y.
bool in_series(const Matroid& m, Element x, Element y);

// Symmetric difference of any two distinct circuits is a disjoint union of
// circuits.
bool is_binary(const Matroid& m);
// When is_binary is false, a circuit pair whose symmetric difference is not a
// disjoint union of circuits.
std::optional<std::pair<ElementSet, ElementSet>> non_binary_pair(const Matroid& m);
// Decomposes s into disjoint circuits of m if possible (first found in
// canonical search order).
std::optional<std::vector<ElementSet>> disjoint_circuit_cover(const Matroid& m,
                                                              ElementSet s);

// C(M) = {E(M)}.
bool is_single_circuit(const Matroid& m);

// U_{r,n}: circuits are all (r+1)-subsets. Default labels e0..e(n-1).
Matroid uniform(std::size_t r, std::size_t n);
Matroid uniform(std::size_t r, GroundSet ground);

struct Edge {
  std::size_t u;
  std::size_t v;
};

// Cycle matroid of a multigraph; parallel edges and self-loops are allowed.
// Edge labels default to e0..e(m-1). Throws InvalidVertex.
Matroid cycle_matroid(std::size_t vertices, const std::vector<Edge>& edges);
Matroid cycle_matroid(std::size_t vertices, const std::vector<Edge>& edges,
                      GroundSet edge_labels);

// Replaces each element e of H by the labels fibers[e]. The result's ground
// is the concatenation of the fibers in H's element order; the returned map
// sends every new element to the element of H it came from. Throws
// FiberOverlap, EmptyFiber, SizeMismatch.
std::pair<Matroid, GroundMap> subdivide(
    const Matroid& h, const std::vector<std::vector<std::string>>& fibers);

// Collapses every series class (and every loop) of a connected, coloop-free
// matroid to a single element, labelled by the class's first element. Throws
// NotConnected, HasColoops.
std::pair<Matroid, GroundMap> series_quotient(const Matroid& m);

// Ground bijection (as a vector: element i of M goes to result[i] of N)
// carrying C(M) onto C(N), lexicographically first if several exist.
std::optional<std::vector<Element>> isomorphic(const Matroid& m, const Matroid& n);

// Relabel every element through `labels` (same size as the ground set).
Matroid relabel(const Matroid& m, GroundSet labels);

}  // namespace mhom

#endif  // MHOM_MATROID_HPP_
