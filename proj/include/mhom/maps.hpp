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

// Ground maps between matroids: homomorphisms (onto, circuit preserving),
// homeomorphisms (preimages of circuits are circuits too) and circuit
// injections (bijective homomorphisms), plus exhaustive search over maps.

#ifndef MHOM_MAPS_HPP_
#define MHOM_MAPS_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhom/element_set.hpp"
#include "mhom/ground_map.hpp"
#include "mhom/matroid.hpp"

namespace mhom {

ElementSet image_of_set(const GroundMap& f, ElementSet a);
ElementSet preimage_of_set(const GroundMap& f, ElementSet a);

enum class MapFailure {
  None,
  NotOnto,
  // circuit of M whose image is not a circuit of N
  CircuitNotPreserved,
  // circuit of N whose preimage is not a circuit of M
  PreimageNotCircuit,
  NotInjective,
};

std::string_view failure_name(MapFailure failure);

// Outcome of a map predicate. On failure, `circuit` is the violating circuit
// (of the source for CircuitNotPreserved, of the target for
// PreimageNotCircuit) and `image` is its image or preimage.
struct MapVerdict {
  bool holds = true;
  MapFailure failure = MapFailure::None;
  std::optional<ElementSet> circuit;
  std::optional<ElementSet> image;

  explicit operator bool() const { return holds; }
};

// Each predicate throws GroundMismatch unless f goes from E(M) to E(N).
MapVerdict is_homomorphism(const GroundMap& f, const Matroid& m, const Matroid& n);
MapVerdict is_homeomorphism(const GroundMap& f, const Matroid& m, const Matroid& n);
MapVerdict is_circuit_injection(const GroundMap& f, const Matroid& m, const Matroid& n);

// Human-readable verdict, with witness sets in label form.
std::string describe(const MapVerdict& verdict, const GroundMap& f);

// h ∘ g. Throws GroundMismatch unless g's target is h's source.
GroundMap compose(const GroundMap& h, const GroundMap& g);

// Every onto map S -> T exactly once, in lexicographic order of the
// assignment vector. Throws SizeMismatch when |S| < |T|.
class SurjectionStream {
 public:
  SurjectionStream(GroundSet source, GroundSet target);

  std::optional<GroundMap> next();

 private:
  bool advance();

  GroundSet source_;
  GroundSet target_;
  std::vector<Element> current_;
  std::vector<std::size_t> hits_;
  std::size_t missing_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<GroundMap> all_surjections(const GroundSet& source, const GroundSet& target);

// Calls visit(f) for every homomorphism M -> N in lexicographic order of the
// assignment; stop early by returning false. Backtracking search pruned by
// circuit images, equivalent to filtering all_surjections.
void for_each_homomorphism(const Matroid& m, const Matroid& n,
                           const std::function<bool(const GroundMap&)>& visit);
std::vector<GroundMap> all_homomorphisms(const Matroid& m, const Matroid& n);

}  // namespace mhom

#endif  // MHOM_MAPS_HPP_
