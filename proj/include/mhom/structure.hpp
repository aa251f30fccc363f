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

// Executable forms of the co-rank facts about connected matroids, the
// fiber lemma for homomorphisms into binary matroids, and the decomposition
// of such a homomorphism into a homeomorphism followed by a circuit
// injection.
//
// None of the checks here assume the statement being checked: each one
// recomputes its conclusion and reports a failing Witness (or throws
// InternalTheoremViolation) when it does not hold.

#ifndef MHOM_STRUCTURE_HPP_
#define MHOM_STRUCTURE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhom/element_set.hpp"
#include "mhom/ground_map.hpp"
#include "mhom/maps.hpp"
#include "mhom/matroid.hpp"

namespace mhom {

enum class CheckKind {
  Fact1,
  Fact2,
  Fact3,
  Fact4,
  Fact5,
  Fact6,
  Fact7,
  Lemma1,
  Theorem1,
  Theorem3,
  Theorem4,
};

std::string_view check_name(CheckKind kind);

struct NamedSet {
  std::string name;
  ElementSet set;
  // Set lives in the target matroid's ground (images under a map).
  bool in_target = false;
};

// Self-certifying record of one check: the named sets are circuits or
// elements of `matroid` (or, for map checks, of the source matroid) and can be
// re-checked from the witness alone.
struct Witness {
  CheckKind kind = CheckKind::Fact1;
  bool passed = false;
  std::optional<Matroid> matroid;
  std::optional<Matroid> target;
  std::vector<NamedSet> sets;
  std::string detail;

  // Looks up a named set; throws std::out_of_range if absent.
  ElementSet set(std::string_view name) const;
  std::string format() const;
};

// Circuit B with x in B, B meeting A, and B - A inclusion-minimal; among
// minimal candidates the smallest |B - A| wins, then the lex_less-first B.
// Throws PreconditionViolated (x in A, A empty) or NoSuchCircuit.
ElementSet find_extending_circuit(const Matroid& m, ElementSet a, Element x);

// With B = find_extending_circuit(M, A, x): passes iff M|(A u B) is CR^{k+1}.
// Throws PreconditionViolated unless M is connected, M|A is CR^k and x is not
// in A.
Witness check_fact2(const Matroid& m, ElementSet a, Element x, std::size_t k);

// First circuit (canonical order) containing A Δ B. Throws NotCR2,
// PreconditionViolated (A = B or not circuits), NoCoveringCircuit.
ElementSet covering_circuit_cr2(const Matroid& m, ElementSet a, ElementSet b);

// Passes iff E1 ∩ E2 contains a circuit. Throws PreconditionViolated unless
// M|E1 and M|E2 are CR^2 and M|(E1 u E2) is CR^3.
Witness check_fact4(const Matroid& m, ElementSet e1, ElementSet e2);

struct Cr2Structure {
  std::size_t k = 0;
  SeriesPartition partition;
  // The subdivided U_{k,k+2}, on M's labels.
  Matroid subdivided_uniform;
  // Bijection E(M) -> E(subdivided_uniform).
  std::vector<Element> isomorphism;
};

// Throws NotCR2, or InternalTheoremViolation when M is not a subdivision of
// U_{k,k+2} with k >= 1 or C(M) differs from {E(M) - P_j}.
Cr2Structure cr2_structure(const Matroid& m);

// Passes iff A ∩ C is nonempty. Throws PreconditionViolated unless M is CR^3,
// A, B, C are circuits, B != C and A ∩ B is empty.
Witness check_fact6(const Matroid& m, ElementSet a, ElementSet b, ElementSet c);

// Passes iff M|(A u B) is CR^2. Throws PreconditionViolated unless M is CR^3,
// A != B are circuits, A ∩ B is nonempty and A u B is a proper subset of
// E(M). With require_proper = false the last hypothesis is dropped.
Witness check_fact7(const Matroid& m, ElementSet a, ElementSet b, bool require_proper = true);

// Circuit B containing x1 and x2 with B - A inclusion-minimal (ties as in
// find_extending_circuit); passes iff f(A) = f(B). Throws
// PreconditionViolated when the hypotheses fail, NoSuchB when no circuit
// contains both x1 and x2.
Witness lemma1_check(const GroundMap& f, const Matroid& m, const Matroid& n, Element x1,
                     Element x2, ElementSet a);

enum class Theorem1Outcome { FibersAllSeries, TargetIsSingleCircuit, Counterexample };

std::string_view outcome_name(Theorem1Outcome outcome);

struct Theorem1Result {
  Theorem1Outcome outcome = Theorem1Outcome::FibersAllSeries;
  bool fibers_all_series = true;
  bool target_single_circuit = false;
  // First pair of fiber-mates that are not in series, with a circuit
  // containing exactly one of them.
  std::optional<std::pair<Element, Element>> non_series_pair;
  std::optional<ElementSet> separating_circuit;
};

// FibersAllSeries takes precedence when both alternatives hold. Throws
// PreconditionViolated unless f is a homomorphism, M connected, N binary.
Theorem1Result theorem1_check(const GroundMap& f, const Matroid& m, const Matroid& n);

struct DecompositionCertificate {
  bool h_equals_image_family = false;
  bool g_homeomorphism = false;
  bool h_circuit_injection = false;
  bool composition_matches = false;
  bool circuits_contained = false;
  bool subdivision_isomorphic = false;

  bool all() const {
    return h_equals_image_family && g_homeomorphism && h_circuit_injection &&
           composition_matches && circuits_contained && subdivision_isomorphic;
  }
};

struct Decomposition {
  Matroid h_matroid;
  GroundMap g;  // M -> H
  GroundMap h;  // H -> N, identity on labels
  DecompositionCertificate certificate;
  // Witness that M is isomorphic to subdivide(H, fibers of f).
  std::vector<Element> subdivision_isomorphism;
};

// Reasons decompose() refuses an input, in the order they are tested.
// Returns nullopt when all hypotheses hold.
std::optional<std::string> decomposition_precondition_failure(const GroundMap& f,
                                                              const Matroid& m,
                                                              const Matroid& n);

// f = h ∘ g with g: M -> H a homeomorphism and h: H -> N a circuit injection,
// where C(H) = {f(C) : C in C(M)}. Throws PreconditionViolated (message names
// the failed hypothesis) or InternalTheoremViolation.
Decomposition decompose(const GroundMap& f, const Matroid& m, const Matroid& n);

// Passes iff M is binary; a failing witness carries the offending circuit
// pair. Same preconditions as decompose.
Witness theorem4_check(const GroundMap& f, const Matroid& m, const Matroid& n);

}  // namespace mhom

#endif  // MHOM_STRUCTURE_HPP_
