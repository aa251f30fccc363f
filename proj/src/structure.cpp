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

#include "mhom/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "mhom/error.hpp"
#include "structure_internal.hpp"

namespace mhom {

namespace {

[[noreturn]] void precondition(const std::string& what) {
  throw MatroidError(ErrorKind::PreconditionViolated, what);
}

// Among circuits containing `required` and meeting `meets`, the one with
// B - A inclusion-minimal: smallest |B - A|, then lex_less-first B.
std::optional<ElementSet> minimal_extension(const Matroid& m, ElementSet a, ElementSet required,
                                            ElementSet meets) {
  std::optional<ElementSet> best;
  for (ElementSet b : m.circuits()) {
    if (!required.is_subset_of(b) || !b.intersects(meets)) continue;
    if (!best || (b - a).size() < (*best - a).size()) best = b;
  }
  return best;
}

void require_circuit(const Matroid& m, ElementSet s, const char* name) {
  if (!m.is_circuit(s)) precondition(std::string(name) + " = " + m.ground().format(s) + " is not a circuit");
}

Witness make_witness(CheckKind kind, bool passed, const Matroid& m, std::vector<NamedSet> sets,
                     std::string detail = {}) {
  Witness w;
  w.kind = kind;
  w.passed = passed;
  w.matroid = m;
  w.sets = std::move(sets);
  w.detail = std::move(detail);
  return w;
}

}  // namespace

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Fact1: return "fact1";
    case CheckKind::Fact2: return "fact2";
    case CheckKind::Fact3: return "fact3";
    case CheckKind::Fact4: return "fact4";
    case CheckKind::Fact5: return "fact5";
    case CheckKind::Fact6: return "fact6";
    case CheckKind::Fact7: return "fact7";
    case CheckKind::Lemma1: return "lemma1";
    case CheckKind::Theorem1: return "theorem1";
    case CheckKind::Theorem3: return "theorem3";
    case CheckKind::Theorem4: return "theorem4";
  }
  return "unknown";
}

std::string_view outcome_name(Theorem1Outcome outcome) {
  switch (outcome) {
    case Theorem1Outcome::FibersAllSeries: return "FibersAllSeries";
    case Theorem1Outcome::TargetIsSingleCircuit: return "TargetIsSingleCircuit";
    case Theorem1Outcome::Counterexample: return "Counterexample";
  }
  return "Unknown";
}

ElementSet Witness::set(std::string_view name) const {
  for (const auto& s : sets) {
    if (s.name == name) return s.set;
  }
  throw std::out_of_range("witness has no set named " + std::string(name));
}

std::string Witness::format() const {
  std::string out = std::string(check_name(kind)) + (passed ? " pass" : " FAIL");
  if (matroid) out += " M=" + matroid->format_circuits();
  if (target) out += " N=" + target->format_circuits();
  for (const auto& s : sets) {
    const Matroid* owner = s.in_target && target ? &*target : matroid ? &*matroid : nullptr;
    out += " " + s.name + "=" + (owner ? owner->ground().format(s.set) : std::to_string(s.set.bits()));
  }
  if (!detail.empty()) out += " (" + detail + ")";
  return out;
}

ElementSet find_extending_circuit(const Matroid& m, ElementSet a, Element x) {
  m.ground().check_subset(a.with(x));
  if (a.empty()) precondition("A is empty");
  if (a.contains(x)) precondition("x = " + m.ground().label(x) + " lies in A");
  auto b = minimal_extension(m, a, ElementSet::singleton(x), a);
  if (!b) {
    throw MatroidError(ErrorKind::NoSuchCircuit,
                       "no circuit through " + m.ground().label(x) + " meets " + m.ground().format(a),
                       {a}, x);
  }
  return *b;
}

Witness detail::fact2_unchecked(const Matroid& m, ElementSet a, Element x, std::size_t k) {
  const ElementSet b = find_extending_circuit(m, a, x);
  const ElementSet ab = a | b;
  const std::size_t cr = corank(m, ab);
  const bool connected = is_connected(m, ab);
  const bool passed = connected && cr == k + 1;
  return make_witness(CheckKind::Fact2, passed, m,
                      {{"A", a}, {"x", ElementSet::singleton(x)}, {"B", b}, {"AuB", ab}},
                      "k=" + std::to_string(k) + " corank(AuB)=" + std::to_string(cr) +
                          (connected ? " connected" : " disconnected"));
}

Witness check_fact2(const Matroid& m, ElementSet a, Element x, std::size_t k) {
  m.ground().check_subset(a.with(x));
  if (k == 0) precondition("k must be positive");
  if (!is_connected(m)) precondition("M is not connected");
  if (a.contains(x)) precondition("x lies in A");
  if (!is_crk(m, a, k)) precondition("M|A is not CR^" + std::to_string(k));
  return detail::fact2_unchecked(m, a, x, k);
}

ElementSet covering_circuit_cr2(const Matroid& m, ElementSet a, ElementSet b) {
  if (!is_crk(m, 2)) throw MatroidError(ErrorKind::NotCR2, "M is not CR^2");
  require_circuit(m, a, "A");
  require_circuit(m, b, "B");
  if (a == b) precondition("A and B are the same circuit");
  const ElementSet diff = a ^ b;
  for (ElementSet c : m.circuits()) {
    if (diff.is_subset_of(c)) return c;
  }
  throw MatroidError(ErrorKind::NoCoveringCircuit,
                     "no circuit contains " + m.ground().format(diff), {a, b});
}

Witness detail::fact4_unchecked(const Matroid& m, ElementSet e1, ElementSet e2) {
  const ElementSet meet = e1 & e2;
  for (ElementSet c : m.circuits()) {
    if (c.is_subset_of(meet)) {
      return make_witness(CheckKind::Fact4, true, m, {{"E1", e1}, {"E2", e2}, {"C", c}});
    }
  }
  return make_witness(CheckKind::Fact4, false, m, {{"E1", e1}, {"E2", e2}},
                      "E1 n E2 contains no circuit");
}

Witness check_fact4(const Matroid& m, ElementSet e1, ElementSet e2) {
  m.ground().check_subset(e1 | e2);
  if (!is_crk(m, e1, 2)) precondition("M|E1 is not CR^2");
  if (!is_crk(m, e2, 2)) precondition("M|E2 is not CR^2");
  if (!is_crk(m, e1 | e2, 3)) precondition("M|(E1 u E2) is not CR^3");
  return detail::fact4_unchecked(m, e1, e2);
}

Cr2Structure cr2_structure(const Matroid& m) {
  if (!is_crk(m, 2)) throw MatroidError(ErrorKind::NotCR2, "M is not CR^2");
  SeriesPartition partition = series_partition(m);
  auto violation = [&](const std::string& what) {
    throw MatroidError(ErrorKind::InternalTheoremViolation,
                       "CR^2 matroid " + m.format_circuits() + ": " + what);
  };
  if (!partition.loops.empty() || !partition.coloops.empty()) violation("has loops or coloops");
  if (partition.classes.size() < 3) {
    violation("only " + std::to_string(partition.classes.size()) + " series classes");
  }
  const std::size_t k = partition.classes.size() - 2;

  std::vector<std::string> class_labels;
  std::vector<std::vector<std::string>> fibers;
  for (ElementSet p : partition.classes) {
    class_labels.push_back(m.ground().label(p.front()));
    fibers.push_back(m.ground().labels_of(p));
  }
  const Matroid base = uniform(k, GroundSet(class_labels));
  Matroid subdivided = subdivide(base, fibers).first;
  auto iso = isomorphic(m, subdivided);
  if (!iso) violation("not isomorphic to a subdivision of U_{" + std::to_string(k) + "," +
                      std::to_string(k + 2) + "}");

  std::vector<ElementSet> complements;
  for (ElementSet p : partition.classes) complements.push_back(m.elements() - p);
  std::sort(complements.begin(), complements.end(), LexLess{});
  if (!std::equal(complements.begin(), complements.end(), m.circuits().begin(),
                  m.circuits().end())) {
    violation("circuits are not the complements of the series classes");
  }
  return Cr2Structure{k, std::move(partition), std::move(subdivided), std::move(*iso)};
}

Witness detail::fact6_unchecked(const Matroid& m, ElementSet a, ElementSet b, ElementSet c) {
  const bool passed = a.intersects(c);
  return make_witness(CheckKind::Fact6, passed, m, {{"A", a}, {"B", b}, {"C", c}},
                      passed ? std::string{} : "A and C are disjoint");
}

Witness check_fact6(const Matroid& m, ElementSet a, ElementSet b, ElementSet c) {
  if (!is_crk(m, 3)) precondition("M is not CR^3");
  require_circuit(m, a, "A");
  require_circuit(m, b, "B");
  require_circuit(m, c, "C");
  if (b == c) precondition("B = C");
  if (a.intersects(b)) precondition("A meets B");
  return detail::fact6_unchecked(m, a, b, c);
}

Witness detail::fact7_unchecked(const Matroid& m, ElementSet a, ElementSet b) {
  const ElementSet ab = a | b;
  const std::size_t cr = corank(m, ab);
  const bool connected = is_connected(m, ab);
  return make_witness(CheckKind::Fact7, connected && cr == 2, m, {{"A", a}, {"B", b}},
                      "corank(AuB)=" + std::to_string(cr) + (connected ? " connected" : " disconnected"));
}

Witness check_fact7(const Matroid& m, ElementSet a, ElementSet b, bool require_proper) {
  if (!is_crk(m, 3)) precondition("M is not CR^3");
  require_circuit(m, a, "A");
  require_circuit(m, b, "B");
  if (a == b) precondition("A = B");
  if (!a.intersects(b)) precondition("A and B are disjoint");
  if (require_proper && (a | b) == m.elements()) precondition("A u B = E(M)");
  return detail::fact7_unchecked(m, a, b);
}

Witness detail::lemma1_unchecked(const GroundMap& f, const Matroid& m, const Matroid& n,
                                 Element x1, Element x2, ElementSet a) {
  const ElementSet pair{x1, x2};
  auto b = minimal_extension(m, a, pair, pair);
  if (!b) {
    throw MatroidError(ErrorKind::NoSuchB,
                       "no circuit contains both " + m.ground().label(x1) + " and " +
                           m.ground().label(x2),
                       {a, pair});
  }
  const ElementSet fa = image_of_set(f, a);
  const ElementSet fb = image_of_set(f, *b);
  Witness w = make_witness(CheckKind::Lemma1, fa == fb, m,
                           {{"x1", ElementSet::singleton(x1)},
                            {"x2", ElementSet::singleton(x2)},
                            {"A", a},
                            {"B", *b},
                            {"f(A)", fa, true},
                            {"f(B)", fb, true}});
  w.target = n;
  return w;
}

Witness lemma1_check(const GroundMap& f, const Matroid& m, const Matroid& n, Element x1,
                     Element x2, ElementSet a) {
  m.ground().check_subset(ElementSet{x1, x2} | a);
  if (!is_homomorphism(f, m, n)) precondition("f is not a homomorphism");
  if (!is_binary(n)) precondition("target is not binary");
  if (!is_connected(m)) precondition("source is not connected");
  if (x1 == x2) precondition("x1 = x2");
  if (f(x1) != f(x2)) precondition("f(x1) != f(x2)");
  require_circuit(m, a, "A");
  if (!a.contains(x1)) precondition("x1 is not in A");
  if (a.contains(x2)) precondition("x2 is in A");
  return detail::lemma1_unchecked(f, m, n, x1, x2, a);
}

Theorem1Result detail::theorem1_unchecked(const GroundMap& f, const Matroid& m, const Matroid& n) {
  Theorem1Result result;
  result.target_single_circuit = is_single_circuit(n);
  for (ElementSet fiber : f.fibers()) {
    for (Element x : fiber) {
      for (Element y : fiber) {
        if (y <= x || in_series(m, x, y)) continue;
        result.fibers_all_series = false;
        result.non_series_pair = std::pair{x, y};
        for (ElementSet c : m.circuits()) {
          if (c.contains(x) != c.contains(y)) {
            result.separating_circuit = c;
            break;
          }
        }
        break;
      }
      if (!result.fibers_all_series) break;
    }
    if (!result.fibers_all_series) break;
  }
  if (result.fibers_all_series) {
    result.outcome = Theorem1Outcome::FibersAllSeries;
  } else if (result.target_single_circuit) {
    result.outcome = Theorem1Outcome::TargetIsSingleCircuit;
  } else {
    result.outcome = Theorem1Outcome::Counterexample;
  }
  return result;
}

Theorem1Result theorem1_check(const GroundMap& f, const Matroid& m, const Matroid& n) {
  if (!is_homomorphism(f, m, n)) precondition("f is not a homomorphism");
  if (!is_connected(m)) precondition("source is not connected");
  if (!is_binary(n)) precondition("target is not binary");
  return detail::theorem1_unchecked(f, m, n);
}

std::optional<std::string> decomposition_precondition_failure(const GroundMap& f, const Matroid& m,
                                                              const Matroid& n) {
  const MapVerdict verdict = is_homomorphism(f, m, n);
  if (!verdict) return "map is not a homomorphism: " + describe(verdict, f);
  if (!is_connected(m)) return "source disconnected";
  if (is_single_circuit(n)) return "target is a single circuit";
  if (!is_binary(n)) return "target not binary";
  return std::nullopt;
}

Decomposition detail::decompose_unchecked(const GroundMap& f, const Matroid& m, const Matroid& n) {
  auto violation = [&](const std::string& what) {
    throw MatroidError(ErrorKind::InternalTheoremViolation,
                       what + " [M=" + m.format_circuits() + ", N=" + n.format_circuits() + "]");
  };
  std::vector<ElementSet> family;
  family.reserve(m.circuits().size());
  for (ElementSet c : m.circuits()) family.push_back(image_of_set(f, c));
  std::sort(family.begin(), family.end(), LexLess{});
  family.erase(std::unique(family.begin(), family.end()), family.end());

  std::optional<Matroid> h_matroid;
  try {
    h_matroid = validate_circuits(n.ground(), family);
  } catch (const MatroidError& e) {
    violation(std::string("image family is not a circuit family: ") + e.what());
  }
  const Matroid& hm = *h_matroid;
  GroundMap g = f.retarget(hm.ground());
  GroundMap h = GroundMap::identity(n.ground());

  DecompositionCertificate cert;
  cert.h_equals_image_family =
      std::equal(family.begin(), family.end(), hm.circuits().begin(), hm.circuits().end());
  cert.g_homeomorphism = is_homeomorphism(g, m, hm).holds;
  cert.h_circuit_injection = is_circuit_injection(h, hm, n).holds;
  const GroundMap hg = compose(h, g);
  cert.composition_matches = hg == f;
  cert.circuits_contained = std::all_of(hm.circuits().begin(), hm.circuits().end(),
                                        [&](ElementSet c) { return n.is_circuit(c); });

  std::vector<std::vector<std::string>> fibers;
  for (ElementSet fiber : f.fibers()) fibers.push_back(m.ground().labels_of(fiber));
  const Matroid subdivided = subdivide(hm, fibers).first;
  auto iso = isomorphic(m, subdivided);
  cert.subdivision_isomorphic = iso.has_value();

  if (!cert.all()) {
    std::string failed;
    auto note = [&](bool ok, const char* what) {
      if (!ok) failed += std::string(failed.empty() ? "" : ", ") + what;
    };
    note(cert.h_equals_image_family, "H differs from the image family");
    note(cert.g_homeomorphism, "g is not a homeomorphism");
    note(cert.h_circuit_injection, "h is not a circuit injection");
    note(cert.composition_matches, "h o g != f");
    note(cert.circuits_contained, "C(H) is not contained in C(N)");
    note(cert.subdivision_isomorphic, "M is not isomorphic to subdivide(H, fibers)");
    violation("decomposition certificate failed: " + failed);
  }
  return Decomposition{hm, std::move(g), std::move(h), cert, std::move(*iso)};
}

Decomposition decompose(const GroundMap& f, const Matroid& m, const Matroid& n) {
  if (auto why = decomposition_precondition_failure(f, m, n)) precondition(*why);
  return detail::decompose_unchecked(f, m, n);
}

Witness theorem4_check(const GroundMap& f, const Matroid& m, const Matroid& n) {
  if (auto why = decomposition_precondition_failure(f, m, n)) precondition(*why);
  auto pair = non_binary_pair(m);
  Witness w;
  w.kind = CheckKind::Theorem4;
  w.passed = !pair.has_value();
  w.matroid = m;
  w.target = n;
  if (pair) {
    w.sets = {{"A", pair->first}, {"B", pair->second}};
    w.detail = "A ^ B is not a disjoint union of circuits";
  }
  return w;
}

}  // namespace mhom
