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

#include "mhom/maps.hpp"

#include <utility>

#include "mhom/error.hpp"

namespace mhom {

namespace {

void check_grounds(const GroundMap& f, const Matroid& m, const Matroid& n) {
  if (!(f.source() == m.ground()) || !(f.target() == n.ground())) {
    throw MatroidError(ErrorKind::GroundMismatch,
                       "map does not go from the source matroid's ground set to the target's");
  }
}

MapVerdict fail(MapFailure failure, std::optional<ElementSet> circuit = std::nullopt,
                std::optional<ElementSet> image = std::nullopt) {
  return MapVerdict{false, failure, circuit, image};
}

}  // namespace

ElementSet image_of_set(const GroundMap& f, ElementSet a) {
  f.source().check_subset(a);
  ElementSet out;
  for (Element e : a) out = out.with(f(e));
  return out;
}

ElementSet preimage_of_set(const GroundMap& f, ElementSet a) {
  f.target().check_subset(a);
  ElementSet out;
  for (Element e = 0; e < f.source().size(); ++e) {
    if (a.contains(f(e))) out = out.with(e);
  }
  return out;
}

std::string_view failure_name(MapFailure failure) {
  switch (failure) {
    case MapFailure::None: return "None";
    case MapFailure::NotOnto: return "NotOnto";
    case MapFailure::CircuitNotPreserved: return "CircuitNotPreserved";
    case MapFailure::PreimageNotCircuit: return "PreimageNotCircuit";
    case MapFailure::NotInjective: return "NotInjective";
  }
  return "Unknown";
}

MapVerdict is_homomorphism(const GroundMap& f, const Matroid& m, const Matroid& n) {
  check_grounds(f, m, n);
  if (!f.is_surjective()) return fail(MapFailure::NotOnto);
  for (ElementSet c : m.circuits()) {
    const ElementSet image = image_of_set(f, c);
    if (!n.is_circuit(image)) return fail(MapFailure::CircuitNotPreserved, c, image);
  }
  return {};
}

MapVerdict is_homeomorphism(const GroundMap& f, const Matroid& m, const Matroid& n) {
  MapVerdict verdict = is_homomorphism(f, m, n);
  if (!verdict) return verdict;
  for (ElementSet c : n.circuits()) {
    const ElementSet pre = preimage_of_set(f, c);
    if (!m.is_circuit(pre)) return fail(MapFailure::PreimageNotCircuit, c, pre);
  }
  return {};
}

MapVerdict is_circuit_injection(const GroundMap& f, const Matroid& m, const Matroid& n) {
  check_grounds(f, m, n);
  if (!f.is_injective()) return fail(MapFailure::NotInjective);
  return is_homomorphism(f, m, n);
}

std::string describe(const MapVerdict& verdict, const GroundMap& f) {
  switch (verdict.failure) {
    case MapFailure::None:
      return "holds";
    case MapFailure::NotOnto:
      return "map is not onto the target ground set";
    case MapFailure::NotInjective:
      return "map is not one-to-one";
    case MapFailure::CircuitNotPreserved:
      return "circuit " + f.source().format(*verdict.circuit) + " maps to " +
             f.target().format(*verdict.image) + ", which is not a circuit of the target";
    case MapFailure::PreimageNotCircuit:
      return "preimage of target circuit " + f.target().format(*verdict.circuit) + " is " +
             f.source().format(*verdict.image) + ", which is not a circuit of the source";
  }
  return "unknown";
}

GroundMap compose(const GroundMap& h, const GroundMap& g) {
  if (!(g.target() == h.source())) {
    throw MatroidError(ErrorKind::GroundMismatch, "compose(h, g) needs target(g) = source(h)");
  }
  std::vector<Element> assignment(g.source().size());
  for (Element e = 0; e < assignment.size(); ++e) assignment[e] = h(g(e));
  return GroundMap(g.source(), h.target(), std::move(assignment));
}

SurjectionStream::SurjectionStream(GroundSet source, GroundSet target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.empty() || target_.empty()) {
    throw MatroidError(ErrorKind::InvalidParameters, "surjections need nonempty ground sets");
  }
  if (source_.size() < target_.size()) {
    throw MatroidError(ErrorKind::SizeMismatch, "no map from " + std::to_string(source_.size()) +
                                                    " elements onto " +
                                                    std::to_string(target_.size()));
  }
  current_.assign(source_.size(), 0);
  hits_.assign(target_.size(), 0);
  missing_ = target_.size();
}

std::optional<GroundMap> SurjectionStream::next() {
  if (done_) return std::nullopt;
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return GroundMap(source_, target_, current_);
}

// Moves current_ to the next onto assignment in lexicographic order. A
// position p may take value v only if the targets still missing afterwards
// fit into the positions after p.
bool SurjectionStream::advance() {
  const std::size_t n = current_.size();
  const std::size_t t = hits_.size();
  auto place = [&](std::size_t p, Element v) {
    current_[p] = v;
    if (hits_[v]++ == 0) --missing_;
  };
  auto unplace = [&](std::size_t p) {
    if (--hits_[current_[p]] == 0) ++missing_;
  };
  auto feasible_after = [&](std::size_t p, Element v) {
    const std::size_t missing = missing_ - (hits_[v] == 0 ? 1 : 0);
    return missing <= n - p - 1;
  };
  auto fill_from = [&](std::size_t p) {
    for (; p < n; ++p) {
      for (Element v = 0; v < t; ++v) {
        if (feasible_after(p, v)) {
          place(p, v);
          break;
        }
      }
    }
  };

  if (!started_) {
    started_ = true;
    fill_from(0);
    return true;
  }
  for (std::size_t p = n; p-- > 0;) {
    const Element old = current_[p];
    unplace(p);
    for (Element v = old + 1; v < t; ++v) {
      if (feasible_after(p, v)) {
        place(p, v);
        fill_from(p + 1);
        return true;
      }
    }
  }
  return false;
}

std::vector<GroundMap> all_surjections(const GroundSet& source, const GroundSet& target) {
  SurjectionStream stream(source, target);
  std::vector<GroundMap> out;
  while (auto f = stream.next()) out.push_back(std::move(*f));
  return out;
}

namespace {

class HomomorphismSearch {
 public:
  HomomorphismSearch(const Matroid& m, const Matroid& n,
                     const std::function<bool(const GroundMap&)>& visit)
      : m_(m), n_(n), visit_(visit), through_(m.size()), image_(m.size(), 0),
        hits_(n.size(), 0), missing_(n.size()) {
    for (ElementSet c : m.circuits()) {
      for (Element e : c) through_[e].push_back(c);
    }
    if (n.size() <= 20) {
      coverable_.assign(std::size_t{1} << n.size(), 0);
      for (ElementSet c : n.circuits()) {
        for_each_subset(c, [&](ElementSet s) { coverable_[s.bits()] = 1; });
      }
    }
  }

  void run() {
    if (m_.size() < n_.size() || m_.size() == 0) return;
    extend(0);
  }

 private:
  // Returns false when the visitor asked to stop.
  bool extend(Element i) {
    if (i == m_.size()) {
      return visit_(GroundMap(m_.ground(), n_.ground(), image_));
    }
    const std::size_t remaining = m_.size() - i - 1;
    for (Element v = 0; v < n_.size(); ++v) {
      const std::size_t missing = missing_ - (hits_[v] == 0 ? 1 : 0);
      if (missing > remaining) continue;
      image_[i] = v;
      if (hits_[v]++ == 0) --missing_;
      const bool keep_going = !consistent(i) || extend(i + 1);
      if (--hits_[v] == 0) ++missing_;
      if (!keep_going) return false;
    }
    return true;
  }

  bool consistent(Element i) const {
    for (ElementSet c : through_[i]) {
      ElementSet image;
      const ElementSet assigned = c & ElementSet::full(i + 1);
      for (Element e : assigned) image = image.with(image_[e]);
      if (assigned == c) {
        if (!n_.is_circuit(image)) return false;
      } else if (!coverable_.empty() && !coverable_[image.bits()]) {
        return false;
      }
    }
    return true;
  }

  const Matroid& m_;
  const Matroid& n_;
  const std::function<bool(const GroundMap&)>& visit_;
  std::vector<std::vector<ElementSet>> through_;
  std::vector<std::uint8_t> coverable_;
  std::vector<Element> image_;
  std::vector<std::size_t> hits_;
  std::size_t missing_;
};

}  // namespace

void for_each_homomorphism(const Matroid& m, const Matroid& n,
                           const std::function<bool(const GroundMap&)>& visit) {
  HomomorphismSearch(m, n, visit).run();
}

std::vector<GroundMap> all_homomorphisms(const Matroid& m, const Matroid& n) {
  std::vector<GroundMap> out;
  for_each_homomorphism(m, n, [&](const GroundMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace mhom
