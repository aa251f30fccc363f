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

#include "mhom/matroid.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "mhom/error.hpp"
#include "trusted_matroid.hpp"

namespace mhom {

namespace {

std::vector<ElementSet> circuits_within(const Matroid& m, ElementSet a) {
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) {
    if (c.is_subset_of(a)) out.push_back(c);
  }
  return out;
}

bool contains_circuit(std::span<const ElementSet> circuits, ElementSet s) {
  return std::any_of(circuits.begin(), circuits.end(),
                     [s](ElementSet c) { return c.is_subset_of(s); });
}

bool cover_search(const std::vector<ElementSet>& pool, ElementSet rest,
                  std::vector<ElementSet>& chosen) {
  if (rest.empty()) return true;
  const Element e = rest.front();
  for (ElementSet c : pool) {
    if (!c.contains(e) || !c.is_subset_of(rest)) continue;
    chosen.push_back(c);
    if (cover_search(pool, rest - c, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool Matroid::is_circuit(ElementSet s) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), s, LexLess{});
}

std::vector<ElementSet> Matroid::circuits_containing(Element e) const {
  std::vector<ElementSet> out;
  for (ElementSet c : circuits_) {
    if (c.contains(e)) out.push_back(c);
  }
  return out;
}

Matroid Matroid::with_name(std::string name) const {
  Matroid copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

std::string Matroid::format_circuits() const {
  std::string out = "{";
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    if (i > 0) out += ',';
    out += ground_.format(circuits_[i]);
  }
  return out + "}";
}

Matroid validate_circuits(GroundSet ground, std::vector<ElementSet> family) {
  for (ElementSet c : family) {
    ground.check_subset(c);
    if (c.empty()) throw MatroidError(ErrorKind::EmptyCircuit, "the empty set is not a circuit", {c});
  }
  std::sort(family.begin(), family.end(), LexLess{});
  for (std::size_t i = 1; i < family.size(); ++i) {
    if (family[i] == family[i - 1]) {
      throw MatroidError(ErrorKind::DuplicateCircuit,
                         "circuit " + ground.format(family[i]) + " listed twice", {family[i]});
    }
  }
  for (ElementSet a : family) {
    for (ElementSet b : family) {
      if (a.is_proper_subset_of(b)) {
        throw MatroidError(ErrorKind::NotAntichain,
                           ground.format(a) + " is properly contained in " + ground.format(b),
                           {a, b});
      }
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const ElementSet a = family[i];
      const ElementSet b = family[j];
      for (Element e : a & b) {
        if (!contains_circuit(family, (a | b).without(e))) {
          throw MatroidError(ErrorKind::EliminationFails,
                             "no circuit inside (" + ground.format(a) + " u " + ground.format(b) +
                                 ") - " + ground.label(e),
                             {a, b}, e);
        }
      }
    }
  }
  return Matroid(std::move(ground), std::move(family));
}

Matroid validate_circuits(GroundSet ground,
                          const std::vector<std::vector<std::string>>& family) {
  std::vector<ElementSet> sets;
  sets.reserve(family.size());
  for (const auto& c : family) sets.push_back(ground.set_of(c));
  return validate_circuits(std::move(ground), std::move(sets));
}

Matroid restrict(const Matroid& m, ElementSet a) {
  m.ground().check_subset(a);
  std::vector<std::string> labels;
  std::vector<Element> new_index(m.size(), 0);
  for (Element e : a) {
    new_index[e] = labels.size();
    labels.push_back(m.ground().label(e));
  }
  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    if (!c.is_subset_of(a)) continue;
    ElementSet mapped;
    for (Element e : c) mapped = mapped.with(new_index[e]);
    circuits.push_back(mapped);
  }
  return detail::TrustedMatroid::make(GroundSet(std::move(labels)), std::move(circuits));
}

std::size_t rank(const Matroid& m, ElementSet a) {
  m.ground().check_subset(a);
  const std::vector<ElementSet> inside = circuits_within(m, a);
  std::size_t best = 0;
  for_each_subset(a, [&](ElementSet sub) {
    if (sub.size() > best && !contains_circuit(inside, sub)) best = sub.size();
  });
  return best;
}

std::size_t rank(const Matroid& m) { return rank(m, m.elements()); }

std::size_t corank(const Matroid& m) { return m.size() - rank(m); }

std::size_t corank(const Matroid& m, ElementSet a) { return a.size() - rank(m, a); }

std::vector<std::uint8_t> rank_profile(const Matroid& m) {
  const std::size_t n = m.size();
  if (n > 24) {
    throw MatroidError(ErrorKind::InvalidParameters, "rank_profile supports at most 24 elements");
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::uint8_t> dependent(count, 0);
  for (ElementSet c : m.circuits()) dependent[c.bits()] = 1;
  for (std::size_t bit = 0; bit < n; ++bit) {
    for (std::size_t mask = 0; mask < count; ++mask) {
      if ((mask >> bit) & 1) dependent[mask] |= dependent[mask ^ (std::size_t{1} << bit)];
    }
  }
  std::vector<std::uint8_t> ranks(count, 0);
  for (std::size_t mask = 1; mask < count; ++mask) {
    const ElementSet s(mask);
    if (!dependent[mask]) {
      ranks[mask] = static_cast<std::uint8_t>(s.size());
      continue;
    }
    std::uint8_t best = 0;
    for (Element e : s) best = std::max(best, ranks[mask ^ (std::size_t{1} << e)]);
    ranks[mask] = best;
  }
  return ranks;
}

bool is_connected(const Matroid& m, ElementSet a) {
  m.ground().check_subset(a);
  if (a.size() <= 1) return true;
  std::vector<ElementSet> reach(m.size());
  for (ElementSet c : m.circuits()) {
    if (!c.is_subset_of(a)) continue;
    for (Element e : c) reach[e] |= c;
  }
  for (Element e : a) {
    if (!a.is_subset_of(reach[e])) return false;
  }
  return true;
}

bool is_connected(const Matroid& m) { return is_connected(m, m.elements()); }

bool is_crk(const Matroid& m, ElementSet a, std::size_t k) {
  return is_connected(m, a) && corank(m, a) == k;
}

bool is_crk(const Matroid& m, std::size_t k) { return is_crk(m, m.elements(), k); }

SeriesPartition series_partition(const Matroid& m) {
  SeriesPartition out;
  const auto circuits = m.circuits();
  const std::size_t words = (circuits.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> incidence(m.size(), std::vector<std::uint64_t>(words, 0));
  ElementSet covered;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    if (circuits[i].size() == 1) out.loops |= circuits[i];
    covered |= circuits[i];
    for (Element e : circuits[i]) incidence[e][i / 64] |= std::uint64_t{1} << (i % 64);
  }
  out.coloops = m.elements() - covered;
  std::map<std::vector<std::uint64_t>, std::size_t> class_of;
  for (Element e : m.elements() - out.coloops - out.loops) {
    auto [it, inserted] = class_of.emplace(incidence[e], out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second] = out.classes[it->second].with(e);
  }
  return out;
}

bool in_series(const Matroid& m, Element x, Element y) {
  m.ground().check_subset(ElementSet{x, y});
  if (x == y) return true;
  for (ElementSet c : m.circuits()) {
    if (c.contains(x) != c.contains(y)) return false;
  }
  return true;
}

std::optional<std::vector<ElementSet>> disjoint_circuit_cover(const Matroid& m, ElementSet s) {
  m.ground().check_subset(s);
  const std::vector<ElementSet> pool = circuits_within(m, s);
  std::vector<ElementSet> chosen;
  if (cover_search(pool, s, chosen)) return chosen;
  return std::nullopt;
}

std::optional<std::pair<ElementSet, ElementSet>> non_binary_pair(const Matroid& m) {
  const auto circuits = m.circuits();
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      if (!disjoint_circuit_cover(m, circuits[i] ^ circuits[j])) {
        return std::pair{circuits[i], circuits[j]};
      }
    }
  }
  return std::nullopt;
}

bool is_binary(const Matroid& m) { return !non_binary_pair(m).has_value(); }

bool is_single_circuit(const Matroid& m) {
  return m.circuits().size() == 1 && m.circuits().front() == m.elements();
}

}  // namespace mhom
