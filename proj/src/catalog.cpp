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

#include "mhom/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <regex>
#include <string>
#include <utility>

#include "mhom/error.hpp"
#include "trusted_matroid.hpp"

namespace mhom {

bool CatalogSpec::accepts(const Matroid& m) const {
  if (coloop_free && !series_partition(m).coloops.empty()) return false;
  if ((connected_only || crk) && !is_connected(m)) return false;
  if (crk && corank(m) != *crk) return false;
  if (binary && is_binary(m) != *binary) return false;
  return true;
}

std::string CatalogSpec::describe() const {
  std::string out = "n=" + std::to_string(min_ground_size) + ".." + std::to_string(max_ground_size);
  if (connected_only) out += " connected";
  if (binary) out += *binary ? " binary" : " non-binary";
  if (crk) out += " CR^" + std::to_string(*crk);
  if (coloop_free) out += " coloop-free";
  return out;
}

void check_spec(const CatalogSpec& spec) {
  if (spec.max_ground_size > kMaxEnumeratedGround) {
    throw MatroidError(ErrorKind::SpecTooLarge,
                       "exhaustive enumeration is limited to ground sets of at most " +
                           std::to_string(kMaxEnumeratedGround) + " elements (asked for " +
                           std::to_string(spec.max_ground_size) + ")");
  }
  if (spec.min_ground_size > spec.max_ground_size) {
    throw MatroidError(ErrorKind::InvalidParameters, "min_ground_size exceeds max_ground_size");
  }
}

namespace {

// Depth-first search over the nonempty subsets of {0..n-1}, ordered by size
// and then lexicographically, deciding for each whether it is a circuit.
//
// When a set S is added, every earlier circuit B meeting S creates, for each
// e in S ∩ B, the obligation that some circuit lie inside T = (S u B) - e.
// All subsets of T are decided no later than T itself, so the obligation is
// settled when T is reached: T must then be included unless a circuit is
// already inside it. If T was decided before S, the inclusion of S is
// rejected on the spot.
class CircuitFamilySearch {
 public:
  CircuitFamilySearch(std::size_t n, const std::function<bool(std::vector<ElementSet>&)>& emit)
      : n_(n), emit_(emit) {
    const std::size_t count = std::size_t{1} << n;
    for (std::size_t mask = 1; mask < count; ++mask) order_.push_back(ElementSet(mask));
    std::sort(order_.begin(), order_.end(), [](ElementSet a, ElementSet b) {
      return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
    });
    position_.assign(count, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i].bits()] = i;
    covered_.assign(count, 0);
    needed_.assign(count, 0);
  }

  void run() { decide(0); }

 private:
  bool decide(std::size_t i) {
    if (i == order_.size()) return emit_(chosen_);
    const ElementSet s = order_[i];
    const bool dependent = covered_[s.bits()] > 0;
    const bool forced = needed_[s.bits()] > 0 && !dependent;
    if (!forced && !decide(i + 1)) return false;
    if (dependent) return true;
    std::vector<ElementSet> obligations;
    if (include(s, i, obligations)) {
      const bool keep_going = decide(i + 1);
      exclude(s, obligations);
      return keep_going;
    }
    exclude(s, obligations);
    return true;
  }

  // Adds s; returns false when an already-decided target has no circuit.
  bool include(ElementSet s, std::size_t i, std::vector<ElementSet>& obligations) {
    chosen_.push_back(s);
    const ElementSet rest = ElementSet::full(n_) - s;
    for_each_subset(rest, [&](ElementSet extra) { ++covered_[(s | extra).bits()]; });
    bool ok = true;
    for (std::size_t j = 0; j + 1 < chosen_.size() && ok; ++j) {
      const ElementSet b = chosen_[j];
      for (Element e : s & b) {
        const ElementSet t = (s | b).without(e);
        if (covered_[t.bits()] > 0) continue;
        if (position_[t.bits()] < i) {
          ok = false;
          break;
        }
        ++needed_[t.bits()];
        obligations.push_back(t);
      }
    }
    return ok;
  }

  void exclude(ElementSet s, const std::vector<ElementSet>& obligations) {
    for (ElementSet t : obligations) --needed_[t.bits()];
    const ElementSet rest = ElementSet::full(n_) - s;
    for_each_subset(rest, [&](ElementSet extra) { --covered_[(s | extra).bits()]; });
    chosen_.pop_back();
  }

  std::size_t n_;
  const std::function<bool(std::vector<ElementSet>&)>& emit_;
  std::vector<ElementSet> order_;
  std::vector<std::size_t> position_;
  std::vector<std::uint32_t> covered_;
  std::vector<std::uint32_t> needed_;
  std::vector<ElementSet> chosen_;
};

void search_families(std::size_t n, const std::function<bool(std::vector<ElementSet>&)>& emit) {
  if (n == 0) {
    std::vector<ElementSet> none;
    emit(none);
    return;
  }
  CircuitFamilySearch(n, emit).run();
}

}  // namespace

void for_each_matroid(const CatalogSpec& spec, const std::function<bool(const Matroid&)>& visit) {
  check_spec(spec);
  bool stopped = false;
  for (std::size_t n = spec.min_ground_size; n <= spec.max_ground_size && !stopped; ++n) {
    const GroundSet ground = GroundSet::indexed(n);
    search_families(n, [&](std::vector<ElementSet>& circuits) {
      Matroid m = detail::TrustedMatroid::make(ground, circuits);
      if (!spec.accepts(m)) return true;
      if (!visit(m)) {
        stopped = true;
        return false;
      }
      return true;
    });
  }
}

std::vector<Matroid> enumerate_matroids(const CatalogSpec& spec) {
  std::vector<Matroid> out;
  for_each_matroid(spec, [&](const Matroid& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_matroids(std::size_t n) {
  CatalogSpec spec;
  spec.min_ground_size = n;
  spec.max_ground_size = n;
  std::size_t count = 0;
  for_each_matroid(spec, [&](const Matroid&) {
    ++count;
    return true;
  });
  return count;
}

std::vector<Matroid> isomorphism_classes(const std::vector<Matroid>& matroids) {
  std::vector<Matroid> reps;
  for (const Matroid& m : matroids) {
    const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Matroid& r) {
      return isomorphic(m, r).has_value();
    });
    if (!seen) reps.push_back(m);
  }
  return reps;
}

namespace {

std::size_t gf2_rank(std::vector<std::uint32_t> rows) {
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < 32; ++bit) {
    const std::uint32_t pivot_bit = std::uint32_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [&](std::uint32_t r) { return (r & pivot_bit) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && (rows[i] & pivot_bit)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Matroid binary_vector_matroid(const std::vector<std::uint32_t>& columns, GroundSet labels) {
  if (columns.size() != labels.size()) {
    throw MatroidError(ErrorKind::SizeMismatch, "one label per column is required");
  }
  if (columns.size() > 24) {
    throw MatroidError(ErrorKind::InvalidParameters, "at most 24 columns are supported");
  }
  const std::size_t count = std::size_t{1} << columns.size();
  std::vector<std::uint8_t> independent(count, 0);
  std::vector<ElementSet> circuits;
  for (std::size_t mask = 0; mask < count; ++mask) {
    const ElementSet s(mask);
    std::vector<std::uint32_t> rows;
    for (Element e : s) rows.push_back(columns[e]);
    independent[mask] = gf2_rank(rows) == s.size();
    if (independent[mask]) continue;
    bool minimal = true;
    for (Element e : s) minimal = minimal && independent[mask ^ (std::size_t{1} << e)];
    if (minimal) circuits.push_back(s);
  }
  return validate_circuits(std::move(labels), std::move(circuits));
}

Matroid named(std::string_view name) {
  const std::string key(name);
  std::smatch match;
  static const std::regex uniform_re(R"(^(?:U_?\{?|uniform\(|U\()(\d+),(\d+)[\})]?$)");
  static const std::regex circuit_re(R"(^(?:single_circuit|circuit)\((\d+)\)$)");
  if (std::regex_match(key, match, uniform_re)) {
    const std::size_t r = std::stoul(match[1]);
    const std::size_t n = std::stoul(match[2]);
    return uniform(r, n).with_name("U" + std::to_string(r) + "," + std::to_string(n));
  }
  if (std::regex_match(key, match, circuit_re)) {
    const std::size_t n = std::stoul(match[1]);
    if (n == 0) throw MatroidError(ErrorKind::InvalidParameters, "a circuit needs at least one element");
    return uniform(n - 1, n).with_name("single_circuit(" + std::to_string(n) + ")");
  }
  if (key == "theta") {
    // Two vertices joined by three internally disjoint paths of length 2.
    const std::vector<Edge> edges = {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}};
    return cycle_matroid(5, edges, GroundSet(kThetaLabels)).with_name("theta");
  }
  if (key == "MK4" || key == "K4") {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t u = 0; u < 4; ++u) {
      for (std::size_t v = u + 1; v < 4; ++v) {
        edges.push_back({u, v});
        labels.push_back(std::to_string(u + 1) + std::to_string(v + 1));
      }
    }
    return cycle_matroid(4, edges, GroundSet(std::move(labels))).with_name("MK4");
  }
  if (key == "fano" || key == "F7") {
    // All nonzero vectors of GF(2)^3; column v is labelled by its value.
    std::vector<std::uint32_t> columns;
    std::vector<std::string> labels;
    for (std::uint32_t v = 1; v < 8; ++v) {
      columns.push_back(v);
      labels.push_back(std::to_string(v));
    }
    return binary_vector_matroid(columns, GroundSet(std::move(labels))).with_name("fano");
  }
  throw MatroidError(ErrorKind::UnknownName, "unknown matroid name '" + key + "'");
}

std::vector<Matroid> all_subdivisions(const Matroid& m, std::size_t max_fiber) {
  std::vector<Matroid> out;
  if (max_fiber == 0 || m.size() == 0) return out;
  std::vector<std::size_t> sizes(m.size(), 1);
  while (true) {
    std::vector<std::vector<std::string>> fibers(m.size());
    for (Element e = 0; e < m.size(); ++e) {
      const std::string& label = m.ground().label(e);
      if (sizes[e] == 1) {
        fibers[e] = {label};
      } else {
        for (std::size_t i = 1; i <= sizes[e]; ++i) fibers[e].push_back(label + "_" + std::to_string(i));
      }
    }
    out.push_back(subdivide(m, fibers).first);
    std::size_t p = m.size();
    while (p > 0 && sizes[p - 1] == max_fiber) sizes[--p] = 1;
    if (p == 0) break;
    ++sizes[p - 1];
  }
  return out;
}

}  // namespace mhom
