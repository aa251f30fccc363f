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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mhom/catalog.hpp"
#include "mhom/maps.hpp"
#include "mhom/structure.hpp"

using namespace mhom;
using namespace mhom::test;

namespace {

const std::vector<Matroid>& catalog(std::size_t max_n) {
  static std::map<std::size_t, std::vector<Matroid>> cache;
  auto it = cache.find(max_n);
  if (it == cache.end()) {
    CatalogSpec spec;
    spec.max_ground_size = max_n;
    it = cache.emplace(max_n, enumerate_matroids(spec)).first;
  }
  return it->second;
}

std::vector<oracle::Mask> sorted_masks(const Matroid& m) {
  auto v = masks(m);
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("validate_circuits agrees with the axiom oracle for n <= 3") {
  for (unsigned n = 0; n <= 3; ++n) {
    const unsigned subsets = (1u << n) - 1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
      std::vector<oracle::Mask> family;
      std::vector<ElementSet> sets;
      for (unsigned i = 0; i < subsets; ++i) {
        if (pick >> i & 1) {
          family.push_back(i + 1);
          sets.push_back(ElementSet(i + 1));
        }
      }
      const bool accepted = !error_kind([&] { validate_circuits(GroundSet::indexed(n), sets); });
      CHECK(accepted == oracle::circuit_axioms_hold(family));
    }
  }
}

TEST_CASE("enumeration equals the oracle family list for n <= 4") {
  for (unsigned n = 1; n <= 4; ++n) {
    std::set<std::vector<oracle::Mask>> expected;
    for (auto family : oracle::all_circuit_families(n)) {
      std::sort(family.begin(), family.end());
      expected.insert(family);
    }
    std::set<std::vector<oracle::Mask>> actual;
    CatalogSpec spec;
    spec.min_ground_size = spec.max_ground_size = n;
    for (const Matroid& m : enumerate_matroids(spec)) actual.insert(sorted_masks(m));
    CHECK(actual == expected);
  }
}

TEST_CASE("every enumerated matroid satisfies the axioms") {
  for (const Matroid& m : catalog(6)) {
    REQUIRE(oracle::circuit_axioms_hold(masks(m)));
  }
}

TEST_CASE("rank matches greedy and is monotone with unit increase") {
  for (const Matroid& m : catalog(5)) {
    const auto profile = rank_profile(m);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << m.size()); ++a) {
      REQUIRE(profile[a] == oracle::greedy_rank(masks(m), static_cast<oracle::Mask>(a)));
      for (Element x = 0; x < m.size(); ++x) {
        const std::uint64_t ax = a | (std::uint64_t{1} << x);
        REQUIRE(profile[a] <= profile[ax]);
        REQUIRE(profile[ax] <= profile[a] + 1);
      }
    }
  }
  for (const Matroid& m : catalog(6)) {
    REQUIRE(rank(m) == oracle::greedy_rank(masks(m), mask(m.elements())));
  }
}

TEST_CASE("connectivity matches the pairwise oracle") {
  for (const Matroid& m : catalog(6)) {
    REQUIRE(is_connected(m) == oracle::connected(static_cast<unsigned>(m.size()), masks(m)));
  }
}

TEST_CASE("is_binary agrees with GF(2) representability") {
  std::size_t non_binary = 0;
  for (const Matroid& m : catalog(6)) {
    const bool oracle_says = oracle::gf2_representable(static_cast<unsigned>(m.size()), masks(m));
    REQUIRE(is_binary(m) == oracle_says);
    if (!oracle_says) ++non_binary;
  }
  CHECK(non_binary > 0);
  CHECK(oracle::gf2_representable(7, masks(named("fano"))));
  CHECK(oracle::gf2_representable(6, masks(named("MK4"))));
  CHECK_FALSE(oracle::gf2_representable(4, masks(uniform(2, 4))));
}

TEST_CASE("series relation is an equivalence and matches the partition") {
  for (const Matroid& m : catalog(5)) {
    const SeriesPartition p = series_partition(m);
    ElementSet covered = p.loops | p.coloops;
    for (ElementSet c : p.classes) {
      REQUIRE_FALSE(c.intersects(covered));
      covered |= c;
    }
    REQUIRE(covered == m.elements());
    const ElementSet in_classes = m.elements() - p.loops - p.coloops;
    for (Element x : in_classes) {
      for (Element y : in_classes) {
        bool same = false;
        for (ElementSet c : p.classes) same = same || (c.contains(x) && c.contains(y));
        REQUIRE(in_series(m, x, y) == same);
        for (Element z : in_classes) {
          if (in_series(m, x, y) && in_series(m, y, z)) REQUIRE(in_series(m, x, z));
        }
      }
    }
  }
}

TEST_CASE("series quotient of a CR^2 matroid is U_{k,k+2}") {
  std::size_t seen = 0;
  for (const Matroid& m : catalog(6)) {
    if (!is_crk(m, 2)) continue;
    ++seen;
    const auto [q, f] = series_quotient(m);
    const std::size_t k = q.size() - 2;
    REQUIRE(k >= 1);
    REQUIRE(isomorphic(q, uniform(k, k + 2)));
    REQUIRE(is_homeomorphism(f, m, q).holds);
  }
  CHECK(seen > 0);
}

TEST_CASE("subdivision and series quotient") {
  CatalogSpec spec;
  spec.max_ground_size = 4;
  spec.connected_only = true;
  spec.coloop_free = true;
  std::size_t reduced = 0;
  for (const Matroid& h : enumerate_matroids(spec)) {
    const auto [hq, hf] = series_quotient(h);
    const bool series_reduced = hq.size() == h.size();
    if (series_reduced) ++reduced;
    for (const Matroid& sub : all_subdivisions(h, 3)) {
      const auto [q, f] = series_quotient(sub);
      REQUIRE(isomorphic(q, hq));
      if (series_reduced) REQUIRE(isomorphic(q, h));
    }
  }
  CHECK(reduced > 0);
}

TEST_CASE("surjection counts match inclusion-exclusion") {
  for (unsigned s = 1; s <= 6; ++s) {
    for (unsigned t = 1; t <= s; ++t) {
      const auto maps = all_surjections(GroundSet::indexed(s), GroundSet::indexed(t, "t"));
      REQUIRE(maps.size() == oracle::surjection_count(s, t));
      std::set<std::vector<Element>> distinct;
      for (const auto& f : maps) {
        REQUIRE(f.is_surjective());
        distinct.insert(f.assignment());
      }
      REQUIRE(distinct.size() == maps.size());
    }
  }
}

TEST_CASE("homomorphism search equals filtered surjections") {
  const auto& sources = catalog(4);
  CatalogSpec tspec;
  tspec.max_ground_size = 3;
  const auto targets = enumerate_matroids(tspec);
  std::size_t found = 0;
  for (const Matroid& m : sources) {
    for (const Matroid& n : targets) {
      if (n.size() > m.size()) continue;
      std::vector<GroundMap> filtered;
      for (const auto& f : all_surjections(m.ground(), n.ground())) {
        if (is_homomorphism(f, m, n).holds) filtered.push_back(f);
      }
      REQUIRE(all_homomorphisms(m, n) == filtered);
      found += filtered.size();
    }
  }
  CHECK(found > 0);
}

TEST_CASE("map class implications and composition") {
  const auto& small = catalog(3);
  for (const Matroid& m : small) {
    for (const Matroid& mid : small) {
      if (mid.size() > m.size()) continue;
      for (const auto& g : all_surjections(m.ground(), mid.ground())) {
        const bool hom = is_homomorphism(g, m, mid).holds;
        if (is_homeomorphism(g, m, mid).holds) REQUIRE(hom);
        if (is_circuit_injection(g, m, mid).holds) REQUIRE(hom);
        if (!hom) continue;
        for (const Matroid& n : small) {
          if (n.size() > mid.size()) continue;
          for (const auto& h : all_homomorphisms(mid, n)) {
            REQUIRE(is_homomorphism(compose(h, g), m, n).holds);
          }
        }
      }
    }
  }
}

TEST_CASE("image properties over all functions between small sets") {
  for (std::size_t s = 1; s <= 4; ++s) {
    for (std::size_t t = 1; t <= 4; ++t) {
      std::vector<Element> a(s, 0);
      while (true) {
        GroundMap f(GroundSet::indexed(s), GroundSet::indexed(t, "t"), a);
        for (std::uint64_t x = 0; x < (1u << s); ++x) {
          for (std::uint64_t y = 0; y < (1u << s); ++y) {
            const ElementSet sx(x), sy(y);
            const ElementSet fx = image_of_set(f, sx), fy = image_of_set(f, sy);
            REQUIRE(image_of_set(f, sx | sy) == (fx | fy));
            REQUIRE((fx - fy).is_subset_of(image_of_set(f, sx - sy)));
            REQUIRE((fx ^ fy).is_subset_of(image_of_set(f, sx ^ sy)));
          }
          REQUIRE(ElementSet(x).is_subset_of(preimage_of_set(f, image_of_set(f, ElementSet(x)))));
        }
        std::size_t p = 0;
        while (p < s && a[p] == t - 1) a[p++] = 0;
        if (p == s) break;
        ++a[p];
      }
    }
  }
}

TEST_CASE("fiber lemma and dichotomy over sources <= 6, binary targets <= 4") {
  TheoremSuiteOptions options;
  options.sources.max_ground_size = 6;
  options.targets.max_ground_size = 4;
  const SuiteReport r = verify_theorems_suite(options);
  CHECK(r.passed());
  CHECK(r.stats.at("lemma1").run > 0);
  CHECK(r.stats.at("lemma1").failed == 0);
  CHECK(r.stats.at("theorem1").failed == 0);
  CHECK(r.stats.at("theorem3").failed == 0);
  CHECK(r.stats.at("theorem4").failed == 0);
}

TEST_CASE("facts hold over the n <= 6 catalog") {
  CatalogSpec spec;
  spec.max_ground_size = 6;
  const SuiteReport r = verify_facts_suite(spec);
  CHECK(r.passed());
  for (const auto& [name, s] : r.stats) {
    INFO(name);
    CHECK(s.failed == 0);
    CHECK(s.run > 0);
  }
}

TEST_CASE("covering circuit always exists in CR^2 catalog matroids") {
  for (const Matroid& m : catalog(6)) {
    if (!is_crk(m, 2)) continue;
    const auto cs = m.circuits();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (i == j) continue;
        const ElementSet c = covering_circuit_cr2(m, cs[i], cs[j]);
        REQUIRE(m.is_circuit(c));
        REQUIRE((cs[i] ^ cs[j]).is_subset_of(c));
      }
    }
  }
}

TEST_CASE("decomposition soundness on catalog homomorphisms") {
  TheoremSuiteOptions options;
  const auto sources = theorem_sources(options);
  CatalogSpec tspec;
  tspec.max_ground_size = 4;
  tspec.binary = true;
  const auto targets = enumerate_matroids(tspec);
  std::size_t decomposed = 0;
  for (const Matroid& m : sources) {
    if (m.size() > 5) continue;
    for (const Matroid& n : targets) {
      if (is_single_circuit(n) || n.size() > m.size()) continue;
      for_each_homomorphism(m, n, [&](const GroundMap& f) {
        const Decomposition d = decompose(f, m, n);
        REQUIRE(compose(d.h, d.g) == f);
        REQUIRE(is_homeomorphism(d.g, m, d.h_matroid).holds);
        REQUIRE(is_circuit_injection(d.h, d.h_matroid, n).holds);
        for (ElementSet c : d.h_matroid.circuits()) REQUIRE(n.is_circuit(c));
        ++decomposed;
        return true;
      });
    }
  }
  CHECK(decomposed > 0);
}
