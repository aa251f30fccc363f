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

#include "oracles.hpp"

#include <algorithm>
#include <bit>

namespace oracle {

namespace {

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

bool independent(const std::vector<Mask>& circuits, Mask s) {
  for (Mask c : circuits) {
    if (subset(c, s)) return false;
  }
  return true;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool circuit_axioms_hold(const std::vector<Mask>& family) {
  for (Mask c : family) {
    if (c == 0) return false;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && subset(family[i], family[j])) return false;
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Mask shared = family[i] & family[j];
      for (unsigned e = 0; e < 32; ++e) {
        if (!(shared >> e & 1)) continue;
        const Mask room = (family[i] | family[j]) & ~(Mask{1} << e);
        bool found = false;
        for (Mask c : family) found = found || subset(c, room);
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Mask>> all_circuit_families(unsigned n) {
  const unsigned subsets = (1u << n) - 1;  // nonempty subsets 1..2^n-1
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
    std::vector<Mask> family;
    for (unsigned i = 0; i < subsets; ++i) {
      if (pick >> i & 1) family.push_back(i + 1);
    }
    if (circuit_axioms_hold(family)) out.push_back(std::move(family));
  }
  return out;
}

unsigned greedy_rank(const std::vector<Mask>& circuits, Mask a) {
  Mask basis = 0;
  for (unsigned e = 0; e < 32; ++e) {
    if (!(a >> e & 1)) continue;
    if (independent(circuits, basis | (Mask{1} << e))) basis |= Mask{1} << e;
  }
  return static_cast<unsigned>(std::popcount(basis));
}

std::vector<Mask> gf2_circuits(const std::vector<Mask>& columns) {
  const unsigned n = static_cast<unsigned>(columns.size());
  std::vector<Mask> zero_sum;
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    Mask sum = 0;
    for (unsigned e = 0; e < n; ++e) {
      if (s >> e & 1) sum ^= columns[e];
    }
    if (sum == 0) zero_sum.push_back(s);
  }
  std::vector<Mask> minimal;
  for (Mask s : zero_sum) {
    bool is_min = true;
    for (Mask t : zero_sum) {
      if (t != s && subset(t, s)) is_min = false;
    }
    if (is_min) minimal.push_back(s);
  }
  return minimal;
}

bool gf2_representable(unsigned n, const std::vector<Mask>& circuits) {
  Mask basis = 0;
  for (unsigned e = 0; e < n; ++e) {
    if (independent(circuits, basis | (Mask{1} << e))) basis |= Mask{1} << e;
  }
  // Row index of each basis element.
  std::vector<int> row(n, -1);
  int rows = 0;
  for (unsigned e = 0; e < n; ++e) {
    if (basis >> e & 1) row[e] = rows++;
  }
  std::vector<Mask> columns(n, 0);
  for (unsigned e = 0; e < n; ++e) {
    if (basis >> e & 1) {
      columns[e] = Mask{1} << row[e];
      continue;
    }
    // Fundamental circuit: the unique circuit inside basis + e.
    Mask fundamental = 0;
    for (Mask c : circuits) {
      if (subset(c, basis | (Mask{1} << e)) && (c >> e & 1)) fundamental = c;
    }
    for (unsigned b = 0; b < n; ++b) {
      if ((fundamental >> b & 1) && b != e) columns[e] |= Mask{1} << row[b];
    }
  }
  std::vector<Mask> expected = circuits;
  std::vector<Mask> actual = gf2_circuits(columns);
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  return expected == actual;
}

std::uint64_t surjection_count(unsigned s, unsigned t) {
  std::int64_t total = 0;
  for (unsigned k = 0; k <= t; ++k) {
    std::int64_t term = static_cast<std::int64_t>(binomial(t, k));
    for (unsigned i = 0; i < s; ++i) term *= static_cast<std::int64_t>(t - k);
    total += (k % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

bool connected(unsigned n, const std::vector<Mask>& circuits) {
  for (unsigned x = 0; x < n; ++x) {
    for (unsigned y = x + 1; y < n; ++y) {
      bool shared = false;
      for (Mask c : circuits) shared = shared || ((c >> x & 1) && (c >> y & 1));
      if (!shared) return false;
    }
  }
  return true;
}

}  // namespace oracle
