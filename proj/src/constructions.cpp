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
#include <numeric>
#include <string>
#include <utility>

#include "mhom/error.hpp"
#include "mhom/matroid.hpp"
#include "trusted_matroid.hpp"

namespace mhom {

Matroid uniform(std::size_t r, GroundSet ground) {
  const std::size_t n = ground.size();
  if (r > n || n > 24) {
    throw MatroidError(ErrorKind::InvalidParameters,
                       "uniform(" + std::to_string(r) + ", " + std::to_string(n) + ") needs r <= n <= 24");
  }
  std::vector<ElementSet> circuits;
  if (r < n) {
    for_each_subset(ground.all(), [&](ElementSet s) {
      if (s.size() == r + 1) circuits.push_back(s);
    });
  }
  return detail::TrustedMatroid::make(std::move(ground), std::move(circuits));
}

Matroid uniform(std::size_t r, std::size_t n) {
  if (r > n) {
    throw MatroidError(ErrorKind::InvalidParameters,
                       "uniform(" + std::to_string(r) + ", " + std::to_string(n) + ") needs r <= n");
  }
  return uniform(r, GroundSet::indexed(n));
}

Matroid cycle_matroid(std::size_t vertices, const std::vector<Edge>& edges, GroundSet edge_labels) {
  if (edge_labels.size() != edges.size()) {
    throw MatroidError(ErrorKind::SizeMismatch, "one label per edge is required");
  }
  if (edges.size() > 24) {
    throw MatroidError(ErrorKind::InvalidParameters, "cycle_matroid supports at most 24 edges");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].u >= vertices || edges[i].v >= vertices) {
      throw MatroidError(ErrorKind::InvalidVertex,
                         "edge " + edge_labels.label(i) + " references a vertex outside 0.." +
                             std::to_string(vertices == 0 ? 0 : vertices - 1),
                         {}, i);
    }
  }
  // An edge set is a cycle iff it is nonempty, connected, and 2-regular on
  // the vertices it touches.
  std::vector<ElementSet> circuits;
  std::vector<std::size_t> degree(vertices, 0);
  std::vector<std::size_t> parent(vertices, 0);
  for_each_subset(edge_labels.all(), [&](ElementSet s) {
    if (s.empty()) return;
    std::fill(degree.begin(), degree.end(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (Element e : s) {
      degree[edges[e].u] += 1;
      degree[edges[e].v] += 1;
      parent[find(edges[e].u)] = find(edges[e].v);
    }
    std::size_t root = vertices;
    for (std::size_t v = 0; v < vertices; ++v) {
      if (degree[v] == 0) continue;
      if (degree[v] != 2) return;
      if (root == vertices) root = find(v);
      if (find(v) != root) return;
    }
    circuits.push_back(s);
  });
  return validate_circuits(std::move(edge_labels), std::move(circuits));
}

Matroid cycle_matroid(std::size_t vertices, const std::vector<Edge>& edges) {
  return cycle_matroid(vertices, edges, GroundSet::indexed(edges.size()));
}

std::pair<Matroid, GroundMap> subdivide(const Matroid& h,
                                        const std::vector<std::vector<std::string>>& fibers) {
  if (fibers.size() != h.size()) {
    throw MatroidError(ErrorKind::SizeMismatch, "subdivide needs one fiber per element");
  }
  std::vector<std::string> labels;
  std::vector<Element> origin;
  std::vector<ElementSet> fiber_sets(h.size());
  for (Element e = 0; e < h.size(); ++e) {
    if (fibers[e].empty()) {
      throw MatroidError(ErrorKind::EmptyFiber,
                         "fiber of '" + h.ground().label(e) + "' is empty", {}, e);
    }
    for (const auto& label : fibers[e]) {
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
        throw MatroidError(ErrorKind::FiberOverlap, "label '" + label + "' appears in two fibers",
                           {}, e);
      }
      fiber_sets[e] = fiber_sets[e].with(labels.size());
      labels.push_back(label);
      origin.push_back(e);
    }
  }
  std::vector<ElementSet> circuits;
  circuits.reserve(h.circuits().size());
  for (ElementSet c : h.circuits()) {
    ElementSet inflated;
    for (Element e : c) inflated |= fiber_sets[e];
    circuits.push_back(inflated);
  }
  GroundSet ground(std::move(labels));
  Matroid m = validate_circuits(ground, std::move(circuits));
  return {std::move(m), GroundMap(std::move(ground), h.ground(), std::move(origin))};
}

std::pair<Matroid, GroundMap> series_quotient(const Matroid& m) {
  if (!is_connected(m)) throw MatroidError(ErrorKind::NotConnected, "series_quotient needs a connected matroid");
  const SeriesPartition partition = series_partition(m);
  if (!partition.coloops.empty()) {
    throw MatroidError(ErrorKind::HasColoops, "series_quotient needs a coloop-free matroid",
                       {partition.coloops});
  }
  std::vector<ElementSet> classes = partition.classes;
  for (Element loop : partition.loops) classes.push_back(ElementSet::singleton(loop));
  std::sort(classes.begin(), classes.end(),
            [](ElementSet a, ElementSet b) { return a.front() < b.front(); });

  std::vector<std::string> labels;
  std::vector<Element> assignment(m.size(), 0);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    labels.push_back(m.ground().label(classes[i].front()));
    for (Element e : classes[i]) assignment[e] = i;
  }
  GroundSet ground(std::move(labels));
  std::vector<ElementSet> circuits;
  for (ElementSet c : m.circuits()) {
    ElementSet image;
    for (Element e : c) image = image.with(assignment[e]);
    circuits.push_back(image);
  }
  std::sort(circuits.begin(), circuits.end(), LexLess{});
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  Matroid h = validate_circuits(ground, std::move(circuits));
  return {std::move(h), GroundMap(m.ground(), std::move(ground), std::move(assignment))};
}

Matroid relabel(const Matroid& m, GroundSet labels) {
  if (labels.size() != m.size()) {
    throw MatroidError(ErrorKind::SizeMismatch, "relabel needs one label per element");
  }
  std::vector<ElementSet> circuits(m.circuits().begin(), m.circuits().end());
  return detail::TrustedMatroid::make(std::move(labels), std::move(circuits));
}

}  // namespace mhom
