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

#include "doctest.h"
#include "helpers.hpp"
#include "mhom/catalog.hpp"
#include "mhom/maps.hpp"
#include "mhom/matroid.hpp"

using namespace mhom;
using namespace mhom::test;

TEST_CASE("uniform matroids") {
  Matroid u = u13();
  CHECK(u.format_circuits() == "{{x,y},{x,z},{y,z}}");
  CHECK(uniform(2, 4).circuits().size() == 4);
  CHECK(uniform(3, 3).circuits().empty());
  CHECK(uniform(0, 2).circuits().size() == 2);
  CHECK(uniform(0, 0).size() == 0);
  CHECK(error_kind([] { uniform(4, 3); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("cycle matroids") {
  Matroid tri = cycle_matroid(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(is_single_circuit(tri));
  CHECK(tri.size() == 3);

  Matroid par = cycle_matroid(2, {{0, 1}, {0, 1}});
  CHECK(is_single_circuit(par));
  CHECK(par.circuits()[0].size() == 2);

  Matroid loop = cycle_matroid(1, {{0, 0}});
  CHECK(loop.circuits().size() == 1);
  CHECK(loop.circuits()[0] == ElementSet{0});

  const std::vector<Edge> theta_edges = {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}};
  Matroid th = cycle_matroid(5, theta_edges, GroundSet(kThetaLabels));
  CHECK(th == theta());

  Matroid k4 = named("MK4");
  CHECK(k4.circuits().size() == 7);  // 4 triangles, 3 squares
  CHECK(rank(k4) == 3);

  // A path has no cycles.
  CHECK(cycle_matroid(3, {{0, 1}, {1, 2}}).circuits().empty());
  CHECK(error_kind([] { cycle_matroid(2, {{0, 2}}); }) == ErrorKind::InvalidVertex);
}

TEST_CASE("subdivide") {
  auto [m, collapse] = subdivide(u13(), {{"x1", "x2"}, {"y"}, {"z"}});
  CHECK(m.ground().labels() == Labels{"x1", "x2", "y", "z"});
  CHECK(m.circuits().size() == 3);
  CHECK(m.is_circuit(set(m, {"x1", "x2", "y"})));
  CHECK(m.is_circuit(set(m, {"x1", "x2", "z"})));
  CHECK(m.is_circuit(set(m, {"y", "z"})));
  CHECK(is_homeomorphism(collapse, m, u13()).holds);

  auto [same, id] = subdivide(u13(), {{"p"}, {"q"}, {"r"}});
  CHECK(isomorphic(same, u13()));

  auto [th, g] = subdivide(u13(), {{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}});
  CHECK(th == theta());
  CHECK(isomorphic(th, named("theta")));

  CHECK(error_kind([] { subdivide(u13(), {{"p", "q"}, {"q"}, {"r"}}); }) ==
        ErrorKind::FiberOverlap);
  CHECK(error_kind([] { subdivide(u13(), {{"p"}, {}, {"r"}}); }) == ErrorKind::EmptyFiber);
  CHECK(error_kind([] { subdivide(u13(), {{"p"}, {"r"}}); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("series quotient") {
  auto [q, f] = series_quotient(theta());
  CHECK(isomorphic(q, u13()));
  CHECK(q.ground().labels() == Labels{"a1", "b1", "c1"});
  CHECK(is_homeomorphism(f, theta(), q).holds);

  auto [qu, fu] = series_quotient(u24());
  CHECK(qu == u24());
  CHECK(fu.is_bijective());

  auto [loop, fl] = series_quotient(named("single_circuit(5)"));
  CHECK(loop.size() == 1);
  CHECK(loop.circuits().size() == 1);
  CHECK(loop.circuits()[0].size() == 1);

  CHECK(error_kind([] { series_quotient(make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})); }) ==
        ErrorKind::NotConnected);
  CHECK(error_kind([] { series_quotient(uniform(1, 1)); }) == ErrorKind::HasColoops);
}

TEST_CASE("isomorphism search") {
  Matroid t = theta();
  auto self = isomorphic(t, t);
  REQUIRE(self);
  CHECK(*self == std::vector<Element>{0, 1, 2, 3, 4, 5});
  CHECK_FALSE(isomorphic(uniform(1, 3), uniform(2, 3)));
  CHECK_FALSE(isomorphic(uniform(1, 3), uniform(1, 4)));
  CHECK_FALSE(isomorphic(named("MK4"), named("fano")));

  auto [sub, g] = subdivide(u13(), {{"p1", "p2"}, {"q1", "q2"}, {"r1", "r2"}});
  auto iso = isomorphic(t, sub);
  REQUIRE(iso);
  // The bijection carries every circuit onto a circuit.
  for (ElementSet c : t.circuits()) {
    ElementSet image;
    for (Element e : c) image = image.with((*iso)[e]);
    CHECK(sub.is_circuit(image));
  }
}

TEST_CASE("relabel") {
  Matroid r = relabel(u13(), GroundSet({"p", "q", "r"}));
  CHECK(r.format_circuits() == "{{p,q},{p,r},{q,r}}");
  CHECK(error_kind([] { relabel(u13(), GroundSet({"p"})); }) == ErrorKind::SizeMismatch);
}
