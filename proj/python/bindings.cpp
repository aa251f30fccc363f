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

// Python bindings. Matroids cross the boundary as objects; sets and maps as
// label lists and label dicts.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "mhom/catalog.hpp"
#include "mhom/error.hpp"
#include "mhom/json_io.hpp"
#include "mhom/maps.hpp"
#include "mhom/matroid.hpp"
#include "mhom/structure.hpp"

namespace py = pybind11;
using namespace mhom;

namespace {

using Labels = std::vector<std::string>;
using LabelMap = std::map<std::string, std::string>;

std::vector<Labels> circuit_labels(const Matroid& m) {
  std::vector<Labels> out;
  for (ElementSet c : m.circuits()) out.push_back(m.ground().labels_of(c));
  return out;
}

GroundMap to_map(const Matroid& m, const Matroid& n, const LabelMap& mapping) {
  return GroundMap::from_labels(m.ground(), n.ground(), mapping);
}

py::dict verdict_dict(const MapVerdict& v, const GroundMap& f, const Matroid& m,
                      const Matroid& n) {
  py::dict d;
  d["holds"] = v.holds;
  d["failure"] = std::string(failure_name(v.failure));
  if (!v.holds) d["witness"] = describe(v, f);
  const bool in_target = v.failure == MapFailure::PreimageNotCircuit;
  if (v.circuit) d["circuit"] = (in_target ? n : m).ground().labels_of(*v.circuit);
  if (v.image) d["image"] = (in_target ? m : n).ground().labels_of(*v.image);
  return d;
}

py::object json_to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_mhom, mod) {
  mod.doc() = "Circuit-set matroids and matroid homomorphisms";

  // Held for the life of the interpreter.
  static py::handle error_type =
      py::exception<MatroidError>(mod, "MatroidError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const MatroidError& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error_type)(e.what());
      instance.attr("kind") = std::string(kind_name(e.kind()));
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  py::class_<Matroid>(mod, "Matroid")
      .def(py::init([](const Labels& elements, const std::vector<Labels>& circuits) {
             return validate_circuits(GroundSet(elements), circuits);
           }),
           py::arg("elements"), py::arg("circuits"))
      .def_property_readonly("elements", [](const Matroid& m) { return m.ground().labels(); })
      .def_property_readonly("circuits", circuit_labels)
      .def_property_readonly("name", [](const Matroid& m) { return m.name(); })
      .def("with_name", &Matroid::with_name)
      .def("__len__", &Matroid::size)
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__",
           [](const Matroid& m) {
             return "Matroid(" + (m.name() ? *m.name() + ", " : std::string()) +
                    m.format_circuits() + ")";
           })
      .def("is_circuit",
           [](const Matroid& m, const Labels& s) { return m.is_circuit(m.ground().set_of(s)); })
      .def("rank",
           [](const Matroid& m, std::optional<Labels> s) {
             return s ? rank(m, m.ground().set_of(*s)) : rank(m);
           },
           py::arg("subset") = py::none())
      .def("corank",
           [](const Matroid& m, std::optional<Labels> s) {
             return s ? corank(m, m.ground().set_of(*s)) : corank(m);
           },
           py::arg("subset") = py::none())
      .def("is_connected", [](const Matroid& m) { return is_connected(m); })
      .def("is_crk", [](const Matroid& m, std::size_t k) { return is_crk(m, k); })
      .def("is_binary", [](const Matroid& m) { return is_binary(m); })
      .def("is_single_circuit", [](const Matroid& m) { return is_single_circuit(m); })
      .def("restrict",
           [](const Matroid& m, const Labels& s) { return restrict(m, m.ground().set_of(s)); })
      .def("series_partition",
           [](const Matroid& m) {
             const SeriesPartition p = series_partition(m);
             py::dict d;
             std::vector<Labels> classes;
             for (ElementSet c : p.classes) classes.push_back(m.ground().labels_of(c));
             d["classes"] = classes;
             d["loops"] = m.ground().labels_of(p.loops);
             d["coloops"] = m.ground().labels_of(p.coloops);
             return d;
           })
      .def("in_series",
           [](const Matroid& m, const std::string& x, const std::string& y) {
             return in_series(m, m.ground().index_of(x), m.ground().index_of(y));
           })
      .def("to_json", [](const Matroid& m) { return matroid_to_json(m).dump(); })
      .def_static("from_json",
                  [](const std::string& text) {
                    try {
                      return matroid_from_json(Json::parse(text));
                    } catch (const Json::exception& e) {
                      throw MatroidError(ErrorKind::ParseError, e.what());
                    }
                  });

  mod.def("uniform", [](std::size_t r, std::size_t n) { return uniform(r, n); });
  mod.def("named", [](const std::string& name) { return named(name); });
  mod.def(
      "cycle_matroid",
      [](std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
         std::optional<Labels> labels) {
        std::vector<Edge> es;
        for (auto [u, v] : edges) es.push_back({u, v});
        return labels ? cycle_matroid(vertices, es, GroundSet(*labels))
                      : cycle_matroid(vertices, es);
      },
      py::arg("vertices"), py::arg("edges"), py::arg("labels") = py::none());
  mod.def("subdivide",
          [](const Matroid& h, const std::vector<Labels>& fibers) {
            auto [m, f] = subdivide(h, fibers);
            return py::make_tuple(m, f.to_labels());
          });
  mod.def("series_quotient", [](const Matroid& m) {
    auto [q, f] = series_quotient(m);
    return py::make_tuple(q, f.to_labels());
  });
  mod.def("isomorphic", [](const Matroid& m, const Matroid& n) -> std::optional<LabelMap> {
    auto iso = isomorphic(m, n);
    if (!iso) return std::nullopt;
    LabelMap out;
    for (Element e = 0; e < m.size(); ++e) out[m.ground().label(e)] = n.ground().label((*iso)[e]);
    return out;
  });

  mod.def("is_homomorphism", [](const Matroid& m, const Matroid& n, const LabelMap& f) {
    const GroundMap g = to_map(m, n, f);
    return verdict_dict(is_homomorphism(g, m, n), g, m, n);
  });
  mod.def("is_homeomorphism", [](const Matroid& m, const Matroid& n, const LabelMap& f) {
    const GroundMap g = to_map(m, n, f);
    return verdict_dict(is_homeomorphism(g, m, n), g, m, n);
  });
  mod.def("is_circuit_injection", [](const Matroid& m, const Matroid& n, const LabelMap& f) {
    const GroundMap g = to_map(m, n, f);
    return verdict_dict(is_circuit_injection(g, m, n), g, m, n);
  });
  mod.def(
      "all_homomorphisms",
      [](const Matroid& m, const Matroid& n, std::size_t limit) {
        std::vector<LabelMap> out;
        for_each_homomorphism(m, n, [&](const GroundMap& f) {
          out.push_back(f.to_labels());
          return limit == 0 || out.size() < limit;
        });
        return out;
      },
      py::arg("source"), py::arg("target"), py::arg("limit") = 0);

  mod.def("decompose", [](const Matroid& m, const Matroid& n, const LabelMap& f) {
    const GroundMap g = to_map(m, n, f);
    const Decomposition d = decompose(g, m, n);
    py::dict out;
    out["H"] = d.h_matroid;
    out["g"] = d.g.to_labels();
    out["h"] = d.h.to_labels();
    out["certificate"] = json_to_py(decomposition_to_json(d, m, n)["certificate"]);
    return out;
  });
  mod.def("decomposition_precondition_failure",
          [](const Matroid& m, const Matroid& n, const LabelMap& f) {
            return decomposition_precondition_failure(to_map(m, n, f), m, n);
          });
  mod.def("theorem1_outcome", [](const Matroid& m, const Matroid& n, const LabelMap& f) {
    return std::string(outcome_name(theorem1_check(to_map(m, n, f), m, n).outcome));
  });

  mod.def(
      "enumerate_matroids",
      [](std::size_t max_n, std::size_t min_n, bool connected, std::optional<bool> binary,
         std::optional<std::size_t> crk, bool coloop_free) {
        CatalogSpec spec;
        spec.max_ground_size = max_n;
        spec.min_ground_size = min_n;
        spec.connected_only = connected;
        spec.binary = binary;
        spec.crk = crk;
        spec.coloop_free = coloop_free;
        return enumerate_matroids(spec);
      },
      py::arg("max_n") = 4, py::arg("min_n") = 1, py::arg("connected") = false,
      py::arg("binary") = py::none(), py::arg("crk") = py::none(),
      py::arg("coloop_free") = false);
  mod.def("count_matroids", &count_matroids);

  mod.def(
      "verify_facts",
      [](std::size_t max_n) {
        CatalogSpec spec;
        spec.max_ground_size = max_n;
        return json_to_py(report_to_json(verify_facts_suite(spec)));
      },
      py::arg("max_n") = 5);
  mod.def(
      "verify_theorems",
      [](std::size_t max_n, std::size_t targets_max_n, std::size_t subdivisions,
         std::size_t max_fiber) {
        TheoremSuiteOptions options;
        options.sources.max_ground_size = max_n;
        options.targets.max_ground_size = targets_max_n;
        options.subdivision_base_max = subdivisions;
        options.max_fiber = max_fiber;
        return json_to_py(report_to_json(verify_theorems_suite(options)));
      },
      py::arg("max_n") = 5, py::arg("targets_max_n") = 3, py::arg("subdivisions") = 0,
      py::arg("max_fiber") = 2);
}
