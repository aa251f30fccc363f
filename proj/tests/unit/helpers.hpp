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

#ifndef MHOM_TESTS_HELPERS_HPP_
#define MHOM_TESTS_HELPERS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mhom/error.hpp"
#include "mhom/matroid.hpp"
#include "oracles.hpp"

namespace mhom::test {

using Labels = std::vector<std::string>;

inline Matroid make(const Labels& labels, const std::vector<Labels>& circuits) {
  return validate_circuits(GroundSet(labels), circuits);
}

inline Matroid theta() {
  return make({"a1", "a2", "b1", "b2", "c1", "c2"},
              {{"a1", "a2", "b1", "b2"}, {"a1", "a2", "c1", "c2"}, {"b1", "b2", "c1", "c2"}});
}

inline Matroid u13() { return uniform(1, GroundSet({"x", "y", "z"})); }
inline Matroid u12() { return uniform(1, GroundSet({"x", "y"})); }
inline Matroid u24() { return uniform(2, GroundSet({"a", "b", "c", "d"})); }

inline ElementSet set(const Matroid& m, const Labels& labels) {
  return m.ground().set_of(labels);
}
inline Element el(const Matroid& m, const std::string& label) {
  return m.ground().index_of(label);
}

inline oracle::Mask mask(ElementSet s) { return static_cast<oracle::Mask>(s.bits()); }

inline std::vector<oracle::Mask> masks(const Matroid& m) {
  std::vector<oracle::Mask> out;
  for (ElementSet c : m.circuits()) out.push_back(mask(c));
  return out;
}

// Kind of the MatroidError thrown by fn, if any.
template <typename Fn>
std::optional<ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const MatroidError& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace mhom::test

#endif  // MHOM_TESTS_HELPERS_HPP_
