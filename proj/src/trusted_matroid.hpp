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

#ifndef MHOM_SRC_TRUSTED_MATROID_HPP_
#define MHOM_SRC_TRUSTED_MATROID_HPP_

#include <algorithm>
#include <utility>
#include <vector>

#include "mhom/matroid.hpp"

namespace mhom::detail {

// Builds a Matroid from a family already known to satisfy the circuit axioms
// (restrictions, enumerator output). Only sorts.
struct TrustedMatroid {
  static Matroid make(GroundSet ground, std::vector<ElementSet> circuits) {
    std::sort(circuits.begin(), circuits.end(), LexLess{});
    return Matroid(std::move(ground), std::move(circuits));
  }
};

}  // namespace mhom::detail

#endif  // MHOM_SRC_TRUSTED_MATROID_HPP_
