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

#ifndef MHOM_SRC_STRUCTURE_INTERNAL_HPP_
#define MHOM_SRC_STRUCTURE_INTERNAL_HPP_

#include "mhom/structure.hpp"

namespace mhom::detail {

// Variants of the public checks that skip hypothesis validation, for suites
// that establish the hypotheses once per matroid or map.
Witness fact2_unchecked(const Matroid& m, ElementSet a, Element x, std::size_t k);
Witness fact4_unchecked(const Matroid& m, ElementSet e1, ElementSet e2);
Witness fact6_unchecked(const Matroid& m, ElementSet a, ElementSet b, ElementSet c);
Witness fact7_unchecked(const Matroid& m, ElementSet a, ElementSet b);
Witness lemma1_unchecked(const GroundMap& f, const Matroid& m, const Matroid& n, Element x1,
                         Element x2, ElementSet a);
Theorem1Result theorem1_unchecked(const GroundMap& f, const Matroid& m, const Matroid& n);
Decomposition decompose_unchecked(const GroundMap& f, const Matroid& m, const Matroid& n);

}  // namespace mhom::detail

#endif  // MHOM_SRC_STRUCTURE_INTERNAL_HPP_
