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

#ifndef MHOM_GROUND_MAP_HPP_
#define MHOM_GROUND_MAP_HPP_

#include <map>
#include <string>
#include <vector>

#include "mhom/element_set.hpp"
#include "mhom/ground_set.hpp"

namespace mhom {

// A total map from one ground set to another. Surjectivity and injectivity
// are computed from the assignment.
class GroundMap {
 public:
  // assignment[i] is the image of source element i. Throws SizeMismatch if
  // the assignment does not cover the source, ElementNotInGround for
  // out-of-range images, InvalidParameters for empty ground sets.
  GroundMap(GroundSet source, GroundSet target, std::vector<Element> assignment);

  // Throws PartialMap when a source label is missing and ElementNotInGround
  // for unknown labels on either side.
  static GroundMap from_labels(GroundSet source, GroundSet target,
                               const std::map<std::string, std::string>& mapping);
  static GroundMap identity(const GroundSet& ground);

  const GroundSet& source() const { return source_; }
  const GroundSet& target() const { return target_; }
  const std::vector<Element>& assignment() const { return assignment_; }

  Element operator()(Element e) const { return assignment_[e]; }

  bool is_surjective() const;
  bool is_injective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  // The same assignment viewed with a different (equal-sized) target.
  GroundMap retarget(GroundSet target) const;

  // f^{-1}(x) for every target element x.
  std::vector<ElementSet> fibers() const;

  std::map<std::string, std::string> to_labels() const;

  friend bool operator==(const GroundMap&, const GroundMap&) = default;

 private:
  GroundSet source_;
  GroundSet target_;
  std::vector<Element> assignment_;
};

}  // namespace mhom

#endif  // MHOM_GROUND_MAP_HPP_
