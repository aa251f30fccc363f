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

#include "mhom/ground_map.hpp"

#include <string>
#include <utility>

#include "mhom/error.hpp"

namespace mhom {

GroundMap::GroundMap(GroundSet source, GroundSet target, std::vector<Element> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (source_.empty() || target_.empty()) {
    throw MatroidError(ErrorKind::InvalidParameters, "maps between empty ground sets are not supported");
  }
  if (assignment_.size() != source_.size()) {
    throw MatroidError(ErrorKind::SizeMismatch,
                       "assignment has " + std::to_string(assignment_.size()) +
                           " entries for a source of size " + std::to_string(source_.size()));
  }
  for (Element e = 0; e < assignment_.size(); ++e) {
    if (assignment_[e] >= target_.size()) {
      throw MatroidError(ErrorKind::ElementNotInGround,
                         "image of '" + source_.label(e) + "' is outside the target", {}, e);
    }
  }
}

GroundMap GroundMap::from_labels(GroundSet source, GroundSet target,
                                 const std::map<std::string, std::string>& mapping) {
  for (const auto& [from, to] : mapping) {
    source.index_of(from);
    target.index_of(to);
  }
  std::vector<Element> assignment(source.size());
  for (Element e = 0; e < source.size(); ++e) {
    auto it = mapping.find(source.label(e));
    if (it == mapping.end()) {
      throw MatroidError(ErrorKind::PartialMap,
                         "no image given for '" + source.label(e) + "'", {}, e);
    }
    assignment[e] = target.index_of(it->second);
  }
  return GroundMap(std::move(source), std::move(target), std::move(assignment));
}

GroundMap GroundMap::identity(const GroundSet& ground) {
  std::vector<Element> assignment(ground.size());
  for (Element e = 0; e < ground.size(); ++e) assignment[e] = e;
  return GroundMap(ground, ground, std::move(assignment));
}

bool GroundMap::is_surjective() const {
  ElementSet hit;
  for (Element x : assignment_) hit = hit.with(x);
  return hit == target_.all();
}

bool GroundMap::is_injective() const {
  ElementSet hit;
  for (Element x : assignment_) {
    if (hit.contains(x)) return false;
    hit = hit.with(x);
  }
  return true;
}

GroundMap GroundMap::retarget(GroundSet target) const {
  if (target.size() != target_.size()) {
    throw MatroidError(ErrorKind::GroundMismatch, "retarget needs a target of the same size");
  }
  return GroundMap(source_, std::move(target), assignment_);
}

std::vector<ElementSet> GroundMap::fibers() const {
  std::vector<ElementSet> out(target_.size());
  for (Element e = 0; e < assignment_.size(); ++e) out[assignment_[e]] = out[assignment_[e]].with(e);
  return out;
}

std::map<std::string, std::string> GroundMap::to_labels() const {
  std::map<std::string, std::string> out;
  for (Element e = 0; e < assignment_.size(); ++e) {
    out.emplace(source_.label(e), target_.label(assignment_[e]));
  }
  return out;
}

}  // namespace mhom
