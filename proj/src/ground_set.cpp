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

#include "mhom/ground_set.hpp"

#include <string>
#include <utility>

#include "mhom/error.hpp"

namespace mhom {

GroundSet::GroundSet() : impl_(std::make_shared<const Impl>()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
  if (labels.size() > kMaxElements) {
    throw MatroidError(ErrorKind::InvalidParameters,
                       "ground set has " + std::to_string(labels.size()) +
                           " elements; at most " + std::to_string(kMaxElements) +
                           " are supported");
  }
  Impl impl;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i].empty()) {
      throw MatroidError(ErrorKind::EmptyLabel, "element labels must be nonempty");
    }
    if (!impl.index.emplace(labels[i], i).second) {
      throw MatroidError(ErrorKind::DuplicateLabel, "duplicate label '" + labels[i] + "'");
    }
  }
  impl.labels = std::move(labels);
  impl_ = std::make_shared<const Impl>(std::move(impl));
}

GroundSet GroundSet::indexed(std::size_t n, std::string_view prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
  return GroundSet(std::move(labels));
}

const std::string& GroundSet::label(Element e) const {
  if (e >= size()) {
    throw MatroidError(ErrorKind::ElementNotInGround,
                       "element index " + std::to_string(e) + " out of range", {}, e);
  }
  return impl_->labels[e];
}

bool GroundSet::contains(std::string_view label) const {
  return impl_->index.find(std::string(label)) != impl_->index.end();
}

Element GroundSet::index_of(std::string_view label) const {
  auto it = impl_->index.find(std::string(label));
  if (it == impl_->index.end()) {
    throw MatroidError(ErrorKind::ElementNotInGround,
                       "unknown element '" + std::string(label) + "'");
  }
  return it->second;
}

ElementSet GroundSet::set_of(const std::vector<std::string>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> GroundSet::labels_of(ElementSet s) const {
  check_subset(s);
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Element e : s) out.push_back(impl_->labels[e]);
  return out;
}

std::string GroundSet::format(ElementSet s) const {
  std::string out = "{";
  bool first = true;
  for (Element e : s) {
    if (!first) out += ',';
    first = false;
    out += e < size() ? impl_->labels[e] : "#" + std::to_string(e);
  }
  return out + "}";
}

void GroundSet::check_subset(ElementSet s) const {
  if (!s.is_subset_of(all())) {
    throw MatroidError(ErrorKind::ElementNotInGround,
                       "set " + format(s) + " is not contained in the ground set",
                       {s - all()});
  }
}

bool operator==(const GroundSet& a, const GroundSet& b) {
  return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
}

}  // namespace mhom
