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

#ifndef MHOM_GROUND_SET_HPP_
#define MHOM_GROUND_SET_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mhom/element_set.hpp"

namespace mhom {

// Ordered sequence of distinct, nonempty element labels. Element i is the
// i-th label; iteration order is the construction order. Copies share the
// underlying storage.
class GroundSet {
 public:
  GroundSet();
  // Throws DuplicateLabel, EmptyLabel, or InvalidParameters (more than
  // kMaxElements labels).
  explicit GroundSet(std::vector<std::string> labels);

  // Labels "<prefix>0" ... "<prefix>(n-1)".
  static GroundSet indexed(std::size_t n, std::string_view prefix = "e");

  std::size_t size() const { return impl_->labels.size(); }
  bool empty() const { return size() == 0; }
  ElementSet all() const { return ElementSet::full(size()); }

  const std::vector<std::string>& labels() const { return impl_->labels; }
  const std::string& label(Element e) const;
  bool contains(std::string_view label) const;
  // Throws ElementNotInGround.
  Element index_of(std::string_view label) const;
  ElementSet set_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(ElementSet s) const;
  // "{a,b,c}".
  std::string format(ElementSet s) const;

  // Throws ElementNotInGround when s has elements beyond size().
  void check_subset(ElementSet s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b);

 private:
  struct Impl {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Element> index;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace mhom

#endif  // MHOM_GROUND_SET_HPP_
