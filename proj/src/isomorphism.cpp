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
#include <optional>
#include <vector>

#include "mhom/matroid.hpp"

namespace mhom {

namespace {

using Signature = std::vector<std::size_t>;

// Sorted sizes of the circuits through each element.
std::vector<Signature> element_signatures(const Matroid& m) {
  std::vector<Signature> out(m.size());
  for (ElementSet c : m.circuits()) {
    for (Element e : c) out[e].push_back(c.size());
  }
  for (auto& s : out) std::sort(s.begin(), s.end());
  return out;
}

std::vector<std::size_t> circuit_sizes(const Matroid& m) {
  std::vector<std::size_t> out;
  for (ElementSet c : m.circuits()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Matroid& m, const Matroid& n)
      : m_(m), n_(n), sig_m_(element_signatures(m)), sig_n_(element_signatures(n)),
        completed_at_(m.size()), image_(m.size(), 0) {
    for (ElementSet c : m.circuits()) completed_at_[c.back()].push_back(c);
  }

  std::optional<std::vector<Element>> run() {
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(Element i) {
    if (i == m_.size()) return true;
    for (Element j = 0; j < n_.size(); ++j) {
      if (used_.contains(j) || sig_m_[i] != sig_n_[j]) continue;
      image_[i] = j;
      used_ = used_.with(j);
      if (consistent(i) && extend(i + 1)) return true;
      used_ = used_.without(j);
    }
    return false;
  }

  bool consistent(Element i) const {
    for (ElementSet c : completed_at_[i]) {
      ElementSet mapped;
      for (Element e : c) mapped = mapped.with(image_[e]);
      if (!n_.is_circuit(mapped)) return false;
    }
    return true;
  }

  const Matroid& m_;
  const Matroid& n_;
  std::vector<Signature> sig_m_;
  std::vector<Signature> sig_n_;
  std::vector<std::vector<ElementSet>> completed_at_;
  std::vector<Element> image_;
  ElementSet used_;
};

}  // namespace

std::optional<std::vector<Element>> isomorphic(const Matroid& m, const Matroid& n) {
  if (m.size() != n.size() || m.circuits().size() != n.circuits().size()) return std::nullopt;
  if (circuit_sizes(m) != circuit_sizes(n)) return std::nullopt;
  // An injective map sending every circuit of M to a circuit of N is onto
  // C(N) because both families have the same number of members.
  return IsomorphismSearch(m, n).run();
}

}  // namespace mhom
