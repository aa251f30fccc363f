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

#ifndef MHOM_ELEMENT_SET_HPP_
#define MHOM_ELEMENT_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mhom {

// Dense index of a ground-set element.
using Element = std::size_t;

inline constexpr std::size_t kMaxElements = 64;

// A subset of a ground set of at most kMaxElements elements, stored as a
// bitmask over dense element indices.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> elements) {
    for (Element e : elements) bits_ |= bit(e);
  }

  static constexpr ElementSet singleton(Element e) { return ElementSet(bit(e)); }
  // {0, ..., n-1}.
  static constexpr ElementSet full(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static ElementSet from_elements(const std::vector<Element>& elements) {
    ElementSet s;
    for (Element e : elements) s.bits_ |= bit(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(Element e) const {
    return e < kMaxElements && (bits_ & bit(e)) != 0;
  }
  // Smallest element; undefined on the empty set.
  constexpr Element front() const {
    return static_cast<Element>(std::countr_zero(bits_));
  }
  constexpr Element back() const {
    return static_cast<Element>(63 - std::countl_zero(bits_));
  }

  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_proper_subset_of(ElementSet other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr ElementSet with(Element e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(Element e) const {
    return ElementSet(bits_ & ~bit(e));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  // Symmetric difference.
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ ^ b.bits_);
  }
  ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator-=(ElementSet o) { bits_ &= ~o.bits_; return *this; }
  ElementSet& operator^=(ElementSet o) { bits_ ^= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  static constexpr std::uint64_t bit(Element e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

// Lexicographic comparison of the ascending element sequences of a and b,
// so {0,1,3} < {0,2} and {0,1} < {0,1,2}.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const Element m = static_cast<Element>(std::countr_zero(diff));
  const std::uint64_t above = m + 1 >= 64 ? 0 : ~((std::uint64_t{1} << (m + 1)) - 1);
  if (a.contains(m)) {
    // a continues with m; b continues with something larger, or ends.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

// Every subset of `of`, including the empty set and `of` itself, in
// increasing bitmask order.
template <typename Fn>
void for_each_subset(ElementSet of, Fn&& fn) {
  const std::uint64_t mask = of.bits();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == mask) break;
    sub = (sub - mask) & mask;
  }
}

}  // namespace mhom

template <>
struct std::hash<mhom::ElementSet> {
  std::size_t operator()(mhom::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // MHOM_ELEMENT_SET_HPP_
