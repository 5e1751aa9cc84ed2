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

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace delegation_lab {

using ElementIndex = std::size_t;

// A subset of element indices {0, ..., 63}, stored as a bitmask.
class ElementSet {
 public:
  static constexpr std::size_t kMaxElements = 64;

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }

  static constexpr ElementSet first_n(std::size_t n) {
    return ElementSet(n >= kMaxElements ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static ElementSet of(std::initializer_list<ElementIndex> elements) {
    ElementSet s;
    for (ElementIndex e : elements) s.insert(e);
    return s;
  }

  static ElementSet of(const std::vector<ElementIndex>& elements) {
    ElementSet s;
    for (ElementIndex e : elements) s.insert(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(ElementIndex e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(ElementIndex e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(ElementIndex e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr ElementSet with(ElementIndex e) const {
    return ElementSet(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(ElementIndex e) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }

  std::vector<ElementIndex> to_vector() const {
    std::vector<ElementIndex> out;
    out.reserve(size());
    for_each([&](ElementIndex e) { out.push_back(e); });
    return out;
  }

  // Ascending element order.
  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t rest = bits_;
    while (rest != 0) {
      f(static_cast<ElementIndex>(std::countr_zero(rest)));
      rest &= rest - 1;
    }
  }

  // Every subset of *this, including the empty set and *this itself.
  template <typename F>
  void for_each_subset(F&& f) const {
    std::uint64_t sub = 0;
    while (true) {
      f(ElementSet(sub));
      if (sub == bits_) break;
      sub = (sub - bits_) & bits_;
    }
  }

  constexpr auto operator<=>(const ElementSet&) const = default;

 private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

// Orders sets by their sorted element lists, lexicographically; a proper
// prefix sorts first, so the empty set is smallest.
inline bool lexicographically_less(ElementSet a, ElementSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int lx = std::countr_zero(x);
    int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace delegation_lab
