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

#ifndef SUBMAX_ELEMENT_SET_H_
#define SUBMAX_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace submax {

// Ground sets are capped at 64 elements (real plus dummy) so that every
// subset fits in one machine word.
inline constexpr int kMaxGroundSize = 64;

// A subset of the ground set {0, ..., n-1}, stored as a bitmask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= Bit(e);
  }

  static constexpr ElementSet Range(int begin, int end) {
    ElementSet s;
    for (int e = begin; e < end; ++e) s.bits_ |= Bit(e);
    return s;
  }
  static constexpr ElementSet Prefix(int n) { return Range(0, n); }
  static ElementSet FromVector(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.bits_ |= Bit(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool IsSubsetOf(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr ElementSet With(int e) const { return ElementSet(bits_ | Bit(e)); }
  constexpr ElementSet Without(int e) const {
    return ElementSet(bits_ & ~Bit(e));
  }
  constexpr void insert(int e) { bits_ |= Bit(e); }
  constexpr void erase(int e) { bits_ &= ~Bit(e); }

  // Lowest member, or -1 when empty.
  constexpr int front() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  std::vector<int> ToVector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int e : *this) out.push_back(e);
    return out;
  }
  std::string ToString() const;

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const ElementSet&) const = default;

  // Iterates members in ascending order.
  class Iterator {
   public:
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

 private:
  static constexpr std::uint64_t Bit(int e) { return std::uint64_t{1} << e; }

  std::uint64_t bits_ = 0;
};

// Calls visit(S) for every subset S of `mask`, in ascending bitmask order.
template <typename Visitor>
void ForEachSubset(ElementSet mask, Visitor&& visit) {
  const std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    visit(ElementSet(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

}  // namespace submax

#endif  // SUBMAX_ELEMENT_SET_H_
