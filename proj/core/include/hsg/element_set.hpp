#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "hsg/errors.hpp"

namespace hsg {

using Element = std::size_t;

// Carriers are capped so that every subset fits in one machine word.
inline constexpr std::size_t kMaxOrder = 16;

// The finite carrier {0, ..., order-1}.
class Carrier {
 public:
  explicit Carrier(std::size_t order) : order_(order) {
    if (order == 0 || order > kMaxOrder) {
      throw InputError("carrier order must be in 1.." +
                       std::to_string(kMaxOrder) + ", got " +
                       std::to_string(order));
    }
  }

  std::size_t order() const noexcept { return order_; }

  void check(Element x) const {
    if (x >= order_) {
      throw InputError("element out of range: " + std::to_string(x) +
                       " >= order " + std::to_string(order_));
    }
  }

  friend bool operator==(Carrier, Carrier) = default;

 private:
  std::size_t order_;
};

// A subset of a carrier, stored as a bitmask (bit x set <=> x is a member).
class ElementSet {
 public:
  using Mask = std::uint32_t;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    explicit const_iterator(Mask rest) : rest_(rest) {}

    Element operator*() const noexcept {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    const_iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const_iterator, const_iterator) = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ElementSet() = default;

  ElementSet(std::initializer_list<Element> members) {
    for (Element x : members) insert(x);
  }

  static constexpr ElementSet from_mask(Mask mask) noexcept {
    ElementSet s;
    s.mask_ = mask;
    return s;
  }

  static ElementSet singleton(Element x) {
    ElementSet s;
    s.insert(x);
    return s;
  }

  // The whole carrier of the given order.
  static ElementSet full(std::size_t order) {
    const Carrier carrier{order};
    return from_mask((Mask{1} << carrier.order()) - 1);
  }

  constexpr Mask mask() const noexcept { return mask_; }

  bool contains(Element x) const noexcept {
    return x < kMaxOrder && ((mask_ >> x) & 1U) != 0;
  }

  void insert(Element x) {
    if (x >= kMaxOrder) {
      throw InputError("element out of range: " + std::to_string(x));
    }
    mask_ |= Mask{1} << x;
  }

  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  // True iff every member is < order.
  bool within(std::size_t order) const noexcept {
    return order >= 32 || (mask_ >> order) == 0;
  }

  bool subset_of(ElementSet other) const noexcept {
    return (mask_ & ~other.mask_) == 0;
  }

  const_iterator begin() const noexcept { return const_iterator{mask_}; }
  const_iterator end() const noexcept { return const_iterator{0}; }

  std::vector<Element> members() const { return {begin(), end()}; }

  ElementSet& operator|=(ElementSet other) noexcept {
    mask_ |= other.mask_;
    return *this;
  }
  ElementSet& operator&=(ElementSet other) noexcept {
    mask_ &= other.mask_;
    return *this;
  }
  friend ElementSet operator|(ElementSet a, ElementSet b) noexcept {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, ElementSet b) noexcept {
    return a &= b;
  }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  Mask mask_ = 0;
};

}  // namespace hsg
