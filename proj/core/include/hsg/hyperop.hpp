#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hsg/element_set.hpp"

namespace hsg {

class HypergroupoidEnumerator;

// A hyperoperation on a finite carrier: an order x order table whose cell
// (a, b) is the nonempty set a o b. Rows are left operands, columns right
// operands. Immutable once built.
class HyperOp {
 public:
  // `cells` is row-major, length order*order. Every cell must be nonempty and
  // lie inside the carrier.
  HyperOp(std::size_t order, std::vector<ElementSet> cells);

  static HyperOp from_function(
      std::size_t order,
      const std::function<ElementSet(Element, Element)>& cell_of);

  std::size_t order() const noexcept { return order_; }
  Carrier carrier() const { return Carrier{order_}; }

  // Unchecked access; a and b must be < order().
  ElementSet cell(Element a, Element b) const noexcept {
    return cells_[a * order_ + b];
  }

  std::span<const ElementSet> cells() const noexcept { return cells_; }

  friend bool operator==(const HyperOp&, const HyperOp&) = default;

 private:
  friend class HypergroupoidEnumerator;

  std::size_t order_;
  std::vector<ElementSet> cells_;
};

// a o b, with bounds checking.
ElementSet hyper_product(const HyperOp& h, Element a, Element b);

// A * B: the union of a o b over a in A, b in B. Empty if either side is
// empty.
ElementSet set_product(const HyperOp& h, ElementSet lhs, ElementSet rhs);

// (x o y) * {z} == {x} * (y o z) for every triple.
bool is_hypersemigroup(const HyperOp& h);

// Left-to-right fold of set_product over the factors.
ElementSet n_fold_product(const HyperOp& h, std::span<const ElementSet> factors);
ElementSet n_fold_product(const HyperOp& h,
                          std::initializer_list<ElementSet> factors);

// Small named tables used throughout tests, fixtures and the CLI.
namespace tables {

// x o y = {x}
HyperOp left_zero(std::size_t order);
// x o y = {y}
HyperOp right_zero(std::size_t order);
// x o y = carrier
HyperOp full(std::size_t order);
// x o y = {value}
HyperOp constant(std::size_t order, Element value = 0);

}  // namespace tables

}  // namespace hsg
