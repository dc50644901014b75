#include "hsg/hyperop.hpp"

#include <string>

namespace hsg {

namespace {

void check_within(const HyperOp& h, ElementSet s) {
  if (!s.within(h.order())) {
    throw InputError("element set has members outside carrier of order " +
                     std::to_string(h.order()));
  }
}

ElementSet product_unchecked(const HyperOp& h, ElementSet lhs,
                             ElementSet rhs) {
  ElementSet out;
  for (Element a : lhs) {
    for (Element b : rhs) out |= h.cell(a, b);
  }
  return out;
}

}  // namespace

HyperOp::HyperOp(std::size_t order, std::vector<ElementSet> cells)
    : order_(Carrier{order}.order()), cells_(std::move(cells)) {
  if (cells_.size() != order_ * order_) {
    throw InputError("expected " + std::to_string(order_ * order_) +
                     " cells, got " + std::to_string(cells_.size()));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    const auto row = std::to_string(i / order_);
    const auto col = std::to_string(i % order_);
    if (cells_[i].empty()) {
      throw InputError("empty hyperproduct at (" + row + "," + col + ")");
    }
    if (!cells_[i].within(order_)) {
      throw InputError("element out of range in cell (" + row + "," + col +
                       ")");
    }
  }
}

HyperOp HyperOp::from_function(
    std::size_t order,
    const std::function<ElementSet(Element, Element)>& cell_of) {
  std::vector<ElementSet> cells;
  cells.reserve(order * order);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) cells.push_back(cell_of(a, b));
  }
  return HyperOp(order, std::move(cells));
}

ElementSet hyper_product(const HyperOp& h, Element a, Element b) {
  const auto carrier = h.carrier();
  carrier.check(a);
  carrier.check(b);
  return h.cell(a, b);
}

ElementSet set_product(const HyperOp& h, ElementSet lhs, ElementSet rhs) {
  check_within(h, lhs);
  check_within(h, rhs);
  return product_unchecked(h, lhs, rhs);
}

bool is_hypersemigroup(const HyperOp& h) {
  const std::size_t n = h.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const ElementSet xy = h.cell(x, y);
      for (Element z = 0; z < n; ++z) {
        const ElementSet left = product_unchecked(h, xy, ElementSet::singleton(z));
        const ElementSet right =
            product_unchecked(h, ElementSet::singleton(x), h.cell(y, z));
        if (left != right) return false;
      }
    }
  }
  return true;
}

ElementSet n_fold_product(const HyperOp& h,
                          std::span<const ElementSet> factors) {
  if (factors.empty()) throw InputError("n_fold_product needs a factor");
  check_within(h, factors.front());
  ElementSet acc = factors.front();
  for (const ElementSet& next : factors.subspan(1)) {
    check_within(h, next);
    acc = product_unchecked(h, acc, next);
  }
  return acc;
}

ElementSet n_fold_product(const HyperOp& h,
                          std::initializer_list<ElementSet> factors) {
  return n_fold_product(h, std::span<const ElementSet>(factors.begin(),
                                                       factors.size()));
}

namespace tables {

HyperOp left_zero(std::size_t order) {
  return HyperOp::from_function(
      order, [](Element x, Element) { return ElementSet::singleton(x); });
}

HyperOp right_zero(std::size_t order) {
  return HyperOp::from_function(
      order, [](Element, Element y) { return ElementSet::singleton(y); });
}

HyperOp full(std::size_t order) {
  const ElementSet all = ElementSet::full(order);
  return HyperOp::from_function(order,
                                [all](Element, Element) { return all; });
}

HyperOp constant(std::size_t order, Element value) {
  Carrier{order}.check(value);
  return HyperOp::from_function(order, [value](Element, Element) {
    return ElementSet::singleton(value);
  });
}

}  // namespace tables

}  // namespace hsg
