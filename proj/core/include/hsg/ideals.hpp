#pragma once

#include "hsg/fuzzy.hpp"
#include "hsg/hyperop.hpp"

namespace hsg {

// f(u) >= f(x) whenever u in x o y.
bool is_fuzzy_right_ideal(const HyperOp& h, const FuzzySubset& f);

// f(u) >= f(y) whenever u in x o y.
bool is_fuzzy_left_ideal(const HyperOp& h, const FuzzySubset& f);

// Least fixpoint of g -> max(g, g o 1) above f: the smallest fuzzy right
// ideal containing f. Values never leave values(f) u {0} and only increase,
// so the iteration terminates.
FuzzySubset right_ideal_closure(const HyperOp& h, const FuzzySubset& f);

// Mirror of right_ideal_closure with 1 o g.
FuzzySubset left_ideal_closure(const HyperOp& h, const FuzzySubset& f);

// Whether meet(f, g) == f o g for a fuzzy right ideal f and fuzzy left ideal
// g of a regular hypersemigroup h.
//
// Throws NotHypersemigroupError / NotRegularError when h is outside the
// domain, and NotIdealError when f or g is not the required kind of ideal.
bool check_meet_identity(const HyperOp& h, const FuzzySubset& f,
                         const FuzzySubset& g);

}  // namespace hsg
