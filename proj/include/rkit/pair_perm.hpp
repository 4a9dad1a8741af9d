#pragma once

#include <vector>

#include "rkit/category.hpp"

namespace rkit {

// A permutation, seen as a pair of chains over one carrier: the natural order
// and the second order, each canonicalized separately.
Object pair_of_chains(const Permutation& p);

// A quotient map as a pair morphism: its first-order reading together with
// its second-order reading.
Morphism to_pair_morphism(const QuotientMap& q);

// Inverse direction.  Throws when the second component is not the
// second-order reading of the first, or when the first component is not a
// quotient map between the given permutations.
QuotientMap from_pair_morphism(const Morphism& m, const Permutation& dom,
                               const Permutation& cod);

// The double-order sub-hom-set inside the opposite-product pair category,
// oriented the ambient way: arrows pair_of_chains(a) -> pair_of_chains(b)
// whose underlying functions are the quotient maps b onto a.
std::vector<Morphism> pair_sub_hom(const Permutation& a, const Permutation& b);

// The category of double orders: permutation objects, pair-morphism values.
// Isomorphic to perm-quo through to_pair_morphism / from_pair_morphism.
Category double_order_category();

} // namespace rkit
