#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rkit/arrow.hpp"
#include "rkit/diagram.hpp"
#include "rkit/pair_perm.hpp"

namespace rkit {

// ---------------------------------------------------------------------------
// Product combiner

using WitnessOracle =
    std::function<std::optional<Object>(const Object& a, const Object& b, std::uint64_t colors)>;

struct ProductWitness {
    Object witness;               // the pair (c1, c2)
    std::uint64_t hom_count = 0;  // |hom(a1, c1)|, the exponent source
    std::uint64_t factor2_colors = 0;
};

// Given a certified first-factor witness c1 for (a1, b1, k), asks the oracle
// for a second-factor witness at k^|hom(a1,c1)| colors and pairs the two.
// Throws when the color count overflows or the oracle comes back empty.
ProductWitness product_witness(const Category& factor1, const Object& a1, const Object& c1,
                               std::uint64_t k, const Object& a2, const Object& b2,
                               const WitnessOracle& factor2_oracle);

struct ProductExtract {
    Morphism w1;  // hom(b1, c1)
    Morphism w2;  // hom(b2, c2)
    int color = 0;
};

// Runs the induced-coloring argument for products: folds a k-coloring of
// hom((a1,a2),(c1,c2)) into a tuple coloring of the second factor, extracts a
// monochromatic second copy, collapses to a first-factor coloring, extracts
// again, and asserts the combined copy is monochromatic before returning.
// The coloring is indexed against the product hom enumeration (first factor
// major) with values 1..k.
ProductExtract product_mono_extract(const Category& factor1, const Category& factor2,
                                    const Object& a1, const Object& b1, const Object& c1,
                                    const Object& a2, const Object& b2, const Object& c2,
                                    const std::vector<int>& coloring, std::uint64_t k);

// ---------------------------------------------------------------------------
// Subcategory transfer

struct TransferData {
    const Category* host = nullptr;     // ambient category; all morphisms monic
    std::vector<Morphism> hom_ac;       // hom(a, c)
    std::vector<Morphism> hom_bc;       // hom(b, c): the diagram's top copies
    std::vector<Morphism> hom_ab;       // full ambient hom(a, b)
    std::vector<Morphism> sub_hom_ab;   // the subcategory's hom(a, b)
    std::vector<Morphism> legs;         // subcategory cocone legs, one per hom_bc entry
    std::vector<Morphism> sub_hom_ad;   // subcategory hom(a, apex): the coloring's domain
};

struct TransferExtract {
    int leg_index = 0;
    int color = 0;
    std::vector<int> induced;  // the pulled-back coloring on hom(a, c)
};

// Pulls a coloring of the subcategory hom(a, apex) back to the ambient
// hom(a, c) (leftovers to color 1), checks that the classes stay disjoint,
// scans for an ambient-monochromatic copy (one exists when c genuinely
// witnesses the ambient arrow) and asserts the matching cocone leg is
// monochromatic in the subcategory before returning it.
TransferExtract transfer_mono_extract(const TransferData& data,
                                      const std::vector<int>& coloring, std::uint64_t k);

// ---------------------------------------------------------------------------
// Double-order cocone merge

struct DoubleOrderLeg {
    RigidSurjection first;   // apex first chain  -> top's first order
    RigidSurjection second;  // apex second chain -> top's second order
};

struct DoubleOrderBottom {
    QuotientMap u;  // top -> bottom quotient map, arrow into top node i
    QuotientMap v;  // arrow into top node j
    int i = 0;
    int j = 0;
};

struct MergedCocone {
    Permutation apex;               // concatenated double order
    std::vector<QuotientMap> legs;  // one per input leg, onto `top`
};

// Merges a commuting pair-category cocone over a binary diagram of double
// orders into a double-order cocone: the apex concatenates the two carrier
// chains in opposite orders, and each leg acts piecewise through the pair
// legs.  Every produced leg is validated against both rigidity conditions
// and the merged cocone is re-checked for commutation.
MergedCocone merge_cocone(const Permutation& top, int first_carrier, int second_carrier,
                          const std::vector<DoubleOrderLeg>& legs,
                          const std::vector<DoubleOrderBottom>& bottoms);

} // namespace rkit
