#pragma once

#include <vector>

#include "rkit/category.hpp"

namespace rkit {

/// Two-row diagram: `top_count` copies of one object on top, and bottom nodes
/// each carrying two arrows (u into top i, v into top j, i != j) between
/// copies of another object.
struct BinaryDiagram {
    Object bottom_object;  // source object of all bottom arrows
    Object top_object;     // target object of all bottom arrows
    int top_count = 0;

    struct Bottom {
        Morphism u;  // arrow into top node i
        Morphism v;  // arrow into top node j
        int i = 0;
        int j = 0;
    };
    std::vector<Bottom> bottoms;
};

// Bottom nodes are exactly the quadruples (u, v, i, j) with i != j and
// hom_bc[i] . u == hom_bc[j] . v, for u, v drawn from the designated
// sub-hom-set.  The returned diagram therefore has a commuting cocone with
// apex behind hom_bc and legs hom_bc itself.
BinaryDiagram build_binary_diagram(const Category& host,
                                   const Object& bottom_object,
                                   const Object& top_object,
                                   const std::vector<Morphism>& hom_bc,
                                   const std::vector<Morphism>& sub_hom_ab);

/// Apex plus one leg per top node of a binary diagram.
struct Cocone {
    Object apex;
    std::vector<Morphism> legs;
};

// True when legs[i] . u == legs[j] . v for every bottom node.  Throws when
// the leg count does not match the diagram's top row.
bool check_cocone(const Category& host, const BinaryDiagram& diagram, const Cocone& cocone);

} // namespace rkit
