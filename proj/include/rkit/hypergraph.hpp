#pragma once

#include <vector>

#include "rkit/category.hpp"

namespace rkit {

/// Copies-of-A hypergraph for an arrow query: vertices are hom(A,C), and each
/// w in hom(B,C) contributes the edge {w . u : u in hom(A,B)}.
struct CopyHypergraph {
    std::vector<Morphism> vertices;       // hom(A,C), canonical order
    std::vector<Morphism> copies;         // hom(B,C), canonical order
    std::vector<std::vector<int>> edges;  // per copy: sorted distinct vertex ids
};

CopyHypergraph build_copy_hypergraph(const Category& host, const Object& a,
                                     const Object& b, const Object& c);

} // namespace rkit
