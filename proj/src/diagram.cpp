#include "rkit/diagram.hpp"

#include <stdexcept>

#include "rkit/errors.hpp"

namespace rkit {

BinaryDiagram build_binary_diagram(const Category& host,
                                   const Object& bottom_object,
                                   const Object& top_object,
                                   const std::vector<Morphism>& hom_bc,
                                   const std::vector<Morphism>& sub_hom_ab) {
    BinaryDiagram d;
    d.bottom_object = bottom_object;
    d.top_object = top_object;
    d.top_count = static_cast<int>(hom_bc.size());

    const int n = d.top_count;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            for (const Morphism& u : sub_hom_ab) {
                const Morphism left = host.compose(hom_bc[i], u);
                for (const Morphism& v : sub_hom_ab)
                    if (left == host.compose(hom_bc[j], v))
                        d.bottoms.push_back(BinaryDiagram::Bottom{u, v, i, j});
            }
        }

    for (const auto& b : d.bottoms)
        if (!(host.compose(hom_bc[b.i], b.u) == host.compose(hom_bc[b.j], b.v)))
            throw invariant_violation("binary diagram node violates its defining equation");
    return d;
}

bool check_cocone(const Category& host, const BinaryDiagram& diagram, const Cocone& cocone) {
    if (static_cast<int>(cocone.legs.size()) != diagram.top_count)
        throw std::invalid_argument("cocone leg count must match the diagram's top row");
    for (const auto& b : diagram.bottoms)
        if (!(host.compose(cocone.legs[b.i], b.u) == host.compose(cocone.legs[b.j], b.v)))
            return false;
    return true;
}

} // namespace rkit
