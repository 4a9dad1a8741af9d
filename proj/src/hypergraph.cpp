#include "rkit/hypergraph.hpp"

#include <algorithm>
#include <map>

#include "rkit/errors.hpp"

namespace rkit {

CopyHypergraph build_copy_hypergraph(const Category& host, const Object& a,
                                     const Object& b, const Object& c) {
    CopyHypergraph h;
    h.vertices = host.hom(a, c);
    h.copies = host.hom(b, c);
    const std::vector<Morphism> hom_ab = host.hom(a, b);

    std::map<Morphism, int> index;
    for (int i = 0; i < static_cast<int>(h.vertices.size()); ++i)
        index.emplace(h.vertices[i], i);

    h.edges.reserve(h.copies.size());
    for (const Morphism& w : h.copies) {
        std::vector<int> edge;
        edge.reserve(hom_ab.size());
        for (const Morphism& u : hom_ab) {
            const auto it = index.find(host.compose(w, u));
            if (it == index.end())
                throw invariant_violation("composite fell outside the enumerated hom-set");
            edge.push_back(it->second);
        }
        std::sort(edge.begin(), edge.end());
        edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
        h.edges.push_back(std::move(edge));
    }
    return h;
}

} // namespace rkit
