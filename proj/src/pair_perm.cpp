#include "rkit/pair_perm.hpp"

#include <numeric>
#include <stdexcept>

namespace rkit {

Object pair_of_chains(const Permutation& p) {
    return Object::pair(Object::chain(p.size), Object::chain(p.size));
}

Morphism to_pair_morphism(const QuotientMap& q) {
    return Morphism::pair(Morphism::seq(q.dom.size, q.cod.size, q.image),
                          Morphism::seq(q.dom.size, q.cod.size, q.second_view()));
}

QuotientMap from_pair_morphism(const Morphism& m, const Permutation& dom,
                               const Permutation& cod) {
    const auto& first = m.first().seq_value();
    const auto& second = m.second().seq_value();
    if (first.dom_size != dom.size || first.cod_size != cod.size)
        throw std::invalid_argument("first component does not fit the given carriers");
    QuotientMap q(dom, cod, first.image);
    if (second.dom_size != dom.size || second.cod_size != cod.size ||
        second.image != q.second_view())
        throw std::invalid_argument("pair components do not describe one quotient map");
    return q;
}

std::vector<Morphism> pair_sub_hom(const Permutation& a, const Permutation& b) {
    std::vector<Morphism> out;
    for (const auto& q : enumerate_quotient_maps(b, a))
        out.push_back(to_pair_morphism(q));
    return out;
}

Category double_order_category() {
    Category c;
    c.name = "double-order";
    c.shape = ObjectShape::perm();
    c.objects = [](int cap) {
        std::vector<Object> out;
        for (int n = 1; n <= cap; ++n)
            for (auto& p : enumerate_permutations(n))
                out.push_back(Object::perm(std::move(p)));
        return out;
    };
    c.hom = [](const Object& a, const Object& b) {
        std::vector<Morphism> out;
        for (const auto& q : enumerate_quotient_maps(a.perm_value(), b.perm_value()))
            out.push_back(to_pair_morphism(q));
        return out;
    };
    c.identity = [](const Object& a) {
        const int n = a.perm_value().size;
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        Morphism id = Morphism::seq(n, n, img);
        return Morphism::pair(id, id);
    };
    c.compose = [](const Morphism& g, const Morphism& f) {
        return Morphism::pair(compose_seq(g.first(), f.first()),
                              compose_seq(g.second(), f.second()));
    };
    return c;
}

} // namespace rkit
