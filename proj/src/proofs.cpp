#include "rkit/proofs.hpp"

#include <limits>
#include <map>
#include <stdexcept>

#include "rkit/errors.hpp"

namespace rkit {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base)
            throw std::overflow_error("induced color count does not fit in 64 bits");
        result *= base;
    }
    return result;
}

std::map<Morphism, int> index_of(const std::vector<Morphism>& morphisms) {
    std::map<Morphism, int> index;
    for (int i = 0; i < static_cast<int>(morphisms.size()); ++i)
        index.emplace(morphisms[i], i);
    return index;
}

void check_coloring_range(const std::vector<int>& coloring, std::size_t domain,
                          std::uint64_t k) {
    if (coloring.size() != domain)
        throw std::invalid_argument("coloring does not cover the hom-set");
    for (int c : coloring)
        if (c < 1 || static_cast<std::uint64_t>(c) > k)
            throw std::invalid_argument("color value out of range");
}

} // namespace

ProductWitness product_witness(const Category& factor1, const Object& a1, const Object& c1,
                               std::uint64_t k, const Object& a2, const Object& b2,
                               const WitnessOracle& factor2_oracle) {
    const std::uint64_t t = factor1.hom(a1, c1).size();
    const std::uint64_t colors = checked_power(k, t);
    const std::optional<Object> c2 = factor2_oracle(a2, b2, colors);
    if (!c2)
        throw std::runtime_error("second-factor witness oracle came back empty");
    return ProductWitness{Object::pair(c1, *c2), t, colors};
}

ProductExtract product_mono_extract(const Category& factor1, const Category& factor2,
                                    const Object& a1, const Object& b1, const Object& c1,
                                    const Object& a2, const Object& b2, const Object& c2,
                                    const std::vector<int>& coloring, std::uint64_t k) {
    const auto hom_a1c1 = factor1.hom(a1, c1);
    const auto hom_a2c2 = factor2.hom(a2, c2);
    const auto hom_a1b1 = factor1.hom(a1, b1);
    const auto hom_a2b2 = factor2.hom(a2, b2);
    const auto hom_b1c1 = factor1.hom(b1, c1);
    const auto hom_b2c2 = factor2.hom(b2, c2);

    if (hom_a1b1.empty() || hom_a2b2.empty())
        throw std::invalid_argument("extraction needs copies of a inside b in both factors");
    check_coloring_range(coloring, hom_a1c1.size() * hom_a2c2.size(), k);

    const auto idx1 = index_of(hom_a1c1);
    const auto idx2 = index_of(hom_a2c2);
    const auto chi = [&](int i1, int i2) {
        return coloring[static_cast<std::size_t>(i1) * hom_a2c2.size() + i2];
    };

    // Tuple coloring of the second factor: one color per first-factor vertex.
    const auto tuple_of = [&](int i2) {
        std::vector<int> tuple(hom_a1c1.size());
        for (std::size_t i1 = 0; i1 < hom_a1c1.size(); ++i1)
            tuple[i1] = chi(static_cast<int>(i1), i2);
        return tuple;
    };

    int w2_index = -1;
    for (std::size_t w = 0; w < hom_b2c2.size(); ++w) {
        std::vector<int> reference;
        bool mono = true;
        for (const Morphism& u2 : hom_a2b2) {
            const int e2 = idx2.at(factor2.compose(hom_b2c2[w], u2));
            std::vector<int> tuple = tuple_of(e2);
            if (reference.empty())
                reference = std::move(tuple);
            else if (tuple != reference) {
                mono = false;
                break;
            }
        }
        if (mono) {
            w2_index = static_cast<int>(w);
            break;
        }
    }
    if (w2_index < 0)
        throw invariant_violation("no tuple-monochromatic copy in the second factor: "
                                  "the input witness is not certified");
    const Morphism& w2 = hom_b2c2[w2_index];

    // Collapse to a first-factor coloring through any copy in w2's image;
    // independence of the choice is what tuple-monochromaticity bought us.
    const int base_e2 = idx2.at(factor2.compose(w2, hom_a2b2[0]));
    for (const Morphism& u2 : hom_a2b2) {
        const int e2 = idx2.at(factor2.compose(w2, u2));
        for (std::size_t i1 = 0; i1 < hom_a1c1.size(); ++i1)
            if (chi(static_cast<int>(i1), e2) != chi(static_cast<int>(i1), base_e2))
                throw invariant_violation("collapsed coloring depends on the chosen copy");
    }

    int w1_index = -1;
    int color = 0;
    for (std::size_t w = 0; w < hom_b1c1.size(); ++w) {
        int reference = 0;
        bool mono = true;
        for (const Morphism& u1 : hom_a1b1) {
            const int e1 = idx1.at(factor1.compose(hom_b1c1[w], u1));
            const int c = chi(e1, base_e2);
            if (reference == 0)
                reference = c;
            else if (c != reference) {
                mono = false;
                break;
            }
        }
        if (mono) {
            w1_index = static_cast<int>(w);
            color = reference;
            break;
        }
    }
    if (w1_index < 0)
        throw invariant_violation("no monochromatic copy in the first factor: "
                                  "the input witness is not certified");
    const Morphism& w1 = hom_b1c1[w1_index];

    for (const Morphism& u1 : hom_a1b1)
        for (const Morphism& u2 : hom_a2b2) {
            const int e1 = idx1.at(factor1.compose(w1, u1));
            const int e2 = idx2.at(factor2.compose(w2, u2));
            if (chi(e1, e2) != color)
                throw invariant_violation("combined copy is not monochromatic");
        }

    return ProductExtract{w1, w2, color};
}

TransferExtract transfer_mono_extract(const TransferData& data,
                                      const std::vector<int>& coloring, std::uint64_t k) {
    const Category& host = *data.host;
    if (data.legs.size() != data.hom_bc.size())
        throw std::invalid_argument("one cocone leg per ambient copy is required");
    check_coloring_range(coloring, data.sub_hom_ad.size(), k);

    const auto idx_ac = index_of(data.hom_ac);
    const auto idx_ad = index_of(data.sub_hom_ad);
    const auto idx_ab = index_of(data.hom_ab);
    for (const Morphism& u : data.sub_hom_ab)
        if (!idx_ab.count(u))
            throw std::invalid_argument("subcategory hom-set escapes the ambient one");

    // Pull the coloring back along the cocone; 0 marks "not reached", which
    // lands in color 1.  Any disagreement between two routes to the same
    // ambient copy signals a non-monic host or a non-commuting cocone.
    std::vector<int> induced(data.hom_ac.size(), 0);
    for (std::size_t s = 0; s < data.hom_bc.size(); ++s)
        for (const Morphism& u : data.sub_hom_ab) {
            const auto it = idx_ac.find(host.compose(data.hom_bc[s], u));
            if (it == idx_ac.end())
                throw invariant_violation("composite escaped the ambient hom-set");
            const auto leg_it = idx_ad.find(host.compose(data.legs[s], u));
            if (leg_it == idx_ad.end())
                throw invariant_violation("cocone leg composite is not a subcategory morphism");
            const int value = coloring[leg_it->second];
            int& slot = induced[it->second];
            if (slot == 0)
                slot = value;
            else if (slot != value)
                throw invariant_violation("pulled-back color classes intersect");
        }
    for (int& c : induced)
        if (c == 0)
            c = 1;

    int leg_index = -1;
    int color = 0;
    for (std::size_t s = 0; s < data.hom_bc.size(); ++s) {
        int reference = 0;
        bool mono = true;
        for (const Morphism& u : data.hom_ab) {
            const int c = induced[idx_ac.at(host.compose(data.hom_bc[s], u))];
            if (reference == 0)
                reference = c;
            else if (c != reference) {
                mono = false;
                break;
            }
        }
        if (mono) {
            leg_index = static_cast<int>(s);
            color = reference == 0 ? 1 : reference;
            break;
        }
    }
    if (leg_index < 0)
        throw invariant_violation("no monochromatic ambient copy: the ambient object "
                                  "does not witness the arrow");

    for (const Morphism& u : data.sub_hom_ab)
        if (coloring[idx_ad.at(host.compose(data.legs[leg_index], u))] != color)
            throw invariant_violation("extracted leg is not monochromatic in the subcategory");

    return TransferExtract{leg_index, color, std::move(induced)};
}

MergedCocone merge_cocone(const Permutation& top, int first_carrier, int second_carrier,
                          const std::vector<DoubleOrderLeg>& legs,
                          const std::vector<DoubleOrderBottom>& bottoms) {
    if (legs.empty())
        throw std::invalid_argument("a cocone needs at least one leg");
    const int nb = top.size;
    for (const auto& leg : legs) {
        if (leg.first.dom_size != first_carrier || leg.first.cod_size != nb ||
            leg.second.dom_size != second_carrier || leg.second.cod_size != nb)
            throw std::invalid_argument("cocone leg carriers do not match the apex and top");
    }

    const auto compose_into = [](const std::vector<int>& outer, const std::vector<int>& inner) {
        std::vector<int> out(inner.size());
        for (std::size_t x = 0; x < inner.size(); ++x)
            out[x] = outer[inner[x]];
        return out;
    };

    for (const auto& b : bottoms) {
        if (!(b.u.dom == top) || !(b.v.dom == top) || !(b.u.cod == b.v.cod))
            throw std::invalid_argument("diagram arrows do not fit the top object");
        if (b.i == b.j || b.i < 0 || b.j < 0 || b.i >= static_cast<int>(legs.size()) ||
            b.j >= static_cast<int>(legs.size()))
            throw std::invalid_argument("diagram node indices out of range");
        if (compose_into(b.u.image, legs[b.i].first.image) !=
                compose_into(b.v.image, legs[b.j].first.image) ||
            compose_into(b.u.second_view(), legs[b.i].second.image) !=
                compose_into(b.v.second_view(), legs[b.j].second.image))
            throw std::invalid_argument("input cocone does not commute over the diagram");
    }

    // Apex: first order runs the first carrier then the second, the second
    // order runs them the other way around.
    const TaggedOrder first_order =
        concat(tagged_chain(0, first_carrier), tagged_chain(1, second_carrier));
    const TaggedOrder second_order =
        concat(tagged_chain(1, second_carrier), tagged_chain(0, first_carrier));
    const auto label = [&](const TaggedElem& e) {
        return e.tag == 0 ? e.elem : first_carrier + e.elem;
    };
    std::vector<int> order2(second_order.size());
    for (std::size_t p = 0; p < second_order.size(); ++p)
        order2[p] = label(second_order[p]);
    (void)first_order; // the labeling above is exactly its position map
    Permutation apex(std::move(order2));

    MergedCocone merged{apex, {}};
    merged.legs.reserve(legs.size());
    for (const auto& leg : legs) {
        std::vector<int> image(apex.size);
        for (int x = 0; x < first_carrier; ++x)
            image[x] = leg.first.image[x];
        for (int y = 0; y < second_carrier; ++y)
            image[first_carrier + y] = top.order2[leg.second.image[y]];
        try {
            merged.legs.emplace_back(apex, top, std::move(image));
        } catch (const std::invalid_argument& e) {
            throw invariant_violation(std::string("merged leg failed rigidity: ") + e.what());
        }
    }

    for (const auto& b : bottoms)
        if (!(compose(b.u, merged.legs[b.i]) == compose(b.v, merged.legs[b.j])))
            throw invariant_violation("merged cocone does not commute over the diagram");

    return merged;
}

} // namespace rkit
