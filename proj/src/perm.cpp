#include "rkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rkit/errors.hpp"

namespace rkit {

Permutation::Permutation(std::vector<int> second_order)
    : size(static_cast<int>(second_order.size())), order2(std::move(second_order)) {
    if (size < 1)
        throw std::invalid_argument("permutation must have at least one element");
    rank2.assign(size, -1);
    for (int p = 0; p < size; ++p) {
        const int x = order2[p];
        if (x < 0 || x >= size || rank2[x] >= 0)
            throw std::invalid_argument("second order must be a bijection of the carrier");
        rank2[x] = p;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    return Permutation(std::move(ord));
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<Permutation> out;
    if (n < 1)
        return out;
    std::vector<int> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    do {
        out.push_back(Permutation(ord));
    } while (std::next_permutation(ord.begin(), ord.end()));
    return out;
}

QuotientCheck check_quotient_map(const std::vector<int>& image,
                                 const Permutation& dom, const Permutation& cod) {
    if (static_cast<int>(image.size()) != dom.size)
        throw std::invalid_argument("image length must equal domain size");
    for (int v : image)
        if (v < 0 || v >= cod.size)
            throw std::invalid_argument("image value outside codomain carrier");

    QuotientCheck result;
    result.surjective = is_surjective(image, cod.size);
    if (!result.surjective)
        return result;
    result.first_rigid = rigid_by_min_preimage(image, cod.size);
    std::vector<int> second(dom.size);
    for (int p = 0; p < dom.size; ++p)
        second[p] = cod.rank2[image[dom.order2[p]]];
    result.second_rigid = rigid_by_min_preimage(second, cod.size);
    return result;
}

bool is_quotient_map(const std::vector<int>& image,
                     const Permutation& dom, const Permutation& cod) {
    return check_quotient_map(image, dom, cod).ok();
}

QuotientMap::QuotientMap(Permutation d, Permutation c, std::vector<int> img)
    : dom(std::move(d)), cod(std::move(c)), image(std::move(img)) {
    const QuotientCheck check = check_quotient_map(image, dom, cod);
    if (!check.surjective)
        throw std::invalid_argument("quotient map must be surjective");
    if (!check.first_rigid)
        throw std::invalid_argument("quotient map is not rigid w.r.t. the first orders");
    if (!check.second_rigid)
        throw std::invalid_argument("quotient map is not rigid w.r.t. the second orders");
}

QuotientMap QuotientMap::identity(const Permutation& p) {
    std::vector<int> img(p.size);
    std::iota(img.begin(), img.end(), 0);
    return QuotientMap(p, p, std::move(img));
}

std::vector<int> QuotientMap::second_view() const {
    std::vector<int> second(dom.size);
    for (int p = 0; p < dom.size; ++p)
        second[p] = cod.rank2[image[dom.order2[p]]];
    return second;
}

QuotientMap compose(const QuotientMap& g, const QuotientMap& f) {
    if (!(f.cod == g.dom))
        throw std::invalid_argument("quotient map composition requires matching middle object");
    std::vector<int> img(f.dom.size);
    for (int x = 0; x < f.dom.size; ++x)
        img[x] = g.image[f.image[x]];
    return QuotientMap(f.dom, g.cod, std::move(img));
}

std::vector<QuotientMap> enumerate_quotient_maps(const Permutation& dom,
                                                 const Permutation& cod) {
    std::vector<QuotientMap> out;
    const int n = dom.size;
    const int m = cod.size;
    if (n < m)
        return out;

    std::vector<int> img(n, -1);
    std::vector<int> second(n, -1);  // second view, filled as positions get values
    std::vector<char> seen2(m, 0);
    int filled = 0;   // length of the fully determined second-view prefix
    int count2 = 0;   // distinct second-view values inside that prefix

    // Incorporate newly determined second-view positions; fails as soon as the
    // checked prefix stops being an initial segment of the codomain.
    auto advance = [&](std::vector<int>& newly, int& old_filled) -> bool {
        old_filled = filled;
        while (filled < n && second[filled] >= 0) {
            const int val = second[filled];
            if (!seen2[val]) {
                if (val != count2)
                    return false;
                seen2[val] = 1;
                ++count2;
                newly.push_back(val);
            }
            ++filled;
        }
        return true;
    };

    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            out.emplace_back(dom, cod, img);
            return;
        }
        const int hi = std::min(used, m - 1);
        for (int v = 0; v <= hi; ++v) {
            const int next_used = used + (v == used ? 1 : 0);
            if (m - next_used > n - pos - 1)
                continue;
            img[pos] = v;
            const int p2 = dom.rank2[pos];
            second[p2] = cod.rank2[v];
            std::vector<int> newly;
            int old_filled = 0;
            const bool feasible = advance(newly, old_filled);
            if (feasible)
                self(self, pos + 1, next_used);
            for (int val : newly)
                seen2[val] = 0;
            count2 -= static_cast<int>(newly.size());
            filled = old_filled;
            second[p2] = -1;
            img[pos] = -1;
        }
    };
    rec(rec, 0, 0);
    return out;
}

MinBlockMap min_block_map(const ChainPartition& p) {
    std::vector<int> mins(p.ground_size);
    for (const auto& block : p.blocks)
        for (int x : block)
            mins[x] = block[0];
    return MinBlockMap{std::move(mins), to_rigid(p)};
}

QuotientResult quotient_by_partition(const Permutation& sigma, const ChainPartition& p) {
    if (p.ground_size != sigma.size)
        throw std::invalid_argument("partition ground set must match the permutation carrier");

    MinBlockMap mb = min_block_map(p);
    const int n = sigma.size;
    const int blocks = static_cast<int>(p.blocks.size());

    std::vector<int> intermediate(n);
    for (int pos = 0; pos < n; ++pos)
        intermediate[pos] = mb.block_min[sigma.order2[pos]];

    // Keep only the first occurrence of each block representative.
    std::vector<int> dedup;
    std::vector<char> taken(n, 0);
    for (int v : intermediate) {
        if (!taken[v]) {
            taken[v] = 1;
            dedup.push_back(v);
        }
    }
    if (static_cast<int>(dedup.size()) != blocks)
        throw invariant_violation("quotient lost a block representative");

    std::vector<int> carrier(blocks);
    for (int b = 0; b < blocks; ++b)
        carrier[b] = p.blocks[b][0];

    std::vector<int> quot_order2(blocks);
    for (int i = 0; i < blocks; ++i) {
        const auto it = std::lower_bound(carrier.begin(), carrier.end(), dedup[i]);
        quot_order2[i] = static_cast<int>(it - carrier.begin());
    }

    Permutation quotient(quot_order2);
    QuotientMap map(sigma, quotient, mb.canonical.image);

    return QuotientResult{std::move(mb.block_min), std::move(intermediate),
                          std::move(dedup),        std::move(carrier),
                          std::move(quotient),     std::move(map)};
}

} // namespace rkit
