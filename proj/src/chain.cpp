#include "rkit/chain.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rkit {

Chain::Chain(int n, std::optional<std::vector<std::string>> lbls)
    : size(n), labels(std::move(lbls)) {
    if (size < 1)
        throw std::invalid_argument("chain size must be at least 1");
    if (labels) {
        if (static_cast<int>(labels->size()) != size)
            throw std::invalid_argument("label count must equal chain size");
        std::set<std::string> distinct(labels->begin(), labels->end());
        if (static_cast<int>(distinct.size()) != size)
            throw std::invalid_argument("labels must be pairwise distinct");
    }
}

namespace {

void check_total_map(const std::vector<int>& image, int dom, int cod) {
    if (dom < 1 || cod < 1)
        throw std::invalid_argument("chain sizes must be at least 1");
    if (static_cast<int>(image.size()) != dom)
        throw std::invalid_argument("image length must equal domain size");
    for (int v : image)
        if (v < 0 || v >= cod)
            throw std::invalid_argument("image value out of codomain range");
}

} // namespace

Embedding::Embedding(int dom, int cod, std::vector<int> img)
    : dom_size(dom), cod_size(cod), image(std::move(img)) {
    check_total_map(image, dom_size, cod_size);
    for (int i = 1; i < dom_size; ++i)
        if (image[i - 1] >= image[i])
            throw std::invalid_argument("embedding image must be strictly increasing");
}

Embedding Embedding::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Embedding(n, n, std::move(img));
}

RigidSurjection::RigidSurjection(int dom, int cod, std::vector<int> img)
    : dom_size(dom), cod_size(cod), image(std::move(img)) {
    check_total_map(image, dom_size, cod_size);
    if (!is_surjective(image, cod_size))
        throw std::invalid_argument("map is not surjective");
    if (!rigid_by_min_preimage(image, cod_size))
        throw std::invalid_argument("surjection is not rigid");
}

RigidSurjection RigidSurjection::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return RigidSurjection(n, n, std::move(img));
}

bool is_surjective(const std::vector<int>& image, int cod_size) {
    std::vector<char> seen(cod_size, 0);
    for (int v : image)
        if (v >= 0 && v < cod_size)
            seen[v] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

bool rigid_by_min_preimage(const std::vector<int>& image, int cod_size) {
    // With the canonical domain the minimum of a fiber is its first index.
    std::vector<int> first(cod_size, -1);
    for (int i = 0; i < static_cast<int>(image.size()); ++i)
        if (first[image[i]] < 0)
            first[image[i]] = i;
    for (int v = 1; v < cod_size; ++v)
        if (first[v - 1] > first[v])
            return false;
    return true;
}

bool rigid_by_initial_segments(const std::vector<int>& image, int cod_size) {
    std::vector<char> seen(cod_size, 0);
    int count = 0;
    int maxv = -1;
    for (int v : image) {
        if (!seen[v]) {
            seen[v] = 1;
            ++count;
            maxv = std::max(maxv, v);
        }
        if (maxv != count - 1)
            return false;
    }
    return true;
}

bool is_rigid(const std::vector<int>& image, int cod_size) {
    if (!is_surjective(image, cod_size))
        throw std::invalid_argument("is_rigid requires a surjective map");
    return rigid_by_min_preimage(image, cod_size);
}

namespace {

std::vector<int> compose_images(const std::vector<int>& g, const std::vector<int>& f) {
    std::vector<int> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = g[f[i]];
    return out;
}

} // namespace

Embedding compose(const Embedding& g, const Embedding& f) {
    if (f.cod_size != g.dom_size)
        throw std::invalid_argument("embedding composition size mismatch");
    return Embedding(f.dom_size, g.cod_size, compose_images(g.image, f.image));
}

RigidSurjection compose(const RigidSurjection& g, const RigidSurjection& f) {
    if (f.cod_size != g.dom_size)
        throw std::invalid_argument("rigid surjection composition size mismatch");
    return RigidSurjection(f.dom_size, g.cod_size, compose_images(g.image, f.image));
}

std::vector<Embedding> enumerate_embeddings(int dom_size, int cod_size) {
    std::vector<Embedding> out;
    if (dom_size < 1 || cod_size < 1 || dom_size > cod_size)
        return out;
    std::vector<int> img(dom_size);
    auto rec = [&](auto&& self, int pos, int next) -> void {
        if (pos == dom_size) {
            out.emplace_back(dom_size, cod_size, img);
            return;
        }
        for (int v = next; v <= cod_size - (dom_size - pos); ++v) {
            img[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::vector<RigidSurjection> enumerate_rigid_surjections(int dom_size, int cod_size) {
    std::vector<RigidSurjection> out;
    if (dom_size < 1 || cod_size < 1 || dom_size < cod_size)
        return out;
    // Rigid surjections onto the canonical codomain are exactly the
    // restricted growth strings using all of 0..cod_size-1.
    std::vector<int> img(dom_size);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == dom_size) {
            out.emplace_back(dom_size, cod_size, img);
            return;
        }
        const int hi = std::min(used, cod_size - 1);
        for (int v = 0; v <= hi; ++v) {
            const int next_used = used + (v == used ? 1 : 0);
            if (cod_size - next_used > dom_size - pos - 1)
                continue; // not enough positions left for the unused values
            img[pos] = v;
            self(self, pos + 1, next_used);
        }
    };
    rec(rec, 0, 0);
    return out;
}

ChainPartition::ChainPartition(int ground, std::vector<std::vector<int>> blks)
    : ground_size(ground), blocks(std::move(blks)) {
    if (ground_size < 1)
        throw std::invalid_argument("partition ground size must be at least 1");
    if (blocks.empty())
        throw std::invalid_argument("partition must have at least one block");
    std::vector<char> seen(ground_size, 0);
    int covered = 0;
    for (auto& block : blocks) {
        if (block.empty())
            throw std::invalid_argument("partition blocks must be nonempty");
        std::sort(block.begin(), block.end());
        for (int x : block) {
            if (x < 0 || x >= ground_size)
                throw std::invalid_argument("partition element out of range");
            if (seen[x])
                throw std::invalid_argument("partition blocks must be disjoint");
            seen[x] = 1;
            ++covered;
        }
    }
    if (covered != ground_size)
        throw std::invalid_argument("partition blocks must cover the ground set");
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
}

RigidSurjection to_rigid(const ChainPartition& p) {
    std::vector<int> img(p.ground_size);
    for (int b = 0; b < static_cast<int>(p.blocks.size()); ++b)
        for (int x : p.blocks[b])
            img[x] = b;
    return RigidSurjection(p.ground_size, static_cast<int>(p.blocks.size()), std::move(img));
}

ChainPartition to_partition(const RigidSurjection& f) {
    std::vector<std::vector<int>> blocks(f.cod_size);
    for (int x = 0; x < f.dom_size; ++x)
        blocks[f.image[x]].push_back(x);
    return ChainPartition(f.dom_size, std::move(blocks));
}

bool is_coarser(const ChainPartition& coarse, const ChainPartition& fine) {
    if (coarse.ground_size != fine.ground_size)
        throw std::invalid_argument("partitions live on different ground sets");
    std::vector<int> block_of(coarse.ground_size);
    for (int b = 0; b < static_cast<int>(coarse.blocks.size()); ++b)
        for (int x : coarse.blocks[b])
            block_of[x] = b;
    for (const auto& block : fine.blocks)
        for (int x : block)
            if (block_of[x] != block_of[block[0]])
                return false;
    return true;
}

TaggedOrder tagged_chain(int tag, int size) {
    if (size < 1)
        throw std::invalid_argument("tagged chain must be nonempty");
    TaggedOrder order(size);
    for (int i = 0; i < size; ++i)
        order[i] = TaggedElem{tag, i};
    return order;
}

TaggedOrder concat(const TaggedOrder& left, const TaggedOrder& right) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("concatenation requires nonempty orders");
    std::set<TaggedElem> carrier(left.begin(), left.end());
    if (carrier.size() != left.size())
        throw std::invalid_argument("left order repeats an element");
    for (const auto& e : right)
        if (!carrier.insert(e).second)
            throw std::invalid_argument("carriers overlap");
    if (carrier.size() != left.size() + right.size())
        throw std::invalid_argument("right order repeats an element");
    TaggedOrder out;
    out.reserve(left.size() + right.size());
    out.insert(out.end(), left.begin(), left.end());
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

} // namespace rkit
