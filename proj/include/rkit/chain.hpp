#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rkit {

/// Canonical finite chain: elements 0 < 1 < ... < size-1.  Labels are
/// cosmetic display aliases and never take part in identity or composition.
struct Chain {
    int size = 1;
    std::optional<std::vector<std::string>> labels;

    Chain() = default;
    explicit Chain(int n, std::optional<std::vector<std::string>> labels = std::nullopt);
};

/// Strictly increasing map between canonical chains.
struct Embedding {
    int dom_size = 0;
    int cod_size = 0;
    std::vector<int> image;

    Embedding(int dom, int cod, std::vector<int> img);
    static Embedding identity(int n);
    bool operator==(const Embedding&) const = default;
};

/// Surjection between canonical chains whose fiber minima increase with the
/// codomain order; equivalently, every initial segment of the domain maps
/// onto an initial segment of the codomain.
struct RigidSurjection {
    int dom_size = 0;
    int cod_size = 0;
    std::vector<int> image;

    RigidSurjection(int dom, int cod, std::vector<int> img);
    static RigidSurjection identity(int n);
    bool operator==(const RigidSurjection&) const = default;
};

bool is_surjective(const std::vector<int>& image, int cod_size);

// The two rigidity characterizations.  Both require a surjective input and
// are implemented independently so they can cross-check each other.
bool rigid_by_min_preimage(const std::vector<int>& image, int cod_size);
bool rigid_by_initial_segments(const std::vector<int>& image, int cod_size);

// Throws std::invalid_argument when the input is not surjective (a different
// failure than plain non-rigidity, which returns false).
bool is_rigid(const std::vector<int>& image, int cod_size);

// compose(g, f) applies f first: (g . f)(x) = g(f(x)).
Embedding compose(const Embedding& g, const Embedding& f);
RigidSurjection compose(const RigidSurjection& g, const RigidSurjection& f);

// All morphisms dom -> cod in lexicographic order of their image sequences.
std::vector<Embedding> enumerate_embeddings(int dom_size, int cod_size);
std::vector<RigidSurjection> enumerate_rigid_surjections(int dom_size, int cod_size);

/// Partition of {0..ground_size-1} into nonempty blocks.  Construction sorts
/// each block ascending and orders blocks by their minima.
struct ChainPartition {
    int ground_size = 0;
    std::vector<std::vector<int>> blocks;

    ChainPartition(int ground, std::vector<std::vector<int>> blks);
    bool operator==(const ChainPartition&) const = default;
};

// Mutually inverse: a partition corresponds to the rigid surjection sending
// each element to the index of its block in min-order.
RigidSurjection to_rigid(const ChainPartition& p);
ChainPartition to_partition(const RigidSurjection& f);

// True when every block of `fine` lies inside one block of `coarse`.
bool is_coarser(const ChainPartition& coarse, const ChainPartition& fine);

/// Element of a tagged disjoint union; tags realize carrier disjointness
/// without caller-side relabeling.
struct TaggedElem {
    int tag = 0;
    int elem = 0;
    auto operator<=>(const TaggedElem&) const = default;
};

/// A linear order given as the listing of its (tagged) elements.
using TaggedOrder = std::vector<TaggedElem>;

TaggedOrder tagged_chain(int tag, int size);

// Concatenated order: every element of `left` precedes every element of
// `right`, internal orders preserved.  Throws when the carriers overlap or
// either order is empty.
TaggedOrder concat(const TaggedOrder& left, const TaggedOrder& right);

} // namespace rkit
