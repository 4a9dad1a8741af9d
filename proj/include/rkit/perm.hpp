#pragma once

#include <vector>

#include "rkit/chain.hpp"

namespace rkit {

/// Permutation as a double linear order on the canonical carrier 0..size-1:
/// the first order is the natural one, the second is given by listing the
/// carrier elements in second-order succession.
struct Permutation {
    int size = 1;
    std::vector<int> order2;   // carrier elements in second-order
    std::vector<int> rank2;    // rank2[x] = position of x in order2

    Permutation() : size(1), order2{0}, rank2{0} {}
    explicit Permutation(std::vector<int> second_order);
    static Permutation identity(int n);

    bool operator==(const Permutation& o) const {
        return size == o.size && order2 == o.order2;
    }
    bool operator<(const Permutation& o) const {
        if (size != o.size) return size < o.size;
        return order2 < o.order2;
    }
};

// All permutations of size n, ordered lexicographically by order2.
std::vector<Permutation> enumerate_permutations(int n);

struct QuotientCheck {
    bool surjective = false;
    bool first_rigid = false;   // rigid w.r.t. the natural orders
    bool second_rigid = false;  // rigid w.r.t. the second orders
    bool ok() const { return surjective && first_rigid && second_rigid; }
};

// Diagnoses a candidate map without throwing; requires only that the map is
// total with values inside the codomain carrier.
QuotientCheck check_quotient_map(const std::vector<int>& image,
                                 const Permutation& dom, const Permutation& cod);

bool is_quotient_map(const std::vector<int>& image,
                     const Permutation& dom, const Permutation& cod);

/// Surjection between permutation carriers that is rigid with respect to both
/// order pairs simultaneously.
struct QuotientMap {
    Permutation dom;
    Permutation cod;
    std::vector<int> image;   // carrier map, read along the first orders

    QuotientMap(Permutation d, Permutation c, std::vector<int> img);
    static QuotientMap identity(const Permutation& p);

    // The same map read along the second orders: position p in dom's second
    // order goes to the second-order rank of its value in cod.
    std::vector<int> second_view() const;

    bool operator==(const QuotientMap& o) const {
        return dom == o.dom && cod == o.cod && image == o.image;
    }
};

QuotientMap compose(const QuotientMap& g, const QuotientMap& f);

// All quotient maps dom -> cod, lexicographic in the first-order image.
// Generation walks first-order rigid surjections and prunes on the partially
// determined second view.
std::vector<QuotientMap> enumerate_quotient_maps(const Permutation& dom,
                                                 const Permutation& cod);

struct MinBlockMap {
    std::vector<int> block_min;  // x -> minimum of the block containing x
    RigidSurjection canonical;   // x -> index of its block in min-order
};

MinBlockMap min_block_map(const ChainPartition& p);

struct QuotientResult {
    std::vector<int> block_min_row;  // block-minimum of each carrier element
    std::vector<int> intermediate;   // that row read along sigma's second order
    std::vector<int> dedup;          // first occurrences, in order
    std::vector<int> carrier;        // block minima, ascending
    Permutation quotient;            // canonical form of the quotient
    QuotientMap map;                 // witnessing quotient map
};

QuotientResult quotient_by_partition(const Permutation& sigma, const ChainPartition& p);

} // namespace rkit
