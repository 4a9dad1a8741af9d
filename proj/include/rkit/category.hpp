#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "rkit/perm.hpp"

namespace rkit {

/// Object of a finitely enumerable concrete category: a chain, a permutation,
/// or a pair of objects.  Totally ordered so enumerations are deterministic.
class Object {
public:
    enum class Kind { chain, perm, pair };

    Object() = default;
    static Object chain(int n);
    static Object perm(Permutation p);
    static Object pair(Object first, Object second);

    Kind kind() const { return kind_; }
    int chain_size() const;
    const Permutation& perm_value() const;
    const Object& first() const;
    const Object& second() const;

    int total_size() const;
    std::string str() const;

    bool operator==(const Object& o) const;
    bool operator<(const Object& o) const;

private:
    Kind kind_ = Kind::chain;
    int chain_ = 1;
    Permutation perm_;
    std::vector<Object> parts_;
};

/// Morphism value: an image sequence between canonical carriers, or a pair of
/// morphisms.  Which maps are admissible is the category's business; equality
/// is structural.
class Morphism {
public:
    struct Seq {
        int dom_size = 0;
        int cod_size = 0;
        std::vector<int> image;
        bool operator==(const Seq&) const = default;
        bool operator<(const Seq& o) const;
    };

    Morphism() = default;
    static Morphism seq(int dom, int cod, std::vector<int> image);
    static Morphism pair(Morphism first, Morphism second);

    bool is_pair() const { return pair_; }
    const Seq& seq_value() const;
    const Morphism& first() const;
    const Morphism& second() const;

    std::string str() const;

    bool operator==(const Morphism& o) const;
    bool operator<(const Morphism& o) const;

private:
    bool pair_ = false;
    Seq seq_;
    std::vector<Morphism> parts_;
};

// Composition of image sequences: apply f first, then g.
Morphism compose_seq(const Morphism& g, const Morphism& f);

/// Shape of the objects a category works over; drives object parsing.
struct ObjectShape {
    enum class Kind { chain, perm, pair };
    Kind kind = Kind::chain;
    std::vector<ObjectShape> parts;

    static ObjectShape chain() { return {Kind::chain, {}}; }
    static ObjectShape perm() { return {Kind::perm, {}}; }
    static ObjectShape pair(ObjectShape a, ObjectShape b) {
        return {Kind::pair, {std::move(a), std::move(b)}};
    }
};

/// Presentation of a finitely enumerable category: a size-capped object
/// stream plus hom enumeration, identities and composition.  All functions
/// are pure; presentations are safe to share.
struct Category {
    std::string name;
    ObjectShape shape;
    std::function<std::vector<Object>(int)> objects;  // total_size <= cap, size-major order
    std::function<std::vector<Morphism>(const Object&, const Object&)> hom;
    std::function<Morphism(const Object&)> identity;
    std::function<Morphism(const Morphism&, const Morphism&)> compose;  // compose(g, f) = g after f
};

Category ch_category();       // finite chains and embeddings
Category ch_rs_category();    // finite chains and rigid surjections
Category perm_quo_category(); // finite permutations and quotient maps

Category opposite(const Category& base);
Category product(const Category& a, const Category& b);

// Selector grammar: ch | ch-rs | perm-quo | op(X) | prod(X,Y)
Category parse_category(std::string_view selector);

// Object grammar, shape-directed: chain = integer, permutation = [i,j,...]
// (the second order), pair = (X,Y).
Object parse_object(const ObjectShape& shape, std::string_view text);

// Bounded monicity: left cancellation tested against every probe object of
// total size <= probe_cap.  A `true` answer is relative to that bound.
bool is_monic(const Category& cat, const Morphism& f, const Object& dom, int probe_cap);

} // namespace rkit
