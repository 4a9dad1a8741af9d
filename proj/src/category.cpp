#include "rkit/category.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rkit {

Object Object::chain(int n) {
    if (n < 1)
        throw std::invalid_argument("chain object size must be at least 1");
    Object o;
    o.kind_ = Kind::chain;
    o.chain_ = n;
    return o;
}

Object Object::perm(Permutation p) {
    Object o;
    o.kind_ = Kind::perm;
    o.perm_ = std::move(p);
    return o;
}

Object Object::pair(Object first, Object second) {
    Object o;
    o.kind_ = Kind::pair;
    o.parts_.push_back(std::move(first));
    o.parts_.push_back(std::move(second));
    return o;
}

int Object::chain_size() const {
    if (kind_ != Kind::chain)
        throw std::invalid_argument("object is not a chain");
    return chain_;
}

const Permutation& Object::perm_value() const {
    if (kind_ != Kind::perm)
        throw std::invalid_argument("object is not a permutation");
    return perm_;
}

const Object& Object::first() const {
    if (kind_ != Kind::pair)
        throw std::invalid_argument("object is not a pair");
    return parts_[0];
}

const Object& Object::second() const {
    if (kind_ != Kind::pair)
        throw std::invalid_argument("object is not a pair");
    return parts_[1];
}

int Object::total_size() const {
    switch (kind_) {
    case Kind::chain: return chain_;
    case Kind::perm: return perm_.size;
    case Kind::pair: return parts_[0].total_size() + parts_[1].total_size();
    }
    return 0;
}

std::string Object::str() const {
    switch (kind_) {
    case Kind::chain: return std::to_string(chain_);
    case Kind::perm: {
        std::string s = "[";
        for (int i = 0; i < perm_.size; ++i) {
            if (i) s += ',';
            s += std::to_string(perm_.order2[i]);
        }
        return s + "]";
    }
    case Kind::pair: return "(" + parts_[0].str() + "," + parts_[1].str() + ")";
    }
    return {};
}

bool Object::operator==(const Object& o) const {
    if (kind_ != o.kind_)
        return false;
    switch (kind_) {
    case Kind::chain: return chain_ == o.chain_;
    case Kind::perm: return perm_ == o.perm_;
    case Kind::pair: return parts_[0] == o.parts_[0] && parts_[1] == o.parts_[1];
    }
    return false;
}

bool Object::operator<(const Object& o) const {
    if (kind_ != o.kind_)
        return static_cast<int>(kind_) < static_cast<int>(o.kind_);
    switch (kind_) {
    case Kind::chain: return chain_ < o.chain_;
    case Kind::perm: return perm_ < o.perm_;
    case Kind::pair:
        if (parts_[0] == o.parts_[0])
            return parts_[1] < o.parts_[1];
        return parts_[0] < o.parts_[0];
    }
    return false;
}

bool Morphism::Seq::operator<(const Seq& o) const {
    if (dom_size != o.dom_size) return dom_size < o.dom_size;
    if (cod_size != o.cod_size) return cod_size < o.cod_size;
    return image < o.image;
}

Morphism Morphism::seq(int dom, int cod, std::vector<int> image) {
    Morphism m;
    m.pair_ = false;
    m.seq_ = Seq{dom, cod, std::move(image)};
    return m;
}

Morphism Morphism::pair(Morphism first, Morphism second) {
    Morphism m;
    m.pair_ = true;
    m.parts_.push_back(std::move(first));
    m.parts_.push_back(std::move(second));
    return m;
}

const Morphism::Seq& Morphism::seq_value() const {
    if (pair_)
        throw std::invalid_argument("morphism is a pair");
    return seq_;
}

const Morphism& Morphism::first() const {
    if (!pair_)
        throw std::invalid_argument("morphism is not a pair");
    return parts_[0];
}

const Morphism& Morphism::second() const {
    if (!pair_)
        throw std::invalid_argument("morphism is not a pair");
    return parts_[1];
}

std::string Morphism::str() const {
    if (pair_)
        return "(" + parts_[0].str() + "," + parts_[1].str() + ")";
    std::string s = "[";
    for (std::size_t i = 0; i < seq_.image.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(seq_.image[i]);
    }
    return s + "]";
}

bool Morphism::operator==(const Morphism& o) const {
    if (pair_ != o.pair_)
        return false;
    if (pair_)
        return parts_[0] == o.parts_[0] && parts_[1] == o.parts_[1];
    return seq_ == o.seq_;
}

bool Morphism::operator<(const Morphism& o) const {
    if (pair_ != o.pair_)
        return !pair_;
    if (pair_) {
        if (parts_[0] == o.parts_[0])
            return parts_[1] < o.parts_[1];
        return parts_[0] < o.parts_[0];
    }
    return seq_ < o.seq_;
}

Morphism compose_seq(const Morphism& g, const Morphism& f) {
    const auto& gs = g.seq_value();
    const auto& fs = f.seq_value();
    if (fs.cod_size != gs.dom_size)
        throw std::invalid_argument("composition size mismatch");
    std::vector<int> image(fs.image.size());
    for (std::size_t i = 0; i < fs.image.size(); ++i)
        image[i] = gs.image[fs.image[i]];
    return Morphism::seq(fs.dom_size, gs.cod_size, std::move(image));
}

namespace {

Morphism seq_identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Morphism::seq(n, n, std::move(image));
}

std::vector<Object> chain_objects(int cap) {
    std::vector<Object> out;
    for (int n = 1; n <= cap; ++n)
        out.push_back(Object::chain(n));
    return out;
}

} // namespace

Category ch_category() {
    Category c;
    c.name = "ch";
    c.shape = ObjectShape::chain();
    c.objects = chain_objects;
    c.hom = [](const Object& a, const Object& b) {
        std::vector<Morphism> out;
        for (auto& e : enumerate_embeddings(a.chain_size(), b.chain_size()))
            out.push_back(Morphism::seq(e.dom_size, e.cod_size, std::move(e.image)));
        return out;
    };
    c.identity = [](const Object& a) { return seq_identity(a.chain_size()); };
    c.compose = compose_seq;
    return c;
}

Category ch_rs_category() {
    Category c;
    c.name = "ch-rs";
    c.shape = ObjectShape::chain();
    c.objects = chain_objects;
    c.hom = [](const Object& a, const Object& b) {
        std::vector<Morphism> out;
        for (auto& f : enumerate_rigid_surjections(a.chain_size(), b.chain_size()))
            out.push_back(Morphism::seq(f.dom_size, f.cod_size, std::move(f.image)));
        return out;
    };
    c.identity = [](const Object& a) { return seq_identity(a.chain_size()); };
    c.compose = compose_seq;
    return c;
}

Category perm_quo_category() {
    Category c;
    c.name = "perm-quo";
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
            out.push_back(Morphism::seq(q.dom.size, q.cod.size, q.image));
        return out;
    };
    c.identity = [](const Object& a) { return seq_identity(a.perm_value().size); };
    c.compose = compose_seq;
    return c;
}

Category opposite(const Category& base) {
    Category c;
    c.name = "op(" + base.name + ")";
    c.shape = base.shape;
    c.objects = base.objects;
    c.hom = [base](const Object& a, const Object& b) { return base.hom(b, a); };
    c.identity = base.identity;
    c.compose = [base](const Morphism& g, const Morphism& f) { return base.compose(f, g); };
    return c;
}

Category product(const Category& a, const Category& b) {
    Category c;
    c.name = "prod(" + a.name + "," + b.name + ")";
    c.shape = ObjectShape::pair(a.shape, b.shape);
    c.objects = [a, b](int cap) {
        const auto oa = a.objects(cap - 1 > 0 ? cap - 1 : 0);
        const auto ob = b.objects(cap - 1 > 0 ? cap - 1 : 0);
        std::vector<Object> out;
        for (int s = 2; s <= cap; ++s)
            for (const auto& x : oa) {
                if (x.total_size() >= s)
                    continue;
                for (const auto& y : ob)
                    if (x.total_size() + y.total_size() == s)
                        out.push_back(Object::pair(x, y));
            }
        return out;
    };
    c.hom = [a, b](const Object& x, const Object& y) {
        const auto ha = a.hom(x.first(), y.first());
        const auto hb = b.hom(x.second(), y.second());
        std::vector<Morphism> out;
        out.reserve(ha.size() * hb.size());
        for (const auto& f : ha)
            for (const auto& g : hb)
                out.push_back(Morphism::pair(f, g));
        return out;
    };
    c.identity = [a, b](const Object& x) {
        return Morphism::pair(a.identity(x.first()), b.identity(x.second()));
    };
    c.compose = [a, b](const Morphism& g, const Morphism& f) {
        return Morphism::pair(a.compose(g.first(), f.first()),
                              b.compose(g.second(), f.second()));
    };
    return c;
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("expected '" + std::string(1, c) + "' at position " +
                                        std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
            ++pos;
        return std::string(text.substr(start, pos - start));
    }
    int integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw std::invalid_argument("expected an integer at position " + std::to_string(pos));
        int v = std::stoi(std::string(text.substr(start, pos - start)));
        return neg ? -v : v;
    }
    void finish() {
        skip_ws();
        if (pos != text.size())
            throw std::invalid_argument("trailing input: '" + std::string(text.substr(pos)) + "'");
    }
};

Category parse_category_expr(Cursor& cur) {
    const std::string head = cur.word();
    if (head == "ch")
        return ch_category();
    if (head == "ch-rs")
        return ch_rs_category();
    if (head == "perm-quo")
        return perm_quo_category();
    if (head == "op") {
        cur.expect('(');
        Category inner = parse_category_expr(cur);
        cur.expect(')');
        return opposite(inner);
    }
    if (head == "prod") {
        cur.expect('(');
        Category left = parse_category_expr(cur);
        cur.expect(',');
        Category right = parse_category_expr(cur);
        cur.expect(')');
        return product(left, right);
    }
    throw std::invalid_argument("unknown category selector '" + head + "'");
}

Object parse_object_expr(const ObjectShape& shape, Cursor& cur) {
    switch (shape.kind) {
    case ObjectShape::Kind::chain:
        return Object::chain(cur.integer());
    case ObjectShape::Kind::perm: {
        cur.expect('[');
        std::vector<int> order;
        if (!cur.eat(']')) {
            order.push_back(cur.integer());
            while (cur.eat(','))
                order.push_back(cur.integer());
            cur.expect(']');
        }
        return Object::perm(Permutation(std::move(order)));
    }
    case ObjectShape::Kind::pair: {
        cur.expect('(');
        Object first = parse_object_expr(shape.parts[0], cur);
        cur.expect(',');
        Object second = parse_object_expr(shape.parts[1], cur);
        cur.expect(')');
        return Object::pair(std::move(first), std::move(second));
    }
    }
    throw std::invalid_argument("bad object shape");
}

} // namespace

Category parse_category(std::string_view selector) {
    Cursor cur{selector};
    Category c = parse_category_expr(cur);
    cur.finish();
    return c;
}

Object parse_object(const ObjectShape& shape, std::string_view text) {
    Cursor cur{text};
    Object o = parse_object_expr(shape, cur);
    cur.finish();
    return o;
}

bool is_monic(const Category& cat, const Morphism& f, const Object& dom, int probe_cap) {
    for (const Object& probe : cat.objects(probe_cap)) {
        const auto homs = cat.hom(probe, dom);
        for (std::size_t i = 0; i < homs.size(); ++i) {
            const Morphism fi = cat.compose(f, homs[i]);
            for (std::size_t j = i + 1; j < homs.size(); ++j)
                if (fi == cat.compose(f, homs[j]))
                    return false;
        }
    }
    return true;
}

} // namespace rkit
