#include "rkit/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace rkit {

json to_json(const Permutation& p) {
    return json{{"size", p.size}, {"order2", p.order2}};
}

json to_json(const ChainPartition& p) {
    return json(p.blocks);
}

json to_json(const QuotientMap& q) {
    return json{{"dom", to_json(q.dom)}, {"cod", to_json(q.cod)}, {"image", q.image}};
}

json to_json(const Morphism& m) {
    if (m.is_pair())
        return json::array({to_json(m.first()), to_json(m.second())});
    return json(m.seq_value().image);
}

json to_json(const ArrowCertificate& cert, bool with_timing) {
    json j;
    j["query"] = json{{"category", cert.query.category},
                      {"a", cert.query.a},
                      {"b", cert.query.b},
                      {"c", cert.query.c},
                      {"k", cert.query.k}};
    j["verdict"] = to_string(cert.verdict);
    if (cert.verdict == Verdict::fails)
        j["bad_coloring"] = cert.bad_coloring;
    if (!cert.note.empty())
        j["note"] = cert.note;
    j["stats"] = json{{"nodes", cert.stats.nodes},
                      {"prunes", cert.stats.prunes},
                      {"vertices", cert.stats.vertices},
                      {"edges", cert.stats.edges},
                      {"elapsed_ms", with_timing ? cert.stats.elapsed_ms : 0}};
    return j;
}

Permutation permutation_from_json(const json& j) {
    if (j.is_array())
        return Permutation(j.get<std::vector<int>>());
    Permutation p(j.at("order2").get<std::vector<int>>());
    if (j.contains("size") && j.at("size").get<int>() != p.size)
        throw std::invalid_argument("permutation size field disagrees with its order");
    return p;
}

ChainPartition partition_from_json(const json& j, int ground_size_hint) {
    auto blocks = j.get<std::vector<std::vector<int>>>();
    int total = 0;
    for (const auto& b : blocks)
        total += static_cast<int>(b.size());
    const int ground = ground_size_hint > 0 ? ground_size_hint : total;
    return ChainPartition(ground, std::move(blocks));
}

ParsedCertificate certificate_from_json(const json& j) {
    ParsedCertificate parsed;
    const json& q = j.at("query");
    parsed.query.category = q.at("category").get<std::string>();
    parsed.query.a = q.at("a").get<std::string>();
    parsed.query.b = q.at("b").get<std::string>();
    parsed.query.c = q.at("c").get<std::string>();
    parsed.query.k = q.at("k").get<std::uint64_t>();
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "holds")
        parsed.verdict = Verdict::holds;
    else if (verdict == "fails")
        parsed.verdict = Verdict::fails;
    else if (verdict == "inconclusive")
        parsed.verdict = Verdict::inconclusive;
    else
        throw std::invalid_argument("unknown verdict '" + verdict + "'");
    if (j.contains("bad_coloring"))
        parsed.bad_coloring = j.at("bad_coloring").get<std::vector<int>>();
    if (j.contains("stats")) {
        parsed.vertices = j.at("stats").value("vertices", -1);
        parsed.edges = j.at("stats").value("edges", -1);
    }
    return parsed;
}

Permutation parse_permutation_text(const std::string& text) {
    return permutation_from_json(json::parse(text));
}

ChainPartition parse_partition_text(const std::string& text, int ground_size_hint) {
    return partition_from_json(json::parse(text), ground_size_hint);
}

namespace {

void append_row(std::ostringstream& out, const char* name, const std::vector<int>& row) {
    out << name << ':';
    for (int v : row)
        out << ' ' << v;
    out << '\n';
}

} // namespace

std::string quotient_report_text(const Permutation& sigma, const ChainPartition& pi,
                                 const QuotientResult& result) {
    std::ostringstream out;
    append_row(out, "sigma", sigma.order2);
    out << "partition:";
    for (const auto& block : pi.blocks) {
        out << " {";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out << ',';
            out << block[i];
        }
        out << '}';
    }
    out << '\n';
    append_row(out, "f_pi", result.block_min_row);
    append_row(out, "intermediate", result.intermediate);
    append_row(out, "quotient", result.dedup);
    append_row(out, "carrier", result.carrier);
    append_row(out, "canonical_order2", result.quotient.order2);
    append_row(out, "map", result.map.image);
    return out.str();
}

json quotient_report_json(const Permutation& sigma, const ChainPartition& pi,
                          const QuotientResult& result) {
    json j;
    j["sigma"] = to_json(sigma);
    j["partition"] = to_json(pi);
    j["f_pi"] = result.block_min_row;
    j["intermediate"] = result.intermediate;
    j["quotient"] = result.dedup;
    j["carrier"] = result.carrier;
    j["canonical"] = to_json(result.quotient);
    j["map"] = to_json(result.map);
    return j;
}

} // namespace rkit
