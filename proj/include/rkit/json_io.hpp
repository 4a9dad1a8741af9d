#pragma once

#include <string>

#include "json.hpp"
#include "rkit/arrow.hpp"
#include "rkit/perm.hpp"

namespace rkit {

using json = nlohmann::json;

json to_json(const Permutation& p);
json to_json(const ChainPartition& p);
json to_json(const QuotientMap& q);
json to_json(const Morphism& m);
json to_json(const ArrowCertificate& cert, bool with_timing);

Permutation permutation_from_json(const json& j);
ChainPartition partition_from_json(const json& j, int ground_size_hint = -1);

// Certificate parsing for the independent checker.
struct ParsedCertificate {
    QueryEcho query;
    Verdict verdict = Verdict::inconclusive;
    std::vector<int> bad_coloring;
    int vertices = -1;
    int edges = -1;
};
ParsedCertificate certificate_from_json(const json& j);

// CLI argument helpers: a permutation is its second order "[...]", a
// partition is "[[...],[...]]".
Permutation parse_permutation_text(const std::string& text);
ChainPartition parse_partition_text(const std::string& text, int ground_size_hint = -1);

// Quotient reports, shared between the CLI and the test suites so the text
// form stays byte-stable.
std::string quotient_report_text(const Permutation& sigma, const ChainPartition& pi,
                                 const QuotientResult& result);
json quotient_report_json(const Permutation& sigma, const ChainPartition& pi,
                          const QuotientResult& result);

} // namespace rkit
