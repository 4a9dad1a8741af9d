#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rkit/hypergraph.hpp"

namespace rkit {

struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
    double max_seconds = 60.0;
};

enum class Verdict { holds, fails, inconclusive };

std::string to_string(Verdict v);

struct SearchStats {
    std::uint64_t nodes = 0;   // decision points taken
    std::uint64_t prunes = 0;  // color candidates rejected by an edge
    std::int64_t elapsed_ms = 0;
    int vertices = 0;
    int edges = 0;
};

struct QueryEcho {
    std::string category;
    std::string a, b, c;
    std::uint64_t k = 2;
};

/// Decision certificate.  A `fails` verdict carries a bad coloring (1..k per
/// vertex, no edge monochromatic) that is re-checkable from scratch; `holds`
/// is certified by search exhaustion, recorded in the stats.
struct ArrowCertificate {
    Verdict verdict = Verdict::inconclusive;
    std::vector<int> bad_coloring;
    std::string note;
    SearchStats stats;
    QueryEcho query;
};

struct ArrowOptions {
    SearchBudget budget;
    int threads = 1;
    // Called periodically during long searches; receives nodes so far and
    // elapsed seconds.  Goes to a side channel, never into results.
    std::function<void(std::uint64_t, double)> heartbeat;
};

// Decides hom(A,C)-coloring avoidability: the arrow holds exactly when no
// k-coloring of hom(A,C) leaves every copy edge polychromatic.  Degenerate
// conventions: empty hom(A,C) holds vacuously; empty hom(B,C) with vertices
// present fails vacuously.
ArrowCertificate arrow_holds(const Category& host, const Object& a, const Object& b,
                             const Object& c, std::uint64_t k,
                             const ArrowOptions& options = {});

// Same decision on a prebuilt hypergraph (no category needed).
ArrowCertificate decide_coloring(const CopyHypergraph& h, std::uint64_t k,
                                 const ArrowOptions& options = {});

// Independent re-check of a failure certificate: every edge must see at
// least two colors (empty and singleton edges can never be polychromatic).
bool validate_bad_coloring(const CopyHypergraph& h, const std::vector<int>& coloring,
                           std::uint64_t k);

struct WitnessResult {
    bool found = false;
    Object witness;
    ArrowCertificate certificate;  // the holds certificate, or the blocking one
    std::string frontier;          // where the scan stopped when not found
    int objects_tried = 0;
};

// Scans the host's object stream in size-major order and returns the first
// object whose arrow verdict is `holds`.  An inconclusive verdict stops the
// scan: anything beyond it could not be called "first" honestly.
WitnessResult find_witness(const Category& host, const Object& a, const Object& b,
                           std::uint64_t k, int max_object_size,
                           const ArrowOptions& options = {});

} // namespace rkit
