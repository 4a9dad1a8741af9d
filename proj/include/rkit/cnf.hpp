#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rkit/hypergraph.hpp"

namespace rkit {

/// Propositional formula in clausal form; literals use DIMACS conventions
/// (variables 1..vars, negative literal = negation).
struct Cnf {
    int vars = 0;
    std::vector<std::vector<int>> clauses;
};

// Encodes "some k-coloring leaves every edge polychromatic": the formula is
// satisfiable exactly when the arrow FAILS.  For k = 2 one variable per
// vertex suffices (two clauses per edge); otherwise one variable per
// vertex/color with exactly-one constraints and a per-edge-per-color clause
// forbidding an all-same-color edge.
Cnf arrow_to_cnf(const CopyHypergraph& h, std::uint64_t k);

std::string to_dimacs(const Cnf& cnf);

enum class SatResult { sat, unsat };

struct SatSolution {
    SatResult result = SatResult::unsat;
    std::vector<int> assignment; // 1-based; +v true, -v false (when sat)
};

// Small DPLL solver with unit propagation; independent of the coloring
// search so the two routes can check each other.  Throws when the node
// budget runs out.
SatSolution solve_cnf(const Cnf& cnf, std::uint64_t max_nodes = 10'000'000);

} // namespace rkit
