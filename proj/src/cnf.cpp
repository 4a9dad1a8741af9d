#include "rkit/cnf.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rkit {

Cnf arrow_to_cnf(const CopyHypergraph& h, std::uint64_t k) {
    if (k < 2)
        throw std::invalid_argument("arrow queries need at least 2 colors");
    const int vcount = static_cast<int>(h.vertices.size());
    Cnf cnf;

    if (k == 2) {
        // x_v true = second color.  An edge must not be all-true or all-false.
        cnf.vars = vcount;
        for (const auto& edge : h.edges) {
            std::vector<int> pos, neg;
            pos.reserve(edge.size());
            neg.reserve(edge.size());
            for (int v : edge) {
                pos.push_back(v + 1);
                neg.push_back(-(v + 1));
            }
            cnf.clauses.push_back(std::move(pos));
            cnf.clauses.push_back(std::move(neg));
        }
        return cnf;
    }

    if (k > 1000)
        throw std::invalid_argument("color count too large for CNF export");
    const int kc = static_cast<int>(k);
    cnf.vars = vcount * kc;
    const auto var = [kc](int v, int c) { return v * kc + c + 1; };

    for (int v = 0; v < vcount; ++v) {
        std::vector<int> at_least_one;
        at_least_one.reserve(kc);
        for (int c = 0; c < kc; ++c)
            at_least_one.push_back(var(v, c));
        cnf.clauses.push_back(std::move(at_least_one));
        for (int c1 = 0; c1 < kc; ++c1)
            for (int c2 = c1 + 1; c2 < kc; ++c2)
                cnf.clauses.push_back({-var(v, c1), -var(v, c2)});
    }
    for (const auto& edge : h.edges)
        for (int c = 0; c < kc; ++c) {
            std::vector<int> clause;
            clause.reserve(edge.size());
            for (int v : edge)
                clause.push_back(-var(v, c));
            cnf.clauses.push_back(std::move(clause));
        }
    return cnf;
}

std::string to_dimacs(const Cnf& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

namespace {

enum class Value : signed char { unknown = 0, yes = 1, no = -1 };

struct Dpll {
    const std::vector<std::vector<int>>* clauses = nullptr;
    std::vector<Value> value; // 1-based
    std::uint64_t nodes = 0, max_nodes = 0;

    Value lit_value(int lit) const {
        const Value v = value[std::abs(lit)];
        if (v == Value::unknown)
            return Value::unknown;
        const bool truth = (v == Value::yes) == (lit > 0);
        return truth ? Value::yes : Value::no;
    }

    // Scan-to-fixpoint unit propagation; records assigned variables in trail.
    bool propagate(std::vector<int>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& clause : *clauses) {
                int unassigned = 0;
                int last = 0;
                bool satisfied = false;
                for (int lit : clause) {
                    const Value v = lit_value(lit);
                    if (v == Value::yes) {
                        satisfied = true;
                        break;
                    }
                    if (v == Value::unknown) {
                        ++unassigned;
                        last = lit;
                    }
                }
                if (satisfied)
                    continue;
                if (unassigned == 0)
                    return false;
                if (unassigned == 1) {
                    value[std::abs(last)] = last > 0 ? Value::yes : Value::no;
                    trail.push_back(std::abs(last));
                    changed = true;
                }
            }
        }
        return true;
    }

    bool solve() {
        if (++nodes > max_nodes)
            throw std::runtime_error("sat solver budget exhausted");
        std::vector<int> trail;
        if (!propagate(trail)) {
            for (int v : trail)
                value[v] = Value::unknown;
            return false;
        }
        int pick = 0;
        for (int v = 1; v < static_cast<int>(value.size()); ++v)
            if (value[v] == Value::unknown) {
                pick = v;
                break;
            }
        if (pick == 0)
            return true;
        for (const Value branch : {Value::yes, Value::no}) {
            value[pick] = branch;
            if (solve())
                return true;
            value[pick] = Value::unknown;
        }
        for (int v : trail)
            value[v] = Value::unknown;
        return false;
    }
};

} // namespace

SatSolution solve_cnf(const Cnf& cnf, std::uint64_t max_nodes) {
    Dpll solver;
    solver.clauses = &cnf.clauses;
    solver.value.assign(cnf.vars + 1, Value::unknown);
    solver.max_nodes = max_nodes;

    SatSolution solution;
    if (solver.solve()) {
        solution.result = SatResult::sat;
        solution.assignment.reserve(cnf.vars);
        for (int v = 1; v <= cnf.vars; ++v)
            solution.assignment.push_back(solver.value[v] == Value::no ? -v : v);
    } else {
        solution.result = SatResult::unsat;
    }
    return solution;
}

} // namespace rkit
