#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

// Edge colouring of some graph g at distance t: colours[e] is the colour of
// the edge with index e in g's canonical edge order.
struct EdgeColouring {
    int t = 1;
    std::vector<int> colours;
};

// First conflicting pair of edges in canonical index order, if any.
struct ColouringViolation {
    int e = 0;
    int f = 0;
    int colour = 0;
};

struct ValidationResult {
    bool valid = false;
    std::optional<ColouringViolation> violation;
};

// Checks that every two distinct edges of g at edge distance <= t carry
// different colours. The colouring must assign a colour to every edge.
ValidationResult validate_colouring(const Graph& g, const EdgeColouring& c);

struct ExactResult {
    enum class Status { Exact, TimedOut };
    Status status = Status::Exact;
    // Meaningful when status == Exact.
    long long value = 0;
    // Bracket known at the point the search stopped; lower == upper == value
    // for exact results.
    long long lower = 0;
    long long upper = 0;
    std::chrono::milliseconds elapsed{0};
};

// Chromatic number of an arbitrary graph by branch and bound: DSATUR upper
// bound, greedy clique lower bound, then DFS over colour assignments with a
// preassigned clique, dynamic most-saturated-vertex branching and canonical
// colour introduction (a vertex may open at most one fresh colour index).
// Deterministic for a given input whenever the budget is not exhausted.
ExactResult chromatic_number(const Graph& g, std::chrono::milliseconds budget);

// Exact distance-t chromatic index: chromatic number of line_graph(g)^t.
ExactResult exact_chi_t_prime(const Graph& g, int t, std::chrono::milliseconds budget);

// Smallest c <= cap such that gp admits a proper c-colouring, by exhaustive
// assignment in vertex order with no ordering or symmetry tricks; the only
// pruning is rejection of partial assignments that already conflict. Intended
// as an oracle for small instances; requires |V| <= 14.
int brute_force_chi(const Graph& gp, int cap);

}  // namespace chromabound
