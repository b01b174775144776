#pragma once

#include "chromabound/graph.hpp"

#include <vector>

namespace chromabound {

// Default tolerance for deciding that two floating-point eigenvalues are the
// same distinct eigenvalue. Threshold selections elsewhere reuse it as slack.
inline constexpr double kSpectralTol = 1e-8;

// Distinct eigenvalues in strictly decreasing order with multiplicities.
struct Spectrum {
    std::vector<double> values;
    std::vector<int> multiplicities;
    double tol = kSpectralTol;

    int distinct_count() const { return static_cast<int>(values.size()); }
    int dimension() const;
    double largest() const { return values.front(); }
    double smallest() const { return values.back(); }

    // Full multiset, descending (each value repeated by its multiplicity).
    std::vector<double> expanded() const;
};

// Groups a descending list of eigenvalues into a Spectrum; consecutive values
// within tol fall into one group represented by the group mean.
Spectrum group_eigenvalues(const std::vector<double>& descending, double tol);

// Eigenvalues of the 0/1 adjacency matrix. Checks the trace invariants
// (sum 0, sum of squares 2m) and throws if the solve drifted.
Spectrum adjacency_spectrum(const Graph& g, double tol = kSpectralTol);

// Spectrum of L(g) for k-regular g with m >= n: each adjacency eigenvalue
// shifted by k-2, plus -2 with multiplicity m-n.
Spectrum line_graph_spectrum_regular(const Graph& g, double tol = kSpectralTol);

// Cauchy interlacing: outer_i >= inner_i >= outer_{i + N - M} for all i,
// with tol slack on both sides. Sizes are the full dimensions M <= N.
bool interlacing_check(const Spectrum& inner, const Spectrum& outer);

}  // namespace chromabound
