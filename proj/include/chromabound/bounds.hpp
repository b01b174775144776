#pragma once

#include "chromabound/graph.hpp"
#include "chromabound/spectral.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromabound {

// Raised when a bound's hypotheses do not hold for the given graph (wrong
// eigenvalue landscape, missing regularity, degenerate denominators). Callers
// distinguish this from hard usage errors; the CLI maps it to exit code 2.
struct InapplicableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Real polynomial c0 + c1 x + ... of degree <= coeffs.size()-1.
struct Poly {
    std::vector<double> coeffs;

    double operator()(double x) const;
    int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }

    // (x - r1)(x - r2)... expanded, optionally scaled.
    static Poly from_roots(const std::vector<double>& roots, double scale = 1.0);
    // p + c
    Poly shifted(double c) const;
    std::string to_string() const;
};

// Exact diagonals of powers of the adjacency matrix of a line graph, one row
// per power 0..depth. Row l, column e is the number of closed l-walks at the
// line-graph vertex e.
struct PowerDiagTable {
    std::vector<std::vector<std::int64_t>> rows;

    int depth() const { return static_cast<int>(rows.size()) - 1; }
    int dimension() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    static PowerDiagTable compute(const Graph& line, int t);
};

// Per-edge diagonal of p(A') together with its extremes. delta3 carries the
// largest diagonal entry of A'^3 whenever the table was deep enough.
struct DiagStats {
    std::vector<double> entries;
    double W = 0.0;
    double w = 0.0;
    std::optional<std::int64_t> delta3;

    static DiagStats from(const PowerDiagTable& table, const Poly& p);
};

enum class BoundMethod {
    FirstInertial,
    SecondInertial,
    HoffmanGeneral,
    HoffmanRegular,
    Chi2Closed,
    Chi2ClosedRegular,
    Chi3ClosedRegular,
    Wilf,
};

const char* to_string(BoundMethod m);

// One evaluated bound. Lower bounds round raw up, the Wilf upper bound rounds
// down, both with a 1e-9 guard so exact integer landings survive floating
// point. certificate holds the polynomial that produced the value;
// eigen_indices the distinct-eigenvalue positions chosen by the closed forms
// (i-1, i for the quadratic ones; s-1, s, d' for the cubic one).
struct BoundReport {
    BoundMethod method;
    double raw = 0.0;
    long long integer_bound = 0;
    Poly certificate;
    std::vector<int> eigen_indices;
};

inline constexpr double kRoundGuard = 1e-9;

long long lower_round(double raw);
long long upper_round(double raw);

// Counting bound: m over the smaller of the two inertia-style counts taken
// against the diagonal extremes of p(A').
BoundReport first_inertial(const Spectrum& spec_line, const Poly& p, const DiagStats& diag,
                           int m);

// Sign-count bound 1 + neg/pos. Requires the line graph to be t-partially
// walk-regular (caller passes the verdict) and sum of p over the spectrum to
// vanish.
BoundReport second_inertial(const Spectrum& spec_line, const Poly& p, bool walk_regular_ok);

// Ratio bound (p(largest) - min over the rest) / (W - min over the rest).
BoundReport hoffman_general(const Spectrum& spec_line, const Poly& p, const DiagStats& diag);

// Regular-graph sharpening of the ratio bound: m over the floored inverse
// ratio. A floor of zero means the ratio forces every edge into its own
// class; the bound then equals m.
BoundReport hoffman_regular(const Spectrum& spec_line, const Poly& p, const DiagStats& diag,
                            int m);

// Closed-form distance-2 bounds driven by one threshold eigenvalue, and the
// distance-3 form for regular graphs whose line graph has smallest eigenvalue
// exactly -2.
BoundReport chi2_closed(const Graph& g);
BoundReport chi2_closed_regular(const Graph& g);
BoundReport chi3_closed_regular(const Graph& g);

// Upper bound 1 + largest eigenvalue of L(g)^t.
BoundReport wilf(const Graph& g, int t);

// Distance-2 classification of a regular graph by where its eigenvalues sit
// relative to -1: chromatic index of the square at least k+1, at least k+2,
// or no verdict.
enum class Chi2Behaviour { KPlus1, KPlus2, Inapplicable };
Chi2Behaviour chi2_behaviour_class(const Graph& g);

}  // namespace chromabound
