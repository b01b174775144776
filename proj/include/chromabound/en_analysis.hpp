#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "chromabound/graph.hpp"

namespace chromabound {

// Open interval, both ends exclusive.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool empty() const { return !(lo < hi); }
    bool contains(double x) const { return lo < x && x < hi; }
};

// Conjectured ceiling for the distance-2 chromatic index of a graph with
// maximum degree delta: 5 delta^2 / 4 for even delta, (5 delta^2 - 2 delta
// + 1) / 4 for odd. Exact rational value.
boost::multiprecision::cpp_rational en_conjecture_value(int delta);

// Interval that the adjacency spectrum of a k-regular graph must avoid if
// the closed-form distance-2 bound exceeds c k^2 (c > 1):
//   k = 2:   (-1, -2 + 4 sqrt(8c^2 - 6c) / (4c - 1))
//   k >= 3:  (-k + 1, (ck - k)/(ck - 1))
Interval forbidden_interval_regular(int k, double c);

// Size of the eigenvalue-free gap guaranteed alongside the k >= 3 branch
// above: k(ck + c - 2)/(ck - 1). At least k for every c > 1.
double regular_gap_guarantee(int k, double c);

// Same idea for a graph of maximum degree delta, phrased on the spectrum of
// its line graph:
//   delta < 5:   (-1, 2 sqrt(c d^3 (c d^2 - (c+1) d + 1)) / (c d^2 - 1) - 2)
//   delta >= 5:  (-1, (c d^3 - (c+1) d^2 + 1) / (2 c d^2 - d - 1))
// The delta >= 5 branch is implemented from its stated form; its derivation
// is not reproduced here.
Interval forbidden_interval_general(int delta, double c);

// One screened graph. c_star is the closed-form bound divided by k^2; the
// interval is only meaningful when interval_checked is set (c_star > 1).
struct ScreeningReport {
    std::string name;
    int k = 0;
    bool applicable = false;
    double raw_bound = 0.0;
    long long integer_bound = 0;
    double c_star = 0.0;
    bool interval_checked = false;
    Interval interval;
    bool spectrum_clear = true;
    double conjecture_value = 0.0;
    bool exceeds_conjecture = false;
};

// Evaluates the closed-form distance-2 bound on a regular graph and checks
// the spectral consequences. When c_star > 1 the adjacency spectrum must
// avoid forbidden_interval_regular(k, c_star); that containment is a proven
// consequence of the bound, so a violation throws std::logic_error rather
// than being reported. Graphs where the closed form is inapplicable come
// back with applicable = false. Non-regular input is rejected.
ScreeningReport screen_counterexample(const Graph& g);

}  // namespace chromabound
