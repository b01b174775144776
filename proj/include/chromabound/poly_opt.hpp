#pragma once

#include "chromabound/bounds.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chromabound {

// Narrow mixed-integer model so an external solver can be plugged in without
// touching the optimizers. Variables are indexed 0..num_continuous-1
// (continuous) then num_continuous..num_continuous+num_binary-1 (binary).
struct MilpModel {
    struct Term {
        int var;
        double coeff;
    };
    struct Constraint {
        std::vector<Term> terms;
        double lo;
        double hi;
    };

    int num_continuous = 0;
    int num_binary = 0;
    std::vector<Constraint> constraints;
    std::vector<Term> objective;
    bool maximize = true;
};

struct MilpSolution {
    bool proven_optimal = false;
    std::vector<double> values;
    double objective = 0.0;
};

class MilpSolver {
public:
    virtual ~MilpSolver() = default;
    virtual std::optional<MilpSolution> solve(const MilpModel& model,
                                              std::chrono::milliseconds budget) = 0;
};

enum class OptMethod { ClosedForm, SubsetEnumeration, MilpExact };

const char* to_string(OptMethod m);

// Outcome of a polynomial search: the winning bound, every candidate that
// evaluated successfully, and which route produced the winner.
struct OptResult {
    BoundReport best;
    std::vector<std::pair<std::string, double>> search_log;
    OptMethod method = OptMethod::SubsetEnumeration;
    bool timed_out = false;
};

// Best Hoffman-type bound over polynomials of degree <= t. Dispatches to the
// closed forms where they exist (t = 2 always, t = 3 for regular graphs) and
// otherwise enumerates products over root subsets of the distinct line-graph
// eigenvalues below the largest.
OptResult optimize_hoffman(const Graph& g, int t);

// Best first inertial-type bound. The default route enumerates signed root
// subset products; a MILP solver, when supplied, replaces it with the exact
// linearized formulation.
OptResult optimize_first_inertial(const Graph& g, int t, std::chrono::milliseconds budget,
                                  MilpSolver* solver = nullptr);

// Best second inertial-type bound; every candidate is shifted by a constant
// so it sums to zero over the line-graph spectrum. Requires the line graph to
// be t-partially walk-regular.
OptResult optimize_second_inertial(const Graph& g, int t, std::chrono::milliseconds budget,
                                   MilpSolver* solver = nullptr);

// Exact MILP formulation of the first inertial-type bound search, exposed for
// solver adapters and structural tests: coefficients c_0..c_t continuous, one
// binary per (distinct eigenvalue, side) membership decision, big-M tie of
// the counts to the diagonal extremes.
MilpModel build_first_inertial_model(const Spectrum& spec_line, const PowerDiagTable& table,
                                     int t);

}  // namespace chromabound
