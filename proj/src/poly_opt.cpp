#include "chromabound/poly_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace chromabound {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxEnumeratedEigenvalues = 64;
constexpr int kMaxDegree = 6;

void check_caps(int pool, int t) {
    if (t < 1 || t > kMaxDegree)
        throw std::invalid_argument("polynomial degree t must be between 1 and 6");
    if (pool > kMaxEnumeratedEigenvalues)
        throw std::invalid_argument("too many distinct eigenvalues to enumerate (cap 64)");
}

// Visits index combinations of each size 1..max_size in lexicographic order.
template <typename F>
void for_each_subset(int pool, int max_size, F&& visit) {
    for (int r = 1; r <= std::min(max_size, pool); ++r) {
        std::vector<int> comb(r);
        for (int i = 0; i < r; ++i) comb[i] = i;
        while (true) {
            if (!visit(comb)) return;
            int i = r - 1;
            while (i >= 0 && comb[i] == pool - r + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < r; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
}

std::string candidate_name(const Poly& p) { return "p(x) = " + p.to_string(); }

void record(OptResult& out, const std::string& name, const BoundReport& rep) {
    out.search_log.emplace_back(name, rep.raw);
    if (out.search_log.size() == 1 || rep.raw > out.best.raw) out.best = rep;
}

}  // namespace

const char* to_string(OptMethod m) {
    switch (m) {
        case OptMethod::ClosedForm: return "closed_form";
        case OptMethod::SubsetEnumeration: return "subset_enumeration";
        case OptMethod::MilpExact: return "milp_exact";
    }
    return "?";
}

OptResult optimize_hoffman(const Graph& g, int t) {
    if (t < 1 || t > kMaxDegree)
        throw std::invalid_argument("optimize_hoffman: t must be between 1 and 6");
    const bool regular = regularity(g).has_value();

    if (t == 2) {
        try {
            BoundReport rep = regular ? chi2_closed_regular(g) : chi2_closed(g);
            return OptResult{rep, {{"closed form", rep.raw}}, OptMethod::ClosedForm, false};
        } catch (const InapplicableError&) {
        }
    }
    if (t == 3 && regular) {
        try {
            BoundReport rep = chi3_closed_regular(g);
            return OptResult{rep, {{"closed form", rep.raw}}, OptMethod::ClosedForm, false};
        } catch (const InapplicableError&) {
        }
    }

    Graph line = line_graph(g);
    if (line.vertex_count() == 0)
        throw InapplicableError("optimize_hoffman: graph has no edges");
    Spectrum spec = adjacency_spectrum(line);
    check_caps(spec.distinct_count() - 1, t);
    PowerDiagTable table = PowerDiagTable::compute(line, t);
    const int m = g.edge_count();

    OptResult out;
    out.method = OptMethod::SubsetEnumeration;
    // Root pool: every distinct eigenvalue except the largest. A root at the
    // largest eigenvalue zeroes the numerator, so it never helps.
    for_each_subset(spec.distinct_count() - 1, t, [&](const std::vector<int>& comb) {
        std::vector<double> roots;
        for (int idx : comb) roots.push_back(spec.values[idx + 1]);
        Poly p = Poly::from_roots(roots);
        try {
            DiagStats diag = DiagStats::from(table, p);
            BoundReport rep = regular ? hoffman_regular(spec, p, diag, m)
                                      : hoffman_general(spec, p, diag);
            record(out, candidate_name(p), rep);
        } catch (const InapplicableError&) {
        }
        return true;
    });
    if (out.search_log.empty())
        throw InapplicableError("optimize_hoffman: no applicable candidate polynomial");
    return out;
}

OptResult optimize_first_inertial(const Graph& g, int t, std::chrono::milliseconds budget,
                                  MilpSolver* solver) {
    Graph line = line_graph(g);
    if (line.vertex_count() == 0)
        throw InapplicableError("optimize_first_inertial: graph has no edges");
    Spectrum spec = adjacency_spectrum(line);
    check_caps(spec.distinct_count(), t);
    PowerDiagTable table = PowerDiagTable::compute(line, t);
    const int m = g.edge_count();

    if (solver) {
        MilpModel model = build_first_inertial_model(spec, table, t);
        if (auto sol = solver->solve(model, budget); sol && sol->proven_optimal) {
            Poly p{std::vector<double>(sol->values.begin(), sol->values.begin() + t + 1)};
            BoundReport rep = first_inertial(spec, p, DiagStats::from(table, p), m);
            return OptResult{rep, {{candidate_name(p), rep.raw}}, OptMethod::MilpExact, false};
        }
    }

    OptResult out;
    out.method = OptMethod::SubsetEnumeration;
    const auto deadline = Clock::now() + budget;
    for_each_subset(spec.distinct_count(), t, [&](const std::vector<int>& comb) {
        std::vector<double> roots;
        for (int idx : comb) roots.push_back(spec.values[idx]);
        for (double sign : {1.0, -1.0}) {
            Poly p = Poly::from_roots(roots, sign);
            BoundReport rep = first_inertial(spec, p, DiagStats::from(table, p), m);
            record(out, candidate_name(p), rep);
        }
        if (Clock::now() >= deadline) {
            out.timed_out = true;
            return false;
        }
        return true;
    });
    return out;
}

OptResult optimize_second_inertial(const Graph& g, int t, std::chrono::milliseconds budget,
                                   MilpSolver* solver) {
    (void)solver;  // no exact formulation wired; kept for interface symmetry
    Graph line = line_graph(g);
    if (line.vertex_count() == 0)
        throw InapplicableError("optimize_second_inertial: graph has no edges");
    int failing = 0;
    if (!is_t_partially_walk_regular(line, t, &failing)) {
        std::ostringstream msg;
        msg << "optimize_second_inertial: line graph is not " << t
            << "-partially walk-regular (diagonal of A^" << failing << " is not constant)";
        throw InapplicableError(msg.str());
    }
    Spectrum spec = adjacency_spectrum(line);
    check_caps(spec.distinct_count(), t);
    const int m = spec.dimension();

    OptResult out;
    out.method = OptMethod::SubsetEnumeration;
    const auto deadline = Clock::now() + budget;
    for_each_subset(spec.distinct_count(), t, [&](const std::vector<int>& comb) {
        std::vector<double> roots;
        for (int idx : comb) roots.push_back(spec.values[idx]);
        for (double sign : {1.0, -1.0}) {
            Poly p = Poly::from_roots(roots, sign);
            // Constant shift to make the candidate sum to zero over the spectrum.
            double sum = 0.0;
            for (int i = 0; i < spec.distinct_count(); ++i)
                sum += p(spec.values[i]) * spec.multiplicities[i];
            p = p.shifted(-sum / m);
            try {
                record(out, candidate_name(p), second_inertial(spec, p, true));
            } catch (const InapplicableError&) {
            }
        }
        if (Clock::now() >= deadline) {
            out.timed_out = true;
            return false;
        }
        return true;
    });
    if (out.search_log.empty())
        throw InapplicableError("optimize_second_inertial: no applicable candidate polynomial");
    return out;
}

MilpModel build_first_inertial_model(const Spectrum& spec_line, const PowerDiagTable& table,
                                     int t) {
    if (t < 1 || t > kMaxDegree)
        throw std::invalid_argument("build_first_inertial_model: t must be between 1 and 6");
    if (table.depth() < t)
        throw std::invalid_argument("build_first_inertial_model: table too shallow");
    const int d = spec_line.distinct_count();
    const int m = table.dimension();
    constexpr double kEps = 1e-6;
    const double inf = std::numeric_limits<double>::infinity();

    // Continuous: c_0..c_t, then W, w, z. Binary: a_0..a_{d-1}, b_0..b_{d-1}, y.
    MilpModel model;
    model.num_continuous = t + 4;
    model.num_binary = 2 * d + 1;
    const int vW = t + 1, vw = t + 2, vz = t + 3;
    const int va = model.num_continuous, vb = va + d, vy = vb + d;

    // Data-driven big-M from the coefficient box |c_l| <= 1.
    double mag = 1.0;
    for (int i = 0; i < d; ++i) {
        double pw = 1.0;
        for (int l = 0; l <= t; ++l) {
            mag = std::max(mag, std::abs(pw));
            pw *= spec_line.values[i];
        }
    }
    for (int l = 0; l <= t; ++l)
        for (int e = 0; e < m; ++e)
            mag = std::max(mag, std::abs(static_cast<double>(table.rows[l][e])));
    const double big = 2.0 * (t + 1) * mag + 1.0;

    for (int l = 0; l <= t; ++l)
        model.constraints.push_back({{{l, 1.0}}, -1.0, 1.0});

    // W dominates every diagonal linear form; w sits below every one.
    for (int e = 0; e < m; ++e) {
        MilpModel::Constraint hi{{{vW, 1.0}}, 0.0, inf};
        MilpModel::Constraint lo{{{vw, -1.0}}, 0.0, inf};
        for (int l = 0; l <= t; ++l) {
            double a = static_cast<double>(table.rows[l][e]);
            hi.terms.push_back({l, -a});
            lo.terms.push_back({l, a});
        }
        model.constraints.push_back(std::move(hi));
        model.constraints.push_back(std::move(lo));
    }

    // Membership indicators: a_i = 0 forces p(theta_i) < w, b_i = 0 forces
    // p(theta_i) > W, so minimization can only drop eigenvalues that truly
    // leave the count sets.
    for (int i = 0; i < d; ++i) {
        MilpModel::Constraint above{{{vw, -1.0}, {va + i, -big}}, -inf, -kEps};
        MilpModel::Constraint below{{{vW, -1.0}, {vb + i, big}}, kEps, inf};
        double pw = 1.0;
        for (int l = 0; l <= t; ++l) {
            above.terms.push_back({l, pw});
            below.terms.push_back({l, pw});
            pw *= spec_line.values[i];
        }
        model.constraints.push_back(std::move(above));
        model.constraints.push_back(std::move(below));
    }

    // z >= min(count_above, count_below) via the selector binary y.
    MilpModel::Constraint za{{{vz, 1.0}, {vy, big}}, 0.0, inf};
    MilpModel::Constraint zb{{{vz, 1.0}, {vy, -big}}, -big, inf};
    for (int i = 0; i < d; ++i) {
        za.terms.push_back({va + i, -static_cast<double>(spec_line.multiplicities[i])});
        zb.terms.push_back({vb + i, -static_cast<double>(spec_line.multiplicities[i])});
    }
    model.constraints.push_back(std::move(za));
    model.constraints.push_back(std::move(zb));

    model.objective = {{vz, 1.0}};
    model.maximize = false;
    return model;
}

}  // namespace chromabound
