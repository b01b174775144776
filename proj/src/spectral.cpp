#include "chromabound/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace chromabound {

int Spectrum::dimension() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> out;
    out.reserve(dimension());
    for (std::size_t i = 0; i < values.size(); ++i)
        out.insert(out.end(), multiplicities[i], values[i]);
    return out;
}

Spectrum group_eigenvalues(const std::vector<double>& descending, double tol) {
    if (tol <= 0) throw std::invalid_argument("group_eigenvalues: tol must be positive");
    if (descending.empty()) throw std::invalid_argument("group_eigenvalues: empty input");
    for (std::size_t i = 1; i < descending.size(); ++i)
        if (descending[i] > descending[i - 1] + tol)
            throw std::invalid_argument("group_eigenvalues: input not sorted descending");

    Spectrum s;
    s.tol = tol;
    std::size_t i = 0;
    while (i < descending.size()) {
        std::size_t j = i + 1;
        double sum = descending[i];
        // Chain rather than anchor: successive gaps <= tol merge.
        while (j < descending.size() && descending[j - 1] - descending[j] <= tol) {
            sum += descending[j];
            ++j;
        }
        s.values.push_back(sum / static_cast<double>(j - i));
        s.multiplicities.push_back(static_cast<int>(j - i));
        i = j;
    }
    return s;
}

namespace {

std::vector<double> eigenvalues_descending(const Graph& g) {
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("adjacency_spectrum: eigensolver did not converge");
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::reverse(vals.begin(), vals.end());
    return vals;
}

void check_trace_invariants(const Spectrum& s, int m, const char* who) {
    double trace = 0.0, trace_sq = 0.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        trace += s.values[i] * s.multiplicities[i];
        trace_sq += s.values[i] * s.values[i] * s.multiplicities[i];
    }
    if (std::abs(trace) > 1e-6)
        throw std::runtime_error(std::string(who) + ": trace invariant violated");
    if (std::abs(trace_sq - 2.0 * m) > 1e-6)
        throw std::runtime_error(std::string(who) + ": trace-square invariant violated");
}

}  // namespace

Spectrum adjacency_spectrum(const Graph& g, double tol) {
    if (g.vertex_count() < 1) throw std::invalid_argument("adjacency_spectrum: empty graph");
    Spectrum s = group_eigenvalues(eigenvalues_descending(g), tol);
    check_trace_invariants(s, g.edge_count(), "adjacency_spectrum");
    return s;
}

Spectrum line_graph_spectrum_regular(const Graph& g, double tol) {
    auto k = regularity(g);
    if (!k) throw std::invalid_argument("line_graph_spectrum_regular: graph is not regular");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m < n)
        throw std::invalid_argument(
            "line_graph_spectrum_regular: needs at least as many edges as vertices");

    std::vector<double> vals = eigenvalues_descending(g);
    for (double& v : vals) v += *k - 2;
    vals.insert(vals.end(), m - n, -2.0);
    std::sort(vals.rbegin(), vals.rend());
    Spectrum s = group_eigenvalues(vals, tol);
    check_trace_invariants(s, line_graph(g).edge_count(), "line_graph_spectrum_regular");
    return s;
}

bool interlacing_check(const Spectrum& inner, const Spectrum& outer) {
    const auto a = outer.expanded();
    const auto b = inner.expanded();
    const std::size_t big = a.size(), small = b.size();
    if (small > big)
        throw std::invalid_argument("interlacing_check: inner spectrum larger than outer");
    double tol = std::max(inner.tol, outer.tol);
    for (std::size_t i = 0; i < small; ++i) {
        if (b[i] > a[i] + tol) return false;
        if (b[i] < a[i + big - small] - tol) return false;
    }
    return true;
}

}  // namespace chromabound
