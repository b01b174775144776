#include "chromabound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chromabound {

double Poly::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::from_roots(const std::vector<double>& roots, double scale) {
    std::vector<double> c{scale};
    for (double r : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = c[i - 1] - r * c[i];
        c[0] *= -r;
    }
    return Poly{std::move(c)};
}

Poly Poly::shifted(double k) const {
    Poly q = *this;
    if (q.coeffs.empty()) q.coeffs.push_back(0.0);
    q.coeffs[0] += k;
    return q;
}

std::string Poly::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        double c = coeffs[i];
        if (c == 0.0 && coeffs.size() > 1) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        double a = std::abs(c);
        if (i == 0 || a != 1.0) out << a;
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

PowerDiagTable PowerDiagTable::compute(const Graph& line, int t) {
    return PowerDiagTable{walk_diagonals(line, t)};
}

DiagStats DiagStats::from(const PowerDiagTable& table, const Poly& p) {
    if (p.max_degree() > table.depth())
        throw std::invalid_argument("DiagStats: polynomial degree exceeds table depth");
    const int m = table.dimension();
    if (m == 0) throw std::invalid_argument("DiagStats: empty table");
    DiagStats s;
    s.entries.assign(m, 0.0);
    for (std::size_t l = 0; l < p.coeffs.size(); ++l)
        for (int e = 0; e < m; ++e)
            s.entries[e] += p.coeffs[l] * static_cast<double>(table.rows[l][e]);
    s.W = *std::max_element(s.entries.begin(), s.entries.end());
    s.w = *std::min_element(s.entries.begin(), s.entries.end());
    if (table.depth() >= 3)
        s.delta3 = *std::max_element(table.rows[3].begin(), table.rows[3].end());
    return s;
}

const char* to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::FirstInertial: return "first_inertial";
        case BoundMethod::SecondInertial: return "second_inertial";
        case BoundMethod::HoffmanGeneral: return "hoffman_general";
        case BoundMethod::HoffmanRegular: return "hoffman_regular";
        case BoundMethod::Chi2Closed: return "chi2_closed";
        case BoundMethod::Chi2ClosedRegular: return "chi2_closed_regular";
        case BoundMethod::Chi3ClosedRegular: return "chi3_closed_regular";
        case BoundMethod::Wilf: return "wilf";
    }
    return "?";
}

long long lower_round(double raw) { return static_cast<long long>(std::ceil(raw - kRoundGuard)); }
long long upper_round(double raw) { return static_cast<long long>(std::floor(raw + kRoundGuard)); }

BoundReport first_inertial(const Spectrum& spec_line, const Poly& p, const DiagStats& diag,
                           int m) {
    if (spec_line.dimension() != m)
        throw std::invalid_argument("first_inertial: spectrum dimension does not match edge count");
    if (static_cast<int>(diag.entries.size()) != m)
        throw std::invalid_argument("first_inertial: diagonal size does not match edge count");
    const double tol = spec_line.tol;
    long long above = 0, below = 0;
    for (int i = 0; i < spec_line.distinct_count(); ++i) {
        double v = p(spec_line.values[i]);
        if (v >= diag.w - tol) above += spec_line.multiplicities[i];
        if (v <= diag.W + tol) below += spec_line.multiplicities[i];
    }
    long long denom = std::min(above, below);
    BoundReport r{BoundMethod::FirstInertial, static_cast<double>(m) / denom, 0, p, {}};
    r.integer_bound = lower_round(r.raw);
    return r;
}

BoundReport second_inertial(const Spectrum& spec_line, const Poly& p, bool walk_regular_ok) {
    if (!walk_regular_ok)
        throw InapplicableError("second_inertial: line graph is not t-partially walk-regular");
    const double tol = spec_line.tol;
    const int m = spec_line.dimension();
    double sum = 0.0;
    long long neg = 0, pos = 0;
    for (int i = 0; i < spec_line.distinct_count(); ++i) {
        double v = p(spec_line.values[i]);
        sum += v * spec_line.multiplicities[i];
        if (v < -tol) neg += spec_line.multiplicities[i];
        if (v > tol) pos += spec_line.multiplicities[i];
    }
    if (std::abs(sum) > 1e-6 * m)
        throw InapplicableError("second_inertial: polynomial does not sum to zero over the spectrum");
    if (pos == 0)
        throw InapplicableError("second_inertial: no eigenvalue with positive polynomial value");
    BoundReport r{BoundMethod::SecondInertial,
                  1.0 + static_cast<double>(neg) / static_cast<double>(pos), 0, p, {}};
    r.integer_bound = lower_round(r.raw);
    return r;
}

namespace {

// Smallest p-value over the distinct eigenvalues other than the largest.
double min_excluding_top(const Spectrum& s, const Poly& p) {
    if (s.distinct_count() < 2)
        throw InapplicableError("hoffman: spectrum has a single distinct eigenvalue");
    double lo = p(s.values[1]);
    for (int i = 2; i < s.distinct_count(); ++i) lo = std::min(lo, p(s.values[i]));
    return lo;
}

}  // namespace

BoundReport hoffman_general(const Spectrum& spec_line, const Poly& p, const DiagStats& diag) {
    const double top = p(spec_line.largest());
    const double lam = min_excluding_top(spec_line, p);
    if (top <= lam + spec_line.tol)
        throw InapplicableError("hoffman_general: p(largest eigenvalue) does not dominate");
    BoundReport r{BoundMethod::HoffmanGeneral, (top - lam) / (diag.W - lam), 0, p, {}};
    r.integer_bound = lower_round(r.raw);
    return r;
}

BoundReport hoffman_regular(const Spectrum& spec_line, const Poly& p, const DiagStats& diag,
                            int m) {
    const double top = p(spec_line.largest());
    const double lam = min_excluding_top(spec_line, p);
    if (top <= lam + spec_line.tol)
        throw InapplicableError("hoffman_regular: p(largest eigenvalue) does not dominate");
    BoundReport r{BoundMethod::HoffmanRegular, 0.0, 0, p, {}};
    auto f = static_cast<long long>(std::floor(m * (diag.W - lam) / (top - lam) + kRoundGuard));
    if (f <= 0) {
        // Fewer than one edge per colour class fits: every edge needs its own.
        r.raw = static_cast<double>(m);
    } else {
        r.raw = static_cast<double>(m) / static_cast<double>(f);
    }
    r.integer_bound = lower_round(r.raw);
    return r;
}

namespace {

// Index of the largest distinct eigenvalue <= threshold (+ tol slack).
std::optional<int> threshold_index(const Spectrum& s, double threshold) {
    for (int i = 0; i < s.distinct_count(); ++i)
        if (s.values[i] <= threshold + s.tol) return i;
    return std::nullopt;
}

}  // namespace

BoundReport chi2_closed(const Graph& g) {
    if (g.edge_count() == 0) throw InapplicableError("chi2_closed: graph has no edges");
    Graph line = line_graph(g);
    Spectrum s = adjacency_spectrum(line);
    if (s.distinct_count() < 3)
        throw InapplicableError("chi2_closed: line graph needs three distinct eigenvalues");
    const double theta0 = s.largest();
    const double delta = static_cast<double>(max_degree(line));
    auto idx = threshold_index(s, -delta / theta0);
    if (!idx) throw InapplicableError("chi2_closed: no eigenvalue at or below the threshold");
    if (*idx < 2)
        throw InapplicableError("chi2_closed: threshold eigenvalue sits next to the largest");
    const double ti = s.values[*idx], tp = s.values[*idx - 1];
    const double den = delta + ti * tp;
    if (den <= s.tol) throw InapplicableError("chi2_closed: degenerate denominator");
    BoundReport r{BoundMethod::Chi2Closed, (theta0 - ti) * (theta0 - tp) / den, 0,
                  Poly::from_roots({ti, tp}), {*idx - 1, *idx}};
    r.integer_bound = lower_round(r.raw);
    return r;
}

BoundReport chi2_closed_regular(const Graph& g) {
    if (!regularity(g)) throw std::invalid_argument("chi2_closed_regular: graph is not regular");
    if (g.edge_count() < g.vertex_count())
        throw InapplicableError("chi2_closed_regular: needs at least as many edges as vertices");
    Spectrum s = line_graph_spectrum_regular(g);
    if (s.distinct_count() < 3)
        throw InapplicableError("chi2_closed_regular: line graph needs three distinct eigenvalues");
    const double theta0 = s.largest();
    auto idx = threshold_index(s, -1.0);
    if (!idx)
        throw InapplicableError("chi2_closed_regular: no eigenvalue at or below -1");
    if (*idx < 2)
        throw InapplicableError("chi2_closed_regular: threshold eigenvalue sits next to the largest");
    const double ti = s.values[*idx], tp = s.values[*idx - 1];
    const int m = g.edge_count();
    BoundReport r{BoundMethod::Chi2ClosedRegular, 0.0, 0, Poly::from_roots({ti, tp}),
                  {*idx - 1, *idx}};
    auto f = static_cast<long long>(
        std::floor(m * (theta0 + ti * tp) / ((theta0 - ti) * (theta0 - tp)) + kRoundGuard));
    r.raw = f <= 0 ? static_cast<double>(m) : static_cast<double>(m) / static_cast<double>(f);
    r.integer_bound = lower_round(r.raw);
    return r;
}

BoundReport chi3_closed_regular(const Graph& g) {
    if (!regularity(g)) throw std::invalid_argument("chi3_closed_regular: graph is not regular");
    if (g.edge_count() < g.vertex_count())
        throw InapplicableError("chi3_closed_regular: needs at least as many edges as vertices");
    Graph line = line_graph(g);
    Spectrum s = line_graph_spectrum_regular(g);
    if (s.distinct_count() < 4)
        throw InapplicableError("chi3_closed_regular: line graph needs four distinct eigenvalues");
    const double theta0 = s.largest();
    const double theta_last = s.smallest();
    if (std::abs(theta_last + 2.0) > s.tol)
        throw InapplicableError(
            "chi3_closed_regular: smallest line-graph eigenvalue is not -2");
    PowerDiagTable table = PowerDiagTable::compute(line, 3);
    const double delta3 =
        static_cast<double>(*std::max_element(table.rows[3].begin(), table.rows[3].end()));
    const double threshold =
        -(theta0 * theta0 + theta0 * theta_last - delta3) / (theta0 * (theta_last + 1.0));
    auto idx = threshold_index(s, threshold);
    if (!idx)
        throw InapplicableError("chi3_closed_regular: no eigenvalue at or below the threshold");
    if (*idx < 2)
        throw InapplicableError("chi3_closed_regular: threshold eigenvalue sits next to the largest");
    const double ts = s.values[*idx], tp = s.values[*idx - 1];
    const int m = g.edge_count();
    const double num = delta3 - theta0 * (ts + tp + theta_last) - ts * tp * theta_last;
    const double den = (theta0 - ts) * (theta0 - tp) * (theta0 - theta_last);
    BoundReport r{BoundMethod::Chi3ClosedRegular, 0.0, 0,
                  Poly::from_roots({ts, tp, theta_last}),
                  {*idx - 1, *idx, s.distinct_count() - 1}};
    auto f = static_cast<long long>(std::floor(m * num / den + kRoundGuard));
    r.raw = f <= 0 ? static_cast<double>(m) : static_cast<double>(m) / static_cast<double>(f);
    r.integer_bound = lower_round(r.raw);
    return r;
}

BoundReport wilf(const Graph& g, int t) {
    if (t < 1) throw std::invalid_argument("wilf: t must be at least 1");
    if (g.edge_count() == 0) throw std::invalid_argument("wilf: graph has no edges");
    Graph power = power_graph(line_graph(g), t);
    double top = power.edge_count() == 0 ? 0.0 : adjacency_spectrum(power).largest();
    BoundReport r{BoundMethod::Wilf, 1.0 + top, 0, Poly{}, {}};
    r.integer_bound = upper_round(r.raw);
    return r;
}

Chi2Behaviour chi2_behaviour_class(const Graph& g) {
    auto k = regularity(g);
    if (!k) throw std::invalid_argument("chi2_behaviour_class: graph is not regular");
    Spectrum s = adjacency_spectrum(g);
    auto idx = threshold_index(s, -1.0);
    if (!idx) return Chi2Behaviour::Inapplicable;
    const double ti = s.values[*idx];
    if (ti < -2.0 - s.tol) return Chi2Behaviour::Inapplicable;
    const bool at_minus_one = std::abs(ti + 1.0) <= s.tol;
    const bool divisible = g.vertex_count() % (*k + 1) == 0;
    if (at_minus_one && divisible) return Chi2Behaviour::KPlus1;
    // Remaining verdict needs the next eigenvalue up to be non-positive.
    if (*idx >= 1 && s.values[*idx - 1] <= s.tol) return Chi2Behaviour::KPlus2;
    return Chi2Behaviour::Inapplicable;
}

}  // namespace chromabound
