#include "chromabound/en_analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "chromabound/bounds.hpp"
#include "chromabound/spectral.hpp"

namespace chromabound {

boost::multiprecision::cpp_rational en_conjecture_value(int delta) {
    if (delta < 1) throw std::invalid_argument("en_conjecture_value: need delta >= 1");
    boost::multiprecision::cpp_int d = delta;
    if (delta % 2 == 0) return {5 * d * d, 4};
    return {5 * d * d - 2 * d + 1, 4};
}

namespace {

void check_c(double c, const char* who) {
    if (!(c > 1.0)) throw std::invalid_argument(std::string(who) + ": need c > 1");
}

}  // namespace

Interval forbidden_interval_regular(int k, double c) {
    if (k < 2) throw std::invalid_argument("forbidden_interval_regular: need k >= 2");
    check_c(c, "forbidden_interval_regular");
    if (k == 2)
        return {-1.0, -2.0 + 4.0 * std::sqrt(8.0 * c * c - 6.0 * c) / (4.0 * c - 1.0)};
    return {static_cast<double>(-k + 1), (c * k - k) / (c * k - 1.0)};
}

double regular_gap_guarantee(int k, double c) {
    if (k < 3) throw std::invalid_argument("regular_gap_guarantee: need k >= 3");
    check_c(c, "regular_gap_guarantee");
    return k * (c * k + c - 2.0) / (c * k - 1.0);
}

Interval forbidden_interval_general(int delta, double c) {
    if (delta < 2) throw std::invalid_argument("forbidden_interval_general: need delta >= 2");
    check_c(c, "forbidden_interval_general");
    const double d = delta;
    if (delta < 5) {
        double arg = c * d * d * d * (c * d * d - (c + 1.0) * d + 1.0);
        return {-1.0, 2.0 * std::sqrt(arg) / (c * d * d - 1.0) - 2.0};
    }
    return {-1.0, (c * d * d * d - (c + 1.0) * d * d + 1.0) / (2.0 * c * d * d - d - 1.0)};
}

ScreeningReport screen_counterexample(const Graph& g) {
    auto k = regularity(g);
    if (!k || *k < 2)
        throw std::invalid_argument("screen_counterexample: need a k-regular graph, k >= 2");

    ScreeningReport rep;
    rep.k = *k;
    rep.conjecture_value = en_conjecture_value(*k).convert_to<double>();

    try {
        BoundReport bound = chi2_closed_regular(g);
        rep.applicable = true;
        rep.raw_bound = bound.raw;
        rep.integer_bound = bound.integer_bound;
        rep.c_star = bound.raw / (static_cast<double>(*k) * *k);
        rep.exceeds_conjecture = bound.raw > rep.conjecture_value + 1e-6;
    } catch (const InapplicableError&) {
        return rep;
    }

    if (rep.c_star > 1.0) {
        rep.interval_checked = true;
        rep.interval = forbidden_interval_regular(*k, rep.c_star);
        Spectrum s = adjacency_spectrum(g);
        for (double v : s.expanded())
            if (rep.interval.lo + kSpectralTol < v && v < rep.interval.hi - kSpectralTol) {
                rep.spectrum_clear = false;
                throw std::logic_error(
                    "screen_counterexample: eigenvalue " + std::to_string(v) +
                    " inside the forbidden interval, bound computation is inconsistent");
            }
    }
    return rep;
}

}  // namespace chromabound
