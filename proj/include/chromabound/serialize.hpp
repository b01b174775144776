#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "chromabound/bounds.hpp"
#include "chromabound/en_analysis.hpp"
#include "chromabound/exact.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/spectral.hpp"

namespace chromabound {

inline nlohmann::json to_json(const Spectrum& s) {
    nlohmann::json vals = nlohmann::json::array();
    for (int i = 0; i < s.distinct_count(); ++i) {
        vals.push_back(
            {{"value", s.values[i]}, {"multiplicity", s.multiplicities[i]}});
    }
    return {{"eigenvalues", vals}, {"tolerance", s.tol}};
}

inline nlohmann::json to_json(const BoundReport& rep) {
    return {{"method", to_string(rep.method)},
            {"raw", rep.raw},
            {"bound", rep.integer_bound},
            {"certificate", rep.certificate.to_string()},
            {"eigen_indices", rep.eigen_indices}};
}

inline nlohmann::json to_json(const ExactResult& res) {
    nlohmann::json j = {
        {"status", res.status == ExactResult::Status::Exact ? "exact" : "time"},
        {"lower", res.lower},
        {"upper", res.upper},
        {"elapsed_ms", res.elapsed.count()}};
    if (res.status == ExactResult::Status::Exact) j["value"] = res.value;
    return j;
}

inline nlohmann::json to_json(const ScreeningReport& rep) {
    nlohmann::json j = {{"name", rep.name},
                        {"k", rep.k},
                        {"applicable", rep.applicable},
                        {"conjecture_value", rep.conjecture_value},
                        {"exceeds_conjecture", rep.exceeds_conjecture}};
    if (rep.applicable) {
        j["bound"] = rep.integer_bound;
        j["raw"] = rep.raw_bound;
        j["c_star"] = rep.c_star;
        j["interval_checked"] = rep.interval_checked;
        if (rep.interval_checked) {
            j["interval"] = {rep.interval.lo, rep.interval.hi};
            j["spectrum_clear"] = rep.spectrum_clear;
        }
    }
    return j;
}

// CSV row matching the en-screen output columns
// name,k,bound,c_star,interval,spectrum_clear. Graphs the closed bound does
// not cover leave the numeric columns empty and note why.
inline std::string screening_csv_row(const ScreeningReport& rep) {
    std::ostringstream out;
    out << rep.name << ',' << rep.k << ',';
    if (!rep.applicable) {
        out << ",,,not applicable";
        return out.str();
    }
    out << rep.integer_bound << ',' << rep.c_star << ',';
    if (rep.interval_checked) {
        out << '(' << rep.interval.lo << ';' << rep.interval.hi << "),"
            << (rep.spectrum_clear ? "yes" : "no");
    } else {
        out << ",not a candidate";
    }
    return out.str();
}

// Edge colouring as {"t": t, "colours": [[u, v, colour], ...]} with edges in
// the graph's edge order.
inline nlohmann::json colouring_to_json(const Graph& g,
                                        const EdgeColouring& c) {
    nlohmann::json edges = nlohmann::json::array();
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        edges.push_back({es[i].first, es[i].second, c.colours[i]});
    }
    return {{"t", c.t}, {"colours", edges}};
}

inline EdgeColouring colouring_from_json(const Graph& g,
                                         const nlohmann::json& j) {
    EdgeColouring c;
    c.t = j.at("t").get<int>();
    c.colours.assign(g.edge_count(), -1);
    for (const auto& entry : j.at("colours")) {
        int u = entry.at(0).get<int>();
        int v = entry.at(1).get<int>();
        auto idx = g.edge_index(u, v);
        if (!idx) {
            throw std::invalid_argument("colouring references edge (" +
                                        std::to_string(u) + "," +
                                        std::to_string(v) +
                                        ") absent from the graph");
        }
        c.colours[*idx] = entry.at(2).get<int>();
    }
    return c;
}

}  // namespace chromabound
