#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "chromabound/graph.hpp"

namespace chromabound {

// One table cell: an integer, a timeout, or an inapplicable method. Timeouts
// print as "time", inapplicable methods as "na".
struct TableCell {
    enum class Kind { Value, Time, NotApplicable };

    Kind kind = Kind::NotApplicable;
    long long value = 0;

    static TableCell of(long long v) { return {Kind::Value, v}; }
    static TableCell time() { return {Kind::Time, 0}; }
    static TableCell na() { return {Kind::NotApplicable, 0}; }

    bool is_value() const { return kind == Kind::Value; }
    std::string text() const;
};

// Row of the comparison table: closed-form Hoffman bound, optimized first
// inertial bound, Wilf bound, exact value, and whether one of the lower
// bounds meets the exact value.
struct TableRow {
    std::string name;
    TableCell hoffman_closed;
    TableCell inertial1;
    TableCell wilf_bound;
    TableCell exact;
    bool tight = false;
};

struct TableOptions {
    int t = 2;
    std::chrono::milliseconds budget{std::chrono::seconds(300)};
    // Catalog names to include; empty means the whole catalog. Unknown names
    // propagate the catalog error.
    std::vector<std::string> names;
    // Rows are computed by this many threads; output order is input order
    // regardless.
    int workers = 1;
};

// Single row for one graph. t must be 2 or 3. The budget caps the exact
// solver and each bound optimization separately.
TableRow compute_table_row(const std::string& name, const Graph& g, int t,
                           std::chrono::milliseconds budget);

std::vector<TableRow> build_table(const TableOptions& options);

// CSV with fixed header name,hoffman_closed,inertial1,wilf,exact,tight. The
// tight column prints "tight" or stays empty.
std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace chromabound
