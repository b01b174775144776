#include "chromabound/table.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "chromabound/bounds.hpp"
#include "chromabound/constructions.hpp"
#include "chromabound/exact.hpp"
#include "chromabound/poly_opt.hpp"

namespace chromabound {

std::string TableCell::text() const {
    switch (kind) {
        case Kind::Value:
            return std::to_string(value);
        case Kind::Time:
            return "time";
        case Kind::NotApplicable:
            return "na";
    }
    throw std::logic_error("unhandled TableCell kind");
}

namespace {

TableCell closed_hoffman_cell(const Graph& g, int t) {
    try {
        BoundReport rep;
        if (t == 2) {
            rep = regularity(g) ? chi2_closed_regular(g) : chi2_closed(g);
        } else {
            // No closed distance-3 form exists for irregular graphs.
            if (!regularity(g)) return TableCell::na();
            rep = chi3_closed_regular(g);
        }
        return TableCell::of(rep.integer_bound);
    } catch (const InapplicableError&) {
        return TableCell::na();
    }
}

TableCell inertial1_cell(const Graph& g, int t,
                         std::chrono::milliseconds budget) {
    OptResult res = optimize_first_inertial(g, t, budget);
    if (res.timed_out && res.search_log.empty()) return TableCell::time();
    return TableCell::of(res.best.integer_bound);
}

TableCell exact_cell(const Graph& g, int t, std::chrono::milliseconds budget) {
    ExactResult res = exact_chi_t_prime(g, t, budget);
    if (res.status == ExactResult::Status::TimedOut) return TableCell::time();
    return TableCell::of(res.value);
}

}  // namespace

TableRow compute_table_row(const std::string& name, const Graph& g, int t,
                           std::chrono::milliseconds budget) {
    if (t != 2 && t != 3) {
        throw std::invalid_argument("table rows cover t = 2 and t = 3 only");
    }
    TableRow row;
    row.name = name;
    row.hoffman_closed = closed_hoffman_cell(g, t);
    row.inertial1 = inertial1_cell(g, t, budget);
    row.wilf_bound = TableCell::of(wilf(g, t).integer_bound);
    row.exact = exact_cell(g, t, budget);
    row.tight = row.exact.is_value() &&
                ((row.hoffman_closed.is_value() &&
                  row.hoffman_closed.value == row.exact.value) ||
                 (row.inertial1.is_value() &&
                  row.inertial1.value == row.exact.value));
    return row;
}

std::vector<TableRow> build_table(const TableOptions& options) {
    if (options.t != 2 && options.t != 3) {
        throw std::invalid_argument("table supports t = 2 and t = 3 only");
    }
    std::vector<std::string> names =
        options.names.empty() ? catalog_names() : options.names;

    struct Job {
        std::string name;
        Graph graph;
    };
    std::vector<Job> jobs;
    jobs.reserve(names.size());
    for (const auto& n : names) jobs.push_back({n, named(n)});

    std::vector<TableRow> rows(jobs.size());
    int workers = options.workers > 0 ? options.workers : 1;
    workers = std::min<int>(workers, static_cast<int>(jobs.size()));

    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            rows[i] = compute_table_row(jobs[i].name, jobs[i].graph, options.t,
                                        options.budget);
        }
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                rows[i] = compute_table_row(jobs[i].name, jobs[i].graph,
                                            options.t, options.budget);
            }
        });
    }
    for (auto& th : pool) th.join();
    return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "name,hoffman_closed,inertial1,wilf,exact,tight\n";
    for (const auto& row : rows) {
        out << row.name << ',' << row.hoffman_closed.text() << ','
            << row.inertial1.text() << ',' << row.wilf_bound.text() << ','
            << row.exact.text() << ',' << (row.tight ? "tight" : "") << '\n';
    }
    return out.str();
}

}  // namespace chromabound
