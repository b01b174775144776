// Acceptance gate for the whole artifact. Each numbered criterion prints one
// [PASS]/[FAIL] line; the exit code is the number of failures. Criteria 1 and
// 2 drive the command line binary (path in argv[1]); the rest call the
// library directly.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chromabound/bounds.hpp"
#include "chromabound/constructions.hpp"
#include "chromabound/en_analysis.hpp"
#include "chromabound/exact.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/graph_io.hpp"
#include "chromabound/poly_opt.hpp"
#include "chromabound/spectral.hpp"
#include "corpus.hpp"

using namespace chromabound;
using namespace std::chrono_literals;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null < /dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    Run r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::string note;

    void fail(const std::string& why) {
        ok = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
    void annotate(const std::string& extra) {
        if (!note.empty()) note += "; ";
        note += extra;
    }
};

// ---------------------------------------------------------------------------

struct TableOneRow {
    long long hoffman, inertial1, wilf, exact;
};

Check criterion_table_t2() {
    const std::vector<std::pair<std::string, TableOneRow>> expected = {
        {"Petersen", {5, 3, 13, 5}},
        {"Heawood", {7, 4, 13, 7}},
        {"Pappus", {6, 4, 13, 6}},
        {"Nauru", {6, 4, 13, 6}},
        {"MoebiusKantor", {6, 3, 13, 6}},
        {"Frucht", {6, 5, 10, 6}},
        {"Gray", {6, 5, 13, 6}},
        {"Desargues", {5, 3, 13, 5}},
        {"Thomsen", {9, 9, 9, 9}},
        {"Octahedron", {12, 12, 12, 12}},
        {"Franklin", {6, 3, 12, 6}},
        {"Clebsch", {10, 4, 37, 10}},
        {"Dyck", {6, 3, 13, 6}},
        {"Hexahedron", {6, 3, 11, 6}},
        {"TruncatedTetrahedron", {6, 5, 10, 6}},
        {"Dodecahedron", {5, 4, 13, 5}},
    };
    Check c;
    for (const auto& [name, want] : expected) {
        auto t0 = Clock::now();
        Run r = run_cli("table --t 2 --names " + name + " --budget 300");
        double secs = seconds_since(t0);
        if (r.code != 0) {
            c.fail(name + ": exit " + std::to_string(r.code));
            continue;
        }
        if (secs > 300.0) c.fail(name + ": row took " + std::to_string(secs) + " s");
        auto rows = parse_csv(r.out);
        if (rows.size() != 2 || rows[1].size() < 5) {
            c.fail(name + ": unexpected csv shape");
            continue;
        }
        const auto& cells = rows[1];
        if (cells[1] != std::to_string(want.hoffman))
            c.fail(name + ": hoffman " + cells[1]);
        if (cells[3] != std::to_string(want.wilf)) c.fail(name + ": wilf " + cells[3]);
        if (cells[4] != std::to_string(want.exact))
            c.fail(name + ": exact " + cells[4]);
        // The first-inertial column is exact when the optimizer finds the
        // reference maximum; a smaller value is a legal fallback and only
        // gets reported.
        long long got_inertial = std::stoll(cells[2]);
        if (got_inertial > want.inertial1) {
            c.fail(name + ": inertial1 " + cells[2] + " above table value");
        } else if (got_inertial < want.inertial1) {
            c.annotate(name + ": inertial1 fallback " + cells[2] + " < " +
                       std::to_string(want.inertial1));
        }
    }
    return c;
}

Check criterion_table_t3() {
    const std::vector<std::pair<std::string, long long>> closed = {
        {"Pappus", 9},       {"Nauru", 9},        {"Gray", 9},
        {"MoebiusKantor", 12}, {"Dodecahedron", 10}, {"TruncatedTetrahedron", 9},
    };
    const std::map<std::string, long long> exact = {
        {"Nauru", 9}, {"Pappus", 9}, {"Gray", 9}, {"MoebiusKantor", 12},
        {"Dodecahedron", 10},
    };
    Check c;
    std::string names;
    for (const auto& [name, _] : closed) names += (names.empty() ? "" : ",") + name;
    Run r = run_cli("table --t 3 --names " + names + " --budget 300");
    if (r.code != 0) {
        c.fail("exit " + std::to_string(r.code));
        return c;
    }
    auto rows = parse_csv(r.out);
    if (rows.size() != closed.size() + 1) {
        c.fail("unexpected row count");
        return c;
    }
    for (std::size_t i = 0; i < closed.size(); ++i) {
        const auto& cells = rows[i + 1];
        const auto& [name, want] = closed[i];
        if (cells[0] != name || cells.size() < 5) {
            c.fail(name + ": row mismatch");
            continue;
        }
        if (cells[1] != std::to_string(want))
            c.fail(name + ": closed " + cells[1] + " != " + std::to_string(want));
        auto it = exact.find(name);
        if (it != exact.end() && cells[4] != std::to_string(it->second))
            c.fail(name + ": exact " + cells[4] + " != " +
                   std::to_string(it->second));
    }
    return c;
}

Check criterion_products_t2() {
    Check c;
    auto t0 = Clock::now();
    for (auto [q, q2] : std::vector<std::pair<int, int>>{
             {4, 4}, {4, 8}, {8, 8}, {8, 12}, {12, 12}}) {
        std::string tag = "(" + std::to_string(q) + "," + std::to_string(q2) + ")";
        if (!balbiprod_tight_predicate(q, q2)) {
            c.fail(tag + ": predicate false");
            continue;
        }
        Graph g = balanced_bipartite_product(cycle_bipartite_ordered(q),
                                             cycle_bipartite_ordered(q2));
        if (chi2_closed_regular(g).integer_bound != 6)
            c.fail(tag + ": bound != 6");
        if (!validate_colouring(g, six_colouring_cycles(q, q2)).valid)
            c.fail(tag + ": colouring invalid");
    }
    if (seconds_since(t0) > 60.0) c.fail("exceeded 60 s");
    return c;
}

Check criterion_gm_t3() {
    Check c;
    auto t0 = Clock::now();
    for (int k = 2; k <= 6; ++k) {
        std::string tag = "GM(" + std::to_string(2 * k) + ")";
        Graph g = guo_mohar(2 * k);
        if (chi3_closed_regular(g).integer_bound != 12)
            c.fail(tag + ": bound != 12");

        // Intermediates the proof pins down: top and bottom of the line
        // spectrum, the threshold pair around zero, and the walk count.
        Spectrum line = line_graph_spectrum_regular(g);
        int s = -1;
        for (std::size_t i = 0; i < line.values.size(); ++i)
            if (std::abs(line.values[i]) <= 1e-9) s = static_cast<int>(i);
        if (std::abs(line.values.front() - 4.0) > 1e-9) c.fail(tag + ": top != 4");
        if (std::abs(line.values.back() + 2.0) > 1e-9) c.fail(tag + ": bottom != -2");
        if (s <= 0) {
            c.fail(tag + ": no zero eigenvalue");
        } else if (std::abs(line.values[s - 1] - 2.0) > 1e-9) {
            c.fail(tag + ": value above zero != 2");
        }
        PowerDiagTable table = PowerDiagTable::compute(line_graph(g), 3);
        std::int64_t delta3 = 0;
        for (std::int64_t v : table.rows[3]) delta3 = std::max(delta3, v);
        if (delta3 != 4) c.fail(tag + ": walk count " + std::to_string(delta3));

        if (!validate_colouring(g, twelve_colouring_gm(2 * k)).valid)
            c.fail(tag + ": colouring invalid");
    }
    if (seconds_since(t0) > 60.0) c.fail("exceeded 60 s");
    return c;
}

Check criterion_gm_spectrum() {
    Check c;
    for (int k = 2; k <= 12; ++k) {
        std::string tag = "k=" + std::to_string(k);
        auto actual = adjacency_spectrum(guo_mohar(k)).expanded();
        auto predicted = gm_spectrum_formula(k).expanded();
        if (actual.size() != predicted.size()) {
            c.fail(tag + ": size mismatch");
            continue;
        }
        for (std::size_t i = 0; i < actual.size(); ++i)
            if (std::abs(actual[i] - predicted[i]) > 1e-7) {
                c.fail(tag + ": entry " + std::to_string(i));
                break;
            }
        for (double v : actual)
            if (v > -1.0 + 1e-7 && v < 1.0 - 1e-7) {
                c.fail(tag + ": eigenvalue " + std::to_string(v) + " in gap");
                break;
            }
    }
    return c;
}

Check criterion_line_spectrum() {
    Check c;
    for (const auto& name : catalog_names()) {
        Graph g = named(name);
        if (!regularity(g)) continue;
        auto fast = line_graph_spectrum_regular(g).expanded();
        auto direct = adjacency_spectrum(line_graph(g)).expanded();
        if (fast.size() != direct.size()) {
            c.fail(name + ": size mismatch");
            continue;
        }
        for (std::size_t i = 0; i < fast.size(); ++i)
            if (std::abs(fast[i] - direct[i]) > 1e-7) {
                c.fail(name + ": entry " + std::to_string(i));
                break;
            }
    }
    return c;
}

Check criterion_exact_oracle() {
    Check c;
    std::vector<Graph> corpus = corpus::connected_graphs_max_edges(8);
    if (corpus.size() != 358)
        c.fail("corpus size " + std::to_string(corpus.size()));
    int mismatches = 0;
    for (const Graph& g : corpus)
        for (int t : {1, 2, 3}) {
            ExactResult r = exact_chi_t_prime(g, t, 10'000ms);
            int oracle = brute_force_chi(power_graph(line_graph(g), t),
                                         g.edge_count());
            if (r.status != ExactResult::Status::Exact || r.value != oracle)
                ++mismatches;
        }
    if (mismatches > 0)
        c.fail(std::to_string(mismatches) + " oracle disagreements");

    int solved = 0;
    for (const auto& name : catalog_names()) {
        Graph g = named(name);
        ExactResult r = exact_chi_t_prime(g, 1, 300'000ms);
        if (r.status != ExactResult::Status::Exact) continue;
        ++solved;
        long long delta = max_degree(g);
        if (r.value < delta || r.value > delta + 1)
            c.fail(name + ": edge chromatic " + std::to_string(r.value) +
                   " outside {" + std::to_string(delta) + "," +
                   std::to_string(delta + 1) + "}");
    }
    c.annotate(std::to_string(solved) + "/19 catalog graphs solved at t=1");
    return c;
}

Check criterion_srg_wilf() {
    Check c;
    if (srg_wilf(SrgParams{10, 3, 0, 1}) != 13) c.fail("srg(10,3,0,1) != 13");
    if (srg_wilf(SrgParams{16, 5, 0, 2}) != 37) c.fail("srg(16,5,0,2) != 37");
    if (wilf(named("Petersen"), 2).integer_bound != 13)
        c.fail("wilf(Petersen,2) != 13");
    if (wilf(named("Clebsch"), 2).integer_bound != 37)
        c.fail("wilf(Clebsch,2) != 37");
    return c;
}

Check criterion_e6_ratio() {
    Check c;
    double prev = -1.0;
    double last = 0.0;
    for (int q : {2, 3, 4, 5, 7, 8}) {
        double r = e6_wilf_ratio(q);
        if (r <= prev + 1e-12)
            c.fail("ratio(" + std::to_string(q) + ") not increasing");
        prev = r;
        last = r;
    }
    if (!(1.9 < last && last < 2.0))
        c.fail("ratio(8) = " + std::to_string(last));
    return c;
}

Check criterion_en_consistency() {
    Check c;
    std::vector<std::pair<std::string, Graph>> pool;
    for (const auto& name : catalog_names()) {
        Graph g = named(name);
        if (regularity(g)) pool.emplace_back(name, g);
    }
    for (auto [q, q2] : std::vector<std::pair<int, int>>{
             {4, 4}, {4, 8}, {8, 8}, {8, 12}, {12, 12}}) {
        pool.emplace_back(
            "product(" + std::to_string(q) + "," + std::to_string(q2) + ")",
            balanced_bipartite_product(cycle_bipartite_ordered(q),
                                       cycle_bipartite_ordered(q2)));
    }
    int checked = 0;
    for (const auto& [name, g] : pool) {
        try {
            ScreeningReport rep = screen_counterexample(g);
            if (rep.interval_checked) {
                ++checked;
                if (!rep.spectrum_clear) c.fail(name + ": interval violated");
            }
        } catch (const std::logic_error& e) {
            c.fail(name + ": " + e.what());
        }
    }
    c.annotate(std::to_string(pool.size()) + " graphs screened, " +
               std::to_string(checked) + " above the quadratic threshold");
    return c;
}

Check criterion_t_critical() {
    Check c;
    auto t0 = Clock::now();
    for (int n : {3, 4, 5}) {
        std::string tag = "n=" + std::to_string(n);
        TCriticalExample ex = t_critical_example(n, 2);
        Graph squared = power_graph(ex.graph, 2);
        ExactResult chi = chromatic_number(squared, 120'000ms);
        if (chi.status != ExactResult::Status::Exact || chi.value != n + 5)
            c.fail(tag + ": distance-2 chromatic != n+5");
        long long d2 = squared.degree(ex.w_prime);
        if (d2 != 6) c.fail(tag + ": d2(w') = " + std::to_string(d2));
        if (chi.value - d2 != n - 1) c.fail(tag + ": gap != n-1");
    }
    if (seconds_since(t0) > 120.0) c.fail("exceeded 120 s");
    return c;
}

Check criterion_invariants() {
    // One representative invariant per module; the full property suites run
    // under ctest alongside this binary.
    Check c;

    // Degree sum of a line graph.
    Graph frucht = named("Frucht");
    Graph lf = line_graph(frucht);
    long long degsum = 0;
    for (auto [u, v] : frucht.edges()) degsum += frucht.degree(u) + frucht.degree(v) - 2;
    if (2 * lf.edge_count() != degsum) c.fail("line graph degree sum");

    // Adjacency trace is zero.
    Spectrum des = adjacency_spectrum(named("Desargues"));
    double trace = 0;
    for (std::size_t i = 0; i < des.values.size(); ++i)
        trace += des.values[i] * des.multiplicities[i];
    if (std::abs(trace) > 1e-6) c.fail("spectrum trace");

    // A closed-form certificate re-evaluates to its own bound.
    Graph pet = named("Petersen");
    BoundReport closed = chi2_closed_regular(pet);
    Spectrum line = line_graph_spectrum_regular(pet);
    DiagStats diag = DiagStats::from(PowerDiagTable::compute(line_graph(pet), 2),
                                     closed.certificate);
    BoundReport re = hoffman_regular(line, closed.certificate, diag, pet.edge_count());
    if (std::abs(re.raw - closed.raw) > 1e-9) c.fail("certificate re-evaluation");

    // The optimizer's closed-form dispatch matches the direct call.
    if (optimize_hoffman(named("Nauru"), 2).best.integer_bound !=
        chi2_closed_regular(named("Nauru")).integer_bound)
        c.fail("optimizer dispatch");

    // Certificate colouring validates.
    if (!validate_colouring(
            balanced_bipartite_product(cycle_bipartite_ordered(4),
                                       cycle_bipartite_ordered(4)),
            six_colouring_cycles(4, 4)).valid)
        c.fail("six colouring");

    // Exact solver on a known value.
    ExactResult c5 = exact_chi_t_prime(cycle(5), 2, 60'000ms);
    if (c5.status != ExactResult::Status::Exact || c5.value != 5)
        c.fail("exact C5");

    // Screening leaves a clear spectrum on C5.
    if (!screen_counterexample(cycle(5)).spectrum_clear) c.fail("screen C5");

    // The binary answers --help.
    if (run_cli("--help").code != 0) c.fail("cli --help");

    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: " << argv[0] << " <path-to-cli>\n";
        return 64;
    }
    g_cli = argv[1];

    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"table t=2 matches the reference columns", criterion_table_t2},
        {"table t=3 closed and exact columns", criterion_table_t3},
        {"cycle products: predicate, bound 6, colouring", criterion_products_t2},
        {"guo-mohar family: bound 12 with proof intermediates", criterion_gm_t3},
        {"guo-mohar spectrum formula vs eigensolver", criterion_gm_spectrum},
        {"line graph spectrum shortcut vs eigensolver", criterion_line_spectrum},
        {"exact solver vs brute force, Vizing window", criterion_exact_oracle},
        {"strongly regular Wilf values", criterion_srg_wilf},
        {"Wilf ratio limit of the Lie-type family", criterion_e6_ratio},
        {"no forbidden-interval violations", criterion_en_consistency},
        {"t-critical family gap", criterion_t_critical},
        {"module invariants, headless", criterion_invariants},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.note = std::string("exception: ") + e.what();
        }
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << i + 1
                  << ": " << criteria[i].first;
        if (!c.note.empty()) std::cout << " (" << c.note << ")";
        std::cout << "\n";
        if (!c.ok) ++failures;
    }
    return failures;
}
