// Command line front end. Subcommands:
//   bound      one graph, one or all bound methods
//   table      bound/exact comparison table over the named catalog
//   construct  generator families, optionally with certificate colourings
//   en-screen  batch screening of graph6 streams for conjecture candidates
//
// Exit codes: 0 success, 1 usage or input errors, 2 inapplicable method or
// unmet construction precondition.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
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
#include "chromabound/serialize.hpp"
#include "chromabound/table.hpp"

namespace cb = chromabound;

namespace {

std::string trimmed(const std::string& s) {
    auto from = s.find_first_not_of(" \t\r\n");
    if (from == std::string::npos) return "";
    auto to = s.find_last_not_of(" \t\r\n");
    return s.substr(from, to - from + 1);
}

// Default budget: CHROMABOUND_BUDGET_SECS if set and sane, else 300 s.
std::chrono::milliseconds default_budget() {
    if (const char* env = std::getenv("CHROMABOUND_BUDGET_SECS")) {
        char* end = nullptr;
        double secs = std::strtod(env, &end);
        if (end != env && *end == '\0' && secs > 0) {
            return std::chrono::milliseconds(std::llround(secs * 1000.0));
        }
        std::cerr << "warning: ignoring malformed CHROMABOUND_BUDGET_SECS\n";
    }
    return std::chrono::seconds(300);
}

std::chrono::milliseconds budget_from(double budget_secs, bool flag_given) {
    if (flag_given) {
        return std::chrono::milliseconds(std::llround(budget_secs * 1000.0));
    }
    return default_budget();
}

// First non-empty line of stdin, for "--graph6 -".
std::string read_graph6_stdin() {
    std::string line;
    while (std::getline(std::cin, line)) {
        std::string t = trimmed(line);
        if (!t.empty()) return t;
    }
    throw cb::ParseError("empty graph6 input on stdin", 0);
}

int write_text_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    out << text;
    return 0;
}

const std::vector<std::string> kAllMethods = {
    "hoffman-closed", "hoffman", "inertial1", "inertial2", "wilf"};

cb::BoundReport run_method(const cb::Graph& g, int t, const std::string& m,
                           std::chrono::milliseconds budget) {
    if (m == "hoffman") return cb::optimize_hoffman(g, t).best;
    if (m == "hoffman-closed") {
        if (t == 2) {
            return cb::regularity(g) ? cb::chi2_closed_regular(g)
                                     : cb::chi2_closed(g);
        }
        if (t == 3) return cb::chi3_closed_regular(g);
        throw cb::InapplicableError("no closed Hoffman form for t = " +
                                    std::to_string(t));
    }
    if (m == "inertial1") return cb::optimize_first_inertial(g, t, budget).best;
    if (m == "inertial2") {
        return cb::optimize_second_inertial(g, t, budget).best;
    }
    if (m == "wilf") return cb::wilf(g, t);
    throw std::logic_error("unknown method " + m);
}

struct BoundArgs {
    std::string name;
    std::string graph6;
    int t = 2;
    std::string method = "all";
    double budget_secs = 0;
    bool budget_given = false;
    bool json = false;
    bool csv = false;
};

int run_bound(const BoundArgs& a) {
    if (a.name.empty() == a.graph6.empty()) {
        std::cerr << "error: give exactly one of --name or --graph6\n";
        return 1;
    }
    cb::Graph g = a.name.empty()
                      ? cb::parse_graph(a.graph6 == "-" ? read_graph6_stdin()
                                                        : a.graph6,
                                        cb::GraphFormat::Graph6)
                      : cb::named(a.name);
    auto budget = budget_from(a.budget_secs, a.budget_given);

    std::vector<std::string> methods =
        a.method == "all" ? kAllMethods : std::vector<std::string>{a.method};
    std::vector<std::optional<cb::BoundReport>> reports;
    for (const auto& m : methods) {
        try {
            reports.push_back(run_method(g, a.t, m, budget));
        } catch (const cb::InapplicableError& e) {
            if (a.method != "all") {
                std::cerr << "inapplicable: " << e.what() << "\n";
                return 2;
            }
            reports.push_back(std::nullopt);
        }
    }

    if (a.json) {
        nlohmann::json out = {{"t", a.t},
                              {"reports", nlohmann::json::array()}};
        for (std::size_t i = 0; i < methods.size(); ++i) {
            nlohmann::json entry = {{"method", methods[i]}};
            entry["report"] =
                reports[i] ? cb::to_json(*reports[i]) : nlohmann::json();
            out["reports"].push_back(entry);
        }
        std::cout << out.dump(2) << "\n";
    } else if (a.csv) {
        std::cout << "method,raw,bound\n";
        for (std::size_t i = 0; i < methods.size(); ++i) {
            if (reports[i]) {
                std::cout << methods[i] << ',' << reports[i]->raw << ','
                          << reports[i]->integer_bound << "\n";
            } else {
                std::cout << methods[i] << ",,na\n";
            }
        }
    } else if (a.method == "all") {
        for (std::size_t i = 0; i < methods.size(); ++i) {
            std::cout << methods[i] << ": "
                      << (reports[i]
                              ? std::to_string(reports[i]->integer_bound)
                              : std::string("na"))
                      << "\n";
        }
    } else {
        std::cout << reports[0]->integer_bound << "\n";
    }
    return 0;
}

struct TableArgs {
    int t = 2;
    double budget_secs = 0;
    bool budget_given = false;
    std::string out;
    std::vector<std::string> names;
    int workers = 1;
};

int run_table(const TableArgs& a) {
    cb::TableOptions opt;
    opt.t = a.t;
    opt.budget = budget_from(a.budget_secs, a.budget_given);
    opt.names = a.names;
    opt.workers = a.workers;
    return write_text_output(a.out, cb::table_to_csv(cb::build_table(opt)));
}

struct ConstructArgs {
    std::string family;
    int n = 0;
    int k = 0;
    int q = 0;
    int q2 = 0;
    int t = 2;
    std::string name;
    bool colour = false;
    bool has_n = false, has_k = false, has_q = false, has_q2 = false,
         has_name = false;
};

int usage_missing(const char* family, const char* params) {
    std::cerr << "error: family " << family << " needs " << params << "\n";
    return 1;
}

int run_construct(const ConstructArgs& a) {
    try {
        cb::Graph g;
        std::optional<cb::EdgeColouring> colouring;
        int w_prime = -1;
        bool has_certificate = false;
        if (a.family == "cycle") {
            if (!a.has_n) return usage_missing("cycle", "--n");
            g = cb::cycle(a.n);
        } else if (a.family == "balbiprod") {
            if (!a.has_q || !a.has_q2) {
                return usage_missing("balbiprod", "--q and --q2");
            }
            g = cb::balanced_bipartite_product(cb::cycle_bipartite_ordered(a.q),
                                               cb::cycle_bipartite_ordered(a.q2));
            has_certificate = true;
            if (a.colour) colouring = cb::six_colouring_cycles(a.q, a.q2);
        } else if (a.family == "guo-mohar") {
            if (!a.has_k) return usage_missing("guo-mohar", "--k");
            g = cb::guo_mohar(a.k);
            has_certificate = true;
            if (a.colour) colouring = cb::twelve_colouring_gm(a.k);
        } else if (a.family == "t-critical") {
            if (!a.has_n) return usage_missing("t-critical", "--n");
            cb::TCriticalExample ex = cb::t_critical_example(a.n, a.t);
            g = ex.graph;
            w_prime = ex.w_prime;
        } else if (a.family == "named") {
            if (!a.has_name) return usage_missing("named", "--name");
            g = cb::named(a.name);
        } else {
            std::cerr << "error: unknown family " << a.family << "\n";
            return 1;
        }
        if (a.colour && !has_certificate) {
            std::cerr << "inapplicable: family " << a.family
                      << " has no certificate colouring\n";
            return 2;
        }
        std::cout << cb::write_graph(g, cb::GraphFormat::Graph6) << "\n";
        if (w_prime >= 0) std::cout << "w_prime " << w_prime << "\n";
        if (colouring) {
            cb::ValidationResult check = cb::validate_colouring(g, *colouring);
            if (!check.valid) {
                std::cerr << "error: generated colouring failed validation\n";
                return 1;
            }
            std::cout << cb::colouring_to_json(g, *colouring).dump() << "\n";
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "construction precondition: " << e.what() << "\n";
        return 2;
    }
}

struct EnScreenArgs {
    std::string input = "-";
    std::string out;
};

int run_en_screen(const EnScreenArgs& a) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (a.input != "-") {
        file.open(a.input);
        if (!file) {
            std::cerr << "error: cannot open " << a.input << "\n";
            return 1;
        }
        in = &file;
    }

    std::ostringstream rows;
    rows << "name,k,bound,c_star,interval,spectrum_clear\n";
    int processed = 0;
    int lineno = 0;
    std::string line;
    while (std::getline(*in, line)) {
        ++lineno;
        std::string g6 = trimmed(line);
        if (g6.empty()) continue;
        try {
            cb::Graph g = cb::parse_graph(g6, cb::GraphFormat::Graph6);
            cb::ScreeningReport rep = cb::screen_counterexample(g);
            rep.name = g6;
            rows << cb::screening_csv_row(rep) << "\n";
            ++processed;
        } catch (const cb::ParseError& e) {
            std::cerr << "line " << lineno << ": skipped, malformed graph6 ("
                      << e.what() << ")\n";
        } catch (const std::invalid_argument& e) {
            std::cerr << "line " << lineno << ": skipped (" << e.what()
                      << ")\n";
        }
    }

    int rc = write_text_output(a.out, rows.str());
    if (rc != 0) return rc;
    if (processed == 0) {
        std::cerr << "error: no graphs processed\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral bounds for distance-t chromatic indices"};
    app.require_subcommand(1);

    BoundArgs bound_args;
    CLI::App* bound_cmd =
        app.add_subcommand("bound", "Bounds for one graph");
    bound_cmd->add_option("--name", bound_args.name, "catalog graph name");
    bound_cmd->add_option("--graph6", bound_args.graph6,
                          "graph6 string, or - for stdin");
    bound_cmd->add_option("--t", bound_args.t, "edge distance")
        ->check(CLI::Range(1, 1000));
    bound_cmd
        ->add_option("--method", bound_args.method,
                     "hoffman, hoffman-closed, inertial1, inertial2, wilf, all")
        ->check(CLI::IsMember({"hoffman", "hoffman-closed", "inertial1",
                               "inertial2", "wilf", "all"}));
    CLI::Option* bound_budget =
        bound_cmd->add_option("--budget", bound_args.budget_secs,
                              "optimization budget in seconds");
    CLI::Option* bound_json =
        bound_cmd->add_flag("--json", bound_args.json, "JSON output");
    bound_cmd->add_flag("--csv", bound_args.csv, "CSV output")
        ->excludes(bound_json);

    TableArgs table_args;
    CLI::App* table_cmd =
        app.add_subcommand("table", "Bound/exact table over the catalog");
    table_cmd->add_option("--t", table_args.t, "edge distance, 2 or 3")
        ->check(CLI::IsMember({2, 3}));
    CLI::Option* table_budget =
        table_cmd->add_option("--budget", table_args.budget_secs,
                              "per-cell budget in seconds");
    table_cmd->add_option("--out", table_args.out, "CSV output path");
    table_cmd
        ->add_option("--names", table_args.names,
                     "comma separated catalog names (default: all)")
        ->delimiter(',');
    table_cmd->add_option("--workers", table_args.workers, "worker threads")
        ->check(CLI::Range(1, 64));

    ConstructArgs cons_args;
    CLI::App* cons_cmd =
        app.add_subcommand("construct", "Generator families");
    cons_cmd
        ->add_option("--family", cons_args.family,
                     "cycle, balbiprod, guo-mohar, t-critical, named")
        ->required()
        ->check(CLI::IsMember(
            {"cycle", "balbiprod", "guo-mohar", "t-critical", "named"}));
    CLI::Option* n_opt = cons_cmd->add_option("--n", cons_args.n, "order");
    CLI::Option* k_opt =
        cons_cmd->add_option("--k", cons_args.k, "guo-mohar parameter");
    CLI::Option* q_opt =
        cons_cmd->add_option("--q", cons_args.q, "first cycle length");
    CLI::Option* q2_opt =
        cons_cmd->add_option("--q2", cons_args.q2, "second cycle length");
    cons_cmd->add_option("--t", cons_args.t, "distance for t-critical")
        ->check(CLI::Range(1, 1000));
    CLI::Option* name_opt =
        cons_cmd->add_option("--name", cons_args.name, "catalog graph name");
    cons_cmd->add_flag("--colour", cons_args.colour,
                       "emit and validate the certificate colouring");

    EnScreenArgs screen_args;
    CLI::App* screen_cmd = app.add_subcommand(
        "en-screen", "Screen a graph6 stream for conjecture candidates");
    screen_cmd->add_option("input", screen_args.input,
                           "graph6 file, or - for stdin");
    screen_cmd->add_option("--out", screen_args.out, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    bound_args.budget_given = bound_budget->count() > 0;
    table_args.budget_given = table_budget->count() > 0;
    cons_args.has_n = n_opt->count() > 0;
    cons_args.has_k = k_opt->count() > 0;
    cons_args.has_q = q_opt->count() > 0;
    cons_args.has_q2 = q2_opt->count() > 0;
    cons_args.has_name = name_opt->count() > 0;

    try {
        if (bound_cmd->parsed()) return run_bound(bound_args);
        if (table_cmd->parsed()) return run_table(table_args);
        if (cons_cmd->parsed()) return run_construct(cons_args);
        if (screen_cmd->parsed()) return run_en_screen(screen_args);
    } catch (const cb::InapplicableError& e) {
        std::cerr << "inapplicable: " << e.what() << "\n";
        return 2;
    } catch (const cb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
