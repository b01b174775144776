// End-to-end tests that drive the installed binary: the path to the CLI
// executable arrives as the last command line argument (wired up in CMake).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

std::string g_cli;
int g_stdin_seq = 0;

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell, capturing stdout; stderr is discarded.
// `prefix` lets a test set environment variables for the child.
Run run_cli(const std::string& args, const std::string& input = "",
            const std::string& prefix = "") {
    std::string cmd = prefix + " '" + g_cli + "' " + args + " 2>/dev/null";
    if (input.empty()) {
        cmd += " < /dev/null";
    } else {
        std::string path = "/tmp/chromabound_cli_stdin_" +
                           std::to_string(++g_stdin_seq) + ".txt";
        std::ofstream(path) << input;
        cmd += " < " + path;
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    Run r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("bound: single methods print bare integers") {
    Run r = run_cli("bound --name Petersen --t 2 --method hoffman-closed");
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    CHECK(run_cli("bound --name Petersen --t 2 --method wilf").out == "13\n");
    CHECK(run_cli("bound --name Pappus --t 3 --method hoffman-closed").out ==
          "9\n");
}

TEST_CASE("bound: all methods, one labelled line each") {
    Run r = run_cli("bound --name Petersen --t 2 --method all");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "hoffman-closed: 5\n"
          "hoffman: 5\n"
          "inertial1: 3\n"
          "inertial2: 5\n"
          "wilf: 13\n");
}

TEST_CASE("bound: inapplicable methods") {
    // No closed distance-3 form for C5: single-method mode refuses.
    CHECK(run_cli("bound --graph6 Dhc --t 3 --method hoffman-closed").code == 2);
    // No closed form at all above t = 3.
    CHECK(run_cli("bound --name Petersen --t 4 --method hoffman-closed").code ==
          2);
    // In all-methods mode the gap is reported inline instead.
    Run all = run_cli("bound --graph6 Dhc --t 3 --method all");
    CHECK(all.code == 0);
    CHECK(all.out.find("hoffman-closed: na\n") != std::string::npos);
    CHECK(all.out.find("wilf: ") != std::string::npos);
}

TEST_CASE("bound: graph6 via stdin") {
    Run r = run_cli("bound --graph6 - --t 2 --method wilf", "IheA@GUAo\n");
    CHECK(r.code == 0);
    CHECK(r.out == "13\n");
    // Leading blank lines are skipped.
    CHECK(run_cli("bound --graph6 - --t 2 --method wilf", "\n\nIheA@GUAo\n").out ==
          "13\n");
    // An empty stream is an input error.
    CHECK(run_cli("bound --graph6 - --t 2 --method wilf", "\n").code == 1);
}

TEST_CASE("bound: json and csv forms") {
    Run j = run_cli("bound --name Petersen --t 2 --method all --json");
    CHECK(j.code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["t"] == 2);
    REQUIRE(doc["reports"].size() == 5);
    CHECK(doc["reports"][0]["method"] == "hoffman-closed");
    CHECK(doc["reports"][0]["report"]["bound"] == 5);
    CHECK(doc["reports"][4]["method"] == "wilf");
    CHECK(doc["reports"][4]["report"]["bound"] == 13);

    // Inapplicable methods serialize as null reports.
    nlohmann::json gap = nlohmann::json::parse(
        run_cli("bound --graph6 Dhc --t 3 --method all --json").out);
    CHECK(gap["reports"][0]["report"].is_null());

    Run c = run_cli("bound --name Petersen --t 2 --method all --csv");
    CHECK(c.code == 0);
    CHECK(c.out.rfind("method,raw,bound\n", 0) == 0);
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 6);
    CHECK(c.out.find("\nwilf,13,13\n") != std::string::npos);
}

TEST_CASE("bound: usage errors") {
    CHECK(run_cli("bound --t 2 --method wilf").code == 1);  // no graph at all
    CHECK(run_cli("bound --name Petersen --graph6 Dhc --t 2 --method wilf")
              .code == 1);
    CHECK(run_cli("bound --name Petersen --t 0 --method wilf").code == 1);
    CHECK(run_cli("bound --name Petersen --t 2 --method nonsense").code == 1);
    CHECK(run_cli("bound --name Petersen --t 2 --method all --json --csv")
              .code == 1);
    CHECK(run_cli("bound --name NoSuchGraph --t 2 --method wilf").code == 1);
    CHECK(run_cli("bound --graph6 'x!!' --t 2 --method wilf").code == 1);
}

TEST_CASE("table: frozen rows and byte determinism") {
    std::string expect =
        "name,hoffman_closed,inertial1,wilf,exact,tight\n"
        "Thomsen,9,9,9,9,tight\n"
        "Petersen,5,3,13,5,tight\n"
        "Hexahedron,6,3,11,6,tight\n";
    Run a = run_cli("table --t 2 --names Thomsen,Petersen,Hexahedron");
    CHECK(a.code == 0);
    CHECK(a.out == expect);
    CHECK(run_cli("table --t 2 --names Thomsen,Petersen,Hexahedron").out ==
          expect);
    // Invalid distances are caught at parse time.
    CHECK(run_cli("table --t 4").code == 1);
    CHECK(run_cli("table --t 2 --workers 0").code == 1);
}

TEST_CASE("table: budget flag and environment variable") {
    // Dyck at t = 3 cannot be solved in 20 ms, so the exact column reads
    // "time"; the bound columns are unaffected.
    Run flag = run_cli("table --t 3 --names Dyck --budget 0.02");
    CHECK(flag.code == 0);
    CHECK(flag.out.find("Dyck,12,7,27,time,") != std::string::npos);

    Run env = run_cli("table --t 3 --names Dyck", "",
                      "CHROMABOUND_BUDGET_SECS=0.02");
    CHECK(env.out == flag.out);

    // An explicit flag outranks the environment.
    Run both = run_cli("table --t 3 --names Dyck --budget 0.02", "",
                       "CHROMABOUND_BUDGET_SECS=300");
    CHECK(both.out == flag.out);

    // Malformed environment values fall back to the default.
    Run bad = run_cli("bound --name Petersen --t 2 --method wilf", "",
                      "CHROMABOUND_BUDGET_SECS=soon");
    CHECK(bad.code == 0);
    CHECK(bad.out == "13\n");
}

TEST_CASE("table: --out writes the same bytes to a file") {
    std::string path = "/tmp/chromabound_cli_table_out.csv";
    std::remove(path.c_str());
    Run direct = run_cli("table --t 2 --names Petersen");
    Run filed = run_cli("table --t 2 --names Petersen --out " + path);
    CHECK(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(path) == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("construct: families and certificates") {
    CHECK(run_cli("construct --family cycle --n 5").out == "Dhc\n");
    CHECK(run_cli("construct --family named --name Petersen").out ==
          "IheA@GUAo\n");
    CHECK(run_cli("construct --family balbiprod --q 4 --q2 4").out ==
          "G]GSYW\n");

    Run tc = run_cli("construct --family t-critical --n 3 --t 2");
    CHECK(tc.code == 0);
    CHECK(tc.out.find("\nw_prime 6\n") != std::string::npos);

    Run gm = run_cli("construct --family guo-mohar --k 2 --colour");
    CHECK(gm.code == 0);
    std::istringstream lines(gm.out);
    std::string g6, json_line;
    REQUIRE(std::getline(lines, g6));
    REQUIRE(std::getline(lines, json_line));
    nlohmann::json col = nlohmann::json::parse(json_line);
    CHECK(col["t"] == 3);
    CHECK(col["colours"].size() == 12);  // GM(4) has 6k = 12 edges

    Run six = run_cli("construct --family balbiprod --q 4 --q2 8 --colour");
    CHECK(six.code == 0);
    CHECK(six.out.find("\"t\":2") != std::string::npos);
}

TEST_CASE("construct: errors") {
    // Precondition failures are hypothesis errors, not usage errors.
    CHECK(run_cli("construct --family cycle --n 2").code == 2);
    CHECK(run_cli("construct --family balbiprod --q 7 --q2 8").code == 2);
    // q = 6 builds fine, but the six-colouring needs both lengths mod 4.
    CHECK(run_cli("construct --family balbiprod --q 6 --q2 8").code == 0);
    CHECK(run_cli("construct --family balbiprod --q 6 --q2 8 --colour").code ==
          2);
    CHECK(run_cli("construct --family guo-mohar --k 1").code == 2);
    // Families without certificates refuse --colour.
    CHECK(run_cli("construct --family cycle --n 8 --colour").code == 2);
    CHECK(run_cli("construct --family named --name Petersen --colour").code ==
          2);
    // Missing parameters and unknown families are usage errors.
    CHECK(run_cli("construct --family balbiprod --q 4").code == 1);
    CHECK(run_cli("construct --family t-critical --t 2").code == 1);
    CHECK(run_cli("construct --family moebius").code == 1);
    CHECK(run_cli("construct").code == 1);
}

TEST_CASE("en-screen: mixed stream") {
    // Petersen, one malformed line, C5, and K2 (too small to screen): two
    // graphs survive.
    Run r = run_cli("en-screen -", "IheA@GUAo\nnot-a-graph!!\nDhc\nA_\n");
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string header, row1, row2, extra;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row1));
    REQUIRE(std::getline(lines, row2));
    CHECK_FALSE(std::getline(lines, extra));
    CHECK(header == "name,k,bound,c_star,interval,spectrum_clear");
    CHECK(row1 == "IheA@GUAo,3,5,0.555556,,not a candidate");
    CHECK(row2.rfind("Dhc,2,5,1.25,(-1;", 0) == 0);
    CHECK(row2.substr(row2.size() - 4) == ",yes");
}

TEST_CASE("en-screen: file input, file output, failure modes") {
    std::string in_path = "/tmp/chromabound_cli_screen_in.g6";
    std::string out_path = "/tmp/chromabound_cli_screen_out.csv";
    std::ofstream(in_path) << "IheA@GUAo\n";
    Run r = run_cli("en-screen " + in_path + " --out " + out_path);
    CHECK(r.code == 0);
    CHECK(slurp(out_path).find("IheA@GUAo,3,5,") != std::string::npos);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());

    // Nothing usable on the stream.
    CHECK(run_cli("en-screen -", "\n").code == 1);
    CHECK(run_cli("en-screen -", "garbage!!\n").code == 1);
    CHECK(run_cli("en-screen /no/such/file").code == 1);
}

TEST_CASE("top level") {
    CHECK(run_cli("").code == 1);               // a subcommand is required
    CHECK(run_cli("frobnicate").code == 1);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("bound --help").code == 0);
}

int main(int argc, char** argv) {
    if (argc < 2 || argv[argc - 1][0] == '-') {
        std::fprintf(stderr, "usage: %s [doctest options] <path-to-cli>\n",
                     argv[0]);
        return 1;
    }
    g_cli = argv[argc - 1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv);
    return ctx.run();
}
