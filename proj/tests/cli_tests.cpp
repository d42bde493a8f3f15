// End-to-end checks of the graphsweep binary: argument handling, exit
// codes, output formats, and byte-level determinism. Invoked with the
// binary's path as argv[1]; scratch files go into the working directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

std::string g_binary;
int g_failures = 0;
int g_checks = 0;

void expect(bool ok, const std::string& what) {
    ++g_checks;
    if (!ok) {
        ++g_failures;
        std::cout << "FAILED: " << what << "\n";
    }
}

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout. Callers route stderr with the
// usual shell syntax when they care about it.
RunResult run(const std::string& args) {
    RunResult r;
    const std::string cmd = "\"" + g_binary + "\" " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        expect(false, "popen: " + cmd);
        return r;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

// Parses "cost: N" out of a solver summary; -1 when absent.
long long parse_cost(const std::string& out) {
    const auto at = out.find("cost: ");
    if (at == std::string::npos) return -1;
    return std::atoll(out.c_str() + at + 6);
}

std::string fixture(const std::string& name) {
    return std::string(SWEEP_FIXTURE_DIR) + "/" + name;
}

std::string q(const std::string& path) { return "\"" + path + "\""; }

void test_solve_basics() {
    const RunResult r = run("solve --graph " + q(fixture("tree7.json")));
    expect(r.code == 0, "solve tree7: exit 0, got " + std::to_string(r.code));
    expect(contains(r.out, "status: cleared\n"), "solve tree7: status line");
    expect(parse_cost(r.out) == 2, "solve tree7: cost 2");
    expect(contains(r.out, "placement: "), "solve tree7: placement line");
    expect(contains(r.out, "moves: "), "solve tree7: moves line");
    expect(contains(r.out, "states-expanded: "), "solve tree7: states line");

    const RunResult wide = run("solve --graph " + q(fixture("tree7.json")) + " --visibility range:2");
    expect(wide.code == 0 && parse_cost(wide.out) == 0, "solve tree7 range:2: free clearing");

    const RunResult matrix =
        run("solve --graph " + q(fixture("tree7.json")) + " --visibility matrix:" + fixture("sight7.txt"));
    expect(matrix.out == r.out, "explicit matrix equals range:1 on the tree");

    const RunResult eager = run("solve --graph " + q(fixture("tree7.json")) + " --mode eager");
    expect(eager.code == 0, "eager mode runs");
    // Lazy and eager must agree on everything except the expansion count.
    const auto strip = [](std::string text) {
        const auto at = text.find("states-expanded:");
        return at == std::string::npos ? text : text.substr(0, at);
    };
    expect(strip(eager.out) == strip(r.out), "eager equals lazy on the summary");
}

void test_unclearable_and_errors() {
    const RunResult r = run("solve --graph " + q(fixture("grid2x2.json")));
    expect(r.code == 2, "solve 4-cycle: exit 2, got " + std::to_string(r.code));
    expect(contains(r.out, "status: unclearable\n"), "solve 4-cycle: status");
    expect(contains(r.out, "cost: inf\n"), "solve 4-cycle: cost inf");

    expect(run("solve --graph " + q(fixture("bad.json")) + " 2>/dev/null").code == 1,
           "malformed graph file: exit 1");
    expect(run("solve --graph " + q(fixture("missing.json")) + " 2>/dev/null").code == 1,
           "missing graph file: exit 1");
    expect(run("solve 2>/dev/null").code == 1, "missing --graph: exit 1");
    expect(run("frobnicate 2>/dev/null").code == 1, "unknown subcommand: exit 1");
    expect(run("solve --graph " + q(fixture("tree7.json")) + " --visibility sonar:1 2>/dev/null").code == 1,
           "unknown visibility model: exit 1");
    expect(run("--help").code == 0, "--help exits 0");
}

void test_resource_exits() {
    const RunResult timeout =
        run("solve --graph " + q(fixture("tree7.json")) + " --timeout 0.000000001");
    expect(timeout.code == 3, "tiny timeout: exit 3, got " + std::to_string(timeout.code));
    expect(contains(timeout.out, "status: timeout\n"), "tiny timeout: status");

    const RunResult capped = run("solve --graph " + q(fixture("tree7.json")) + " --max-states 3");
    expect(capped.code == 3, "state cap: exit 3");
    expect(contains(capped.out, "status: state-limit\n"), "state cap: status");

    expect(run("export-dot --graph " + q(fixture("tree7.json")) + " --max-states 10 2>/dev/null").code == 3,
           "export-dot over budget: exit 3");
}

void test_dfs() {
    const RunResult r = run("dfs --graph " + q(fixture("tree7.json")));
    expect(r.code == 0, "dfs tree7: exit 0");
    expect(parse_cost(r.out) >= 2, "dfs cost is at least the optimum");

    const RunResult via_solver = run("solve --graph " + q(fixture("tree7.json")) + " --solver dfs");
    expect(via_solver.out == r.out, "solve --solver dfs matches the dfs subcommand");

    expect(run("dfs --graph " + q(fixture("grid2x2.json"))).code == 2, "dfs 4-cycle: exit 2");
}

void test_oracle() {
    const RunResult r = run("oracle --graph " + q(fixture("tree7.json")));
    expect(r.code == 0, "oracle tree7: exit 0");
    expect(parse_cost(r.out) == 2, "oracle tree7: cost 2");

    expect(run("oracle --graph " + q(fixture("grid2x2.json"))).code == 2, "oracle 4-cycle: exit 2");
    expect(run("oracle --graph " + q(fixture("grid2x2.json")) + " --max-states 4").code == 3,
           "oracle state cap: exit 3");
    expect(run("oracle --graph " + q(fixture("tree7.json")) + " --speed 0 2>/dev/null").code == 1,
           "oracle --speed 0: exit 1");
    expect(run("oracle --graph " + q(fixture("tree7.json")) + " --speed trot 2>/dev/null").code == 1,
           "oracle --speed trot: exit 1");

    const RunResult slow = run("oracle --graph " + q(fixture("tree7.json")) + " --speed 1");
    expect(slow.code == 0 && parse_cost(slow.out) <= 2, "slow target is never harder");

    // Two cooperating searchers on a 9-path need two moves.
    run("gen --family path --n 9 --out cli_p9.json");
    const RunResult two = run("oracle --graph cli_p9.json --searchers 2");
    expect(two.code == 0 && parse_cost(two.out) == 2, "two searchers on the 9-path: cost 2");

    const RunResult json = run("oracle --graph " + q(fixture("tree7.json")) +
                               " --schedule cli_oracle.json");
    expect(json.code == 0, "oracle --schedule runs");
    const std::string sched = slurp("cli_oracle.json");
    expect(contains(sched, "\"clearable\":true"), "oracle schedule JSON: clearable");
    expect(contains(sched, "\"dirty\":"), "oracle schedule JSON: dirty steps");
    expect(!sched.empty() && sched.back() == '\n', "oracle schedule JSON: trailing newline");
}

void test_gen() {
    const RunResult path = run("gen --family path --n 4");
    expect(path.code == 0, "gen path: exit 0");
    expect(contains(path.out, "\"n\":4"), "gen path: vertex count");
    expect(contains(path.out, "[1,2]"), "gen path: first edge");

    const RunResult again = run("gen --family path --n 4");
    expect(again.out == path.out, "gen path: deterministic");

    run("gen --family grid --rows 2 --cols 3 --out cli_grid.json");
    expect(contains(slurp("cli_grid.json"), "\"coords\""), "gen grid --out: coords present");

    const RunResult dg1 = run("gen --family deleted-grid --rows 3 --cols 3 --p 0.5 --seed 9");
    const RunResult dg2 = run("gen --family deleted-grid --rows 3 --cols 3 --p 0.5 --seed 9");
    expect(dg1.code == 0 && dg1.out == dg2.out, "gen deleted-grid: seed-reproducible");
    const RunResult dg3 = run("gen --family deleted-grid --rows 3 --cols 3 --p 0.5 --seed 10");
    expect(dg3.out != dg1.out, "gen deleted-grid: seed-sensitive");

    const RunResult rt = run("gen --family random-tree --max-depth 3 --seed 5");
    expect(rt.code == 0 && contains(rt.out, "\"edges\""), "gen random-tree runs");

    expect(run("gen --family moebius 2>/dev/null").code == 1, "gen unknown family: exit 1");
    expect(run("gen --family path 2>/dev/null").code == 1, "gen path without --n: exit 1");
}

void test_suite() {
    const std::string args = "suite --family paths --n 1..6 --L 1..2 --no-timing";
    const RunResult a = run(args + " 2>cli_stats.txt");
    expect(a.code == 0, "suite paths: exit 0");
    const std::string header = "family,instance,params,L,clearable,cost,states_expanded,time_ms";
    expect(a.out.rfind(header + "\n", 0) == 0, "suite CSV header first");
    int lines = 0;
    for (char c : a.out)
        if (c == '\n') ++lines;
    expect(lines == 1 + 6 * 2, "suite CSV line count");
    expect(contains(slurp("cli_stats.txt"), "cleared 6/6"), "suite stats on stderr");

    const RunResult b = run(args + " 2>/dev/null");
    expect(b.out == a.out, "suite CSV deterministic");

    const RunResult to_file =
        run("suite --family paths --n 3 --L 1 --no-timing --out cli_suite.csv");
    expect(to_file.code == 0, "suite --out: exit 0");
    expect(contains(slurp("cli_suite.csv"), header), "suite --out: CSV written");
    expect(contains(to_file.out, "cleared"), "suite --out: stats on stdout");

    expect(run("suite --family bogus 2>/dev/null").code == 1, "suite unknown family: exit 1");
    expect(run("suite --family paths --n 5..2 2>/dev/null").code == 1, "suite bad range: exit 1");
}

void test_export_and_schedule_files() {
    const RunResult dot = run("export-dot --graph " + q(fixture("tree7.json")));
    expect(dot.code == 0, "export-dot: exit 0");
    expect(dot.out.rfind("digraph info_graph {", 0) == 0, "export-dot: DOT preamble");
    expect(contains(dot.out, "s36 "), "export-dot: 37 states rendered");
    expect(!contains(dot.out, "s37 "), "export-dot: no extra states");

    run("solve --graph " + q(fixture("tree7.json")) + " --schedule cli_s1.json --dot cli_d1.dot");
    run("solve --graph " + q(fixture("tree7.json")) + " --schedule cli_s2.json --dot cli_d2.dot");
    const std::string s1 = slurp("cli_s1.json");
    expect(contains(s1, "\"clearable\":true") && contains(s1, "\"cost\":2"),
           "solve --schedule: JSON contents");
    expect(contains(s1, "\"trace\":"), "solve --schedule: trace present");
    expect(s1 == slurp("cli_s2.json"), "solve --schedule: byte-identical across runs");
    expect(slurp("cli_d1.dot") == slurp("cli_d2.dot"), "solve --dot: byte-identical across runs");
    expect(slurp("cli_d1.dot") == dot.out, "solve --dot matches export-dot");

    // Unsolvable schedule files carry the failure status instead.
    run("solve --graph " + q(fixture("grid2x2.json")) + " --schedule cli_s3.json");
    const std::string s3 = slurp("cli_s3.json");
    expect(contains(s3, "\"clearable\":false") && contains(s3, "\"status\":\"unclearable\""),
           "unclearable schedule JSON");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-graphsweep>\n";
        return 2;
    }
    g_binary = argv[1];

    test_solve_basics();
    test_unclearable_and_errors();
    test_resource_exits();
    test_dfs();
    test_oracle();
    test_gen();
    test_suite();
    test_export_and_schedule_files();

    std::cout << g_checks << " checks, " << g_failures << " failures\n";
    return g_failures == 0 ? 0 : 1;
}
