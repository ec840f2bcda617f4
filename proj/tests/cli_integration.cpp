// End-to-end exercise of the CLI binary: exit codes, file outputs and the
// machine-readable surfaces. argv[1] = segcover binary, argv[2] = scratch dir.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

std::string g_binary;
fs::path g_dir;
int g_failures = 0;

int run(const std::string& args, const std::string& out_name = "out.txt") {
    const std::string cmd =
        g_binary + " " + args + " >" + (g_dir / out_name).string() + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "[ok] " << what << "\n";
    } else {
        std::cout << "[FAIL] " << what << "\n";
        ++g_failures;
    }
}

std::string path(const std::string& name) { return (g_dir / name).string(); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_integration <segcover-binary> <scratch-dir>\n";
        return 2;
    }
    g_binary = argv[1];
    g_dir = argv[2];
    fs::create_directories(g_dir);

    // gen / solve / verify round trip.
    expect(run("gen --class h1us -n 10 --seed 7 --bbox 6 -o " + path("a.seg")) == 0,
           "gen h1us exits 0");
    expect(run("solve --alg greedy-strip -i " + path("a.seg") + " -o " + path("a.cov")) == 0,
           "solve greedy-strip exits 0");
    expect(run("verify -i " + path("a.seg") + " -c " + path("a.cov")) == 0,
           "verify accepts the solver's own cover");

    // Determinism of gen.
    run("gen --class hv1 -n 12 --seed 9 -o " + path("b1.seg"));
    run("gen --class hv1 -n 12 --seed 9 -o " + path("b2.seg"));
    expect(slurp(path("b1.seg")) == slurp(path("b2.seg")), "gen is deterministic per seed");

    // PTAS end to end, and --jobs does not change the output.
    expect(run("solve --alg hv1-ptas --k 2 -i " + path("b1.seg") + " -o " + path("b.cov")) == 0,
           "solve hv1-ptas exits 0");
    expect(run("verify -i " + path("b1.seg") + " -c " + path("b.cov")) == 0,
           "ptas cover verifies");
    run("solve --alg hv1-ptas --k 2 --jobs 3 -i " + path("b1.seg") + " -o " + path("bj.cov"));
    expect(slurp(path("b.cov")) == slurp(path("bj.cov")), "--jobs leaves the output unchanged");

    // Class mismatch: strip greedy on an hv1 instance.
    expect(run("solve --alg greedy-strip -i " + path("b1.seg") + " -o " + path("x.cov")) == 2,
           "class mismatch exits 2");

    // Discrete pipeline with trace; ledger must verify.
    run("gen --class discrete -n 8 --seed 11 -m 12 -o " + path("d.seg"));
    expect(run("solve --alg discrete-16 --trace -i " + path("d.seg") + " -o " + path("d.cov"),
               "trace.txt") == 0,
           "discrete-16 exits 0");
    const std::string trace = slurp(path("trace.txt"));
    expect(trace.find("LEDGER") != std::string::npos &&
               trace.find("violations=0") != std::string::npos,
           "--trace prints a clean ledger");
    expect(run("verify -i " + path("d.seg") + " -c " + path("d.cov")) == 0,
           "discrete cover verifies");

    // Infeasible discrete instance names the segment and exits 1.
    write(path("inf.seg"),
          "SEGCOVER 1\nMODE discrete\nSEGMENT 0 0 10 0\nSQUARE 50 50\n");
    expect(run("solve --alg discrete-16 -i " + path("inf.seg") + " -o " + path("inf.cov"),
               "inf.txt") == 1,
           "uncoverable segment exits 1");
    expect(slurp(path("inf.txt")).find("segment 0") != std::string::npos,
           "infeasibility message names the segment");

    // Truncated cover: drop the ASSIGN lines.
    {
        std::istringstream in(slurp(path("a.cov")));
        std::ostringstream out;
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("ASSIGN", 0) != 0) out << line << "\n";
        write(path("trunc.cov"), out.str());
    }
    expect(run("verify -i " + path("a.seg") + " -c " + path("trunc.cov"), "trunc.txt") == 1,
           "truncated cover fails verification");
    expect(slurp(path("trunc.txt")).find("no witness") != std::string::npos,
           "truncated cover diagnostic names the missing segment");

    // Parse error exits 2.
    write(path("bad.seg"), "SEGCOVER 1\nMODE continuous\nSEGMENT 0 0 0 0\n");
    expect(run("solve --alg arb-6approx -i " + path("bad.seg") + " -o " + path("bad.cov")) == 2,
           "degenerate segment exits 2");

    // Exact refuses n > 16 without --force.
    run("gen --class hv1 -n 17 --seed 3 --bbox 12 -o " + path("big.seg"));
    expect(run("solve --alg exact -i " + path("big.seg") + " -o " + path("big.cov")) == 2,
           "exact refuses 17 segments");
    expect(run("solve --alg exact --force -i " + path("big.seg") + " -o " + path("big.cov")) == 0,
           "exact --force runs");

    // Node budget exhaustion exits 3.
    run("gen --class arb -n 14 --seed 5 --bbox 4 -o " + path("tight.seg"));
    expect(run("solve --alg exact --force --node-budget 1 -i " + path("tight.seg") + " -o " +
               path("tight.cov")) == 3,
           "budget exhaustion exits 3");

    // Compare table with ratios.
    expect(run("compare --algs hv1-3approx,hv1-4approx,hv1-ptas --exact -i " + path("b1.seg"),
               "table.txt") == 0,
           "compare exits 0");
    const std::string table = slurp(path("table.txt"));
    expect(table.rfind("alg\tsize\ttime_ms\tratio", 0) == 0, "compare prints the fixed header");
    expect(table.find("hv1-ptas") != std::string::npos, "compare lists every algorithm");

    // Vertex cover reduction: a triangle needs two squares.
    write(path("k3.vc"), "VC 3 3\nE 0 1\nE 0 2\nE 1 2\n");
    expect(run("reduce-vc -g " + path("k3.vc") + " -o " + path("k3.seg")) == 0,
           "reduce-vc exits 0");
    expect(run("solve --alg exact -i " + path("k3.seg") + " -o " + path("k3.cov"), "k3.txt") == 0,
           "exact on the reduction exits 0");
    expect(slurp(path("k3.txt")).find("size=2") != std::string::npos,
           "triangle reduction has optimum 2");

    if (g_failures == 0) {
        std::cout << "cli integration: all checks passed\n";
        return 0;
    }
    std::cout << "cli integration: " << g_failures << " check(s) failed\n";
    return 1;
}
