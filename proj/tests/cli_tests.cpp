// End-to-end checks of the command-line binary. argv[1] is the binary path;
// every scenario shells out, captures stdout and the exit code, and verifies
// printed values against the library. Prints one line per scenario.

#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dilatelab/fractional.hpp"
#include "dilatelab/int_set.hpp"
#include "dilatelab/io.hpp"
#include "dilatelab/sampling.hpp"

using namespace dilatelab;

namespace {

int failures = 0;

void expect(bool ok, const std::string& label) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", label.c_str());
    if (!ok) ++failures;
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& cmd) {
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

// Value following "name = " on its own line, or NaN.
double parsed_value(const std::string& out, const std::string& name) {
    const std::string key = name + " = ";
    const auto pos = out.find(key);
    if (pos == std::string::npos) return std::nan("");
    return std::strtod(out.c_str() + pos + key.size(), nullptr);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";
    const std::vector<std::string> temp_files = {
        "cli_a.tmp",      "cli_b.tmp",     "cli_sidon.tmp", "cli_cube.tmp",
        "cli_sum.tmp",    "cli_norm.tmp",  "cli_mc1.json",  "cli_mc2.json",
        "cli_mc3.json",   "cli_mc4.json",  "cli_region.csv", "cli_spec.json",
        "cli_manifest.json", "cli_stderr.tmp", "cli_alpha.tmp", "cli_pair.tmp"};

    try {
    // --- usage and help ---------------------------------------------------
    expect(run(cli + " --no-such-flag 2>/dev/null").code == 2,
           "unknown flag exits 2");
    expect(run(cli + " 2>/dev/null").code == 2, "missing subcommand exits 2");
    {
        const RunResult help = run(cli + " --help");
        expect(help.code == 0 && has(help.out, "construct") &&
                   has(help.out, "reproduce-all"),
               "--help lists subcommands");
    }

    // --- construct ----------------------------------------------------------
    {
        const RunResult r =
            run(cli + " construct sidon --m 8 --out cli_sidon.tmp 2>/dev/null");
        expect(r.code == 0 && has(r.out, "wrote sidon set, 8 elements"),
               "construct sidon reports the write");
        expect(read_set("cli_sidon.tmp") ==
                   IntSet::of_ints({0, 1, 3, 7, 12, 20, 30, 44}),
               "construct sidon writes the greedy prefix");

        run(cli + " construct hypercube --n 2 --out cli_cube.tmp 2>/dev/null");
        expect(read_set("cli_cube.tmp") == IntSet::of_ints({0, 1, 4, 5}),
               "construct hypercube writes the base-4 subset sums");

        const RunResult budget =
            run(cli + " construct hry --k 30 --d 30 --out cli_cube.tmp 2>&1");
        expect(budget.code == 3 && has(budget.out, "budget exceeded"),
               "construct beyond the element budget exits 3");
    }

    // --- sumset -------------------------------------------------------------
    write_set(IntSet::of_ints({0, 1, 3}), "cli_a.tmp");
    write_set(IntSet::of_ints({0, 10}), "cli_b.tmp");
    {
        const RunResult r =
            run(cli + " sumset --in cli_a.tmp --k 2 2>/dev/null");
        expect(r.code == 0 && has(r.out, "size = 8") &&
                   has(r.out, "elements = {0, 1, 2, 3, 5, 6, 7, 9}"),
               "sumset A + 2A enumerates all eight elements");

        const RunResult rb = run(
            cli +
            " sumset --in cli_a.tmp --k 1 --b cli_b.tmp --out cli_sum.tmp 2>/dev/null");
        expect(rb.code == 0 && has(rb.out, "size = 6"), "sumset with --b");
        expect(read_set("cli_sum.tmp") ==
                   IntSet::of_ints({0, 1, 3, 10, 11, 13}),
               "sumset --out writes the result set");
    }

    // --- spectrum -----------------------------------------------------------
    {
        const RunResult r = run(
            cli + " spectrum --in cli_a.tmp --k -1 --out cli_spec.json 2>/dev/null");
        expect(r.code == 0 && has(r.out, "fiber_size") &&
                   has(r.out, "pairs covered = 9 (|A|^2 = 9)"),
               "spectrum table and pair count");
        const auto j = nlohmann::json::parse(slurp("cli_spec.json"));
        expect(j.at("k") == -1 && j.at("set_size") == 3 && j.at("pairs") == 9 &&
                   j.at("classes").size() == 2 &&
                   j.at("classes").at(0).at("fiber_size") == 3 &&
                   j.at("classes").at(1).at("points") == 6,
               "spectrum JSON payload");
    }

    // --- norm ---------------------------------------------------------------
    write_dilate(FractionalDilate::of_ints({{0, 2.0}, {1, 0.25}}),
                 "cli_norm.tmp");
    {
        const RunResult r = run(cli + " norm --in cli_norm.tmp 2>/dev/null");
        expect(r.code == 0 && has(r.out, "support = 2") &&
                   has(r.out, "mass = 2.25") &&
                   has(r.out, "regime = comfortable") &&
                   has(r.out, "p_star = 0.333333333333") &&
                   has(r.out, "value = 1.88988157484"),
               "norm prints the interior minimum");
    }

    // --- beta ---------------------------------------------------------------
    {
        const RunResult small = run(cli + " beta --k 1 --d 1 2>/dev/null");
        expect(small.code == 0 &&
                   std::fabs(parsed_value(small.out, "beta") - 2.113283334295) <=
                       1e-9,
               "beta at the smallest level set");

        const RunResult big = run(cli + " beta --k 987 --d 14929 2>/dev/null");
        expect(big.code == 0 &&
                   std::fabs(parsed_value(big.out, "beta") - 1.735383273966) <=
                       1e-9,
               "beta at the headline parameters");

        const RunResult weighted = run(
            cli + " beta --k 2 --d 22 --w-double 0.9951 --w-mixed 0.7617 2>/dev/null");
        expect(weighted.code == 0 &&
                   std::fabs(parsed_value(weighted.out, "mass") -
                             215.597399999999) <= 1e-6 &&
                   std::fabs(parsed_value(weighted.out, "beta") -
                             1.788894129877) <= 1e-9,
               "beta with the two-weight refinement");

        const RunResult t1 = run(cli + " beta --k 100 --d 500 --threads 1 2>/dev/null");
        const RunResult t2 = run(cli + " beta --k 100 --d 500 --threads 2 2>/dev/null");
        expect(t1.code == 0 && t1.out == t2.out,
               "beta output is identical across thread counts");
    }

    // --- beta-search ----------------------------------------------------------
    {
        const RunResult grid = run(
            cli +
            " beta-search --k-range 985:989:2 --d-range 14929:14929:1 2>/dev/null");
        expect(grid.code == 0 && has(grid.out, "evaluated 3 lattice points") &&
                   has(grid.out, "best: k = 987  d = 14929"),
               "beta-search grid finds the center");

        const RunResult walk = run(
            cli +
            " beta-search --k-range 900:1100:25 --d-range 13000:17000:500 --descent 2>/dev/null");
        expect(walk.code == 0 && has(walk.out, "best: k = "),
               "beta-search descent reports a best point");

        expect(run(cli + " beta-search --k-range 9:5:1 --d-range 1:2:1 2>/dev/null")
                       .code == 2,
               "beta-search rejects an empty range");
    }

    // --- mc -------------------------------------------------------------------
    write_dilate(uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6),
                 "cli_alpha.tmp");
    write_dilate(uniform_dilate(IntSet::of_ints({0, 1}), 0.7), "cli_pair.tmp");
    {
        const std::string base = cli +
                                 " mc --alpha cli_alpha.tmp --k 1 --n 2"
                                 " --trials 2000 --seed 5 --out cli_mc1.json";
        expect(run(base + " 2>/dev/null").code == 0, "mc run succeeds");
        const auto j = nlohmann::json::parse(slurp("cli_mc1.json"));
        const FractionalDilate alpha =
            uniform_dilate(IntSet::of_ints({0, 1, 3}), 0.6);
        const double exact = exact_expected_sumset_size(alpha, 1, alpha, 2);
        expect(std::fabs(j.at("exact").at("sum_size").get<double>() - exact) <=
                   1e-9 * exact,
               "mc exact sumset expectation");
        const double mean = j.at("sum_size").at("mean").get<double>();
        const double se = j.at("sum_size").at("std_error").get<double>();
        expect(std::fabs(mean - exact) <= 4.0 * se + 1e-9,
               "mc estimate within four standard errors");
        expect(j.at("restricted_sum").is_null() && j.at("same_set") == false &&
                   std::fabs(j.at("exact").at("prob_nonempty").get<double>() -
                             prob_nonempty(alpha, 2)) <= 1e-12,
               "mc independent-pair payload");

        run(cli +
            " mc --alpha cli_alpha.tmp --k 1 --n 2 --trials 2000 --seed 5"
            " --out cli_mc2.json 2>/dev/null");
        expect(slurp("cli_mc1.json") == slurp("cli_mc2.json"),
               "mc reruns are byte-identical");

        const RunResult same = run(
            cli +
            " mc --alpha cli_alpha.tmp --k -1 --n 2 --trials 1000 --seed 6"
            " --same-set --out cli_mc3.json 2>/dev/null");
        const auto js = nlohmann::json::parse(slurp("cli_mc3.json"));
        expect(same.code == 0 &&
                   std::fabs(js.at("exact").at("sum_size").get<double>() -
                             exact_expected_same_diff_size(alpha, 2)) <= 1e-9 &&
                   js.at("restricted_sum").is_null(),
               "mc same-set difference payload");

        const RunResult rainbow = run(
            cli +
            " mc --alpha cli_pair.tmp --k 2 --n 6 --trials 1000 --seed 7"
            " --rainbow --out cli_mc4.json 2>/dev/null");
        const auto jr = nlohmann::json::parse(slurp("cli_mc4.json"));
        expect(rainbow.code == 0 &&
                   jr.at("rainbow_stats").at("independent").contains("mean"),
               "mc rainbow payload");

        expect(run(cli + " mc --alpha cli_alpha.tmp --beta cli_pair.tmp --k 1"
                         " --n 1 --same-set 2>/dev/null")
                       .code == 2,
               "mc rejects --same-set with --beta");
    }

    // --- manifest ---------------------------------------------------------
    {
        const RunResult r = run(cli +
                                " --manifest cli_manifest.json sumset"
                                " --in cli_a.tmp --k 2 2>/dev/null");
        expect(r.code == 0, "manifest run succeeds");
        const auto j = nlohmann::json::parse(slurp("cli_manifest.json"));
        expect(has(j.at("command").get<std::string>(), "sumset") &&
                   j.at("version") == "0.1.0" &&
                   j.at("input_digests").at("cli_a.tmp") ==
                       hex_digest(fnv1a64_file("cli_a.tmp")) &&
                   j.at("wall_seconds").get<double>() >= 0.0,
               "manifest records command, version and digests");

        run(cli + " sumset --in cli_a.tmp --k 2 2>cli_stderr.tmp");
        const auto stderr_json = nlohmann::json::parse(slurp("cli_stderr.tmp"));
        expect(has(stderr_json.at("command").get<std::string>(), "sumset"),
               "manifest defaults to stderr");
    }

    // --- check --------------------------------------------------------------
    {
        const RunResult p =
            run(cli + " check plunnecke --random 50 --seed 3 2>/dev/null");
        expect(p.code == 0 && has(p.out, "PASS"), "check plunnecke passes");

        const RunResult s = run(cli + " check sidon --max-m 20 2>/dev/null");
        expect(s.code == 0 && has(s.out, "PASS"), "check sidon passes");

        const RunResult h = run(cli + " check hypercube --n 2 2>/dev/null");
        expect(h.code == 0 && has(h.out, "256 pairs checked"),
               "check hypercube is exhaustive at n = 2");

        const RunResult c = run(cli + " check converse 2>/dev/null");
        expect(c.code == 1 && has(c.out, "FAIL") && has(c.out, "1.85553"),
               "check converse fails honestly at alpha = 0.55");

        const RunResult c6 =
            run(cli + " check converse --alpha 0.6 2>/dev/null");
        expect(c6.code == 0 && has(c6.out, "PASS"),
               "check converse passes at alpha = 0.6");
    }

    // --- search -------------------------------------------------------------
    {
        const RunResult m = run(cli + " search mst2d --N 8 2>/dev/null");
        expect(m.code == 0 &&
                   has(m.out, "no counterexample: every tested subset of [0, 8)"),
               "search mst2d finds nothing at N = 8");

        const RunResult d =
            run(cli + " search dilate-ineq --trials 5 2>/dev/null");
        expect(d.code == 1 && has(d.out, "violations:") &&
                   has(d.out, "log_3(4)"),
               "search dilate-ineq reports the linear misreading");
    }

    // --- region -------------------------------------------------------------
    {
        const RunResult r =
            run(cli + " region --which f12 --out cli_region.csv 2>/dev/null");
        expect(r.code == 0 && has(r.out, "wrote 5 lines (11 vertices)"),
               "region reports lines and vertices");
        const std::string csv = slurp("cli_region.csv");
        expect(csv.rfind("label,kind,x,y\n", 0) == 0 &&
                   has(csv, "attained-boundary,boundary"),
               "region CSV header and rows");
    }

    // --- reproduce-all --------------------------------------------------------
    {
        const RunResult r = run(cli + " reproduce-all 2>/dev/null");
        expect(r.code == 1 && has(r.out, "10/12 passed"),
               "reproduce-all passes 10 of 12 and exits 1");
    }
    } catch (const std::exception& e) {
        expect(false, std::string("unexpected exception: ") + e.what());
    }

    for (const std::string& f : temp_files) std::remove(f.c_str());
    std::printf("%s: %d failure%s\n", failures ? "FAIL" : "PASS", failures,
                failures == 1 ? "" : "s");
    return failures ? 1 : 0;
}
