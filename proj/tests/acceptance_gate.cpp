// Acceptance gate: twelve pinned criteria, one PASS/FAIL line each, with the
// measured and expected values printed under every line. The first criterion
// drives the installed binary end to end (argv[1]); the rest run in-process
// with the fixed seed 20260819. Exits nonzero unless every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "dilatelab/reproduce.hpp"

using namespace dilatelab;

namespace {

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

ReproItem headline_end_to_end(const std::string& cli) {
    ReproItem item;
    item.index = 1;
    item.name = "headline-beta";
    item.expected =
        "beta(987, 14929) = 1.735383 within 5e-4, under 60 s single-threaded";

    const auto start = std::chrono::steady_clock::now();
    const RunResult r =
        run(cli + " beta --k 987 --d 14929 --threads 1 2>/dev/null");
    item.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    double value = std::nan("");
    const auto pos = r.out.find("beta = ");
    if (pos != std::string::npos)
        value = std::strtod(r.out.c_str() + pos + 7, nullptr);

    item.passed = r.code == 0 && std::fabs(value - 1.735383) <= 5e-4 &&
                  item.seconds < 60.0;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "beta = %.12g in %.2f s end to end (exit %d)",
                  value, item.seconds, r.code);
    item.measured = buf;
    return item;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance_gate <path-to-binary>\n");
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";

    std::vector<ReproItem> items;
    items.push_back(headline_end_to_end(cli));
    for (ReproItem& item : reproduce_items(20260819))
        items.push_back(std::move(item));

    int passed = 0;
    for (const ReproItem& item : items) {
        if (item.passed) ++passed;
        std::printf("criterion %2d  %-22s %-4s %7.2fs\n", item.index,
                    item.name.c_str(), item.passed ? "PASS" : "FAIL",
                    item.seconds);
        std::printf("    measured: %s\n", item.measured.c_str());
        std::printf("    expected: %s\n", item.expected.c_str());
    }
    std::printf("acceptance: %d/%d criteria passed\n", passed,
                static_cast<int>(items.size()));
    return passed == static_cast<int>(items.size()) ? 0 : 1;
}
