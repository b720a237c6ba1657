// Command-line front end: constructions, dilate arithmetic, norms, spectra,
// Monte Carlo estimates, growth-exponent evaluation and searches, and the
// standard reproduction table. Exit codes: 0 success, 1 a checked property
// failed or a counterexample was found, 2 usage or input errors, 3 element
// budget exceeded.

#include <cstdint>
#include <cstdlib>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dilatelab/bounds.hpp"
#include "dilatelab/constructions.hpp"
#include "dilatelab/core_sets.hpp"
#include "dilatelab/errors.hpp"
#include "dilatelab/fractional.hpp"
#include "dilatelab/hry_spectrum.hpp"
#include "dilatelab/int_set.hpp"
#include "dilatelab/io.hpp"
#include "dilatelab/reproduce.hpp"
#include "dilatelab/sampling.hpp"

namespace {

using namespace dilatelab;

std::string point_str(const Point& p) {
    if (p.size() == 1) return std::to_string(p[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) os << ", ";
        os << p[i];
    }
    os << ')';
    return os.str();
}

std::string set_str(const IntSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i) os << ", ";
        os << point_str(s.elements()[i]);
    }
    os << '}';
    return os.str();
}

Range parse_range(const std::string& text) {
    Range r;
    char extra = 0;
    const int got = std::sscanf(text.c_str(), "%lld:%lld:%lld%c", &r.lo, &r.hi,
                                &r.step, &extra);
    if (got == 3) return r;
    r.step = 1;
    if (std::sscanf(text.c_str(), "%lld:%lld%c", &r.lo, &r.hi, &extra) == 2)
        return r;
    throw std::invalid_argument("range must look like lo:hi or lo:hi:step, got '" +
                                text + "'");
}

nlohmann::json stat_json(const Stat& s) {
    return {{"mean", s.mean}, {"variance", s.variance}, {"std_error", s.std_error}};
}

struct Session {
    RunManifest manifest;
    std::string manifest_path;  // empty -> stderr
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    void input(const std::string& path) {
        manifest.input_digests.emplace_back(path,
                                            hex_digest(fnv1a64_file(path)));
    }
    void output(const std::string& path) { manifest.outputs.push_back(path); }
    void seed(std::uint64_t s) {
        manifest.seed = s;
        manifest.seed_used = true;
    }
    void emit() {
        manifest.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        const std::string text = manifest_to_json(manifest);
        if (manifest_path.empty()) {
            std::cerr << text << '\n';
        } else {
            std::ofstream out(manifest_path);
            out << text << '\n';
        }
    }
};

int cmd_construct(Session& session, const std::string& family, std::int64_t n,
                  std::int64_t k, std::int64_t d, std::int64_t b, std::int64_t N,
                  std::int64_t m, const std::string& out) {
    IntSet set(1);
    if (family == "hypercube") {
        if (n < 0) throw std::invalid_argument("construct hypercube needs --n");
        set = hypercube_H(static_cast<int>(n));
    } else if (family == "interval") {
        if (k < 0) throw std::invalid_argument("construct interval needs --k");
        set = interval_I(static_cast<int>(k));
    } else if (family == "union") {
        if (n < 0 || k < 0)
            throw std::invalid_argument("construct union needs --n and --k");
        set = union_A(static_cast<int>(n), static_cast<int>(k));
    } else if (family == "geometric") {
        if (b < 0 || N < 0)
            throw std::invalid_argument("construct geometric needs --b and --N");
        set = geometric(b, static_cast<int>(N));
    } else if (family == "sidon") {
        if (m < 0) throw std::invalid_argument("construct sidon needs --m");
        set = sidon_greedy(static_cast<int>(m));
    } else {  // hry
        if (k < 0 || d < 0)
            throw std::invalid_argument("construct hry needs --k and --d");
        set = hry({k, d});
    }
    write_set(set, out);
    session.output(out);
    std::cout << "wrote " << family << " set, " << set.size()
              << " elements, dimension " << set.dimension() << ", to " << out
              << '\n';
    return 0;
}

int cmd_sumset(Session& session, const std::string& in, std::int64_t k,
               const std::string& bpath, const std::string& out) {
    const IntSet a = read_set(in);
    session.input(in);
    IntSet b = a;
    if (!bpath.empty()) {
        b = read_set(bpath);
        session.input(bpath);
    }
    const IntSet result = dilate_sum(a, k, b);
    std::cout << "size = " << result.size() << '\n';
    if (result.size() <= 50) std::cout << "elements = " << set_str(result) << '\n';
    if (!out.empty()) {
        write_set(result, out);
        session.output(out);
    }
    return 0;
}

int cmd_spectrum(Session& session, const std::string& in, std::int64_t k,
                 const std::string& out) {
    const IntSet a = read_set(in);
    session.input(in);
    const auto classes = spectrum(a, k);
    long long pairs = 0;
    std::printf("%14s %14s\n", "fiber_size", "points");
    for (const auto& [lambda, mu] : classes) {
        std::printf("%14lld %14lld\n", static_cast<long long>(lambda),
                    static_cast<long long>(mu));
        pairs += static_cast<long long>(lambda) * mu;
    }
    std::printf("pairs covered = %lld (|A|^2 = %lld)\n", pairs,
                static_cast<long long>(a.size()) *
                    static_cast<long long>(a.size()));
    if (!out.empty()) {
        nlohmann::json j;
        j["k"] = k;
        j["dimension"] = a.dimension();
        j["set_size"] = a.size();
        j["pairs"] = pairs;
        auto& arr = j["classes"] = nlohmann::json::array();
        for (const auto& [lambda, mu] : classes)
            arr.push_back({{"fiber_size", lambda}, {"points", mu}});
        std::ofstream f(out);
        f << j.dump(2) << '\n';
        session.output(out);
    }
    return 0;
}

int cmd_norm(Session& session, const std::string& in) {
    const FractionalDilate gamma = read_dilate(in);
    session.input(in);
    const NormResult r = norm(gamma);
    std::cout << "support = " << gamma.support_size() << '\n';
    std::cout << "mass = " << format_g12(gamma.total_mass()) << '\n';
    std::cout << "regime = " << regime_name(r.regime) << '\n';
    std::cout << "p_star = " << format_g12(r.p_star) << '\n';
    std::cout << "value = " << format_g12(r.value) << '\n';
    return 0;
}

int cmd_mc(Session& session, const std::string& alpha_path,
           const std::string& beta_path, std::int64_t k, int n,
           std::size_t trials, std::uint64_t seed, bool same_set, bool rainbow,
           const std::string& out) {
    const FractionalDilate alpha = read_dilate(alpha_path);
    session.input(alpha_path);
    session.seed(seed);
    if (!beta_path.empty() && same_set)
        throw std::invalid_argument("--same-set conflicts with --beta");
    if (!beta_path.empty() && rainbow)
        throw std::invalid_argument("--rainbow draws both sets from --alpha");

    nlohmann::json j;
    j["alpha"] = alpha_path;
    j["beta"] = beta_path.empty() ? nlohmann::json() : nlohmann::json(beta_path);
    j["k"] = k;
    j["n"] = n;
    j["trials"] = trials;
    j["seed"] = seed;
    j["same_set"] = same_set;
    j["rainbow"] = rainbow;

    if (rainbow) {
        const RainbowComparison rc = rainbow_comparison(alpha, k, n, trials, seed);
        j["rainbow_stats"] = {{"same_set", stat_json(rc.same_set)},
                              {"independent", stat_json(rc.independent)},
                              {"rainbow_word_count", rc.rainbow_word_count}};
    } else {
        SampleStats stats;
        nlohmann::json exact;
        exact["sum_size"] = nullptr;
        if (!beta_path.empty()) {
            const FractionalDilate beta_law = read_dilate(beta_path);
            session.input(beta_path);
            stats = estimate_sizes(alpha, k, beta_law, n, trials, seed);
            try {
                exact["sum_size"] = exact_expected_sumset_size(alpha, k, beta_law, n);
            } catch (const budget_error&) {
            } catch (const std::invalid_argument&) {
            }
        } else {
            stats = estimate_sizes(alpha, k, n, trials, seed, same_set);
            try {
                if (same_set && k == -1)
                    exact["sum_size"] = exact_expected_same_diff_size(alpha, n);
                else if (!same_set)
                    exact["sum_size"] = exact_expected_sumset_size(alpha, k, alpha, n);
            } catch (const budget_error&) {
            } catch (const std::invalid_argument&) {
            }
        }
        try {
            exact["prob_nonempty"] = prob_nonempty(alpha, n);
        } catch (const budget_error&) {
            exact["prob_nonempty"] = nullptr;
        }
        j["set_size"] = stat_json(stats.set_size);
        j["sum_size"] = stat_json(stats.sum_size);
        j["restricted_sum"] = (same_set && k == 1)
                                  ? stat_json(stats.restricted_sum)
                                  : nlohmann::json();
        j["nonempty"] = stat_json(stats.nonempty);
        j["exact"] = exact;
    }

    const std::string text = j.dump(2);
    if (out.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream f(out);
        f << text << '\n';
        session.output(out);
        std::cout << "wrote " << out << '\n';
    }
    return 0;
}

int cmd_beta(std::int64_t k, std::int64_t d, double q, bool has_q,
             double w_double, double w_mixed, bool weighted) {
    std::cout << "k = " << k << '\n' << "d = " << d << '\n';
    if (weighted) {
        const WeightedBetaEvaluation w = weighted_hry_beta(k, d, w_double, w_mixed);
        std::cout << "mass = " << format_g12(w.mass) << '\n';
        std::cout << "subtraction_norm = " << format_g12(w.diff_norm) << '\n';
        std::cout << "log_sum_support = " << format_g12(w.log_sum_support) << '\n';
        std::cout << "beta = " << format_g12(w.beta) << '\n';
        return 0;
    }
    const BetaEvaluation e = has_q ? beta_with_weight(k, d, std::log(q)) : beta(k, d);
    std::cout << "q = " << format_g12(std::exp(e.log_q)) << '\n';
    std::cout << "log_q = " << format_g12(e.log_q) << '\n';
    std::cout << "log_set_mass = " << format_g12(e.log_set_mass) << '\n';
    std::cout << "log_sum_support = " << format_g12(e.log_sum_support) << '\n';
    std::cout << "beta = " << format_g12(e.beta) << '\n';
    return 0;
}

int cmd_beta_search(const std::string& k_range, const std::string& d_range,
                    bool descent) {
    const SearchResult res = search_beta(parse_range(k_range), parse_range(d_range),
                                         descent ? SearchMode::descent
                                                 : SearchMode::grid);
    std::cout << "evaluated " << res.evaluated.size() << " lattice points\n";
    const std::size_t shown = std::min<std::size_t>(res.evaluated.size(), 30);
    for (std::size_t i = 0; i < shown; ++i) {
        const BetaEvaluation& e = res.evaluated[i];
        std::cout << "  k = " << e.k << "  d = " << e.d
                  << "  beta = " << format_g12(e.beta) << '\n';
    }
    if (shown < res.evaluated.size())
        std::cout << "  ... (" << res.evaluated.size() - shown << " more)\n";
    std::cout << "best: k = " << res.best.k << "  d = " << res.best.d
              << "  beta = " << format_g12(res.best.beta) << '\n';
    return 0;
}

int cmd_check(Session& session, const std::string& what, std::uint64_t seed,
              std::size_t random_sets, int max_m, int n, std::size_t count,
              double alpha, double threshold) {
    PropertyCheck c;
    if (what == "plunnecke") {
        session.seed(seed);
        c = plunnecke_corpus(seed, random_sets);
    } else if (what == "sidon") {
        c = sidon_corpus(max_m);
    } else if (what == "hypercube") {
        if (n <= 2) {
            c = hypercube_sweep(n, SubsetMode::exhaustive, 0, 0);
        } else {
            session.seed(seed);
            c = hypercube_sweep(n, SubsetMode::random, count, seed);
        }
    } else {  // converse
        c = converse_check(alpha, threshold);
    }
    std::cout << c.name << ": " << (c.passed ? "PASS" : "FAIL") << '\n';
    std::cout << c.detail << '\n';
    return c.passed ? 0 : 1;
}

int cmd_search(Session& session, const std::string& what, int N,
               std::size_t max_size, std::uint64_t seed, std::size_t trials,
               int support) {
    session.seed(seed);
    if (what == "mst2d") {
        const auto found = mst2d_search(N, max_size, seed, trials);
        if (!found) {
            std::cout << "no counterexample: every tested subset of [0, " << N
                      << ") has |A+A| <= |A+2A|\n";
            return 0;
        }
        const IntSet& a = *found;
        std::cout << "counterexample: A = " << set_str(a) << '\n';
        std::cout << "|A+A| = " << dilate_sum(a, 1, a).size()
                  << " > |A+2A| = " << dilate_sum(a, 2, a).size() << '\n';
        return 1;
    }
    // dilate-ineq
    const auto found = dilate_inequality_search(trials, support, seed);
    if (found.empty()) {
        std::cout << "no violations in " << trials
                  << " random fractional sets (support " << support << ")\n";
        return 0;
    }
    std::cout << found.size() << " violations:\n";
    for (const auto& cx : found) {
        std::cout << "  " << cx.statement << "  lhs = " << format_g12(cx.lhs)
                  << "  rhs = " << format_g12(cx.rhs) << "  alpha =";
        for (const auto& [p, w] : cx.alpha.entries())
            std::cout << ' ' << point_str(p) << ':' << format_g12(w);
        std::cout << '\n';
    }
    return 1;
}

int cmd_region(Session& session, const std::string& which,
               const std::string& out) {
    const RegionId id = which == "f12" ? RegionId::f12 : RegionId::f1m1;
    const auto lines = region_lines(id);
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open " + out + " for writing");
    f << "label,kind,x,y\n";
    std::size_t vertices = 0;
    for (const auto& line : lines) {
        for (const auto& [x, y] : line.points) {
            f << line.label << ','
              << (line.kind == LineKind::boundary ? "boundary" : "reference")
              << ',' << format_g12(x) << ',' << format_g12(y) << '\n';
            ++vertices;
        }
    }
    session.output(out);
    std::cout << "wrote " << lines.size() << " lines (" << vertices
              << " vertices) to " << out << '\n';
    return 0;
}

int cmd_reproduce_all(Session& session, std::uint64_t seed) {
    session.seed(seed);
    std::vector<ReproItem> items;
    items.push_back(reproduce_headline());
    for (ReproItem& item : reproduce_items(seed)) items.push_back(std::move(item));
    int passed = 0;
    std::printf("%3s  %-22s %-5s %8s\n", "#", "item", "state", "time");
    for (const ReproItem& item : items) {
        if (item.passed) ++passed;
        std::printf("%3d  %-22s %-5s %7.2fs\n", item.index, item.name.c_str(),
                    item.passed ? "PASS" : "FAIL", item.seconds);
        std::printf("     measured: %s\n", item.measured.c_str());
        std::printf("     expected: %s\n", item.expected.c_str());
    }
    std::printf("%d/%d passed\n", passed, static_cast<int>(items.size()));
    return passed == static_cast<int>(items.size()) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact sumsets, dilates and fractional-dilate norms"};
    app.require_subcommand(1);

    int threads = 0;
    Session session;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--manifest", session.manifest_path,
                   "write the run manifest JSON here instead of stderr");

    // construct
    auto* construct = app.add_subcommand("construct", "generate a set family");
    std::string family;
    std::int64_t c_n = -1, c_k = -1, c_d = -1, c_b = -1, c_N = -1, c_m = -1;
    std::string c_out;
    construct->add_option("family", family, "one of hypercube, interval, union, geometric, sidon, hry")
        ->required()
        ->check(CLI::IsMember({"hypercube", "interval", "union", "geometric",
                               "sidon", "hry"}));
    construct->add_option("--n", c_n, "digit count (hypercube, union)");
    construct->add_option("--k", c_k, "interval exponent / union exponent / level sum (hry)");
    construct->add_option("--d", c_d, "simplex dimension (hry)");
    construct->add_option("--b", c_b, "geometric base");
    construct->add_option("--N", c_N, "geometric top power");
    construct->add_option("--m", c_m, "Sidon prefix length");
    construct->add_option("--out", c_out, "output set file")->required();

    // sumset
    auto* sumset = app.add_subcommand("sumset", "compute A + k*B");
    std::string s_in, s_b, s_out;
    std::int64_t s_k = 1;
    sumset->add_option("--in", s_in, "set file for A")->required();
    sumset->add_option("--k", s_k, "dilation coefficient")->required();
    sumset->add_option("--b", s_b, "set file for B (defaults to A)");
    sumset->add_option("--out", s_out, "write the result set here");

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "fiber-size spectrum of A + k*A");
    std::string sp_in, sp_out;
    std::int64_t sp_k = -1;
    spec->add_option("--in", sp_in, "set file for A")->required();
    spec->add_option("--k", sp_k, "dilation coefficient")->required();
    spec->add_option("--out", sp_out, "write the spectrum as JSON here");

    // norm
    auto* nrm = app.add_subcommand("norm", "three-regime norm of a fractional set");
    std::string n_in;
    nrm->add_option("--in", n_in, "dilate file")->required();

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo size estimates");
    std::string mc_alpha, mc_beta, mc_out;
    std::int64_t mc_k = 1;
    int mc_n = 1;
    std::size_t mc_trials = 10000;
    std::uint64_t mc_seed = 1;
    bool mc_same = false, mc_rainbow = false;
    mc->add_option("--alpha", mc_alpha, "dilate file for the law of S")->required();
    mc->add_option("--beta", mc_beta, "dilate file for the law of T (defaults to alpha)");
    mc->add_option("--k", mc_k, "dilation coefficient")->required();
    mc->add_option("--n", mc_n, "tensor power")->required();
    mc->add_option("--trials", mc_trials, "number of trials");
    mc->add_option("--seed", mc_seed, "random seed");
    mc->add_flag("--same-set", mc_same, "use S on both sides of S + k*T");
    mc->add_flag("--rainbow", mc_rainbow, "rainbow-restricted same-vs-independent comparison");
    mc->add_option("--out", mc_out, "write the JSON report here (default stdout)");

    // beta
    auto* bt = app.add_subcommand("beta", "growth exponent at the sparseness threshold");
    std::int64_t b_k = 0, b_d = 0;
    double b_q = 0.0, b_wd = 0.0, b_wm = 0.0;
    bt->add_option("--k", b_k, "level sum")->required();
    bt->add_option("--d", b_d, "simplex dimension")->required();
    auto* opt_q = bt->add_option("--q", b_q, "explicit scalar weight instead of the threshold");
    auto* opt_wd = bt->add_option("--w-double", b_wd, "weight on tuples containing a 2 (k = 2 refinement)");
    auto* opt_wm = bt->add_option("--w-mixed", b_wm, "weight on tuples with two 1s (k = 2 refinement)");

    // beta-search
    auto* bs = app.add_subcommand("beta-search", "minimize beta over a (k, d) range");
    std::string bs_k, bs_d;
    bool bs_descent = false;
    bs->add_option("--k-range", bs_k, "lo:hi[:step]")->required();
    bs->add_option("--d-range", bs_d, "lo:hi[:step]")->required();
    bs->add_flag("--descent", bs_descent, "coordinate descent instead of full grid");

    // check
    auto* chk = app.add_subcommand("check", "run a property-check corpus");
    std::string chk_what;
    std::uint64_t chk_seed = 1;
    std::size_t chk_random = 500, chk_count = 2000;
    int chk_maxm = 40, chk_n = 4;
    double chk_alpha = 0.55, chk_threshold = 1.95;
    chk->add_option("what", chk_what, "one of plunnecke, sidon, hypercube, converse")
        ->required()
        ->check(CLI::IsMember({"plunnecke", "sidon", "hypercube", "converse"}));
    chk->add_option("--seed", chk_seed, "random seed");
    chk->add_option("--random", chk_random, "random sets for the plunnecke corpus");
    chk->add_option("--max-m", chk_maxm, "largest Sidon prefix");
    chk->add_option("--n", chk_n, "hypercube dimension (exhaustive when <= 2)");
    chk->add_option("--count", chk_count, "random pairs for the hypercube sweep");
    chk->add_option("--alpha", chk_alpha, "converse family exponent");
    chk->add_option("--threshold", chk_threshold, "converse target ratio");

    // search
    auto* sr = app.add_subcommand("search", "look for counterexamples");
    std::string sr_what;
    int sr_N = 8, sr_support = 5;
    std::size_t sr_maxsize = 0, sr_trials = 0;
    std::uint64_t sr_seed = 1;
    sr->add_option("what", sr_what, "one of mst2d, dilate-ineq")
        ->required()
        ->check(CLI::IsMember({"mst2d", "dilate-ineq"}));
    sr->add_option("--N", sr_N, "universe size [0, N) for mst2d");
    sr->add_option("--max-size", sr_maxsize, "cap on |A| for random mst2d trials");
    sr->add_option("--seed", sr_seed, "random seed");
    auto* opt_trials = sr->add_option("--trials", sr_trials, "random trials");
    sr->add_option("--support", sr_support, "support size for dilate-ineq");

    // region
    auto* rg = app.add_subcommand("region", "reference geometry of a feasible region");
    std::string rg_which, rg_out;
    rg->add_option("--which", rg_which, "f12 or f1m1")
        ->required()
        ->check(CLI::IsMember({"f12", "f1m1"}));
    rg->add_option("--out", rg_out, "CSV output path")->required();

    // reproduce-all
    auto* rep = app.add_subcommand("reproduce-all", "run the standard verification table");
    std::uint64_t rep_seed = 20260819;
    rep->add_option("--seed", rep_seed, "seed for the randomized sweeps");

    // Let the global --threads / --manifest options appear after a subcommand.
    for (CLI::App* sub : {construct, sumset, spec, nrm, mc, bt, bs, chk, sr, rg, rep})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (threads > 0)
        setenv("DILATE_LAB_THREADS", std::to_string(threads).c_str(), 1);

    std::ostringstream cmd;
    for (int i = 0; i < argc; ++i) {
        if (i) cmd << ' ';
        cmd << argv[i];
    }
    session.manifest.command = cmd.str();
    session.manifest.version = std::string(version());

    try {
        int code = 0;
        if (app.got_subcommand(construct)) {
            code = cmd_construct(session, family, c_n, c_k, c_d, c_b, c_N, c_m,
                                 c_out);
        } else if (app.got_subcommand(sumset)) {
            code = cmd_sumset(session, s_in, s_k, s_b, s_out);
        } else if (app.got_subcommand(spec)) {
            code = cmd_spectrum(session, sp_in, sp_k, sp_out);
        } else if (app.got_subcommand(nrm)) {
            code = cmd_norm(session, n_in);
        } else if (app.got_subcommand(mc)) {
            code = cmd_mc(session, mc_alpha, mc_beta, mc_k, mc_n, mc_trials,
                          mc_seed, mc_same, mc_rainbow, mc_out);
        } else if (app.got_subcommand(bt)) {
            const bool weighted = opt_wd->count() > 0 || opt_wm->count() > 0;
            if (weighted && (opt_wd->count() == 0 || opt_wm->count() == 0))
                throw std::invalid_argument(
                    "--w-double and --w-mixed must be given together");
            if (weighted && opt_q->count() > 0)
                throw std::invalid_argument("--q conflicts with the two-weight form");
            code = cmd_beta(b_k, b_d, b_q, opt_q->count() > 0, b_wd, b_wm, weighted);
        } else if (app.got_subcommand(bs)) {
            code = cmd_beta_search(bs_k, bs_d, bs_descent);
        } else if (app.got_subcommand(chk)) {
            code = cmd_check(session, chk_what, chk_seed, chk_random, chk_maxm,
                             chk_n, chk_count, chk_alpha, chk_threshold);
        } else if (app.got_subcommand(sr)) {
            if (opt_trials->count() == 0)
                sr_trials = sr_what == "mst2d" ? 200000 : 100;
            code = cmd_search(session, sr_what, sr_N, sr_maxsize, sr_seed,
                              sr_trials, sr_support);
        } else if (app.got_subcommand(rg)) {
            code = cmd_region(session, rg_which, rg_out);
        } else {
            code = cmd_reproduce_all(session, rep_seed);
        }
        session.emit();
        return code;
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
