// gpdrift command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gpdrift/gpdrift.h"

namespace {

constexpr std::uint64_t default_seed = 20240917;

enum Exit { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_small_cliques = 3, exit_check_failed = 4 };

struct CliError {
    int code;
    std::string message;
};

int exit_code_for(gpd_status s) {
    switch (s) {
        case GPD_OK: return exit_ok;
        case GPD_ERR_INVALID_ARGUMENT:
        case GPD_ERR_PARSE:
        case GPD_ERR_IO: return exit_usage;
        case GPD_ERR_SMALL_CLIQUES: return exit_small_cliques;
        default: return exit_failure;
    }
}

void check(gpd_status s) {
    if (s != GPD_OK) throw CliError{exit_code_for(s), gpd_last_error()};
}

struct StringDeleter {
    void operator()(char* s) const { gpd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(gpd_graph* g) const { gpd_graph_free(g); }
};
using GraphHandle = std::unique_ptr<gpd_graph, GraphDeleter>;

struct BatchDeleter {
    void operator()(gpd_batch* b) const { gpd_batch_free(b); }
};
using BatchHandle = std::unique_ptr<gpd_batch, BatchDeleter>;

std::string fmt(double x) {
    if (std::isnan(x)) return "null";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct GraphOptions {
    std::string path;
    std::string family;
    std::int32_t D = 0;

    void add(CLI::App* app) {
        auto* g = app->add_option("--graph", path, "graph file (JSON or edge list)");
        auto* f = app->add_option("--family", family, "built-in family")->check(CLI::IsMember({"cycle"}));
        app->add_option("--D", D, "vertex count for --family")->check(CLI::Range(3, 100000000));
        g->excludes(f);
    }

    GraphHandle load() const {
        gpd_graph* raw = nullptr;
        if (!path.empty()) {
            check(gpd_graph_load(path.c_str(), &raw));
        } else if (family == "cycle") {
            if (D == 0) throw CliError{exit_usage, "--family cycle needs --D"};
            check(gpd_graph_cycle(D, &raw));
        } else {
            throw CliError{exit_usage, "one of --graph or --family is required"};
        }
        GraphHandle g(raw);
        if (auto dups = gpd_graph_duplicate_edges(g.get()))
            std::cerr << "warning: merged " << dups << " duplicate edge(s)\n";
        return g;
    }
};

struct RunOptions {
    GraphOptions graph;
    std::string groups = "z";
    std::string nu = "letters:";
    std::int64_t n = 200;
    std::int64_t trials = 1000;
    std::uint64_t seed = default_seed;
    unsigned workers = 0;
    std::string out;

    void add(CLI::App* app) {
        graph.add(app);
        app->add_option("--groups", groups, "vertex groups: z | zmod:m | comma list")->capture_default_str();
        app->add_option("--nu", nu, "step law: fixed:<word> | list:<path> | letters: | pareto:<alpha>")
            ->capture_default_str();
        app->add_option("--n", n, "walk length")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--trials", trials, "number of walks")->check(CLI::PositiveNumber)->capture_default_str();
        app->add_option("--seed", seed, "base seed")->capture_default_str();
        app->add_option("--workers", workers, "threads (0 = GPDRIFT_WORKERS or all cores)");
        app->add_option("--out", out, "CSV output path (default stdout)");
    }

    BatchHandle run(const gpd_graph* g) const {
        gpd_batch* raw = nullptr;
        check(gpd_batch_run(g, groups.c_str(), nu.c_str(), n, trials, seed, workers, &raw));
        return BatchHandle(raw);
    }
};

void emit(const std::string& out_path, const char* text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << text)) throw CliError{exit_usage, "cannot write " + out_path};
}

int cmd_stats(const GraphOptions& opts) {
    auto g = opts.load();
    gpd_graph_stats s;
    check(gpd_graph_compute_stats(g.get(), &s));
    std::cout << "{\"D\":" << s.D << ",\"C\":" << s.C << ",\"B\":" << s.B
              << ",\"small_cliques\":" << (s.small_cliques ? "true" : "false") << "}\n";
    return exit_ok;
}

int cmd_kappa(const GraphOptions& opts) {
    auto g = opts.load();
    gpd_graph_stats s;
    check(gpd_graph_compute_stats(g.get(), &s));
    if (!s.small_cliques)
        throw CliError{exit_small_cliques, "small cliques condition fails: D=" + std::to_string(s.D) +
                                               " <= 3B+2C=" + std::to_string(3 * s.B + 2 * s.C)};
    gpd_kappa_result k;
    check(gpd_kappa(s.B, s.C, s.D, &k));
    std::cout << "{\"D\":" << s.D << ",\"C\":" << s.C << ",\"B\":" << s.B << ",\"kappa\":" << fmt(k.kappa)
              << ",\"t_star\":" << fmt(k.t_star) << ",\"mgf\":" << fmt(k.mgf_at_t_star)
              << ",\"mean_U\":" << fmt(k.mean_U) << ",\"t_max\":" << fmt(k.t_max) << "}\n";
    return exit_ok;
}

int cmd_simulate(const RunOptions& opts) {
    auto g = opts.graph.load();
    auto batch = opts.run(g.get());
    char* raw = nullptr;
    check(gpd_batch_trials_csv(batch.get(), &raw));
    OwnedString csv(raw);
    emit(opts.out, csv.get());
    double mean = 0, se = 0;
    check(gpd_batch_drift(batch.get(), &mean, &se));
    std::cerr << "drift " << fmt(mean) << " se " << fmt(se) << "\n";
    return exit_ok;
}

int cmd_check(const RunOptions& opts) {
    auto g = opts.graph.load();
    auto batch = opts.run(g.get());
    char* raw = nullptr;
    int all_pass = 0;
    check(gpd_batch_checks_csv(batch.get(), opts.seed, &raw, &all_pass));
    OwnedString csv(raw);
    emit(opts.out, csv.get());

    // Summary: one "name: pass|FAIL|skipped" line per check.
    std::ostream& summary = opts.out.empty() ? std::cerr : std::cout;
    std::string text(csv.get());
    std::size_t pos = text.find('\n') + 1;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        std::string row = text.substr(pos, end - pos);
        auto name = row.substr(0, row.find(','));
        auto verdict = row.substr(row.rfind(',') + 1);
        summary << name << ": " << (verdict == "true" ? "pass" : verdict == "false" ? "FAIL" : verdict) << "\n";
        pos = end + 1;
    }
    return all_pass ? exit_ok : exit_check_failed;
}

int cmd_sweep(const std::string& family, std::int64_t from, std::int64_t to, std::int64_t points,
              const std::string& out) {
    if (family != "cycle") throw CliError{exit_usage, "sweep supports --family cycle only"};
    if (to < from) throw CliError{exit_usage, "--to must be at least --from"};
    char* raw = nullptr;
    check(gpd_sweep_cycles_csv(from, to, points, &raw));
    OwnedString csv(raw);
    emit(out, csv.get());
    return exit_ok;
}

int cmd_piling(const GraphOptions& opts, const std::string& groups, const std::string& word) {
    auto g = opts.load();
    char* raw = nullptr;
    check(gpd_piling_render(g.get(), groups.c_str(), word.c_str(), &raw));
    OwnedString text(raw);
    std::cout << text.get() << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph-product random walks: cliques, drift bound, simulation and checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", gpd_version());

    GraphOptions stats_opts, kappa_opts, piling_opts;
    RunOptions sim_opts, check_opts;
    check_opts.trials = 10000;

    auto* stats = app.add_subcommand("stats", "print D, C, B and the small cliques condition as JSON");
    stats_opts.add(stats);

    auto* kappa = app.add_subcommand("kappa", "compute the drift bound kappa as JSON (exit 3 without small cliques)");
    kappa_opts.add(kappa);

    auto* simulate = app.add_subcommand("simulate", "run walks and write trial,syllables,A_n CSV");
    sim_opts.add(simulate);

    auto* checks = app.add_subcommand("check", "run walks and the statistical checks (exit 4 on failure)");
    check_opts.add(checks);

    std::string sweep_family = "cycle", sweep_out;
    std::int64_t from = 17, to = 12000, points = 50;
    auto* sweep = app.add_subcommand("sweep", "kappa over log-spaced cycle sizes as CSV");
    sweep->add_option("--family", sweep_family)->capture_default_str();
    sweep->add_option("--from", from)->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--to", to)->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--points", points)->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

    std::string piling_groups = "z", word;
    auto* piling = app.add_subcommand("piling", "render the piling of a word");
    piling_opts.add(piling);
    piling->add_option("--groups", piling_groups)->capture_default_str();
    piling->add_option("--word", word, "syllables such as \"a c b^-1\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        if (*stats) return cmd_stats(stats_opts);
        if (*kappa) return cmd_kappa(kappa_opts);
        if (*simulate) return cmd_simulate(sim_opts);
        if (*checks) return cmd_check(check_opts);
        if (*sweep) return cmd_sweep(sweep_family, from, to, points, sweep_out);
        if (*piling) return cmd_piling(piling_opts, piling_groups, word);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return exit_usage;
}
