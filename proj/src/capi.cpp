#include "gpdrift/gpdrift.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>

#include "gpdrift/bound.hpp"
#include "gpdrift/error.hpp"
#include "gpdrift/experiments.hpp"
#include "gpdrift/graph.hpp"
#include "gpdrift/piling.hpp"
#include "gpdrift/walk.hpp"

struct gpd_graph {
    std::shared_ptr<const gpdrift::Graph> graph;
};

struct gpd_batch {
    gpdrift::BatchResult result;
    gpdrift::GraphStats stats;
};

namespace {

thread_local std::string last_error;

gpd_status status_of(gpdrift::ErrorKind kind) {
    using gpdrift::ErrorKind;
    switch (kind) {
        case ErrorKind::invalid_argument: return GPD_ERR_INVALID_ARGUMENT;
        case ErrorKind::parse: return GPD_ERR_PARSE;
        case ErrorKind::small_cliques: return GPD_ERR_SMALL_CLIQUES;
        case ErrorKind::domain: return GPD_ERR_DOMAIN;
        case ErrorKind::corrupted: return GPD_ERR_CORRUPTED;
        case ErrorKind::io: return GPD_ERR_IO;
    }
    return GPD_ERR_INTERNAL;
}

template <typename F>
gpd_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return GPD_OK;
    } catch (const gpdrift::Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
    } catch (const std::exception& e) {
        last_error = e.what();
    } catch (...) {
        last_error = "unknown error";
    }
    return GPD_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
    if (!ok) gpdrift::fail(gpdrift::ErrorKind::invalid_argument, what);
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* gpd_last_error(void) { return last_error.c_str(); }

const char* gpd_version(void) { return "1.0.0"; }

void gpd_string_free(char* s) { std::free(s); }

gpd_status gpd_graph_parse(const char* text, size_t length, gpd_graph** out) {
    return guarded([&] {
        require(text && out, "gpd_graph_parse: null argument");
        auto g = std::make_shared<const gpdrift::Graph>(gpdrift::parse_graph(std::string_view(text, length)));
        *out = new gpd_graph{std::move(g)};
    });
}

gpd_status gpd_graph_load(const char* path, gpd_graph** out) {
    return guarded([&] {
        require(path && out, "gpd_graph_load: null argument");
        auto g = std::make_shared<const gpdrift::Graph>(gpdrift::load_graph(path));
        *out = new gpd_graph{std::move(g)};
    });
}

gpd_status gpd_graph_cycle(int32_t vertex_count, gpd_graph** out) {
    return guarded([&] {
        require(out != nullptr, "gpd_graph_cycle: null argument");
        *out = new gpd_graph{std::make_shared<const gpdrift::Graph>(gpdrift::cycle_graph(vertex_count))};
    });
}

void gpd_graph_free(gpd_graph* graph) { delete graph; }

int32_t gpd_graph_vertex_count(const gpd_graph* graph) { return graph ? graph->graph->vertex_count() : 0; }

size_t gpd_graph_duplicate_edges(const gpd_graph* graph) { return graph ? graph->graph->duplicate_edges() : 0; }

gpd_status gpd_graph_compute_stats(const gpd_graph* graph, gpd_graph_stats* out) {
    return guarded([&] {
        require(graph && out, "gpd_graph_compute_stats: null argument");
        auto s = gpdrift::stats(*graph->graph);
        *out = {s.D, s.C, s.B, s.small_cliques ? 1 : 0};
    });
}

gpd_status gpd_piling_render(const gpd_graph* graph, const char* group_spec, const char* word, char** out) {
    return guarded([&] {
        require(graph && group_spec && word && out, "gpd_piling_render: null argument");
        const auto& g = *graph->graph;
        auto groups = gpdrift::VertexGroupSpec::parse(group_spec, g.vertex_count());
        auto w = gpdrift::parse_word(word, g, groups);
        *out = copy_out(gpdrift::render(gpdrift::piling_of_word(w, g, groups), g, groups));
    });
}

gpd_status gpd_mean_u(int64_t B, int64_t C, int64_t D, int64_t* numerator, int64_t* denominator) {
    return guarded([&] {
        require(numerator && denominator, "gpd_mean_u: null argument");
        auto m = gpdrift::mean_U_exact(B, C, D);
        *numerator = m.numerator();
        *denominator = m.denominator();
    });
}

gpd_status gpd_kappa(int64_t B, int64_t C, int64_t D, gpd_kappa_result* out) {
    return guarded([&] {
        require(out != nullptr, "gpd_kappa: null argument");
        auto k = gpdrift::kappa(B, C, D);
        *out = {k.kappa, k.t_star, k.mgf_at_t_star, k.mean_U, k.t_max};
    });
}

gpd_status gpd_sweep_cycles_csv(int64_t from, int64_t to, int64_t points, char** out) {
    return guarded([&] {
        require(out != nullptr, "gpd_sweep_cycles_csv: null argument");
        require(from >= 3, "sweep: cycles need D >= 3");
        *out = copy_out(gpdrift::sweep_csv(gpdrift::sweep_cycles(gpdrift::log_spaced(from, to, points))));
    });
}

gpd_status gpd_batch_run(const gpd_graph* graph, const char* group_spec, const char* nu_spec, int64_t steps,
                         int64_t trials, uint64_t seed, unsigned workers, gpd_batch** out) {
    return guarded([&] {
        require(graph && group_spec && nu_spec && out, "gpd_batch_run: null argument");
        require(steps >= 1, "steps must be positive");
        require(trials >= 1, "trials must be positive");
        const auto& g = graph->graph;
        auto groups = std::make_shared<const gpdrift::VertexGroupSpec>(
            gpdrift::VertexGroupSpec::parse(group_spec, g->vertex_count()));
        gpdrift::TrialBatch batch;
        batch.config.graph = g;
        batch.config.groups = groups;
        batch.config.nu = gpdrift::parse_nu(nu_spec, *g, groups);
        batch.config.steps = steps;
        batch.trials = trials;
        batch.base_seed = seed;
        auto handle = std::make_unique<gpd_batch>();
        handle->stats = gpdrift::stats(*g);
        handle->result = gpdrift::run_batch(batch, workers);
        *out = handle.release();
    });
}

void gpd_batch_free(gpd_batch* batch) { delete batch; }

gpd_status gpd_batch_drift(const gpd_batch* batch, double* mean, double* std_error) {
    return guarded([&] {
        require(batch && mean && std_error, "gpd_batch_drift: null argument");
        auto est = gpdrift::estimate_drift(batch->result);
        *mean = est.mean;
        *std_error = est.std_error ? *est.std_error : std::numeric_limits<double>::quiet_NaN();
    });
}

gpd_status gpd_batch_trials_csv(const gpd_batch* batch, char** out) {
    return guarded([&] {
        require(batch && out, "gpd_batch_trials_csv: null argument");
        *out = copy_out(gpdrift::trials_csv(batch->result));
    });
}

gpd_status gpd_batch_checks_csv(const gpd_batch* batch, uint64_t seed, char** out, int* all_pass) {
    return guarded([&] {
        require(batch && out && all_pass, "gpd_batch_checks_csv: null argument");
        const auto& s = batch->stats;
        const auto& result = batch->result;
        std::vector<gpdrift::CheckReport> reports;
        reports.push_back(gpdrift::check_chain_inequality(result));

        if (gpdrift::small_cliques(s.B, s.C, s.D)) {
            auto k = gpdrift::kappa(s.B, s.C, s.D);
            reports.push_back(gpdrift::check_tail_bound(result, k.kappa));
            gpdrift::CheckReport drift;
            drift.name = "drift_vs_kappa";
            drift.statistic = gpdrift::estimate_drift(result).mean;
            drift.threshold = k.kappa;
            drift.pass = drift.statistic >= drift.threshold;
            reports.push_back(drift);
        } else {
            for (const char* name : {"tail_bound", "drift_vs_kappa"}) {
                gpdrift::CheckReport skipped;
                skipped.name = name;
                skipped.skipped = skipped.pass = true;
                reports.push_back(skipped);
            }
        }
        reports.push_back(gpdrift::check_pivot_step_probability(result, s));
        if (s.D > 2 * s.B + s.C) {
            reports.push_back(gpdrift::check_domination(result, gpdrift::UDistribution::make(s.B, s.C, s.D), seed));
        } else {
            gpdrift::CheckReport skipped;
            skipped.name = "domination";
            skipped.skipped = skipped.pass = true;
            reports.push_back(skipped);
        }
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.pass;
        *out = copy_out(gpdrift::checks_csv(reports));
        *all_pass = ok ? 1 : 0;
    });
}

}  // extern "C"
