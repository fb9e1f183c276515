#include "gpdrift/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

#include "gpdrift/error.hpp"

namespace gpdrift {

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
    std::uint64_t z = base_seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

unsigned default_workers() {
    if (const char* env = std::getenv("GPDRIFT_WORKERS")) {
        char* end = nullptr;
        long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

BatchResult run_batch(const TrialBatch& batch, unsigned workers) {
    if (batch.trials < 1) fail(ErrorKind::invalid_argument, "batch needs at least one trial");
    if (batch.config.steps < 1) fail(ErrorKind::invalid_argument, "batch walks need n >= 1");
    if (workers == 0) workers = default_workers();
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, batch.trials));

    BatchResult result;
    result.batch = batch;
    result.trials.resize(static_cast<std::size_t>(batch.trials));

    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto work = [&] {
        while (true) {
            const std::int64_t t = next.fetch_add(1);
            if (t >= batch.trials) return;
            try {
                WalkConfig cfg = batch.config;
                cfg.seed = derive_seed(batch.base_seed, static_cast<std::uint64_t>(t));
                WalkTrace trace = run_walk(cfg);
                TrialResult& r = result.trials[static_cast<std::size_t>(t)];
                r.syllables = trace.full(trace.length()).syllable_length();
                r.pivotal_counts = trace.pivotal_counts();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next = batch.trials;
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return result;
}

DriftEstimate estimate_drift(const BatchResult& result) {
    const double n = static_cast<double>(result.steps());
    const double count = static_cast<double>(result.trials.size());
    double sum = 0.0;
    for (const auto& t : result.trials) sum += static_cast<double>(t.syllables) / n;
    DriftEstimate est;
    est.mean = sum / count;
    if (result.trials.size() > 1) {
        double ss = 0.0;
        for (const auto& t : result.trials) {
            double d = static_cast<double>(t.syllables) / n - est.mean;
            ss += d * d;
        }
        est.std_error = std::sqrt(ss / (count - 1.0) / count);
    }
    return est;
}

double wilson_upper_99(std::int64_t successes, std::int64_t trials) {
    constexpr double z = 2.5758293035489004;  // two-sided 99%
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double centre = p + z2 / (2.0 * n);
    const double spread = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    return std::min(1.0, (centre + spread) / (1.0 + z2 / n));
}

CheckReport check_tail_bound(const BatchResult& result, double kappa) {
    const std::int64_t n = result.steps();
    const double limit = kappa * static_cast<double>(n);
    std::int64_t hits = 0;
    for (const auto& t : result.trials)
        if (static_cast<double>(t.syllables) <= limit) ++hits;
    const auto trials = static_cast<std::int64_t>(result.trials.size());

    CheckReport r;
    r.name = "tail_bound";
    r.statistic = static_cast<double>(hits) / static_cast<double>(trials);
    r.threshold = std::exp(-limit);
    const double upper = wilson_upper_99(hits, trials);
    const bool unresolved = hits == 0 && r.threshold < 1.0 / static_cast<double>(trials);
    r.pass = upper <= r.threshold || unresolved;
    r.note = "wilson_upper=" + format_float(upper);
    return r;
}

CheckReport check_pivot_step_probability(const BatchResult& result, const GraphStats& stats) {
    CheckReport r;
    r.name = "pivot_step_probability";
    const std::int64_t free_vertices = stats.D - stats.B - stats.C;
    const double p0 = static_cast<double>(free_vertices) / static_cast<double>(stats.D);
    if (free_vertices <= 0) {
        r.skipped = r.pass = true;
        r.note = "D-B-C <= 0: bound is vacuous";
        return r;
    }
    if (result.trials.size() < 1000) {
        r.skipped = r.pass = true;
        r.note = "needs at least 1000 trials";
        return r;
    }
    std::int64_t ups = 0;
    std::int64_t total = 0;
    for (const auto& t : result.trials) {
        const auto& a = t.pivotal_counts;
        for (std::size_t k = 1; k + 1 < a.size(); ++k) {
            ++total;
            if (a[k + 1] >= a[k] + 1) ++ups;
        }
    }
    if (total == 0) {
        r.skipped = r.pass = true;
        r.note = "walks too short (need n >= 2)";
        return r;
    }
    const double sigma = std::sqrt(p0 * (1.0 - p0) / static_cast<double>(total));
    r.statistic = static_cast<double>(ups) / static_cast<double>(total);
    r.threshold = p0 - 4.0 * sigma;
    r.pass = r.statistic >= r.threshold;
    r.note = "transitions=" + std::to_string(total);
    return r;
}

CheckReport check_domination(const BatchResult& result, const UDistribution& dist, std::uint64_t seed) {
    return check_domination(result, [dist](Rng& rng) { return sample_U(dist, rng); }, seed);
}

CheckReport check_domination(const BatchResult& result, const USampler& sample, std::uint64_t seed,
                             std::int64_t min_trials) {
    CheckReport r;
    r.name = "domination";
    const auto trials = static_cast<std::int64_t>(result.trials.size());
    if (trials < min_trials) {
        r.skipped = r.pass = true;
        r.note = "needs at least " + std::to_string(min_trials) + " trials";
        return r;
    }
    const std::size_t n = static_cast<std::size_t>(result.steps());
    std::vector<std::int64_t> next;
    std::vector<std::int64_t> shifted;
    for (std::int64_t t = 0; t < trials; ++t) {
        const auto& a = result.trials[static_cast<std::size_t>(t)].pivotal_counts;
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        next.push_back(a[n]);
        shifted.push_back(a[n - 1] + sample(rng));
    }
    std::sort(next.begin(), next.end());
    std::sort(shifted.begin(), shifted.end());
    const std::int64_t lo = std::min(next.front(), shifted.front());
    const std::int64_t hi = std::max(next.back(), shifted.back());
    const double count = static_cast<double>(trials);
    auto survival = [&](const std::vector<std::int64_t>& sorted, std::int64_t i) {
        auto above = sorted.end() - std::lower_bound(sorted.begin(), sorted.end(), i);
        return static_cast<double>(above) / count;
    };

    double worst = std::numeric_limits<double>::infinity();
    std::int64_t worst_i = lo;
    r.pass = true;
    for (std::int64_t i = lo; i <= hi + 1; ++i) {
        const double p_next = survival(next, i);
        const double p_shift = survival(shifted, i);
        const double sigma =
            std::sqrt(p_next * (1.0 - p_next) / count + p_shift * (1.0 - p_shift) / count);
        const double gap = p_next - p_shift;
        if (gap < -4.0 * sigma) r.pass = false;
        const double z = sigma > 0.0 ? gap / sigma : (gap < 0.0 ? -std::numeric_limits<double>::infinity()
                                                                : std::numeric_limits<double>::infinity());
        if (z < worst) {
            worst = z;
            worst_i = i;
        }
    }
    r.statistic = std::isfinite(worst) ? worst : (worst < 0 ? -1e300 : 1e300);
    r.threshold = -4.0;
    r.note = "worst_i=" + std::to_string(worst_i) + " n=" + std::to_string(n);
    return r;
}

CheckReport check_chain_inequality(const BatchResult& result) {
    CheckReport r;
    r.name = "chain_inequality";
    std::int64_t violations = 0;
    for (const auto& t : result.trials)
        if (t.A_n() > t.syllables) ++violations;
    r.statistic = static_cast<double>(violations);
    r.threshold = 0.0;
    r.pass = violations == 0;
    return r;
}

std::vector<SweepRow> sweep_cycles(const std::vector<std::int64_t>& D_list) {
    std::vector<SweepRow> rows;
    for (std::int64_t D : D_list) {
        SweepRow row;
        row.D = D;
        row.B = 4;
        row.C = 2;
        row.small_cliques = small_cliques(row.B, row.C, D);
        if (row.small_cliques) row.kappa = kappa(row.B, row.C, D);
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::int64_t> log_spaced(std::int64_t from, std::int64_t to, std::int64_t points) {
    if (from < 1 || to < from || points < 1)
        fail(ErrorKind::invalid_argument, "log_spaced needs 1 <= from <= to and points >= 1");
    std::vector<std::int64_t> out;
    if (points == 1) return {from};
    const double lf = std::log(static_cast<double>(from));
    const double lt = std::log(static_cast<double>(to));
    for (std::int64_t i = 0; i < points; ++i) {
        double x = std::exp(lf + (lt - lf) * static_cast<double>(i) / static_cast<double>(points - 1));
        auto v = std::clamp<std::int64_t>(std::llround(x), from, to);
        if (out.empty() || v > out.back()) out.push_back(v);
    }
    return out;
}

std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "D,B,C,kappa,t_star,mean_U,mgf\n";
    for (const auto& row : rows) {
        out += std::to_string(row.D) + ',' + std::to_string(row.B) + ',' + std::to_string(row.C) + ',';
        if (row.small_cliques) {
            out += format_float(row.kappa.kappa) + ',' + format_float(row.kappa.t_star) + ',' +
                   format_float(row.kappa.mean_U) + ',' + format_float(row.kappa.mgf_at_t_star);
        } else {
            std::string mean = row.D > 2 * row.B + row.C ? format_float(mean_U(row.B, row.C, row.D)) : "NA";
            out += "NA,NA," + mean + ",NA";
        }
        out += '\n';
    }
    return out;
}

std::string trials_csv(const BatchResult& result) {
    std::string out = "trial,syllables,A_n\n";
    for (std::size_t t = 0; t < result.trials.size(); ++t)
        out += std::to_string(t) + ',' + std::to_string(result.trials[t].syllables) + ',' +
               std::to_string(result.trials[t].A_n()) + '\n';
    return out;
}

std::string checks_csv(const std::vector<CheckReport>& reports) {
    std::string out = "check,statistic,threshold,pass\n";
    for (const auto& r : reports)
        out += r.name + ',' + format_float(r.statistic) + ',' + format_float(r.threshold) + ',' +
               (r.skipped ? "skipped" : (r.pass ? "true" : "false")) + '\n';
    return out;
}

}  // namespace gpdrift
