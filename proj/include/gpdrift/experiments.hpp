#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpdrift/bound.hpp"
#include "gpdrift/graph.hpp"
#include "gpdrift/walk.hpp"

namespace gpdrift {

/// splitmix64 finalizer applied to base + (index+1) * golden gamma. Trial t
/// of a batch always uses derive_seed(base_seed, t).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

/// Worker count from GPDRIFT_WORKERS, else the hardware concurrency.
unsigned default_workers();

struct TrialBatch {
    WalkConfig config;  // config.seed is ignored
    std::int64_t trials = 0;
    std::uint64_t base_seed = 0;
};

struct TrialResult {
    std::int64_t syllables = 0;              // |Z_n| in syllables
    std::vector<std::int64_t> pivotal_counts;  // A_0 .. A_n
    std::int64_t A_n() const { return pivotal_counts.back(); }
};

struct BatchResult {
    TrialBatch batch;
    std::vector<TrialResult> trials;
    std::int64_t steps() const { return batch.config.steps; }
};

/// Runs the trials on `workers` threads (0 = default_workers()). The result
/// does not depend on the worker count.
BatchResult run_batch(const TrialBatch& batch, unsigned workers = 0);

struct DriftEstimate {
    double mean = 0.0;
    std::optional<double> std_error;  // absent for a single trial
};

/// Mean and standard error of syllables(Z_n) / n.
DriftEstimate estimate_drift(const BatchResult& result);

struct CheckReport {
    std::string name;
    double statistic = 0.0;
    double threshold = 0.0;
    bool pass = false;
    bool skipped = false;
    std::string note;
};

/// Upper end of the two-sided 99% Wilson score interval.
double wilson_upper_99(std::int64_t successes, std::int64_t trials);

/// Empirical P(syllables(Z_n) <= kappa n) against exp(-kappa n). Passes
/// when the Wilson upper limit is at most the bound, or when no trial hit
/// the event and the bound is below the 1/trials resolution.
CheckReport check_tail_bound(const BatchResult& result, double kappa);

/// Pooled frequency of A_{k+1} >= A_k + 1 over k = 1..n-1 against
/// (D-B-C)/D - 4 sigma. Skipped when D-B-C <= 0 or trials < 1000.
CheckReport check_pivot_step_probability(const BatchResult& result, const GraphStats& stats);

using USampler = std::function<std::int64_t(Rng&)>;

/// Compares P(A_n >= i) with P(A_{n-1} + U >= i) for every i in the
/// observed range, n the batch length; U drawn with derive_seed(seed, t) for
/// trial t. Fails if any gap exceeds 4 combined binomial sigmas.
CheckReport check_domination(const BatchResult& result, const UDistribution& dist, std::uint64_t seed);
CheckReport check_domination(const BatchResult& result, const USampler& sample, std::uint64_t seed,
                             std::int64_t min_trials = 10000);

/// A_n <= syllables(Z_n) on every trial.
CheckReport check_chain_inequality(const BatchResult& result);

struct SweepRow {
    std::int64_t D = 0;
    std::int64_t B = 0;
    std::int64_t C = 0;
    bool small_cliques = false;
    KappaResult kappa;  // meaningful only when small_cliques
};

/// One row per D for the D-cycle (B = 4, C = 2).
std::vector<SweepRow> sweep_cycles(const std::vector<std::int64_t>& D_list);

/// `points` values from `from` to `to`, geometrically spaced, rounded and
/// deduplicated.
std::vector<std::int64_t> log_spaced(std::int64_t from, std::int64_t to, std::int64_t points);

/// %.12g.
std::string format_float(double x);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string trials_csv(const BatchResult& result);
std::string checks_csv(const std::vector<CheckReport>& reports);

}  // namespace gpdrift
