#pragma once

#include <cstdint>

#include <boost/rational.hpp>

#include "gpdrift/vertex_group.hpp"

namespace gpdrift {

using Rational = boost::rational<std::int64_t>;

/// Law of the per-step increment U that A_{n+1} - A_n dominates:
///   P(U = 1) = (D-B-C)/D,  P(U <= -j) = ((B+C)/D) r^{j-1},  r = B/(D-B-C).
struct UDistribution {
    std::int64_t B = 0;
    std::int64_t C = 0;
    std::int64_t D = 0;
    double p_up = 0.0;
    double r = 0.0;

    /// Requires D > 2B + C (so r < 1); throws Error{domain} otherwise.
    static UDistribution make(std::int64_t B, std::int64_t C, std::int64_t D);

    double prob_down() const noexcept { return 1.0 - p_up; }
    /// P(U <= -j) for j >= 1.
    double tail(std::int64_t j) const;
    /// P(U = -j) for j >= 1.
    double pmf_down(std::int64_t j) const;
};

struct KappaResult {
    double kappa = 0.0;
    double t_star = 0.0;
    double mgf_at_t_star = 1.0;
    double mean_U = 0.0;
    double t_max = 0.0;  // right end of the convergence interval (0, t_max)
};

/// True iff D > 3B + 2C.
bool small_cliques(std::int64_t B, std::int64_t C, std::int64_t D);

/// E[U] = (D-B-C)/D - ((B+C)/D) (D-B-C)/(D-2B-C), exactly. Requires D > 2B + C.
Rational mean_U_exact(std::int64_t B, std::int64_t C, std::int64_t D);
double mean_U(std::int64_t B, std::int64_t C, std::int64_t D);

/// ln((D-B-C)/B), or +infinity when B = 0.
double t_max(std::int64_t B, std::int64_t C, std::int64_t D);

/// E[exp(-tU)] in closed form; requires 0 < t < t_max (Error{domain}).
double mgf(double t, std::int64_t B, std::int64_t C, std::int64_t D);

/// -ln E[exp(-tU)] / (1 + t).
double rate_function(double t, std::int64_t B, std::int64_t C, std::int64_t D);

/// Maximizes the rate function over feasible t: a 10^4-point grid on
/// (0, t_max) keeps only points with mgf < 1, then golden-section search
/// refines around the best grid point to |dt| < 1e-9. Throws
/// Error{small_cliques} unless D > 3B + 2C.
KappaResult kappa(std::int64_t B, std::int64_t C, std::int64_t D);

/// Exact inverse-CDF draw.
std::int64_t sample_U(const UDistribution& dist, Rng& rng);

/// min(1, exp(t kappa n) mgf^n).
double large_deviation_bound(double kappa, double t, double mgf_value, std::int64_t n);

}  // namespace gpdrift
