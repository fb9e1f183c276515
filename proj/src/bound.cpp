#include "gpdrift/bound.hpp"

#include <cmath>
#include <limits>

#include "gpdrift/error.hpp"

namespace gpdrift {

namespace {

void require_convergent(std::int64_t B, std::int64_t C, std::int64_t D) {
    if (B < 0 || C < 1 || D < 1 || D <= 2 * B + C)
        fail(ErrorKind::domain, "U distribution needs D > 2B + C (B=" + std::to_string(B) +
                                    ", C=" + std::to_string(C) + ", D=" + std::to_string(D) + ")");
}

}  // namespace

UDistribution UDistribution::make(std::int64_t B, std::int64_t C, std::int64_t D) {
    require_convergent(B, C, D);
    UDistribution u;
    u.B = B;
    u.C = C;
    u.D = D;
    u.p_up = static_cast<double>(D - B - C) / static_cast<double>(D);
    u.r = static_cast<double>(B) / static_cast<double>(D - B - C);
    return u;
}

double UDistribution::tail(std::int64_t j) const {
    if (j < 1) return 1.0;
    return prob_down() * std::pow(r, static_cast<double>(j - 1));
}

double UDistribution::pmf_down(std::int64_t j) const { return tail(j) * (1.0 - r); }

bool small_cliques(std::int64_t B, std::int64_t C, std::int64_t D) { return D > 3 * B + 2 * C; }

Rational mean_U_exact(std::int64_t B, std::int64_t C, std::int64_t D) {
    require_convergent(B, C, D);
    Rational up(D - B - C, D);
    Rational down(B + C, D);
    return up - down * Rational(D - B - C, D - 2 * B - C);
}

double mean_U(std::int64_t B, std::int64_t C, std::int64_t D) {
    return boost::rational_cast<double>(mean_U_exact(B, C, D));
}

double t_max(std::int64_t B, std::int64_t C, std::int64_t D) {
    require_convergent(B, C, D);
    if (B == 0) return std::numeric_limits<double>::infinity();
    return std::log(static_cast<double>(D - B - C) / static_cast<double>(B));
}

double mgf(double t, std::int64_t B, std::int64_t C, std::int64_t D) {
    const double upper = t_max(B, C, D);
    if (!(t > 0.0) || !(t < upper)) fail(ErrorKind::domain, "mgf: t outside (0, t_max)");
    const double d = static_cast<double>(D);
    const double free = static_cast<double>(D - B - C);
    const double r = static_cast<double>(B) / free;
    const double et = std::exp(t);
    const double up = std::exp(-t) * free / d;
    const double down = (static_cast<double>(B + C) / d) * (static_cast<double>(D - 2 * B - C) / free) * et /
                        (1.0 - et * r);
    return up + down;
}

double rate_function(double t, std::int64_t B, std::int64_t C, std::int64_t D) {
    return -std::log(mgf(t, B, C, D)) / (1.0 + t);
}

namespace {

// Largest t worth searching: beyond it mgf >= 1 (or the series diverges).
double search_ceiling(std::int64_t B, std::int64_t C, std::int64_t D) {
    const double upper = t_max(B, C, D);
    if (std::isfinite(upper)) return upper;
    // B = 0: mgf >= ((B+C)/D) e^t, which reaches 1 at ln(D/C).
    return std::log(static_cast<double>(D) / static_cast<double>(C));
}

}  // namespace

KappaResult kappa(std::int64_t B, std::int64_t C, std::int64_t D) {
    if (!small_cliques(B, C, D))
        fail(ErrorKind::small_cliques, "small-cliques condition D > 3B + 2C fails (B=" + std::to_string(B) +
                                           ", C=" + std::to_string(C) + ", D=" + std::to_string(D) + ")");
    KappaResult res;
    res.mean_U = mean_U(B, C, D);
    res.t_max = t_max(B, C, D);

    constexpr int grid_points = 10000;
    constexpr double edge = 1e-12;
    const double ceiling = search_ceiling(B, C, D);
    const double lo = edge * ceiling;
    const double hi = ceiling * (1.0 - edge);
    const double step = (hi - lo) / (grid_points - 1);

    auto feasible_rate = [&](double t) {
        if (!(t > 0.0) || !(t < res.t_max)) return -std::numeric_limits<double>::infinity();
        double m = mgf(t, B, C, D);
        if (!(m < 1.0)) return -std::numeric_limits<double>::infinity();
        return -std::log(m) / (1.0 + t);
    };

    int best = -1;
    double best_rate = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_points; ++i) {
        double f = feasible_rate(lo + step * i);
        if (f > best_rate) {
            best_rate = f;
            best = i;
        }
    }
    if (best < 0) fail(ErrorKind::domain, "kappa: no feasible t although E[U] > 0");

    // Golden-section refinement on the bracket around the best grid point.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo + step * std::max(best - 1, 0);
    double b = lo + step * std::min(best + 1, grid_points - 1);
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = feasible_rate(x1);
    double f2 = feasible_rate(x2);
    while (b - a > 1e-9) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = feasible_rate(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = feasible_rate(x1);
        }
    }
    double t_star = lo + step * best;
    double refined = 0.5 * (a + b);
    if (feasible_rate(refined) >= best_rate) t_star = refined;

    res.t_star = t_star;
    res.mgf_at_t_star = mgf(t_star, B, C, D);
    res.kappa = -std::log(res.mgf_at_t_star) / (1.0 + t_star);
    return res;
}

std::int64_t sample_U(const UDistribution& dist, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) < dist.p_up) return 1;
    if (dist.r <= 0.0) return -1;
    // P(j > m | down) = r^m.
    double u = 1.0 - unit(rng);
    double m = std::floor(std::log(u) / std::log(dist.r));
    return -1 - static_cast<std::int64_t>(m);
}

double large_deviation_bound(double kappa, double t, double mgf_value, std::int64_t n) {
    if (n <= 0) return 1.0;
    double log_bound = static_cast<double>(n) * (t * kappa + std::log(mgf_value));
    return log_bound >= 0.0 ? 1.0 : std::exp(log_bound);
}

}  // namespace gpdrift
