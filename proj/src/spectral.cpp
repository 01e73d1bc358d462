#include "netdiff/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace netdiff {

namespace {

// y = x * A (push along out-edges).
void left_multiply(const Graph& g, const WeightVector& x, WeightVector& y) {
    std::fill(y.begin(), y.end(), 0.0);
    const std::size_t n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        const double xu = x[u];
        if (xu == 0.0) continue;
        for (const HalfEdge& e : g.out_neighbors(u)) y[e.node] += xu * e.weight;
    }
}

void normalize_l1(WeightVector& x) {
    const double s = l1_norm(x);
    if (s > 0.0)
        for (double& v : x) v /= s;
}

// Streaming log-sum-exp accumulator.
struct LogSum {
    double m = -std::numeric_limits<double>::infinity();
    double s = 0.0;
    void add(double lx) {
        if (lx == -std::numeric_limits<double>::infinity()) return;
        if (lx > m) {
            s = s * std::exp(m - lx) + 1.0;
            m = lx;
        } else {
            s += std::exp(lx - m);
        }
    }
    double log_value() const {
        if (s == 0.0) return -std::numeric_limits<double>::infinity();
        return m + std::log(s);
    }
};

} // namespace

SpectralEstimate spectral_radius(const Graph& g, double tol, std::size_t max_iters) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("spectral_radius: empty graph");

    // Deterministic strictly-positive ramp start; a flat start can land
    // exactly on a symmetric invariant subspace and mask oscillation.
    WeightVector x(n), y(n), prev1(n), prev2(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = 1.0 + static_cast<double>(i + 1) / static_cast<double>(n + 1);
    normalize_l1(x);

    SpectralEstimate est;
    const double dir_tol = std::max(std::sqrt(tol), 1e-8);

    double g_prev = 0.0;    // growth ratio one step back
    double lambda_prev = 0.0;
    std::vector<double> lambda_history;
    for (std::size_t t = 1; t <= max_iters; ++t) {
        left_multiply(g, x, y);
        const double growth = l1_norm(y); // ||x||_1 == 1 on entry
        est.iterations = t;
        if (growth == 0.0) {
            // Nilpotent adjacency: spectral radius is exactly zero.
            est.lambda1 = 0.0;
            est.rel_change_final = 0.0;
            est.converged = true;
            return est;
        }
        prev2 = prev1;
        prev1 = x;
        x = y;
        normalize_l1(x);

        if (t >= 2) {
            const double lambda = std::sqrt(growth * g_prev);
            lambda_history.push_back(lambda);
            const double rel = std::abs(lambda - lambda_prev) / std::max(lambda, 1e-30);
            est.lambda1 = lambda;
            est.rel_change_final = rel;
            if (t >= 3 && rel < tol) {
                const double d1 = l1_diff(x, prev1);
                const double d2 = l1_diff(x, prev2);
                if (std::min(d1, d2) < dir_tol) {
                    est.converged = true;
                    return est;
                }
            }
            lambda_prev = lambda;
        }
        g_prev = growth;
    }

    // Direction kept rotating (complex dominant pair): fall back to the
    // averaged growth-rate estimate over the tail of the run.
    if (!lambda_history.empty()) {
        const std::size_t tail = std::min<std::size_t>(lambda_history.size(), 64);
        double acc = 0.0;
        for (std::size_t i = lambda_history.size() - tail; i < lambda_history.size(); ++i)
            acc += lambda_history[i];
        est.lambda1 = acc / static_cast<double>(tail);
    }
    est.converged = false;
    return est;
}

double epidemic_threshold(const Graph& g) {
    const SpectralEstimate est = spectral_radius(g);
    if (est.lambda1 <= 1e-12) return kInfiniteThreshold;
    return 1.0 / est.lambda1;
}

PathSeriesReport path_series(const Graph& g, double alpha, std::size_t t_max) {
    const std::size_t n = g.node_count();
    if (n == 0) throw DataError("path_series: empty graph");
    if (alpha < 0.0 || !std::isfinite(alpha)) throw DataError("path_series: bad alpha");

    PathSeriesReport rep;
    rep.alpha = alpha;
    rep.t_max = t_max;

    // u(k) = 1^T (alpha A)^k carried with a log-scale offset; the k-th term
    // of ||S||_1 is sum(u(k)).
    WeightVector u(n, 1.0), tmp(n);
    double log_scale = 0.0;

    LogSum den, num;
    den.add(std::log(static_cast<double>(n))); // k = 0 term: ||I||_1 = n
    rep.series_l1.push_back(static_cast<double>(n));
    rep.expected_path_length.push_back(0.0);

    double log_term_prev = std::log(static_cast<double>(n));
    bool terminated = false;
    for (std::size_t k = 1; k <= t_max; ++k) {
        if (!terminated) {
            left_multiply(g, u, tmp);
            for (double& v : tmp) v *= alpha;
            u = tmp;
            const double s = l1_norm(u);
            if (s == 0.0) {
                terminated = true;
            } else {
                const double log_term = log_scale + std::log(s);
                den.add(log_term);
                num.add(std::log(static_cast<double>(k)) + log_term);
                rep.diverging = log_term > log_term_prev;
                log_term_prev = log_term;
                if (s > 1e100 || s < 1e-100) {
                    log_scale += std::log(s);
                    for (double& v : u) v /= s;
                }
            }
        }
        rep.series_l1.push_back(std::exp(den.log_value()));
        const double ln = num.log_value();
        rep.expected_path_length.push_back(
            ln == -std::numeric_limits<double>::infinity() ? 0.0
                                                           : std::exp(ln - den.log_value()));
    }
    if (terminated) rep.diverging = false;
    return rep;
}

PathLengthAsymptotic expected_path_length_asymptotic(const Graph& g, double alpha) {
    const double lambda = spectral_radius(g).lambda1;
    const double prod = alpha * lambda;
    if (std::abs(prod - 1.0) <= 1e-3)
        throw NumericError("expected_path_length_asymptotic: alpha too close to 1/lambda1");
    if (prod > 1.0) return {std::numeric_limits<double>::infinity(), true};
    return {1.0 / (1.0 - prod), false};
}

} // namespace netdiff
