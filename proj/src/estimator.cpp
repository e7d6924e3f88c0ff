#include "sle/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace sle {

LogMeanResult log_mean_exp(std::span<const double> y) {
    if (y.empty()) {
        throw DomainError("log_mean_exp: empty batch");
    }
    const double m = *std::max_element(y.begin(), y.end());
    const double n = static_cast<double>(y.size());

    double sum = 0.0;
    for (double v : y) sum += std::exp(v - m);
    const double mean_u = sum / n;

    double ss = 0.0;
    for (double v : y) {
        const double d = std::exp(v - m) - mean_u;
        ss += d * d;
    }
    const double var_u = y.size() > 1 ? ss / (n - 1.0) : 0.0;

    LogMeanResult out;
    out.log_mean = m + std::log(mean_u);
    out.mean = std::exp(out.log_mean);
    out.stderr_ = std::exp(m) * std::sqrt(var_u / n);
    return out;
}

EstimateVariant EstimateVariant::point(double theta) {
    EstimateVariant v;
    v.kind = Kind::PointMoment;
    v.theta = theta;
    return v;
}

EstimateVariant EstimateVariant::whole() {
    EstimateVariant v;
    v.kind = Kind::WholeIntegral;
    return v;
}

EstimateVariant EstimateVariant::bulk(double theta_min) {
    EstimateVariant v;
    v.kind = Kind::BulkIntegral;
    v.theta_min = theta_min;
    return v;
}

const char* to_string(EstimateVariant::Kind k) {
    switch (k) {
    case EstimateVariant::Kind::PointMoment: return "point";
    case EstimateVariant::Kind::WholeIntegral: return "whole";
    case EstimateVariant::Kind::BulkIntegral: return "bulk";
    }
    return "?";
}

MomentEstimate point_moment(const SleParams& p, double r, double theta,
                            const McConfig& cfg, std::uint64_t stream_base) {
    cfg.validate();
    if (!(r > 1.0)) {
        throw DomainError("point_moment: requires r > 1");
    }
    const std::size_t n = cfg.n_paths;
    const double cap = p.t < 0.0 ? -30.0 / std::abs(p.t) : 0.0;

    std::vector<double> y(n);
    std::vector<std::uint8_t> capped(n, 0), horizon(n, 0);

    const auto run_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const CompensatedValue cv =
                simulate_compensated_path(r, theta, cfg, stream_base + i);
            double x = cv.value;
            if (p.t < 0.0 && x < cap) {
                x = cap;
                capped[i] = 1;
            }
            horizon[i] = cv.hit_horizon ? 1 : 0;
            y[i] = p.t * x;
        }
    };

    const int nthreads = std::max(1, cfg.threads);
    if (nthreads == 1 || n < 2 * static_cast<std::size_t>(nthreads)) {
        run_range(0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        const std::size_t chunk = (n + nthreads - 1) / nthreads;
        for (int tix = 0; tix < nthreads; ++tix) {
            const std::size_t lo = std::min(n, tix * chunk);
            const std::size_t hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    const LogMeanResult lm = log_mean_exp(y);
    MomentEstimate est;
    est.r = r;
    est.t = p.t;
    est.variant = EstimateVariant::point(theta);
    est.mean = lm.mean;
    est.stderr_ = lm.stderr_;
    est.log_mean = lm.log_mean;
    est.n_paths = n;
    est.n_capped = 0;
    est.n_horizon = 0;
    for (std::size_t i = 0; i < n; ++i) {
        est.n_capped += capped[i];
        est.n_horizon += horizon[i];
    }
    return est;
}

std::vector<double> whole_theta_grid(double r, int refine) {
    const double eps = r - 1.0;
    const double ratio = std::pow(std::sqrt(2.0), 1.0 / refine);
    std::vector<double> grid{0.0};
    double th = std::min(eps, std::numbers::pi / 2.0);
    while (th < std::numbers::pi) {
        grid.push_back(th);
        th *= ratio;
    }
    grid.push_back(std::numbers::pi);
    return grid;
}

std::vector<double> bulk_theta_grid(double theta_min, int refine) {
    if (!(theta_min > 0.0 && theta_min < std::numbers::pi)) {
        throw DomainError("bulk_theta_grid: theta_min must lie in (0, pi)");
    }
    const int n = 13 * refine - (refine - 1); // keeps shared endpoints
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = theta_min + (std::numbers::pi - theta_min) *
                                  static_cast<double>(i) /
                                  static_cast<double>(n - 1);
    }
    return grid;
}

MomentEstimate integrated_moment(const SleParams& p, double r,
                                 const EstimateVariant& variant,
                                 const McConfig& cfg) {
    if (variant.kind == EstimateVariant::Kind::PointMoment) {
        return point_moment(p, r, variant.theta, cfg);
    }
    const std::vector<double> grid =
        variant.kind == EstimateVariant::Kind::WholeIntegral
            ? whole_theta_grid(r)
            : bulk_theta_grid(variant.theta_min);
    const std::size_t nodes = grid.size();

    std::vector<double> w(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
        const double lo = k == 0 ? grid.front() : grid[k - 1];
        const double hi = k + 1 == nodes ? grid.back() : grid[k + 1];
        w[k] = 0.5 * (hi - lo);
    }

    McConfig node_cfg = cfg;
    node_cfg.n_paths = std::max<std::size_t>(2, cfg.n_paths / nodes);

    MomentEstimate est;
    est.r = r;
    est.t = p.t;
    est.variant = variant;
    est.n_paths = 0;
    est.n_capped = 0;
    est.n_horizon = 0;

    double integral = 0.0;
    double var = 0.0;
    for (std::size_t k = 0; k < nodes; ++k) {
        const MomentEstimate node = point_moment(
            p, r, grid[k], node_cfg,
            static_cast<std::uint64_t>(k) * node_cfg.n_paths);
        integral += w[k] * node.mean;
        var += w[k] * w[k] * node.stderr_ * node.stderr_;
        est.n_paths += node.n_paths;
        est.n_capped += node.n_capped;
        est.n_horizon += node.n_horizon;
    }
    // Double for the symmetric half-circle theta < 0.
    est.mean = 2.0 * integral;
    est.stderr_ = 2.0 * std::sqrt(var);
    est.log_mean = std::log(est.mean);
    return est;
}

SlopeFit fit_spectrum_slope(const SleParams& p, const EstimateVariant& variant,
                            std::span<const double> scales,
                            const McConfig& cfg) {
    if (scales.size() < 3) {
        throw DomainError("fit_spectrum_slope: need at least 3 scales");
    }
    for (std::size_t i = 1; i < scales.size(); ++i) {
        if (!(scales[i] < scales[i - 1])) {
            throw DomainError("fit_spectrum_slope: scales must be strictly decreasing");
        }
    }

    SlopeFit fit;
    fit.scales.assign(scales.begin(), scales.end());
    fit.estimates.reserve(scales.size());
    for (double eps : scales) {
        if (!(eps > 0.0 && eps < 1.0)) {
            throw DomainError("fit_spectrum_slope: scales are r-1 values in (0,1)");
        }
        fit.estimates.push_back(integrated_moment(p, 1.0 + eps, variant, cfg));
    }

    // Weighted least squares of log(mean) on -log(r-1).
    const std::size_t n = fit.estimates.size();
    std::vector<double> x(n), y(n), wgt(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = -std::log(fit.scales[i]);
        y[i] = fit.estimates[i].log_mean;
        const double rel = fit.estimates[i].stderr_ /
                           std::max(fit.estimates[i].mean, 1e-300);
        wgt[i] = 1.0 / std::max(rel * rel, 1e-24);
    }
    double sw = 0.0, swx = 0.0, swy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sw += wgt[i];
        swx += wgt[i] * x[i];
        swy += wgt[i] * y[i];
    }
    const double xbar = swx / sw;
    const double ybar = swy / sw;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += wgt[i] * (x[i] - xbar) * (x[i] - xbar);
        sxy += wgt[i] * (x[i] - xbar) * (y[i] - ybar);
    }
    fit.slope = sxy / sxx;
    fit.slope_stderr = std::sqrt(1.0 / sxx);
    return fit;
}

} // namespace sle
