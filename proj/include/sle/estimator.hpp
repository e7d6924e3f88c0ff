#ifndef SLE_ESTIMATOR_HPP
#define SLE_ESTIMATOR_HPP

#include <numbers>
#include <span>
#include <vector>

#include "sle/params.hpp"
#include "sle/sde.hpp"

namespace sle {

/// Stable mean of exp(y_i) over a batch held in log space. The whole batch
/// is normalized by its maximum before exponentiation, so shifting every
/// y_i by a constant shifts log_mean by exactly that constant and nothing
/// overflows.
struct LogMeanResult {
    double log_mean; // log( (1/n) sum exp(y_i) )
    double mean;     // exp(log_mean)
    double stderr_;  // sample standard error of the mean
};

LogMeanResult log_mean_exp(std::span<const double> y);

struct EstimateVariant {
    enum class Kind { PointMoment, WholeIntegral, BulkIntegral };

    Kind kind = Kind::PointMoment;
    double theta = 0.0;                // PointMoment launch angle
    double theta_min = std::numbers::pi / 4.0; // BulkIntegral cutoff

    static EstimateVariant point(double theta);
    static EstimateVariant whole();
    static EstimateVariant bulk(double theta_min = std::numbers::pi / 4.0);
};

const char* to_string(EstimateVariant::Kind k);

/// Monte Carlo estimate of the compensated moment E|F0'|^t (or its theta
/// integral) at one scale.
struct MomentEstimate {
    double r;    // launch radius, > 1
    double t;
    EstimateVariant variant;
    double mean;
    double stderr_;
    double log_mean;
    std::size_t n_paths;
    std::size_t n_capped;  // negative-t variance cap events
    std::size_t n_horizon; // paths that hit s_max below r_stop
};

/// Least-squares slope of log(moment) against -log(r-1): the empirical
/// average integral means spectrum at this t.
struct SlopeFit {
    std::vector<double> scales; // r - 1, strictly decreasing
    std::vector<MomentEstimate> estimates;
    double slope;
    double slope_stderr;
};

// Moment estimate at a single boundary point (r, theta). Paths use
// substreams stream_base, stream_base+1, ...; the reduction is in path
// order regardless of cfg.threads. For t < 0 the compensated values are
// floored at -30/|t| and the events counted.
MomentEstimate point_moment(const SleParams& p, double r, double theta,
                            const McConfig& cfg,
                            std::uint64_t stream_base = 0);

// Trapezoid quadrature of point_moment over a theta grid on [0, pi],
// doubled by the theta -> -theta symmetry of the expectation.
// WholeIntegral refines the grid geometrically toward theta = 0 with the
// smallest cell ~ (r-1); BulkIntegral uses a uniform grid on
// [theta_min, pi]. cfg.n_paths is the total path budget, split evenly
// over the nodes.
MomentEstimate integrated_moment(const SleParams& p, double r,
                                 const EstimateVariant& variant,
                                 const McConfig& cfg);

// Weighted least-squares fit over >= 3 dyadic scales (r-1 values,
// strictly decreasing). Point variance of log(mean) from the Monte Carlo
// standard errors.
SlopeFit fit_spectrum_slope(const SleParams& p, const EstimateVariant& variant,
                            std::span<const double> scales,
                            const McConfig& cfg);

// The theta grids used by integrated_moment, exposed for tests and for
// grid-refinement studies. refine doubles the node density.
std::vector<double> whole_theta_grid(double r, int refine = 1);
std::vector<double> bulk_theta_grid(double theta_min, int refine = 1);

} // namespace sle

#endif
