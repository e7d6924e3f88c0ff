#ifndef SLE_SDE_HPP
#define SLE_SDE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "sle/params.hpp"
#include "sle/rng.hpp"

namespace sle {

/// Driving process of the Loewner flow.
struct DriverSpec {
    enum class Kind { BrownianCircle, SymmetricStable, Deterministic };

    Kind kind = Kind::BrownianCircle;
    double speed = 0.0;        // sqrt(kappa) for BrownianCircle
    double stable_index = 0.0; // alpha in (0,2) for SymmetricStable
    double stable_scale = 0.0;
    double angle = 0.0;        // constant driver angle for Deterministic

    static DriverSpec brownian(double kappa);
    static DriverSpec stable(double index, double scale);
    static DriverSpec deterministic(double angle);
};

/// One trajectory of the (s, r, theta, log|f'|) system. theta is the angle
/// relative to the driving point, wrapped to (-pi, pi]; r > 1 strictly
/// increases along the flow.
struct PathState {
    double s = 0.0;
    double r = 0.0;
    double theta = 0.0;
    double logd = 0.0;
};

/// Monte Carlo configuration shared by the SDE and the estimators.
struct McConfig {
    double dt = 2e-3;
    std::size_t n_paths = 10000;
    std::uint64_t master_seed = 1;
    double r_stop = 50.0; // radius where d logd/ds = 1 + O(1/r^2) is frozen
    double s_max = 10.0;
    DriverSpec driver = DriverSpec::brownian(6.0);
    bool adaptive = true; // shrink dt near the driving singularity
    bool mirror = false;  // negate angle noise (theta-reflection testing)
    int threads = 1;

    void validate() const;
};

struct DriftTerms {
    double dlogd;        // d log|f'|/ds
    double dr;           // radial drift
    double dtheta_drift; // angular drift (noise excluded)
};

// The displayed drift system at (r, theta):
//   dlogd = (r^4 + 4 r^2 (1 - r cos th) - 1)/(r^2 - 2 r cos th + 1)^2
//   dr    = r (r^2 - 1)/(r^2 - 2 r cos th + 1)
//   dth   = -2 r sin th/(r^2 - 2 r cos th + 1)  (plus driver noise)
DriftTerms drift_terms(double r, double theta);

// Wrap an angle to (-pi, pi].
double wrap_angle(double theta);

// One Euler-Maruyama step of size dt with the given angular noise
// increment. Throws StepSizeError if the step would push r to 1 or below
// (cannot happen for dt > 0 since the radial drift is positive; guarded
// anyway).
PathState step(const PathState& state, double dt, double noise);
PathState step(const PathState& state, const McConfig& cfg, double noise);

struct CompensatedValue {
    double value;     // logd - s at termination ~ log|F0'(z0)| in distribution
    bool hit_horizon; // s_max reached before r >= r_stop (extra bias)
    std::size_t steps;
};

// Integrates the system from (r0, theta0) until r >= r_stop or s >= s_max
// and returns the compensated log-derivative. Near the driving singularity
// the step is shrunk to dt <= (r^2 - 2 r cos th + 1)/10, which matches the
// (r-1)^2 scale at theta = 0 where the drifts blow up.
CompensatedValue simulate_compensated_path(double r0, double theta0,
                                           const McConfig& cfg,
                                           std::uint64_t substream_index);

struct HullCloud {
    std::vector<std::complex<double>> points; // launch-angle order
    std::vector<std::size_t> absorbed;        // indices that hit the driver
};

// Reverse-flow snapshot: integrates df/ds = f (f + xi)/(f - xi) for
// n_boundary points on the circle of radius 1 + epsilon under one shared
// driving path, returning f_T(z) for each. Points whose denominator falls
// below 1e-9 are absorbed and skipped.
HullCloud hull_point_cloud(const McConfig& cfg, double T,
                           std::size_t n_boundary, double epsilon);

} // namespace sle

#endif
