#include "sle/sde.hpp"

#include <cmath>
#include <numbers>

namespace sle {

DriverSpec DriverSpec::brownian(double kappa) {
    DriverSpec d;
    d.kind = Kind::BrownianCircle;
    d.speed = std::sqrt(kappa);
    return d;
}

DriverSpec DriverSpec::stable(double index, double scale) {
    if (!(index > 0.0 && index < 2.0)) {
        throw DomainError("DriverSpec::stable: index must lie in (0,2)");
    }
    DriverSpec d;
    d.kind = Kind::SymmetricStable;
    d.stable_index = index;
    d.stable_scale = scale;
    return d;
}

DriverSpec DriverSpec::deterministic(double angle) {
    DriverSpec d;
    d.kind = Kind::Deterministic;
    d.angle = angle;
    return d;
}

void McConfig::validate() const {
    if (!(dt > 0.0)) throw DomainError("McConfig: dt must be positive");
    if (n_paths < 1) throw DomainError("McConfig: n_paths must be >= 1");
    if (!(r_stop > 2.0)) throw DomainError("McConfig: r_stop must exceed 2");
    if (!(s_max >= 0.0)) throw DomainError("McConfig: s_max must be nonnegative");
    if (threads < 1) throw DomainError("McConfig: threads must be >= 1");
}

DriftTerms drift_terms(double r, double theta) {
    if (!(r > 1.0)) {
        throw DomainError("drift_terms: requires r > 1");
    }
    const double c = std::cos(theta);
    const double den = r * r - 2.0 * r * c + 1.0; // = |z - 1|^2 > 0 for r > 1
    DriftTerms d;
    d.dlogd = (r * r * r * r + 4.0 * r * r * (1.0 - r * c) - 1.0) / (den * den);
    d.dr = r * (r * r - 1.0) / den;
    d.dtheta_drift = -2.0 * r * std::sin(theta) / den;
    return d;
}

double wrap_angle(double theta) {
    double w = std::remainder(theta, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
    return w;
}

PathState step(const PathState& state, double dt, double noise) {
    if (dt == 0.0) return state;
    const DriftTerms d = drift_terms(state.r, state.theta);
    PathState out;
    out.r = state.r + d.dr * dt;
    if (!(out.r > 1.0)) {
        throw StepSizeError("step: radius left the admissible region r > 1");
    }
    out.theta = wrap_angle(state.theta + d.dtheta_drift * dt + noise);
    out.logd = state.logd + d.dlogd * dt;
    out.s = state.s + dt;
    return out;
}

PathState step(const PathState& state, const McConfig& cfg, double noise) {
    return step(state, cfg.dt, noise);
}

namespace {

// Near the driving singularity the drifts scale like 1/d with
// d^2 = r^2 - 2 r cos(theta) + 1, so the step is clamped to a fixed
// fraction of d^2 (at theta = 0 this is the (r-1)^2 scale). 1/50 brings
// the weak bias of the clamped phase below Monte Carlo noise at the
// acceptance path counts; 1/10 leaves a visible bias.
constexpr double kClampScale = 0.02;

// Far from the circle the drifts relax like 1/r^2; the step grows back
// accordingly, capped at 8x.
constexpr double kUpscaleRadius = 15.0;
constexpr double kUpscaleCap = 8.0;

// Angle noise increment over a step of size dt. The sign of the Brownian
// term follows the displayed equation: dtheta = ... ds - sqrt(kappa) dB.
double angle_noise(const DriverSpec& driver, NormalSource& normals, double dt,
                   bool mirror) {
    double n = 0.0;
    switch (driver.kind) {
    case DriverSpec::Kind::BrownianCircle:
        n = -driver.speed * normals.next() * std::sqrt(dt);
        break;
    case DriverSpec::Kind::SymmetricStable:
        n = driver.stable_scale * std::pow(dt, 1.0 / driver.stable_index) *
            symmetric_stable(normals, driver.stable_index);
        break;
    case DriverSpec::Kind::Deterministic:
        n = 0.0;
        break;
    }
    return mirror ? -n : n;
}

} // namespace

CompensatedValue simulate_compensated_path(double r0, double theta0,
                                           const McConfig& cfg,
                                           std::uint64_t substream_index) {
    cfg.validate();
    if (!(r0 > 1.0)) {
        throw DomainError("simulate_compensated_path: requires r0 > 1");
    }
    NormalSource normals(substream(cfg.master_seed, substream_index));

    PathState st;
    st.r = r0;
    st.theta = wrap_angle(theta0);

    CompensatedValue out{0.0, false, 0};
    while (st.r < cfg.r_stop) {
        if (st.s >= cfg.s_max) {
            out.hit_horizon = true;
            break;
        }
        double dt = std::min(cfg.dt, cfg.s_max - st.s);
        if (cfg.adaptive) {
            const double d2 =
                st.r * st.r - 2.0 * st.r * std::cos(st.theta) + 1.0;
            dt = std::min(dt, d2 / 10.0);
        }
        const double noise = angle_noise(cfg.driver, normals, dt, cfg.mirror);
        st = step(st, dt, noise);
        ++out.steps;
    }
    // Past r_stop, dlogd - 1 = O(1/r^2): terminate with zero tail correction.
    out.value = st.logd - st.s;
    return out;
}

HullCloud hull_point_cloud(const McConfig& cfg, double T,
                           std::size_t n_boundary, double epsilon) {
    cfg.validate();
    if (!(epsilon > 0.0)) {
        throw DomainError("hull_point_cloud: epsilon must be positive");
    }
    if (!(T >= 0.0)) {
        throw DomainError("hull_point_cloud: T must be nonnegative");
    }

    using Cmplx = std::complex<double>;
    HullCloud cloud;
    cloud.points.resize(n_boundary);
    std::vector<bool> dead(n_boundary, false);
    for (std::size_t k = 0; k < n_boundary; ++k) {
        const double th =
            2.0 * std::numbers::pi * static_cast<double>(k) /
            static_cast<double>(n_boundary);
        cloud.points[k] = (1.0 + epsilon) * std::polar(1.0, th);
    }

    // One shared driver path, substream 0 of the master seed.
    NormalSource normals(substream(cfg.master_seed, 0));
    double driver_angle =
        cfg.driver.kind == DriverSpec::Kind::Deterministic ? cfg.driver.angle
                                                           : 0.0;

    double s = 0.0;
    while (s < T) {
        const double dt = std::min(cfg.dt, T - s);
        const Cmplx xi = std::polar(1.0, driver_angle);
        for (std::size_t k = 0; k < n_boundary; ++k) {
            if (dead[k]) continue;
            Cmplx& f = cloud.points[k];
            const Cmplx den = f - xi;
            if (std::abs(den) < 1e-9) {
                dead[k] = true;
                cloud.absorbed.push_back(k);
                continue;
            }
            f += dt * f * (f + xi) / den;
        }
        switch (cfg.driver.kind) {
        case DriverSpec::Kind::BrownianCircle:
            driver_angle += cfg.driver.speed * normals.next() * std::sqrt(dt);
            break;
        case DriverSpec::Kind::SymmetricStable:
            driver_angle += cfg.driver.stable_scale *
                            std::pow(dt, 1.0 / cfg.driver.stable_index) *
                            symmetric_stable(normals, cfg.driver.stable_index);
            break;
        case DriverSpec::Kind::Deterministic:
            break;
        }
        s += dt;
    }
    return cloud;
}

} // namespace sle
