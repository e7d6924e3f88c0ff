#ifndef SLE_PARAMS_HPP
#define SLE_PARAMS_HPP

#include <cmath>

#include "sle/errors.hpp"

namespace sle {

/// The (kappa, t) pair every spectrum formula is parameterized by:
/// kappa is the SLE speed parameter, t the moment order.
struct SleParams {
    double kappa;
    double t;

    SleParams(double kappa_, double t_) : kappa(kappa_), t(t_) {
        if (!(kappa > 0.0) || !std::isfinite(kappa)) {
            throw DomainError("SleParams: kappa must be positive and finite");
        }
        if (!std::isfinite(t)) {
            throw DomainError("SleParams: t must be finite");
        }
    }

    // Tip/analytic phase transition of the whole spectrum.
    double t_tip() const { return -1.0 - 3.0 * kappa / 8.0; }

    // Analytic/linear phase transition, 3(4+kappa)^2/(32 kappa).
    double t_star() const {
        const double s = 4.0 + kappa;
        return 3.0 * s * s / (32.0 * kappa);
    }

    // Largest t for which the square root in the gamma exponent is real,
    // (4+kappa)^2/(8 kappa).
    double t_analytic_max() const {
        const double s = 4.0 + kappa;
        return s * s / (8.0 * kappa);
    }

    bool in_analytic_domain() const { return t <= t_analytic_max(); }

    // mu = (4+kappa)^2/(4 kappa) = 4/kappa + 2 + kappa/4.
    double mu() const {
        const double s = 4.0 + kappa;
        return s * s / (4.0 * kappa);
    }
};

} // namespace sle

#endif
