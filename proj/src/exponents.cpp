#include "sle/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sle {

namespace {

constexpr double kKappaFourEps = 1e-12;

double sqrt_discriminant(const SleParams& p) {
    const double s = 4.0 + p.kappa;
    const double disc = s * s - 8.0 * p.t * p.kappa;
    if (disc < 0.0) {
        throw DomainError(
            "gamma_exponent: square-root argument (4+kappa)^2 - 8 t kappa is "
            "negative; t exceeds (4+kappa)^2/(8 kappa)");
    }
    return std::sqrt(disc);
}

// Analytic branch of the mean spectrum, -beta(t,kappa), valid for
// t <= (4+kappa)^2/(8 kappa).
double betatilde(const SleParams& p) { return -beta_exponent(p); }

// Slope of betatilde, 1/sqrt(1 - 2t/mu) - 1.
double betatilde_slope(const SleParams& p) {
    return 1.0 / std::sqrt(1.0 - 2.0 * p.t / p.mu()) - 1.0;
}

} // namespace

const char* to_string(Branch b) {
    switch (b) {
    case Branch::Tip: return "tip";
    case Branch::Analytic: return "analytic";
    case Branch::Linear: return "linear";
    }
    return "?";
}

const char* to_string(SpectrumVariant v) {
    switch (v) {
    case SpectrumVariant::WholeSle: return "whole";
    case SpectrumVariant::Bulk: return "bulk";
    case SpectrumVariant::ConjecturedAlmostSure: return "conjectured";
    case SpectrumVariant::DuplantierF: return "f";
    case SpectrumVariant::DuplantierFPlus: return "fplus";
    }
    return "?";
}

double gamma_exponent(const SleParams& p) {
    const double s = 4.0 + p.kappa;
    return (s - sqrt_discriminant(p)) / (2.0 * p.kappa);
}

double beta_exponent(const SleParams& p) {
    return p.t - (4.0 + p.kappa) * gamma_exponent(p) / 2.0;
}

Exponents exponents_at(const SleParams& p) {
    Exponents e;
    e.gamma = gamma_exponent(p);
    e.beta = beta_exponent(p);
    e.thresholds = {p.t_tip(), p.t_star()};
    if (p.t < e.thresholds.t_tip) {
        e.branch = Branch::Tip;
    } else if (p.t <= e.thresholds.t_star) {
        e.branch = Branch::Analytic;
    } else {
        e.branch = Branch::Linear;
    }
    return e;
}

SpectrumValue average_spectrum(const SleParams& p, SpectrumVariant variant) {
    if (variant != SpectrumVariant::WholeSle && variant != SpectrumVariant::Bulk) {
        throw std::invalid_argument(
            "average_spectrum: variant must be WholeSle or Bulk");
    }
    const double t_star = p.t_star();
    if (p.t > t_star) {
        const double s = 4.0 + p.kappa;
        return {p.t - s * s / (16.0 * p.kappa), Branch::Linear};
    }
    if (variant == SpectrumVariant::WholeSle && p.t < p.t_tip()) {
        // Tip branch: -beta - 2 gamma - 1. The tip phase transition exists
        // because the boundary weight stops being integrable at gamma = -1/2.
        const double g = gamma_exponent(p);
        const double b = beta_exponent(p);
        return {-b - 2.0 * g - 1.0, Branch::Tip};
    }
    return {betatilde(p), Branch::Analytic};
}

double holder_exponent(double kappa) {
    const SleParams p(kappa, 0.0); // validates kappa
    const double mu = p.mu();
    return 1.0 - 1.0 / mu - std::sqrt(1.0 / (mu * mu) + 2.0 / mu);
}

double boundary_dimension_bound(double kappa) {
    if (!(kappa >= 4.0)) {
        throw DomainError("boundary_dimension_bound: requires kappa >= 4");
    }
    return 1.0 + 2.0 / kappa;
}

double central_charge(double kappa) {
    SleParams(kappa, 0.0);
    return (6.0 - kappa) * (6.0 - 16.0 / kappa) / 4.0;
}

double duplantier_f(double alpha, double kappa) {
    if (!(alpha > 0.5)) {
        throw DomainError("duplantier_f: requires alpha > 1/2 (pole at 1/2)");
    }
    const double c = central_charge(kappa);
    const double am1 = alpha - 1.0;
    return alpha - (25.0 - c) * am1 * am1 / (12.0 * (2.0 * alpha - 1.0));
}

AlphaExtremes alpha_extremes(double kappa) {
    SleParams(kappa, 0.0);
    if (std::abs(kappa - 4.0) < kKappaFourEps) {
        // (4-kappa)^2 denominator degenerates; the limits are 2/3 and +inf.
        return {2.0 / 3.0, std::numeric_limits<double>::infinity()};
    }
    const double num = 16.0 + 4.0 * kappa + kappa * kappa;
    const double root = 2.0 * std::sqrt(2.0) *
                        std::sqrt(16.0 * kappa + 10.0 * kappa * kappa +
                                  kappa * kappa * kappa);
    const double den = (4.0 - kappa) * (4.0 - kappa);
    return {(num - root) / den, (num + root) / den};
}

TExtremes t_extremes(double kappa) {
    const double mu = SleParams(kappa, 0.0).mu();
    const double root = (1.0 + mu) * std::sqrt(1.0 + 2.0 * mu);
    return {(-1.0 - 2.0 * mu - root) / mu, (-1.0 - 2.0 * mu + root) / mu};
}

SpectrumValue conjectured_as_spectrum(const SleParams& p) {
    const TExtremes te = t_extremes(p.kappa);
    const AlphaExtremes ae = alpha_extremes(p.kappa);

    if (p.t > te.t_min && p.t < te.t_max) {
        return {betatilde(p), Branch::Analytic};
    }

    const bool left = p.t <= te.t_min;
    const double alpha_ext = left ? ae.alpha_min : ae.alpha_max;
    const double t_ext = left ? te.t_min : te.t_max;

    // Two representations of the tangent slope: 1 - 1/alpha_ext and the
    // betatilde derivative at the touch point. They must agree.
    const double slope_alpha =
        std::isinf(alpha_ext) ? 1.0 : 1.0 - 1.0 / alpha_ext;
    const double slope_tangent = betatilde_slope(SleParams(p.kappa, t_ext));
    if (std::abs(slope_alpha - slope_tangent) > 1e-9) {
        throw std::logic_error(
            "conjectured_as_spectrum: tangent-slope representations disagree");
    }
    return {p.t * slope_alpha - 1.0, Branch::Linear};
}

double legendre_check(double kappa, double t) {
    const AlphaExtremes ae = alpha_extremes(kappa);
    const double lo = 0.5 + 1e-6;
    const double hi = std::min(std::isinf(ae.alpha_max) ? 1e4 : ae.alpha_max, 1e4);
    if (!(hi > lo)) {
        throw OptimizationError("legendre_check: empty alpha domain");
    }

    const auto h = [&](double alpha) {
        return (duplantier_f(alpha, kappa) - t) / alpha;
    };

    // Coarse geometric scan to bracket the maximum, then golden section.
    const int n = 400;
    const double ratio = std::pow(hi / lo, 1.0 / n);
    double best_alpha = lo;
    double best_val = h(lo);
    double x = lo;
    for (int i = 1; i <= n; ++i) {
        x = (i == n) ? hi : x * ratio;
        const double v = h(x);
        if (v > best_val) {
            best_val = v;
            best_alpha = x;
        }
    }
    double a = std::max(lo, best_alpha / ratio);
    double b = std::min(hi, best_alpha * ratio);
    if (!(a < b)) {
        throw OptimizationError("legendre_check: bracketing failed");
    }

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = h(c), fd = h(d);
    for (int it = 0; it < 200 && (b - a) > 1e-12 * std::max(1.0, b); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = h(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = h(d);
        }
    }
    return std::max({best_val, fc, fd});
}

SpectrumCurve spectrum_table(double kappa, std::span<const double> grid,
                             SpectrumVariant variant) {
    if (!std::is_sorted(grid.begin(), grid.end()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end()) {
        throw std::invalid_argument("spectrum_table: grid must be strictly increasing");
    }
    for (double g : grid) {
        if (!std::isfinite(g)) {
            throw std::invalid_argument("spectrum_table: grid must be finite");
        }
    }

    SpectrumCurve curve;
    curve.kappa = kappa;
    curve.variant = variant;
    curve.samples.reserve(grid.size());

    const AlphaExtremes ae = (variant == SpectrumVariant::DuplantierF ||
                              variant == SpectrumVariant::DuplantierFPlus)
                                 ? alpha_extremes(kappa)
                                 : AlphaExtremes{0.0, 0.0};

    for (double g : grid) {
        SpectrumSample s;
        s.t = g;
        switch (variant) {
        case SpectrumVariant::WholeSle:
        case SpectrumVariant::Bulk: {
            const SpectrumValue v = average_spectrum(SleParams(kappa, g), variant);
            s.value = v.value;
            s.branch = v.branch;
            break;
        }
        case SpectrumVariant::ConjecturedAlmostSure: {
            const SpectrumValue v = conjectured_as_spectrum(SleParams(kappa, g));
            s.value = v.value;
            s.branch = v.branch;
            break;
        }
        case SpectrumVariant::DuplantierF: {
            s.value = duplantier_f(g, kappa);
            s.branch = Branch::Analytic;
            break;
        }
        case SpectrumVariant::DuplantierFPlus: {
            const double f = duplantier_f(g, kappa);
            const bool inside = g >= ae.alpha_min && g <= ae.alpha_max;
            s.value = std::max(f, 0.0);
            s.branch = inside ? Branch::Analytic : Branch::Linear;
            break;
        }
        }
        curve.samples.push_back(s);
    }
    return curve;
}

} // namespace sle
