#ifndef SLE_EXPONENTS_HPP
#define SLE_EXPONENTS_HPP

#include <span>
#include <string>
#include <vector>

#include "sle/params.hpp"

namespace sle {

/// Which piece of the piecewise spectrum produced a value.
enum class Branch { Tip, Analytic, Linear };

const char* to_string(Branch b);

struct Thresholds {
    double t_tip;  // -1 - 3 kappa/8
    double t_star; // 3 (4+kappa)^2 / (32 kappa)
};

struct Exponents {
    double gamma;
    double beta;
    Branch branch;
    Thresholds thresholds;
};

enum class SpectrumVariant {
    WholeSle,
    Bulk,
    ConjecturedAlmostSure,
    DuplantierF,
    DuplantierFPlus,
};

const char* to_string(SpectrumVariant v);

struct SpectrumValue {
    double value;
    Branch branch;
};

struct SpectrumSample {
    double t; // abscissa: moment order t, or alpha for the Duplantier variants
    double value;
    Branch branch;
};

struct SpectrumCurve {
    double kappa;
    SpectrumVariant variant;
    std::vector<SpectrumSample> samples;
};

// gamma(t,kappa) = (4+kappa - sqrt((4+kappa)^2 - 8 t kappa)) / (2 kappa).
// Throws DomainError outside the analytic domain t <= (4+kappa)^2/(8 kappa).
double gamma_exponent(const SleParams& p);

// beta(t,kappa) = t - (4+kappa) gamma / 2. Equals -betatilde(t).
double beta_exponent(const SleParams& p);

// Both exponents plus the branch classification of t against the thresholds.
Exponents exponents_at(const SleParams& p);

// Average integral means spectrum. WholeSle has all three branches
// (tip / analytic / linear); Bulk drops the tip branch. Defined for all
// real t.
SpectrumValue average_spectrum(const SleParams& p, SpectrumVariant variant);

// Holder exponent of the SLE map, 1 - 1/mu - sqrt(1/mu^2 + 2/mu) with
// mu = (4+kappa)^2/(4 kappa).
double holder_exponent(double kappa);

// Hausdorff dimension bound 1 + 2/kappa for the hull boundary, kappa >= 4.
double boundary_dimension_bound(double kappa);

// Central charge c = (6-kappa)(6-16/kappa)/4.
double central_charge(double kappa);

// Dimension spectrum f(alpha) = alpha - (25-c)(alpha-1)^2/(12(2 alpha-1)).
// Pole at alpha = 1/2; may be negative.
double duplantier_f(double alpha, double kappa);

struct AlphaExtremes {
    double alpha_min;
    double alpha_max; // +infinity at kappa = 4
};

// Support endpoints of the positive part f^+ of the dimension spectrum.
// Dispatches to the limit values (2/3, +inf) when |kappa - 4| < 1e-12.
AlphaExtremes alpha_extremes(double kappa);

struct TExtremes {
    double t_min;
    double t_max;
};

// The two t values where the tangent to betatilde crosses the y-axis at -1,
// expressed through mu = (4+kappa)^2/(4 kappa).
TExtremes t_extremes(double kappa);

// Conjectured almost-sure spectrum: betatilde between t_min and t_max,
// continued by its tangent lines outside. The tangent-slope identity
// 1 - 1/alpha_ext = 1/sqrt(1 - 2 t_ext/mu) - 1 is cross-checked on every
// call; disagreement beyond 1e-9 throws.
SpectrumValue conjectured_as_spectrum(const SleParams& p);

// Numeric Legendre transform sup_alpha (f(alpha) - t)/alpha over
// alpha in (1/2 + 1e-6, min(alpha_max, 1e4)], by coarse scan plus
// golden-section refinement. For t interior to (t_min, t_max) this equals
// conjectured_as_spectrum(t) - t + 1.
double legendre_check(double kappa, double t);

// Evaluate one of the five curves on a sorted grid. For the Duplantier
// variants the grid is in alpha.
SpectrumCurve spectrum_table(double kappa, std::span<const double> grid,
                             SpectrumVariant variant);

} // namespace sle

#endif
