#include "sle/complex_gamma.hpp"

#include <cmath>
#include <numbers>

#include "sle/errors.hpp"

namespace sle {

namespace {

// Lanczos coefficients for g = 607/128, N = 15, from Godfrey (2001),
// "A note on the computation of the convergent Lanczos complex Gamma
// approximation" (the set used by Boost.Math and the GNU Scientific
// Library documentation). Relative accuracy ~1e-14 on the half-plane
// Re z >= 1/2.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178; // log(sqrt(2 pi))

Complex lanczos_log_gamma_half_plane(Complex z) {
    // Valid for Re z >= 1/2. Series is in z-1.
    const Complex zm1 = z - 1.0;
    Complex sum = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) {
        sum += kLanczosCoeff[k] / (zm1 + static_cast<double>(k));
    }
    const Complex t = zm1 + kLanczosG + 0.5;
    return kLogSqrtTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}

} // namespace

bool is_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double re = z.real();
    if (re > tol) return false;
    return std::abs(re - std::round(re)) <= tol;
}

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        throw PoleError("log_gamma: pole at nonpositive integer");
    }
    if (z.real() >= 0.5) {
        return lanczos_log_gamma_half_plane(z);
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1-z).
    const Complex pi_z = std::numbers::pi * z;
    return std::log(std::numbers::pi) - std::log(std::sin(pi_z)) -
           lanczos_log_gamma_half_plane(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

} // namespace sle
