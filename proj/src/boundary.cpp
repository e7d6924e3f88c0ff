#include "sle/boundary.hpp"

#include <cmath>
#include <numbers>

#include "sle/exponents.hpp"

namespace sle {

namespace {

HypParams make_params(const SleParams& p) {
    HypParams hp;
    hp.kappa = p.kappa;
    hp.t = p.t;
    hp.gamma = gamma_exponent(p);
    const Complex root = std::sqrt(Complex(1.0 - 2.0 * p.t * p.kappa, 0.0));
    const Complex base(hp.gamma - 1.0 / p.kappa, 0.0);
    hp.a = base - root / p.kappa;
    hp.b = base + root / p.kappa;
    return hp;
}

double require_small_imag(Complex z, const char* what) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) > 1e-10 * scale) {
        throw std::logic_error(std::string(what) +
                               ": imaginary residue exceeds 1e-10");
    }
    return z.real();
}

} // namespace

HypSolution::HypSolution(const SleParams& p) : params_(make_params(p)) {
    if (p.t > p.t_star()) {
        throw ConditionError(
            "boundary_solutions: no positive bounded solution; requires "
            "t <= 3(4+kappa)^2/(32 kappa)");
    }
    const Complex a = params_.a;
    const Complex b = params_.b;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        // Gamma(a) or Gamma(b) sits in the denominator of C, so the
        // reciprocal vanishes: g3 = g1. (t = 0 lands here with b = 0.)
        C_ = 0.0;
    } else {
        const Complex log_c = log_gamma(0.5 + a + b) + log_gamma(0.5 - a) +
                              log_gamma(0.5 - b) - log_gamma(a) - log_gamma(b) -
                              log_gamma(1.5 - a - b) -
                              (1.0 - 2.0 * a - 2.0 * b) * std::log(2.0);
        C_ = require_small_imag(std::exp(log_c), "mixing constant C");
    }

    const Complex g34 =
        std::exp(log_gamma(0.5 + a + b) + log_gamma(0.5 - a) +
                 log_gamma(0.5 - b)) *
        std::cos(std::numbers::pi * (a + b)) /
        std::pow(std::numbers::pi, 1.5);
    g3_at_4_ = require_small_imag(g34, "g3(4)");
    if (!(g3_at_4_ > 0.0)) {
        throw std::logic_error("g3(4): closed form failed to be positive");
    }
}

Complex HypSolution::g1(double x) const {
    return hyp2f1(params_.a, params_.b, params_.c1(), x / 4.0);
}

Complex HypSolution::g2(double x) const {
    const double s = params_.half_minus_ab();
    const Complex f = hyp2f1(0.5 - params_.a, 0.5 - params_.b, params_.c2(),
                             x / 4.0);
    return std::pow(x, s) * f;
}

Complex HypSolution::g3_series(double x) const { return g1(x) - C_ * g2(x); }

double HypSolution::g3(double x) const { return g3_deriv(x, 0); }

double HypSolution::g3_deriv(double x, int order) const {
    if (order < 0 || order > 2) {
        throw std::invalid_argument("g3_deriv: order must be 0, 1 or 2");
    }
    const Complex a = params_.a;
    const Complex b = params_.b;

    if (x > 2.0) {
        if (!(x < 8.0)) {
            throw DomainError("g3: expansion around 4 is valid for x < 8");
        }
        // g3(x) = g3(4) * 2F1(a, b; 1/2; w), w = 1 - x/4, dw/dx = -1/4;
        // derivatives by the parameter-shift identity.
        const double w = 1.0 - x / 4.0;
        Complex coeff = 1.0;
        Complex aa = a, bb = b, cc = 0.5;
        for (int k = 0; k < order; ++k) {
            coeff *= aa * bb / cc * (-0.25);
            aa += 1.0;
            bb += 1.0;
            cc += 1.0;
        }
        const Complex val = coeff * detail::gauss_series(aa, bb, cc, w);
        return require_small_imag(g3_at_4_ * val, "g3 (expansion at 4)");
    }

    if (!(x >= 0.0)) {
        throw DomainError("g3: requires x >= 0");
    }

    // Origin representation g1 - C g2; z = x/4 <= 1/2 here.
    const double z = x / 4.0;
    const Complex c1 = params_.c1();
    const Complex c2 = params_.c2();
    const double s = params_.half_minus_ab();
    const Complex ah = 0.5 - a, bh = 0.5 - b;

    const auto f1 = [&](int k) { // d^k/dz^k of 2F1(a,b;c1;z)
        Complex coeff = 1.0;
        Complex aa = a, bb = b, cc = c1;
        for (int j = 0; j < k; ++j) {
            coeff *= aa * bb / cc;
            aa += 1.0;
            bb += 1.0;
            cc += 1.0;
        }
        return coeff * hyp2f1(aa, bb, cc, z);
    };
    const auto f2 = [&](int k) { // d^k/dz^k of 2F1(1/2-a,1/2-b;c2;z)
        Complex coeff = 1.0;
        Complex aa = ah, bb = bh, cc = c2;
        for (int j = 0; j < k; ++j) {
            coeff *= aa * bb / cc;
            aa += 1.0;
            bb += 1.0;
            cc += 1.0;
        }
        return coeff * hyp2f1(aa, bb, cc, z);
    };

    Complex val;
    switch (order) {
    case 0:
        val = f1(0) - C_ * std::pow(x, s) * f2(0);
        break;
    case 1: {
        const Complex d1 = f1(1) * 0.25;
        const Complex d2 = (x > 0.0 ? s * std::pow(x, s - 1.0) * f2(0) : Complex(0.0)) +
                           std::pow(x, s) * f2(1) * 0.25;
        val = d1 - C_ * d2;
        break;
    }
    case 2: {
        const Complex d1 = f1(2) * 0.0625;
        const Complex d2 =
            (x > 0.0 ? s * (s - 1.0) * std::pow(x, s - 2.0) * f2(0) +
                           2.0 * s * std::pow(x, s - 1.0) * 0.25 * f2(1)
                      : Complex(0.0)) +
            std::pow(x, s) * 0.0625 * f2(2);
        val = d1 - C_ * d2;
        break;
    }
    }
    return require_small_imag(val, "g3 (origin representation)");
}

HypSolution boundary_solutions(const SleParams& p) { return HypSolution(p); }

double g3_at_4_closed_form(const SleParams& p) {
    return HypSolution(p).g3_at_4();
}

double boundary_ode_apply(double kappa, double gamma, double g, double dg,
                          double ddg, double x) {
    return gamma * (2.0 + kappa) * g +
           (8.0 - 2.0 * x + kappa * (x - 2.0) +
            2.0 * gamma * kappa * (x - 4.0)) *
               dg +
           kappa * (x - 4.0) * x * ddg;
}

double boundary_ode_residual(const HypSolution& sol, double x) {
    if (!(x > 0.0 && x < 4.0)) {
        throw DomainError("boundary_ode_residual: x must be interior to (0,4)");
    }
    const double v = sol.g3_deriv(x, 0);
    const double lhs =
        boundary_ode_apply(sol.params().kappa, sol.params().gamma, v,
                           sol.g3_deriv(x, 1), sol.g3_deriv(x, 2), x);
    return lhs / std::max(std::abs(v), 1.0);
}

} // namespace sle
