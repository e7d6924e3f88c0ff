#include "sle/pde.hpp"

#include <algorithm>
#include <cmath>

#include "sle/exponents.hpp"
#include "sle/sde.hpp"

namespace sle {

namespace {

struct AnsatzExponents {
    double beta;
    double gamma;
};

AnsatzExponents exponents_of(const SleParams& p) {
    return {beta_exponent(p), gamma_exponent(p)};
}

// f = (r-1)^beta u^gamma g(u) with supplied g, g', g''.
ScalarField make_ansatz(double beta, double gamma,
                        std::function<double(double, int)> g) {
    return [beta, gamma, g = std::move(g)](double r, double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double u = r * r - 2.0 * r * c + 1.0;
        const double u_r = 2.0 * r - 2.0 * c;
        const double u_th = 2.0 * r * s;
        const double u_thth = 2.0 * r * c;

        const double g0 = g(u, 0);
        const double g1 = g(u, 1);
        const double g2 = g(u, 2);

        const double ug = std::pow(u, gamma);
        const double w = ug * g0;                                  // W(u)
        const double w1 = gamma * ug / u * g0 + ug * g1;           // W'
        const double w2 = gamma * (gamma - 1.0) * ug / (u * u) * g0 +
                          2.0 * gamma * ug / u * g1 + ug * g2;     // W''

        const double pw = std::pow(r - 1.0, beta);
        FieldValue v;
        v.f = pw * w;
        v.f_r = beta * pw / (r - 1.0) * w + pw * w1 * u_r;
        v.f_theta = pw * w1 * u_th;
        v.f_thetatheta = pw * (w2 * u_th * u_th + w1 * u_thth);
        return v;
    };
}

} // namespace

double radial_operator(const ScalarField& field, double r, double theta,
                       const SleParams& p) {
    const FieldValue v = field(r, theta);
    const DriftTerms d = drift_terms(r, theta);
    // b_theta enters with a minus sign; drift_terms already reports
    // dtheta_drift = -b_theta.
    return p.t * (d.dlogd - 1.0) * v.f + d.dr * v.f_r +
           d.dtheta_drift * v.f_theta + 0.5 * p.kappa * v.f_thetatheta;
}

ScalarField ansatz_field(const SleParams& p, const HypSolution& sol) {
    const AnsatzExponents e = exponents_of(p);
    return make_ansatz(e.beta, e.gamma,
                       [&sol](double u, int k) { return sol.g3_deriv(u, k); });
}

ScalarField ansatz_field_constant_g(const SleParams& p) {
    const AnsatzExponents e = exponents_of(p);
    return make_ansatz(e.beta, e.gamma,
                       [](double, int k) { return k == 0 ? 1.0 : 0.0; });
}

std::vector<OperatorSample> ansatz_scaling(const SleParams& p, double theta,
                                           std::span<const double> h_list) {
    if (theta == 0.0) {
        throw DomainError("ansatz_scaling: theta must be away from 0");
    }
    const HypSolution sol = boundary_solutions(p);
    const ScalarField field = ansatz_field(p, sol);
    const AnsatzExponents e = exponents_of(p);

    std::vector<OperatorSample> out;
    out.reserve(h_list.size());
    for (double h : h_list) {
        const double r = 1.0 + h;
        const double u = r * r - 2.0 * r * std::cos(theta) + 1.0;
        OperatorSample s;
        s.loc1 = r;
        s.loc2 = theta;
        s.residual = radial_operator(field, r, theta, p);
        s.normalizer = std::pow(h, e.beta) * std::pow(u, e.gamma);
        s.ratio = s.residual / s.normalizer;
        out.push_back(s);
    }
    return out;
}

double chordal_operator_residual_with(const SleParams& p, double beta,
                                      double gamma, double x, double y) {
    if (!(y > 0.0)) {
        throw DomainError("chordal_operator_residual: requires y > 0");
    }
    const double rho2 = x * x + y * y;
    const double f = std::pow(y, beta) * std::pow(rho2, gamma);
    const double f_x = f * gamma / rho2 * 2.0 * x;
    const double f_y = f * (beta / y + gamma / rho2 * 2.0 * y);
    const double f_xx =
        f * (4.0 * gamma * (gamma - 1.0) * x * x / (rho2 * rho2) +
             2.0 * gamma / rho2);
    const double op = 2.0 * p.t * (x * x - y * y) / (rho2 * rho2) * f -
                      2.0 * x / rho2 * f_x + 2.0 * y / rho2 * f_y +
                      0.5 * p.kappa * f_xx;
    return op / std::abs(f);
}

double chordal_operator_residual(const SleParams& p, double x, double y) {
    const AnsatzExponents e = exponents_of(p);
    return chordal_operator_residual_with(p, e.beta, e.gamma, x, y);
}

SubSuperResult subsupersolution_sign(const SleParams& p, double delta,
                                     double theta,
                                     std::span<const double> h_list) {
    if (delta == 0.0) {
        throw DomainError("subsupersolution_sign: delta must be nonzero");
    }
    if (theta == 0.0) {
        throw DomainError("subsupersolution_sign: theta must be away from 0");
    }
    const HypSolution sol = boundary_solutions(p);
    const ScalarField base = ansatz_field(p, sol);
    const AnsatzExponents e = exponents_of(p);

    // F = f * L(r), L = (-log(r-1))^delta. Only the radial partial picks up
    // an L' term.
    const ScalarField field = [&base, delta](double r, double theta_) {
        const FieldValue v = base(r, theta_);
        const double ell = -std::log(r - 1.0);
        const double L = std::pow(ell, delta);
        const double L_r = delta * std::pow(ell, delta - 1.0) * (-1.0 / (r - 1.0));
        FieldValue out;
        out.f = v.f * L;
        out.f_r = v.f_r * L + v.f * L_r;
        out.f_theta = v.f_theta * L;
        out.f_thetatheta = v.f_thetatheta * L;
        return out;
    };

    SubSuperResult res;
    res.samples.reserve(h_list.size());
    for (double h : h_list) {
        const double r = 1.0 + h;
        const double u = r * r - 2.0 * r * std::cos(theta) + 1.0;
        SignedSample s;
        s.h = h;
        s.value = radial_operator(field, r, theta, p);
        const double norm = std::pow(-std::log(h), delta) *
                            std::pow(h, e.beta) * std::pow(u, e.gamma);
        s.normalized = s.value / norm;
        res.samples.push_back(s);
    }

    // Largest h such that every sample with h' <= h carries sign -sign(delta):
    // walk the samples in ascending h and stop at the first wrong sign.
    res.found = false;
    res.h0 = 0.0;
    const double want = delta > 0.0 ? -1.0 : 1.0;
    std::vector<SignedSample> ascending(res.samples);
    std::sort(ascending.begin(), ascending.end(),
              [](const SignedSample& a, const SignedSample& b) { return a.h < b.h; });
    for (const SignedSample& s : ascending) {
        if (!(s.value * want > 0.0)) break;
        res.found = true;
        res.h0 = s.h;
    }
    return res;
}

} // namespace sle
