#ifndef SLE_PDE_HPP
#define SLE_PDE_HPP

#include <functional>
#include <span>
#include <vector>

#include "sle/boundary.hpp"
#include "sle/params.hpp"

namespace sle {

/// Value and the exact partial derivatives the stationary operator needs.
struct FieldValue {
    double f;
    double f_r;
    double f_theta;
    double f_thetatheta;
};

using ScalarField = std::function<FieldValue(double r, double theta)>;

struct OperatorSample {
    double loc1; // r (radial) or x (chordal)
    double loc2; // theta or y
    double residual;
    double normalizer;
    double ratio; // residual / normalizer
};

// The stationary radial operator
//   t (A - 1) F + b_r F_r - b_theta F_theta + (kappa/2) F_thetatheta
// with A, b_r, b_theta the displayed drift coefficients, applied to a field
// that supplies exact partials.
double radial_operator(const ScalarField& field, double r, double theta,
                       const SleParams& p);

// The near-solution ansatz f = (r-1)^beta u^gamma g3(u),
// u = r^2 - 2 r cos(theta) + 1, as a ScalarField with chain-rule partials
// (g3', g3'' from the differentiated hypergeometric series).
ScalarField ansatz_field(const SleParams& p, const HypSolution& sol);

// Same ansatz with g3 replaced by the constant 1 (negative control: it
// violates the boundary equation, so the residual ratio does not vanish).
ScalarField ansatz_field_constant_g(const SleParams& p);

// Evaluates the radial operator on the ansatz at r = 1 + h for each h and
// divides out the leading factor (r-1)^beta u^gamma. The Lemma structure
// makes ratio = O(r-1): fitting log|ratio| against log h gives slope >= 0.9.
std::vector<OperatorSample> ansatz_scaling(const SleParams& p, double theta,
                                           std::span<const double> h_list);

// Normalized residual of the chordal equation
//   2t (x^2-y^2)/(x^2+y^2)^2 F - 2x/(x^2+y^2) F_x + 2y/(x^2+y^2) F_y
//     + (kappa/2) F_xx
// on its exact solution F = y^beta (x^2+y^2)^gamma. Pure roundoff.
double chordal_operator_residual(const SleParams& p, double x, double y);

// Same operator with explicit exponents (negative controls perturb them).
double chordal_operator_residual_with(const SleParams& p, double beta,
                                      double gamma, double x, double y);

struct SignedSample {
    double h;          // r - 1
    double value;      // Lambda F
    double normalized; // value / ((-log h)^delta (r-1)^beta u^gamma)
};

struct SubSuperResult {
    std::vector<SignedSample> samples; // in h_list order
    double h0;   // largest h from which on the sign is -sign(delta)
    bool found;  // false when no such h exists in h_list
};

// Applies the operator to F = f * (-log(r-1))^delta. For r close enough to
// 1 the sign of Lambda F is -sign(delta).
SubSuperResult subsupersolution_sign(const SleParams& p, double delta,
                                     double theta,
                                     std::span<const double> h_list);

} // namespace sle

#endif
