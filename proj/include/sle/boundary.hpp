#ifndef SLE_BOUNDARY_HPP
#define SLE_BOUNDARY_HPP

#include "sle/hyp2f1.hpp"
#include "sle/params.hpp"

namespace sle {

/// Hypergeometric parameters of the boundary equation in x = 2 - 2 cos(theta):
///   a = gamma - 1/kappa - sqrt(1 - 2 t kappa)/kappa,
///   b = gamma - 1/kappa + sqrt(1 - 2 t kappa)/kappa  (principal root).
/// a + b is always real; for t > 1/(2 kappa), b = conj(a).
struct HypParams {
    Complex a;
    Complex b;
    double kappa;
    double t;
    double gamma;

    Complex c1() const { return 0.5 + a + b; } // c of the g1 branch
    Complex c2() const { return 1.5 - a - b; } // c of the g2 branch

    // Real exponent 1/2 - a - b = (4 + kappa - 4 gamma kappa)/(2 kappa);
    // nonnegative exactly on the existence domain t <= 3(4+kappa)^2/(32 kappa).
    double half_minus_ab() const { return 0.5 - (a + b).real(); }
};

/// The solutions g1, g2 of the boundary ODE and the bounded positive
/// combination g3 = g1 - C g2. Immutable after construction; evaluators are
/// safe to share across threads.
///
/// g1, g2 and the g1 - C g2 route are defined for x in [0, 4). g3 itself is
/// analytic at x = 4 (the sqrt(4-x) terms cancel by the choice of C), so it
/// is also exposed through its expansion around x = 4,
///   g3(x) = g3(4) * 2F1(a, b; 1/2; 1 - x/4),
/// which extends the evaluation domain to (0, 8); the PDE ansatz needs
/// x = r^2 - 2 r cos(theta) + 1 slightly above 4 when r > 1.
class HypSolution {
public:
    HypSolution(const SleParams& p);

    const HypParams& params() const { return params_; }

    // Mixing constant, real for real t (imaginary residue checked < 1e-10).
    double C() const { return C_; }

    // g1(x) = 2F1(a, b; 1/2+a+b; x/4), x in [0, 4).
    Complex g1(double x) const;

    // g2(x) = x^(1/2-a-b) 2F1(1/2-a, 1/2-b; 3/2-a-b; x/4), x in [0, 4).
    Complex g2(double x) const;

    // g1 - C g2 evaluated literally (used to test the x -> 4 limit).
    Complex g3_series(double x) const;

    // The bounded positive solution, real-valued; x in (0, 8), with
    // g3(0) = 1 when the g2 exponent is positive.
    double g3(double x) const;

    // d^order/dx^order g3, order in {0, 1, 2}, same domain as g3().
    double g3_deriv(double x, int order) const;

    // Closed form pi^(-3/2) Gamma(1/2+a+b) cos(pi(a+b))
    //   * Gamma(1/2-a) Gamma(1/2-b); positive on the existence domain.
    double g3_at_4() const { return g3_at_4_; }

private:
    HypParams params_;
    double C_;
    double g3_at_4_;
};

// Builds the solution triple for (kappa, t). Throws ConditionError when
// t > 3(4+kappa)^2/(32 kappa) (no positive bounded solution exists there)
// and propagates PoleError from Gamma evaluation.
HypSolution boundary_solutions(const SleParams& p);

// The closed-form g3(4); throws if it fails to be positive.
double g3_at_4_closed_form(const SleParams& p);

// Left side of the boundary ODE
//   gamma (2+kappa) g + (8 - 2x + kappa(x-2) + 2 gamma kappa (x-4)) g'
//     + kappa (x-4) x g'' = 0
// for arbitrary derivative data at x (negative controls feed it g == 1).
double boundary_ode_apply(double kappa, double gamma, double g, double dg,
                          double ddg, double x);

// The ODE left side applied to g3 at interior x, normalized by
// max(|g3(x)|, 1).
double boundary_ode_residual(const HypSolution& sol, double x);

} // namespace sle

#endif
