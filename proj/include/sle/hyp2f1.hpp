#ifndef SLE_HYP2F1_HPP
#define SLE_HYP2F1_HPP

#include "sle/complex_gamma.hpp"

namespace sle {

// Gauss hypergeometric function 2F1(a, b; c; z) for complex parameters and
// real argument 0 <= z < 1.
//
// For z <= 1/2 the defining series is summed directly (it converges
// geometrically there). For z > 1/2 the connection formula in 1-z keeps
// the argument small:
//
//   F(a,b;c;z) = G(c)G(c-a-b)/(G(c-a)G(c-b)) F(a,b;a+b-c+1;1-z)
//     + (1-z)^(c-a-b) G(c)G(a+b-c)/(G(a)G(b)) F(c-a,c-b;c-a-b+1;1-z),
//
// with the Gamma coefficients combined in log space. When c-a-b is within
// 1e-8 of an integer the connection formula degenerates (the parameter set
// used by the boundary solutions always has half-integer c-a-b, so this
// path never fires for it) and the direct series is used instead.
//
// Throws PoleError when c is a nonpositive integer, DomainError for z
// outside [0,1), ConvergenceError past 10^6 terms.
Complex hyp2f1(Complex a, Complex b, Complex c, double z);

// d/dz 2F1(a,b;c;z) = (a b / c) 2F1(a+1, b+1; c+1; z).
Complex hyp2f1_derivative(Complex a, Complex b, Complex c, double z);

namespace detail {
// Plain defining series, valid for |z| < 1 (slow near the endpoints).
// Internal: the boundary-solution expansion around x = 4 feeds it small
// negative arguments, which the public domain [0,1) excludes.
Complex gauss_series(Complex a, Complex b, Complex c, double z);
} // namespace detail

} // namespace sle

#endif
