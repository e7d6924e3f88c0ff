#ifndef SLE_COMPLEX_GAMMA_HPP
#define SLE_COMPLEX_GAMMA_HPP

#include <complex>

namespace sle {

using Complex = std::complex<double>;

// log Gamma(z) for complex z, via the Lanczos approximation for
// Re z >= 1/2 and the reflection formula otherwise. Real on the positive
// real axis; exp(log_gamma(z)) equals Gamma(z). In the reflected
// half-plane the imaginary part may differ from the principal branch by a
// multiple of 2*pi (every caller here exponentiates sums of values, where
// such multiples cancel).
//
// Throws PoleError when z is within 1e-12 of a nonpositive integer.
Complex log_gamma(Complex z);

// exp(log_gamma(z)).
Complex gamma_fn(Complex z);

// True when z is within tol of a nonpositive integer.
bool is_nonpositive_integer(Complex z, double tol = 1e-12);

} // namespace sle

#endif
