#pragma once

namespace voltail {

// ln Gamma(x), x > 0.
double ln_gamma(double x);

// Modified Bessel function of the second kind K_nu(z), nu >= 0, z > 0.
// Accurate to better than 1e-8 relative for nu in [0, 60], z in [1e-4, 700].
double bessel_k(double nu, double z);

// ln K_nu(z). Use this instead of bessel_k when K underflows (large z) or
// overflows (large nu with small z); exponents up to ~1e6 are representable.
double ln_bessel_k(double nu, double z);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x)/Gamma(a),
// a > 0, x >= 0. Monotone from 0 to 1 in x; this is the Gamma(a) CDF at
// unit scale.
double gamma_p(double a, double x);

// Complement Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

}  // namespace voltail
