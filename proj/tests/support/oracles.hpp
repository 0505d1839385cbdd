#pragma once

#include <functional>
#include <vector>

// Independent reference implementations used only to validate the library.
// These deliberately use different algorithms than the code under test.
namespace oracle {

// Recursive adaptive Simpson integration.
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-12, int max_depth = 40);

// ln K_nu(z) from the integral representation
//   K_nu(z) = integral_0^inf exp(-z cosh t) cosh(nu t) dt
// evaluated on a shifted log scale.
double ln_bessel_k_integral(double nu, double z);

// Plain two-parameter least squares xi ~ a + b*i, i = 1..N, solved through
// the normal equations.
struct LineFit {
    double a = 0.0;
    double b = 0.0;
};
LineFit normal_equations_line(const std::vector<double>& xi);

}  // namespace oracle
