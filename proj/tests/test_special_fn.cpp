#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "voltail/special_fn.hpp"

using namespace voltail;

TEST_CASE("ln_gamma at exact points") {
    CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(ln_gamma(0.5) == doctest::Approx(0.5723649429247001).epsilon(1e-13));
    CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("ln_gamma functional equation across the required range") {
    // ln Gamma(x+1) = ln Gamma(x) + ln x
    for (double x = 1e-3; x < 1e3; x *= 1.7) {
        const double lhs = ln_gamma(x + 1.0);
        const double rhs = ln_gamma(x) + std::log(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    // factorials
    double lf = 0.0;
    for (int n = 2; n <= 170; ++n) {
        lf += std::log(static_cast<double>(n - 1));
        CHECK(ln_gamma(n) == doctest::Approx(lf).epsilon(1e-12));
    }
}

TEST_CASE("ln_gamma domain") {
    CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(ln_gamma(-1.5), std::domain_error);
}

TEST_CASE("bessel_k half-integer closed form") {
    // K_{1/2}(z) = sqrt(pi/(2z)) exp(-z)
    for (double z : {1e-4, 1e-2, 0.5, 1.0, 2.0, 5.0, 50.0, 300.0, 700.0}) {
        const double expected = 0.5 * std::log(M_PI / (2.0 * z)) - z;
        CHECK(ln_bessel_k(0.5, z) == doctest::Approx(expected).epsilon(1e-11));
    }
    CHECK(bessel_k(0.5, 1.0) ==
          doctest::Approx(std::sqrt(M_PI / 2.0) * std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("bessel_k reference point K_0(1)") {
    CHECK(bessel_k(0.0, 1.0) == doctest::Approx(0.4210244382).epsilon(1e-9));
    CHECK(bessel_k(0.0, 1.0) ==
          doctest::Approx(std::exp(oracle::ln_bessel_k_integral(0.0, 1.0))).epsilon(1e-10));
}

TEST_CASE("bessel_k against the integral-representation oracle") {
    const std::vector<double> nus = {0.0, 0.25, 0.361, 0.5, 1.0, 1.5, 2.7,
                                     4.5, 9.5, 10.25, 20.0, 37.3, 60.0};
    const std::vector<double> zs = {1e-4, 1e-3, 0.02, 0.1, 0.5, 1.0, 1.99,
                                    2.01, 3.0, 8.0, 20.0, 100.0, 333.0, 700.0};
    for (double nu : nus) {
        for (double z : zs) {
            const double got = ln_bessel_k(nu, z);
            const double want = oracle::ln_bessel_k_integral(nu, z);
            INFO("nu=", nu, " z=", z);
            // equality of ln K to 1e-8 is relative error 1e-8 on K itself
            CHECK(got == doctest::Approx(want).epsilon(5e-10).scale(1.0));
        }
    }
}

TEST_CASE("bessel_k large-z asymptotic") {
    // K_nu(z) ~ sqrt(pi/(2z)) e^-z; the leading correction is (4nu^2-1)/(8z),
    // so the 1e-2 window needs z large enough for the order
    for (double nu : {0.0, 1.0, 2.5}) {
        const double z = 500.0;
        const double asym = 0.5 * std::log(M_PI / (2.0 * z)) - z;
        const double ratio = std::exp(ln_bessel_k(nu, z) - asym);
        CHECK(ratio == doctest::Approx(1.0).epsilon(1e-2));
    }
    const double asym = 0.5 * std::log(M_PI / (2.0 * 5000.0)) - 5000.0;
    CHECK(std::exp(ln_bessel_k(7.0, 5000.0) - asym) == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("bessel_k recurrence K_{nu+1} = K_{nu-1} + (2 nu/z) K_nu") {
    for (double nu : {1.0, 2.2, 5.5, 10.0, 30.5}) {
        for (double z : {0.05, 0.5, 1.0, 4.0, 20.0, 200.0}) {
            // work on the common log scale of the largest term
            const double lk_m = ln_bessel_k(nu - 1.0, z);
            const double lk_0 = ln_bessel_k(nu, z);
            const double lk_p = ln_bessel_k(nu + 1.0, z);
            const double m = std::max({lk_m, lk_0, lk_p});
            const double lhs = std::exp(lk_p - m);
            const double rhs = std::exp(lk_m - m) +
                               (2.0 * nu / z) * std::exp(lk_0 - m);
            INFO("nu=", nu, " z=", z);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
        }
    }
}

TEST_CASE("bessel_k symmetry near zero order via recurrence") {
    // K_{-nu} = K_nu: evaluate K_{1-nu}(z) = K_{... } through the recurrence
    // anchored at small orders
    for (double z : {0.3, 1.0, 10.0}) {
        const double nu = 0.2;
        // K_{nu+1} - K_{nu-1} = (2nu/z) K_nu with K_{nu-1} = K_{1-nu -> 0.8}
        const double lhs = bessel_k(1.2, z) - bessel_k(0.8, z);
        const double rhs = (2.0 * nu / z) * bessel_k(0.2, z);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
    }
}

TEST_CASE("bessel_k monotone decreasing in z") {
    for (double nu : {0.0, 0.861, 3.3}) {
        double prev = ln_bessel_k(nu, 1e-3);
        for (double z = 2e-3; z < 500.0; z *= 1.9) {
            const double cur = ln_bessel_k(nu, z);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("bessel_k domain") {
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(1.0, -2.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(-0.5, 1.0), std::domain_error);
}

TEST_CASE("gamma_p special cases") {
    // P(1, x) = 1 - e^-x
    for (double x : {0.1, 1.0, 3.0, 10.0})
        CHECK(gamma_p(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
    // P(1/2, x) = erf(sqrt(x))
    for (double x : {0.2, 1.0, 4.0})
        CHECK(gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-12));
    CHECK(gamma_p(2.0, 0.0) == 0.0);
    CHECK(gamma_q(2.0, 0.0) == 1.0);
}

TEST_CASE("gamma_p against quadrature of the defining integral") {
    // for a < 1, substituting t = s^(1/a) removes the endpoint singularity:
    // integral_0^x t^(a-1) e^-t dt = (1/a) integral_0^(x^a) e^(-s^(1/a)) ds
    for (double a : {0.3, 1.861, 2.5, 11.0}) {
        for (double x : {0.05, 0.5, 1.5, a, a + 5.0}) {
            double want;
            if (a < 1.0) {
                auto integrand = [a](double s) {
                    return s <= 0.0 ? 1.0 : std::exp(-std::pow(s, 1.0 / a));
                };
                want = oracle::integrate_simpson(integrand, 0.0, std::pow(x, a), 1e-13) /
                       (a * std::tgamma(a));
            } else {
                auto integrand = [a](double t) {
                    return t <= 0.0 ? (a == 1.0 ? 1.0 : 0.0)
                                    : std::exp((a - 1.0) * std::log(t) - t);
                };
                want = oracle::integrate_simpson(integrand, 0.0, x, 1e-13) /
                       std::tgamma(a);
            }
            CHECK(gamma_p(a, x) == doctest::Approx(want).epsilon(1e-7));
        }
    }
}

TEST_CASE("gamma_p complement and monotonicity") {
    for (double a : {0.7, 4.2}) {
        double prev = -1.0;
        for (double x = 0.0; x < 20.0; x += 0.37) {
            const double p = gamma_p(a, x);
            CHECK(p == doctest::Approx(1.0 - gamma_q(a, x)).epsilon(1e-12));
            CHECK(p >= prev);
            prev = p;
        }
    }
    CHECK_THROWS_AS(gamma_p(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(gamma_p(1.0, -0.1), std::domain_error);
}
